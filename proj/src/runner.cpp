// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

using nlohmann::json;

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::string step_file_name(int step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "step_%04d.csv", step);
  return buf;
}

json summary_entry(const WalkSummary& s) {
  json e = {{"step", s.step}, {"recurrence", s.recurrence}, {"variance_x", s.variance_x}};
  if (s.variance_y) e["variance_y"] = *s.variance_y;
  if (s.l1_to_reference) e["l1_to_reference"] = *s.l1_to_reference;
  return e;
}

}  // namespace

std::string format_number(double value) {
  if (std::abs(value) < 1e-15) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string distribution_csv(const Distribution& p) {
  std::ostringstream out;
  const bool two_d = p.dimensionality() == 2;
  out << (two_d ? "x,y,p\n" : "x,p\n");
  const Lattice& lattice = p.lattice();
  for (std::size_t s = 0; s < lattice.sites(); ++s) {
    const Position site = lattice.site_at(s);
    out << site.x << ',';
    if (two_d) out << site.y << ',';
    out << format_number(p.probabilities()[s]) << '\n';
  }
  return out.str();
}

Distribution parse_distribution_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("distribution CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  int dimensionality = 0;
  if (line == "x,y,p") {
    dimensionality = 2;
  } else if (line == "x,p") {
    dimensionality = 1;
  } else {
    throw ValidationError("distribution CSV header must be 'x,y,p' or 'x,p'");
  }

  std::map<Position, double> entries;
  int halfwidth = 0;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    Position p;
    double value = 0.0;
    char comma = 0;
    bool ok = static_cast<bool>(row >> p.x >> comma) && comma == ',';
    if (ok && dimensionality == 2) ok = static_cast<bool>(row >> p.y >> comma) && comma == ',';
    ok = ok && static_cast<bool>(row >> value);
    if (!ok) throw ValidationError("malformed distribution CSV row " + std::to_string(line_no));
    halfwidth = std::max({halfwidth, std::abs(p.x), std::abs(p.y)});
    entries[p] += value;
  }

  const Lattice lattice(dimensionality, halfwidth);
  std::vector<double> probs(lattice.sites(), 0.0);
  double total = 0.0;
  for (const auto& [site, value] : entries) {
    probs[lattice.site_index(site)] = value;
    total += value;
  }
  if (!(std::abs(total - 1.0) <= 1e-9)) {
    throw ValidationError("distribution CSV sums to " + std::to_string(total));
  }
  for (double& v : probs) v /= total;
  return Distribution(lattice, std::move(probs));
}

Distribution read_distribution_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open reference '" + path.string() + "'");
  return parse_distribution_csv(in);
}

ResultRecord run_walk(const RunConfig& cfg) {
  std::optional<Distribution> reference;
  if (cfg.reference) reference = read_distribution_csv(*cfg.reference);
  if (cfg.per_step) std::filesystem::create_directories(cfg.out_dir);

  const auto start = std::chrono::steady_clock::now();
  std::vector<WalkSummary> summaries;
  std::vector<double> residuals;
  const WalkerState final_state = evolve(cfg.walk, [&](const StepView& v) {
    const Distribution d = distribution(v.state);
    summaries.push_back(summarize(v.step, d, reference ? &*reference : nullptr));
    residuals.push_back(v.norm_residual);
    if (cfg.per_step) write_text(cfg.out_dir / step_file_name(v.step), distribution_csv(d));
  });
  Distribution final_distribution = distribution(final_state);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return ResultRecord{cfg.echo, std::move(summaries), std::move(residuals),
                      std::move(final_distribution), elapsed.count()};
}

json summary_json(const ResultRecord& record) {
  json steps = json::array();
  for (std::size_t i = 0; i < record.summaries.size(); ++i) {
    json e = summary_entry(record.summaries[i]);
    e["norm_residual"] = record.norm_residuals[i];
    steps.push_back(std::move(e));
  }
  // Reference comparison is per-step only; the final entry recomputes the
  // plain observables so zero-step runs still report them.
  const int last = record.summaries.empty() ? 0 : record.summaries.back().step;
  return json{{"config", record.config},
              {"steps", std::move(steps)},
              {"final", summary_entry(record.summaries.empty()
                                          ? summarize(0, record.final_distribution)
                                          : record.summaries.back())},
              {"total_steps", last}};
}

ResultRecord cmd_run(const RunConfig& cfg) {
  std::filesystem::create_directories(cfg.out_dir);
  ResultRecord record = run_walk(cfg);
  if (cfg.write_csv) {
    write_text(cfg.out_dir / "distribution.csv", distribution_csv(record.final_distribution));
  }
  if (cfg.write_json) {
    write_text(cfg.out_dir / "summary.json", summary_json(record).dump(2) + "\n");
    write_text(cfg.out_dir / "timing.json",
               json{{"seconds", record.seconds}}.dump(2) + "\n");
  }
  return record;
}

std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
  if (cfg.phi_grid.empty()) throw ConfigError("phi_grid", "sweep needs a nonempty grid");
  const std::vector<std::string> defects =
      cfg.sweep_defects.empty() ? std::vector<std::string>{cfg.defect_kind} : cfg.sweep_defects;
  for (const auto& kind : defects) {
    if (kind == "custom") throw ConfigError("defect", "custom defects cannot be swept over phi");
    make_defect(kind, 0.0).check_dimensionality(cfg.walk.dimensionality);
  }
  std::optional<Distribution> reference;
  if (cfg.reference) reference = read_distribution_csv(*cfg.reference);

  std::vector<SweepRow> rows(defects.size() * cfg.phi_grid.size());
  parallel_for(rows.size(), cfg.threads, [&](std::size_t i) {
    const std::string& kind = defects[i / cfg.phi_grid.size()];
    const double phi = cfg.phi_grid[i % cfg.phi_grid.size()];
    WalkSpec spec = cfg.walk;
    spec.defect = make_defect(kind, phi);
    const Distribution d = distribution(evolve(spec, StepObserver{}));
    const WalkSummary s = summarize(spec.steps, d, reference ? &*reference : nullptr);
    rows[i] = SweepRow{kind, phi, s.recurrence, s.variance_x, s.variance_y, s.l1_to_reference};
  });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  const bool has_y = !rows.empty() && rows.front().variance_y.has_value();
  const bool has_ref = !rows.empty() && rows.front().l1_to_reference.has_value();
  std::ostringstream out;
  out << "defect,phi,recurrence,variance_x";
  if (has_y) out << ",variance_y";
  if (has_ref) out << ",l1_to_reference";
  out << '\n';
  for (const SweepRow& r : rows) {
    out << r.defect << ',' << format_number(r.phi) << ',' << format_number(r.recurrence) << ','
        << format_number(r.variance_x);
    if (has_y) out << ',' << format_number(*r.variance_y);
    if (has_ref) out << ',' << format_number(*r.l1_to_reference);
    out << '\n';
  }
  return out.str();
}

std::vector<SweepRow> cmd_sweep(const RunConfig& cfg) {
  std::vector<SweepRow> rows = run_sweep(cfg);
  std::filesystem::create_directories(cfg.out_dir);
  if (cfg.write_csv) write_text(cfg.out_dir / "sweep.csv", sweep_csv(rows));
  if (cfg.write_json) {
    json table = json::array();
    for (const SweepRow& r : rows) {
      json e = {{"defect", r.defect},
                {"phi", r.phi},
                {"recurrence", r.recurrence},
                {"variance_x", r.variance_x}};
      if (r.variance_y) e["variance_y"] = *r.variance_y;
      if (r.l1_to_reference) e["l1_to_reference"] = *r.l1_to_reference;
      table.push_back(std::move(e));
    }
    write_text(cfg.out_dir / "sweep.json",
               json{{"config", cfg.echo}, {"rows", std::move(table)}}.dump(2) + "\n");
  }
  return rows;
}

IsocheckResult run_isocheck(int halfwidth, int trials, std::uint64_t seed, unsigned threads) {
  const int halfwidths[] = {halfwidth};
  IsocheckResult result;
  result.suite = run_isomorphism_suite(halfwidths, trials, seed, threads);
  result.decomposition = check_decomposition_claims(seed);
  result.passed = result.suite.passed;

  std::map<std::string, double> by_kind;
  for (const auto& t : result.suite.trials) {
    double& worst = by_kind[to_string(t.kind)];
    worst = std::max(worst, t.deviation);
  }
  json translation = json::array();
  for (const auto& [L, dev] : result.suite.translation) {
    translation.push_back({{"halfwidth", L}, {"deviation", dev}});
  }
  json entangled = json::array();
  for (const auto& row : result.decomposition.entangled) {
    entangled.push_back({{"tau", row.tau},
                         {"exact_deviation", row.exact_deviation},
                         {"global_phase", row.global_phase},
                         {"global_phase_deviation", row.global_phase_deviation},
                         {"minus_zz_deviation", row.minus_zz_deviation}});
  }
  const DecompositionReport& dec = result.decomposition;
  result.report = json{
      {"halfwidth", halfwidth},
      {"trials", trials},
      {"seed", seed},
      {"tolerance", kIsomorphismTolerance},
      {"isomorphism",
       {{"max_deviation", result.suite.max_deviation},
        {"max_deviation_by_kind", by_kind},
        {"translation", std::move(translation)},
        {"passed", result.suite.passed}}},
      {"decomposition",
       {{"separable",
         {{"trials", dec.separable_trials},
          {"max_deviation", dec.separable_max_deviation},
          {"confirmed", dec.separable_confirmed}}},
        {"entangled", {{"match", to_string(dec.entangled_match)}, {"rows", std::move(entangled)}}}}}};
  return result;
}

IsocheckResult cmd_isocheck(int halfwidth, int trials, std::uint64_t seed, unsigned threads,
                            const std::filesystem::path& out_dir) {
  IsocheckResult result = run_isocheck(halfwidth, trials, seed, threads);
  std::filesystem::create_directories(out_dir);
  write_text(out_dir / "isocheck.json", result.report.dump(2) + "\n");
  return result;
}

}  // namespace qwalk
