// Copyright 2026 The abslocal Authors
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

#include "abslocal/cli_app.hpp"

#include "abslocal/parallel.hpp"
#include "abslocal/sampling.hpp"
#include "abslocal/kernels.hpp"
#include "abslocal/state_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>
#include <vector>

namespace abslocal::cli {

namespace {

using json = nlohmann::json;

// One named value of a flat report. Numbers are rendered through
// format_number everywhere so every output format carries identical digits.
struct Field {
  std::string name;
  std::variant<double, std::string, std::uint64_t> value;
};

std::string text_of(const Field& f) {
  if (const double* d = std::get_if<double>(&f.value)) return format_number(*d);
  if (const auto* u = std::get_if<std::uint64_t>(&f.value)) return std::to_string(*u);
  return std::get<std::string>(f.value);
}

std::string render_fields(const std::vector<Field>& fields, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      json j = json::object();
      for (const Field& f : fields) {
        if (const double* d = std::get_if<double>(&f.value))
          j[f.name] = std::stod(format_number(*d));
        else if (const auto* u = std::get_if<std::uint64_t>(&f.value))
          j[f.name] = *u;
        else
          j[f.name] = std::get<std::string>(f.value);
      }
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      for (std::size_t i = 0; i < fields.size(); ++i)
        os << (i ? "," : "") << fields[i].name;
      os << '\n';
      for (std::size_t i = 0; i < fields.size(); ++i)
        os << (i ? "," : "") << text_of(fields[i]);
      os << '\n';
      break;
    }
    case OutputFormat::Table: {
      std::size_t width = 0;
      for (const Field& f : fields) width = std::max(width, f.name.size());
      for (const Field& f : fields)
        os << std::left << std::setw(static_cast<int>(width) + 2) << f.name
           << text_of(f) << '\n';
      break;
    }
  }
  return os.str();
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_code::kParse;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return exit_code::kIo;
  } catch (const StateError& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == StateError::Kind::Domain ? exit_code::kDomain
                                                : exit_code::kInvalidState;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return exit_code::kUsage;
  }
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "table") return OutputFormat::Table;
  return std::nullopt;
}

void RunConfig::validate() const {
  if (samples < 1 || states < 1 || unitaries < 1)
    throw std::invalid_argument("sample counts must be >= 1");
  if (!(epsilon > 0.0 && epsilon <= 1e-2))
    throw std::invalid_argument("epsilon must lie in (0, 1e-2]");
  if (grid < 2) throw std::invalid_argument("grid must be >= 2");
}

AnalyzeReport analyze_state(const DensityMatrix& sigma, const RunConfig& config) {
  AnalyzeReport r;
  r.locality = locality_report(sigma, config.epsilon);
  r.purity = purity(sigma);
  r.ball = classify_ball(sigma, config.epsilon);

  AngleSearchOptions search;
  search.grid = config.grid;
  const BlochForm b = to_bloch(sigma);
  try {
    r.bell_diagonal = bell_diag_criterion(b, config.epsilon);
  } catch (const StateError& e) {
    if (e.kind() != StateError::Kind::NotBellDiagonal) throw;
  }
  try {
    r.comp_diagonal = comp_diag_criterion(b, search, config.epsilon);
  } catch (const StateError& e) {
    if (e.kind() != StateError::Kind::NotComputationalDiagonal) throw;
  }
  r.trace = trace_sufficient(sigma, search);
  return r;
}

int exit_code_for(const AnalyzeReport& report) {
  switch (report.locality.absolutely_local) {
    case Verdict::Pass: return exit_code::kAbsolutelyLocal;
    case Verdict::Fail: return exit_code::kNotAbsolutelyLocal;
    case Verdict::Boundary: return exit_code::kBoundary;
  }
  return exit_code::kBoundary;
}

std::string render(const AnalyzeReport& r, OutputFormat format) {
  const std::string na = "n/a";
  std::vector<Field> f{
      {"M", r.locality.M},
      {"chsh_max", r.locality.chsh_max},
      {"F", r.locality.F},
      {"bell_local", std::string(to_string(r.locality.bell_local))},
      {"absolutely_local", std::string(to_string(r.locality.absolutely_local))},
      {"epsilon", r.locality.epsilon},
      {"purity", r.purity},
      {"distance", r.ball.distance},
      {"ball_zone", std::string(to_string(r.ball.zone))},
      {"bell_diagonal_test",
       r.bell_diagonal ? std::string(to_string(*r.bell_diagonal)) : na},
      {"comp_diagonal_test",
       r.comp_diagonal ? std::string(to_string(r.comp_diagonal->verdict)) : na},
  };
  if (r.comp_diagonal) f.push_back({"comp_diagonal_max", r.comp_diagonal->max_value});
  f.push_back({"trace_test", std::string(to_string(r.trace.verdict))});
  f.push_back({"trace_max", r.trace.max_trace});
  return render_fields(f, format);
}

OracleSummary run_oracle_check(std::size_t states, std::size_t unitaries,
                               std::uint64_t seed, bool bell_diag) {
  OracleSummary s;
  s.states = states;
  s.unitaries = unitaries;
  s.seed = seed;
  s.bell_diagonal = bell_diag;
  s.max_excess = -1.0;
  for (std::size_t i = 0; i < states; ++i) {
    Rng rng(derive_seed(seed, 2 * i));
    const DensityMatrix sigma = bell_diag ? bell_diagonal(random_simplex_point(rng))
                                          : random_hs_state(rng);
    const double F = f_spectral(spectrum(sigma));
    UnitarySearchOptions opts;
    opts.samples = unitaries;
    opts.refine = true;
    opts.seed = derive_seed(seed, 2 * i + 1);
    const UnitarySearchResult found = max_M_over_unitaries(sigma, opts);
    const double observed = std::max(found.sampled_max, found.refined_max);
    if (observed > F + 1e-9) ++s.violations;
    s.max_excess = std::max(s.max_excess, observed - F);
    s.max_gap = std::max(s.max_gap, F - found.refined_max);
    if (bell_diag)
      s.max_invariance_error = std::max(s.max_invariance_error,
                                        std::abs(observed - horodecki_M(sigma)));
  }
  return s;
}

std::string render(const OracleSummary& s, OutputFormat format) {
  std::vector<Field> f{
      {"states", static_cast<std::uint64_t>(s.states)},
      {"unitaries", static_cast<std::uint64_t>(s.unitaries)},
      {"seed", s.seed},
      {"inputs", std::string(s.bell_diagonal ? "bell_diagonal" : "hilbert_schmidt")},
      {"violations", static_cast<std::uint64_t>(s.violations)},
      {"max_excess_over_F", s.max_excess},
      {"max_gap_below_F", s.max_gap},
  };
  if (s.bell_diagonal) f.push_back({"max_invariance_error", s.max_invariance_error});
  return render_fields(f, format);
}

EnsembleSummary run_ensemble_check(std::size_t samples, std::uint64_t seed) {
  std::vector<double> a1(samples), a2(samples), a3(samples), a4(samples),
      m(samples), f(samples), p(samples);
  parallel_for(samples, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const DensityMatrix sigma = random_hs_state(rng);
    const Spectrum s = spectrum(sigma);
    a1[i] = s[0];
    a2[i] = s[1];
    a3[i] = s[2];
    a4[i] = s[3];
    m[i] = horodecki_M(sigma);
  });
  kernels::spectral_scores({a1, a2, a3, a4}, f, p);

  EnsembleSummary e;
  e.samples = samples;
  e.seed = seed;
  for (std::size_t i = 0; i < samples; ++i) {
    const bool al = f[i] <= 1.0;
    const bool local = m[i] <= 1.0;
    const bool low = p[i] <= 0.5;
    const bool high = p[i] > 0.625;
    e.absolutely_local += al;
    e.bell_local += local;
    e.purity_at_most_half += low;
    e.purity_above_five_eighths += high;
    e.low_purity_not_al += low && !al;
    e.high_purity_al += high && al;
    e.al_not_bell_local += al && !local;
  }
  return e;
}

std::string render(const EnsembleSummary& e, OutputFormat format) {
  const double n = static_cast<double>(e.samples);
  std::vector<Field> f{
      {"samples", static_cast<std::uint64_t>(e.samples)},
      {"seed", e.seed},
      {"fraction_absolutely_local", e.absolutely_local / n},
      {"fraction_bell_local", e.bell_local / n},
      {"fraction_purity_le_half", e.purity_at_most_half / n},
      {"fraction_purity_gt_five_eighths", e.purity_above_five_eighths / n},
      {"low_purity_not_al", static_cast<std::uint64_t>(e.low_purity_not_al)},
      {"high_purity_al", static_cast<std::uint64_t>(e.high_purity_al)},
      {"al_not_bell_local", static_cast<std::uint64_t>(e.al_not_bell_local)},
      {"note", std::string("Hilbert-Schmidt Monte Carlo estimate")},
  };
  return render_fields(f, format);
}

std::string render(const SweepResult& s) {
  std::ostringstream os;
  const bool angled = s.family == Family::Gisin || s.family == Family::RhoG;
  os << "family," << s.param_name << ",theta,M,F,purity,bell_local,absolutely_local\n";
  for (const SweepRow& r : s.rows) {
    os << to_string(s.family) << ',' << format_number(r.param) << ','
       << (angled ? format_number(s.theta) : std::string()) << ','
       << format_number(r.M) << ',' << format_number(r.F) << ','
       << format_number(r.purity) << ',' << to_string(r.bell_local) << ','
       << to_string(r.absolutely_local) << '\n';
  }
  if (s.threshold) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.7f", *s.threshold);
    os << "threshold," << s.param_name << "*," << buf << '\n';
  } else {
    os << "threshold," << s.param_name << "*,none\n";
  }
  return os.str();
}

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const DensityMatrix sigma = load_state_file(config.input);
    const AnalyzeReport report = analyze_state(sigma, config);
    out << render(report, config.format);
    return exit_code_for(report);
  });
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const auto family = parse_family(config.family);
    if (!family)
      throw std::invalid_argument("unknown family '" + config.family + "'");
    SweepOptions opts;
    opts.steps = config.steps;
    opts.theta = config.theta;
    opts.eps = config.epsilon;
    try {
      out << render(sweep_family(*family, opts));
    } catch (const std::runtime_error& e) {
      if (dynamic_cast<const StateError*>(&e)) throw;
      err << "sweep aborted: " << e.what() << '\n';
      return exit_code::kDomain;
    }
    return 0;
  });
}

int run_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const OracleSummary s = run_oracle_check(config.states, config.unitaries,
                                             config.seed, config.bell_diagonal);
    out << render(s, config.format);
    if (s.violations) {
      err << "oracle: " << s.violations << " state(s) exceeded F + 1e-9\n";
      return exit_code::kOracleViolation;
    }
    return 0;
  });
}

int run_ensemble(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const EnsembleSummary e = run_ensemble_check(config.samples, config.seed);
    out << render(e, config.format);
    if (!e.sandwich_holds()) {
      err << "ensemble: purity sandwich violated\n";
      return exit_code::kSandwichViolation;
    }
    return 0;
  });
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::Analyze: return run_analyze(config, out, err);
    case Command::Sweep: return run_sweep(config, out, err);
    case Command::Oracle: return run_oracle(config, out, err);
    case Command::Ensemble: return run_ensemble(config, out, err);
  }
  return exit_code::kUsage;
}

}  // namespace abslocal::cli
