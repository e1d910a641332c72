// Copyright 2026 The teleop Authors
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

#include "teleop/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string_view>

#include "teleop/channel.hpp"
#include "teleop/errors.hpp"
#include "teleop/protocol.hpp"
#include "teleop/sigma.hpp"

#ifndef TELEOP_VERSION
#define TELEOP_VERSION "0.0.0"
#endif

namespace teleop::cli {

namespace {

using nlohmann::json;

constexpr std::string_view kVersionTag = "teleop " TELEOP_VERSION;

// Raised for malformed command-line values; maps to kExitParse.
struct UsageError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Formatting

std::string fixed(double v, bool sign) {
  char buf[64];
  std::snprintf(buf, sizeof buf, sign ? "%+.12f" : "%.12f", v);
  std::string s(buf);
  if (s == "-0.000000000000") s = sign ? "+0.000000000000" : "0.000000000000";
  return s;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

bool rounds_to_zero(double v) { return fixed(v, true) == "+0.000000000000"; }

std::string complex_text(Complex z) { return fixed(z.real(), true) + fixed(z.imag(), true) + "i"; }

void print_matrix(std::ostream& out, const Matrix& m) {
  bool real = true;
  for (const Complex& z : m.entries()) real = real && rounds_to_zero(z.imag());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << " ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out << "  " << (real ? fixed(m(r, c).real(), true) : complex_text(m(r, c)));
    }
    out << "\n";
  }
}

void print_reals(std::ostream& out, std::span<const double> values) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    out << (k == 0 ? "" : " ") << fixed(values[k], false);
  }
  out << "\n";
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_json(std::span<const Complex> v) {
  json out = json::array();
  for (const Complex& z : v) out.push_back(complex_json(z));
  return out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json header_json(std::string_view command, std::string_view ref, const Channel* c) {
  json j;
  j["version"] = kVersionTag;
  j["command"] = command;
  if (c != nullptr) {
    j["channel"] = {{"ref", ref}, {"name", c->name()}, {"amplitudes", vector_json(c->amplitudes())}};
  }
  return j;
}

void print_header(std::ostream& out, std::string_view command, std::string_view ref) {
  out << kVersionTag << " " << command << (ref.empty() ? "" : " ") << ref << "\n";
}

// ---------------------------------------------------------------------------
// Argument resolution

double parse_double(std::string_view token, std::string_view what) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(v)) {
    throw UsageError("cannot parse " + std::string(what) + " '" + std::string(token) + "'");
  }
  return v;
}

std::uint64_t parse_seed(std::string_view token) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw UsageError("cannot parse seed '" + std::string(token) + "'");
  }
  return v;
}

Channel resolve_channel(const std::string& ref, bool normalize) {
  if (!ref.empty() && ref.front() == '@') {
    const std::string path = ref.substr(1);
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot open channel file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_channel(buf.str(), normalize, path);
  }
  if (ref.rfind("random:", 0) == 0) {
    return random_channel(parse_seed(std::string_view(ref).substr(7)));
  }
  return catalog(ref);
}

InputState resolve_state(const std::string& text) {
  if (text.rfind("random:", 0) == 0) {
    return InputState::random(parse_seed(std::string_view(text).substr(7)));
  }
  std::vector<double> values;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    values.push_back(parse_double(rest.substr(0, comma), "state component"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (values.size() != 8) {
    throw UsageError("--state expects 8 comma-separated reals (re,im for x0..x3) or random:SEED");
  }
  Amplitudes4 amps;
  for (std::size_t k = 0; k < 4; ++k) amps[k] = Complex(values[2 * k], values[2 * k + 1]);
  const double len = norm(amps);
  if (std::abs(len * len - 1.0) > tol::kUserNorm) {
    std::ostringstream msg;
    msg << "input state has squared norm " << len * len << ", expected 1";
    throw NormalizationError(msg.str());
  }
  for (Complex& z : amps) z /= len;
  return InputState(amps);
}

double default_tolerance() {
  const char* raw = std::getenv(kToleranceEnv);
  if (raw == nullptr || *raw == '\0') return tol::kClassify;
  double v = 0.0;
  try {
    v = parse_double(raw, kToleranceEnv);
  } catch (const UsageError&) {
    throw BadParameter(std::string(kToleranceEnv) + " must be a decimal real");
  }
  if (!(v > 0.0)) {
    throw BadParameter(std::string(kToleranceEnv) + " must be positive");
  }
  return v;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

// ---------------------------------------------------------------------------
// Commands

int cmd_catalog(std::ostream& out, bool as_json) {
  if (as_json) {
    json j = header_json("catalog", "", nullptr);
    j["entries"] = json::array();
    for (const CatalogEntry& e : catalog_entries()) {
      j["entries"].push_back({{"name", e.name}, {"example", e.example}, {"description", e.description}});
    }
    emit(out, j);
    return kExitOk;
  }
  print_header(out, "catalog", "");
  for (const CatalogEntry& e : catalog_entries()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-14s%-40s", std::string(e.name).c_str(), std::string(e.example).c_str());
    out << buf << e.description << "\n";
  }
  return kExitOk;
}

int cmd_analyze(std::ostream& out, const std::string& ref, const Channel& c, double tol, bool as_json) {
  const AnalysisReport r = analyze(c, tol);
  const Classification& cls = r.classification;
  if (as_json) {
    json j = header_json("analyze", ref, &c);
    j["sigma11"] = matrix_json(r.sigma11);
    j["singular_values"] = cls.singular_values;
    j["det_magnitude"] = cls.det_magnitude;
    j["verdict"] = to_string(cls.verdict);
    j["success_probability"] = cls.success_probability;
    j["borderline"] = cls.borderline;
    j["tolerance"] = tol;
    j["defects"] = {{"completeness", r.completeness_defect}, {"pauli_relation", r.pauli_relation_defect}};
    emit(out, j);
    return kExitOk;
  }
  print_header(out, "analyze", ref);
  out << "sigma11:\n";
  print_matrix(out, r.sigma11);
  out << "singular_values: ";
  print_reals(out, cls.singular_values);
  out << "det_magnitude: " << fixed(cls.det_magnitude, false) << "\n";
  out << "verdict: " << to_string(cls.verdict) << "\n";
  out << "success_probability: " << fixed(cls.success_probability, false) << "\n";
  out << "borderline: " << (cls.borderline ? "true" : "false") << "\n";
  out << "completeness_defect: " << sci(r.completeness_defect) << "\n";
  out << "pauli_relation_defect: " << sci(r.pauli_relation_defect) << "\n";
  return kExitOk;
}

int cmd_operators(std::ostream& out, const std::string& ref, const Channel& c, bool all, bool as_json) {
  std::vector<TransformOp> ops;
  if (all) {
    ops = extract_all(c);
  } else {
    ops.push_back(extract_sigma(c, BellIndex(1), BellIndex(1)));
  }
  if (as_json) {
    json j = header_json("operators", ref, &c);
    j["sigma11"] = matrix_json(ops.front().m);
    if (all) {
      j["operators"] = json::array();
      for (const TransformOp& op : ops) {
        j["operators"].push_back({{"i", op.i.value()}, {"j", op.j.value()}, {"matrix", matrix_json(op.m)}});
      }
      j["defects"] = {{"pauli_relation", pauli_relation_defect(ops)}};
    }
    emit(out, j);
    return kExitOk;
  }
  print_header(out, "operators", ref);
  for (const TransformOp& op : ops) {
    out << "sigma(" << op.i.value() << "," << op.j.value() << "):\n";
    print_matrix(out, op.m);
  }
  if (all) {
    out << "pauli_relation_defect: " << sci(pauli_relation_defect(ops)) << "\n";
  }
  return kExitOk;
}

int cmd_teleport(std::ostream& out, const std::string& ref, const Channel& c, const InputState& chi, bool enumerate,
                 std::uint64_t trials, std::uint64_t seed, double tol, bool as_json) {
  const Classification cls = classify(c, tol);
  if (enumerate) {
    const std::vector<OutcomeRecord> records = run_deterministic(chi, c, tol);
    if (as_json) {
      json j = header_json("teleport", ref, &c);
      j["state"] = vector_json(chi.amps());
      j["verdict"] = to_string(cls.verdict);
      j["success_probability"] = cls.success_probability;
      j["outcomes"] = json::array();
      for (const OutcomeRecord& rec : records) {
        json row = {{"i", rec.i.value()},
                    {"j", rec.j.value()},
                    {"probability", rec.probability},
                    {"correction", to_string(rec.correction)},
                    {"filter_success_probability", rec.filter_success_probability},
                    {"fidelity", rec.fidelity},
                    {"verdict", to_string(rec.verdict)},
                    {"bob_state_raw", vector_json(rec.bob_state_raw)}};
        row["bob_state_corrected"] = rec.bob_state_corrected ? vector_json(*rec.bob_state_corrected) : json(nullptr);
        j["outcomes"].push_back(std::move(row));
      }
      emit(out, j);
      return kExitOk;
    }
    print_header(out, "teleport", ref);
    out << "state:";
    for (const Complex& z : chi.amps()) out << " " << complex_text(z);
    out << "\nverdict: " << to_string(cls.verdict) << "\n";
    out << "success_probability: " << fixed(cls.success_probability, false) << "\n";
    out << "outcomes:\n";
    out << "  i j  probability     correction  filter_success  fidelity        verdict\n";
    for (const OutcomeRecord& rec : records) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "  %d %d  %s  %-10s  %s  %s  %s\n", rec.i.value(), rec.j.value(),
                    fixed(rec.probability, false).c_str(), std::string(to_string(rec.correction)).c_str(),
                    fixed(rec.filter_success_probability, false).c_str(), fixed(rec.fidelity, false).c_str(),
                    std::string(to_string(rec.verdict)).c_str());
      out << buf;
    }
    return kExitOk;
  }

  const RunStats stats = run_sampled(chi, c, seed, trials, tol);
  if (as_json) {
    json j = header_json("teleport", ref, &c);
    j["state"] = vector_json(chi.amps());
    j["verdict"] = to_string(cls.verdict);
    j["success_probability"] = cls.success_probability;
    j["stats"] = {{"trials", stats.trials},
                  {"seed", stats.seed},
                  {"outcome_counts", stats.outcome_counts},
                  {"successes", stats.successes},
                  {"empirical_success_rate", stats.empirical_success_rate},
                  {"mean_fidelity_on_success", stats.mean_fidelity_on_success}};
    emit(out, j);
    return kExitOk;
  }
  print_header(out, "teleport", ref);
  out << "state:";
  for (const Complex& z : chi.amps()) out << " " << complex_text(z);
  out << "\nverdict: " << to_string(cls.verdict) << "\n";
  out << "success_probability: " << fixed(cls.success_probability, false) << "\n";
  out << "trials: " << stats.trials << "\n";
  out << "seed: " << stats.seed << "\n";
  out << "successes: " << stats.successes << "\n";
  out << "empirical_success_rate: " << fixed(stats.empirical_success_rate, false) << "\n";
  out << "mean_fidelity_on_success: " << fixed(stats.mean_fidelity_on_success, false) << "\n";
  out << "outcome_counts:\n";
  for (std::size_t k = 0; k < 16; ++k) {
    out << "  " << (k / 4 + 1) << " " << (k % 4 + 1) << "  " << stats.outcome_counts[k] << "\n";
  }
  return kExitOk;
}

struct VerifyTotals {
  double completeness = 0.0;
  double pauli_relation = 0.0;
  double reconstruction = 0.0;
  double oracle_equivalence = 0.0;
};

void verify_channel(const Channel& c, std::span<const std::uint64_t> state_seeds, VerifyTotals& t) {
  const std::vector<TransformOp> ops = extract_all(c);
  t.completeness = std::max(t.completeness, completeness_defect(ops));
  t.pauli_relation = std::max(t.pauli_relation, pauli_relation_defect(ops));
  for (std::uint64_t s : state_seeds) {
    const InputState chi = InputState::random(s);
    t.reconstruction = std::max(t.reconstruction, reconstruction_defect(c, chi.amps()));
    t.oracle_equivalence = std::max(t.oracle_equivalence, oracle_equivalence_defect(chi, c));
  }
}

// `random:N` checks the channels seeded 1..N, channel k against the input
// state seeded 100000 + k. Any other reference is checked against input
// states seeded 1..20.
int cmd_verify(std::ostream& out, const std::string& ref, bool normalize, double tol, bool as_json) {
  VerifyTotals totals;
  std::size_t channels = 0;
  std::unique_ptr<Channel> single;
  if (ref.rfind("random:", 0) == 0) {
    const std::uint64_t n = parse_seed(std::string_view(ref).substr(7));
    if (n == 0) throw UsageError("verify random:N needs N >= 1");
    for (std::uint64_t k = 1; k <= n; ++k) {
      const std::uint64_t state_seed = 100000 + k;
      verify_channel(random_channel(k), std::span(&state_seed, 1), totals);
      ++channels;
    }
  } else {
    single = std::make_unique<Channel>(resolve_channel(ref, normalize));
    std::vector<std::uint64_t> seeds(20);
    for (std::size_t k = 0; k < seeds.size(); ++k) seeds[k] = k + 1;
    verify_channel(*single, seeds, totals);
    channels = 1;
  }

  const std::pair<const char*, double> rows[] = {{"completeness", totals.completeness},
                                                 {"pauli_relation", totals.pauli_relation},
                                                 {"reconstruction", totals.reconstruction},
                                                 {"oracle_equivalence", totals.oracle_equivalence}};
  bool passed = true;
  for (const auto& [name, value] : rows) passed = passed && value <= tol;

  if (as_json) {
    json j = header_json("verify", ref, single.get());
    j["channels"] = channels;
    j["tolerance"] = tol;
    j["defects"] = json::object();
    for (const auto& [name, value] : rows) j["defects"][name] = value;
    j["passed"] = passed;
    emit(out, j);
  } else {
    print_header(out, "verify", ref);
    out << "channels: " << channels << "\n";
    out << "tolerance: " << sci(tol) << "\n";
    for (const auto& [name, value] : rows) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%-20s max_defect %s  %s\n", name, sci(value).c_str(),
                    value <= tol ? "PASS" : "FAIL");
      out << buf;
    }
    out << "result: " << (passed ? "PASS" : "FAIL") << "\n";
  }
  return passed ? kExitOk : kExitVerification;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transformation-operator analysis of four-qubit teleportation channels", "teleop"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersionTag));

  bool as_json = false;
  bool normalize = false;
  app.add_flag("--json", as_json, "Emit a single JSON document");
  app.add_flag("--normalize", normalize, "Rescale @file channels to unit norm instead of rejecting them");

  auto* catalog_cmd = app.add_subcommand("catalog", "List builtin channels");

  std::string ref;
  auto* analyze_cmd = app.add_subcommand("analyze", "Classify a channel from its transformation operators");
  analyze_cmd->add_option("channel", ref, "Catalog name (name[:k=v,...]), random:SEED, or @file")->required();

  bool all = false;
  auto* operators_cmd = app.add_subcommand("operators", "Print the transformation operators");
  operators_cmd->add_option("channel", ref, "Catalog name, random:SEED, or @file")->required();
  operators_cmd->add_flag("--all", all, "Print all sixteen operators");

  std::string state = "random:1";
  bool enumerate = false;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  auto* teleport_cmd = app.add_subcommand("teleport", "Simulate the protocol for one input state");
  teleport_cmd->add_option("channel", ref, "Catalog name, random:SEED, or @file")->required();
  teleport_cmd->add_option("--state", state, "re,im pairs for x0..x3 (8 reals) or random:SEED")
      ->capture_default_str();
  teleport_cmd->add_flag("--enumerate", enumerate, "Report all sixteen measurement branches");
  teleport_cmd->add_option("--trials", trials, "Monte Carlo trials")->check(CLI::PositiveNumber)->capture_default_str();
  teleport_cmd->add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run the operator and protocol invariant checks");
  verify_cmd->add_option("channel", ref, "Catalog name, @file, random:SEED, or random:N for N random channels")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    const double tol = default_tolerance();
    if (catalog_cmd->parsed()) {
      return cmd_catalog(out, as_json);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(out, ref, normalize, tol, as_json);
    }
    const Channel c = resolve_channel(ref, normalize);
    if (analyze_cmd->parsed()) {
      return cmd_analyze(out, ref, c, tol, as_json);
    }
    if (operators_cmd->parsed()) {
      return cmd_operators(out, ref, c, all, as_json);
    }
    if (teleport_cmd->parsed()) {
      const InputState chi = resolve_state(state);
      return cmd_teleport(out, ref, c, chi, enumerate, trials, seed, tol, as_json);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnknownName& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "error: no command\n";
  return kExitParse;
}

}  // namespace teleop::cli
