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

#include "teleop/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "teleop/errors.hpp"
#include "teleop/random.hpp"

namespace teleop {

namespace {

constexpr double kRouteAgreement = 1e-10;

Amplitudes4 to_array(std::span<const Complex> v) {
  Amplitudes4 out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

Amplitudes4 normalized_or_zero(const Amplitudes4& v) {
  const double len = norm(v);
  if (len == 0.0) return Amplitudes4{};
  Amplitudes4 out = v;
  for (Complex& z : out) z /= len;
  return out;
}

}  // namespace

InputState::InputState(const Amplitudes4& amps, double norm_tol) : amps_(amps) {
  double sq = 0.0;
  for (const Complex& z : amps_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("InputState: non-finite amplitude");
    }
    sq += std::norm(z);
  }
  if (std::abs(sq - 1.0) > norm_tol) {
    std::ostringstream msg;
    msg << "InputState: squared norm " << sq << " is not 1";
    throw NormalizationError(msg.str());
  }
}

InputState InputState::random(std::uint64_t seed) {
  return InputState(to_array(random_unit_vector(seed, 4)));
}

std::string_view to_string(CorrectionKind k) {
  switch (k) {
    case CorrectionKind::Inverse:
      return "inverse";
    case CorrectionKind::Filter:
      return "filter";
    case CorrectionKind::Skipped:
      return "skipped";
  }
  return "?";
}

StateVector compose_system(const InputState& chi, const Channel& c) {
  const StateVector input(kInputLabels, std::vector<Complex>(chi.amps().begin(), chi.amps().end()));
  return kron(input, c.state());
}

Amplitudes4 project_branch(const StateVector& psi, BellIndex i, BellIndex j) {
  const StateVector bob = partial_inner(g_state(i, j), psi).reordered(kReceiverLabels);
  return to_array(bob.amps());
}

std::array<double, 16> outcome_probabilities(const InputState& chi, const Channel& c) {
  const StateVector psi = compose_system(chi, c);
  std::array<double, 16> probs{};
  std::size_t k = 0;
  for (const TransformOp& op : extract_all(c)) {
    const std::vector<Complex> image = matvec(op.m, chi.amps());
    const double via_operator = std::pow(norm(image), 2) / 16.0;
    const double via_projection = std::pow(norm(project_branch(psi, op.i, op.j)), 2);
    if (std::abs(via_operator - via_projection) > kRouteAgreement) {
      throw InternalError("outcome_probabilities: operator and projection routes disagree");
    }
    probs[k++] = via_operator;
  }
  return probs;
}

CorrectionResult bob_correction(const TransformOp& op, std::span<const Complex, 4> bob_state_raw,
                                CorrectionMode mode) {
  if (mode == CorrectionMode::Inverse) {
    if (!is_unitary(op.m, tol::kIdentity)) {
      throw NotUnitary("bob_correction: inverse mode needs a unitary operator");
    }
    const std::vector<Complex> fixed = matvec(inverse(op.m), bob_state_raw);
    return {to_array(fixed), 1.0};
  }

  const std::vector<double> s = singular_values(op.m);
  const double s_min = s.back();
  if (s_min <= tol::kSingular) {
    throw SingularOperator("bob_correction: filter mode needs an invertible operator");
  }
  const Matrix filter = Complex{s_min} * inverse(op.m);
  const Matrix dilation = dilation_unitary(filter);

  std::vector<Complex> joint(8);  // |0>_a (x) raw
  std::copy(bob_state_raw.begin(), bob_state_raw.end(), joint.begin());
  const std::vector<Complex> out = matvec(dilation, joint);

  Amplitudes4 kept{out[0], out[1], out[2], out[3]};
  double p = 0.0;
  for (const Complex& z : kept) p += std::norm(z);
  if (p == 0.0) {
    return {std::nullopt, 0.0};
  }
  return {normalized_or_zero(kept), std::min(p, 1.0)};
}

std::vector<OutcomeRecord> run_deterministic(const InputState& chi, const Channel& c, double tol) {
  const StateVector psi = compose_system(chi, c);
  const std::vector<TransformOp> ops = extract_all(c);
  const Classification cls = classify_operator(ops.front().m, tol);

  std::vector<OutcomeRecord> records;
  records.reserve(16);
  for (const TransformOp& op : ops) {
    const Amplitudes4 raw = project_branch(psi, op.i, op.j);
    OutcomeRecord rec{op.i, op.j, std::pow(norm(raw), 2), normalized_or_zero(raw), CorrectionKind::Skipped,
                      std::nullopt, 0.0, 0.0, cls.verdict};

    if (cls.verdict != Verdict::Impossible && rec.probability > 0.0) {
      const CorrectionMode mode = cls.verdict == Verdict::Perfect ? CorrectionMode::Inverse : CorrectionMode::Filter;
      rec.correction = mode == CorrectionMode::Inverse ? CorrectionKind::Inverse : CorrectionKind::Filter;
      const CorrectionResult fixed = bob_correction(op, rec.bob_state_raw, mode);
      rec.bob_state_corrected = fixed.state;
      rec.filter_success_probability = fixed.success_probability;
      if (fixed.state) {
        rec.fidelity = fidelity(chi.amps(), *fixed.state);
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

RunStats run_sampled(const InputState& chi, const Channel& c, std::uint64_t seed, std::uint64_t trials,
                     double tol) {
  if (trials < 1) {
    throw std::invalid_argument("run_sampled: trials must be at least 1");
  }
  const std::vector<OutcomeRecord> records = run_deterministic(chi, c, tol);

  std::array<double, 16> cdf{};
  double running = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t k = 0; k < 16; ++k) {
    running += records[k].probability;
    cdf[k] = running;
    if (records[k].probability > 0.0) last_nonzero = k;
  }

  RunStats stats;
  stats.trials = trials;
  stats.seed = seed;
  SeededRng rng(seed);
  double fidelity_sum = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const double u = rng.uniform() * running;
    std::size_t k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    k = std::min(k, last_nonzero);
    ++stats.outcome_counts[k];

    const OutcomeRecord& rec = records[k];
    bool success = false;
    switch (rec.correction) {
      case CorrectionKind::Inverse:
        success = true;
        break;
      case CorrectionKind::Filter:
        success = rng.uniform() < rec.filter_success_probability;
        break;
      case CorrectionKind::Skipped:
        break;
    }
    if (success) {
      ++stats.successes;
      fidelity_sum += rec.fidelity;
    }
  }
  stats.empirical_success_rate = static_cast<double>(stats.successes) / static_cast<double>(trials);
  stats.mean_fidelity_on_success = stats.successes == 0 ? 0.0 : fidelity_sum / static_cast<double>(stats.successes);
  return stats;
}

double oracle_equivalence_defect(const InputState& chi, const Channel& c) {
  const StateVector psi = compose_system(chi, c);
  double worst = 0.0;
  for (const TransformOp& op : extract_all(c)) {
    const Amplitudes4 projected = project_branch(psi, op.i, op.j);
    const Amplitudes4 predicted = to_array(matvec(op.m, chi.amps()));
    const double np = norm(projected);
    const double nq = norm(predicted) / 4.0;
    if (np <= tol::kSingular || nq <= tol::kSingular) {
      for (std::size_t k = 0; k < 4; ++k) {
        worst = std::max(worst, std::abs(4.0 * projected[k] - predicted[k]));
      }
      continue;
    }
    const Amplitudes4 a = normalized_or_zero(projected);
    const Amplitudes4 b = normalized_or_zero(predicted);
    const Complex overlap = dot(a, b);
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0};
    for (std::size_t k = 0; k < 4; ++k) {
      worst = std::max(worst, std::abs(phase * a[k] - b[k]));
    }
  }
  return worst;
}

double fidelity(std::span<const Complex, 4> a, std::span<const Complex, 4> b) {
  return std::clamp(std::norm(dot(a, b)), 0.0, 1.0);
}

}  // namespace teleop
