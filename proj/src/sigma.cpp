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

#include "teleop/sigma.hpp"

#include <algorithm>
#include <cmath>

#include "teleop/errors.hpp"

namespace teleop {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Perfect:
      return "Perfect";
    case Verdict::Probabilistic:
      return "Probabilistic";
    case Verdict::Impossible:
      return "Impossible";
  }
  return "?";
}

TransformOp extract_sigma(const Channel& c, BellIndex i, BellIndex j) {
  const StateVector g = g_state(i, j);
  Matrix m(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    const StateVector psi = kron(StateVector::basis(kInputLabels, k), c.state());
    const StateVector column = partial_inner(g, psi);
    if (column.labels() != kReceiverLabels) {
      throw InternalError("extract_sigma: unexpected residual labels");
    }
    std::vector<Complex> scaled(column.amps().begin(), column.amps().end());
    for (Complex& z : scaled) z *= 4.0;
    m.set_column(k, scaled);
  }
  return {i, j, std::move(m)};
}

std::vector<TransformOp> extract_all(const Channel& c) {
  std::vector<TransformOp> ops;
  ops.reserve(16);
  for (BellIndex i : BellIndex::all()) {
    for (BellIndex j : BellIndex::all()) {
      ops.push_back(extract_sigma(c, i, j));
    }
  }
  return ops;
}

const std::array<Matrix, 4>& pauli_assignment() {
  static const std::array<Matrix, 4> factors = [] {
    std::array<Matrix, 4> out;
    for (BellIndex i : BellIndex::all()) {
      out[i.offset()] = Complex(bell_sign(i)) * pauli_factor(i).matrix.adjoint();
    }
    return out;
  }();
  return factors;
}

double completeness_defect(std::span<const TransformOp> ops) {
  Matrix sum(4, 4);
  for (const TransformOp& op : ops) {
    sum = sum + op.m.adjoint() * op.m;
  }
  return max_abs_diff(sum, Complex{16.0} * Matrix::identity(4));
}

double pauli_relation_defect(std::span<const TransformOp> ops) {
  const auto base = std::find_if(ops.begin(), ops.end(), [](const TransformOp& op) {
    return op.i.value() == 1 && op.j.value() == 1;
  });
  if (base == ops.end()) {
    throw std::invalid_argument("pauli_relation_defect: the (1,1) operator is missing");
  }
  const auto& w = pauli_assignment();
  double worst = 0.0;
  for (const TransformOp& op : ops) {
    const Matrix predicted = base->m * kron(w[op.i.offset()], w[op.j.offset()]);
    worst = std::max(worst, max_abs_diff(op.m, predicted));
  }
  return worst;
}

RelationCheck verify_pauli_relation(const Channel& c, double tol) {
  const double defect = pauli_relation_defect(extract_all(c));
  return {defect, defect <= tol};
}

double reconstruction_defect(const Channel& c, std::span<const Complex> chi) {
  if (chi.size() != 4) {
    throw std::invalid_argument("reconstruction_defect: expected 4 input amplitudes");
  }
  const std::vector<QubitLabel> all{1, 2, 3, 4, 5, 6};
  const StateVector input(kInputLabels, std::vector<Complex>(chi.begin(), chi.end()));
  const StateVector composed = kron(input, c.state());

  std::vector<Complex> series(64);
  for (const TransformOp& op : extract_all(c)) {
    const StateVector bob(kReceiverLabels, matvec(op.m, chi));
    const StateVector term = kron(g_state(op.i, op.j), bob);
    for (std::size_t k = 0; k < 64; ++k) series[k] += 0.25 * term[k];
  }
  const StateVector resummed(all, std::move(series));

  double worst = 0.0;
  for (std::size_t k = 0; k < 64; ++k) {
    worst = std::max(worst, std::abs(composed[k] - resummed[k]));
  }
  return worst;
}

Classification classify_operator(const Matrix& sigma11, double tol) {
  if (sigma11.rows() != 4 || sigma11.cols() != 4) {
    throw std::invalid_argument("classify_operator: expected a 4x4 operator");
  }
  const std::vector<double> s = singular_values(sigma11);
  Classification out;
  std::copy(s.begin(), s.end(), out.singular_values.begin());
  out.det_magnitude = std::abs(determinant(sigma11));

  double flat_dev = 0.0;
  for (double v : s) flat_dev = std::max(flat_dev, std::abs(v - 1.0));
  const double s_min = s.back();

  if (flat_dev < tol) {
    out.verdict = Verdict::Perfect;
    out.success_probability = 1.0;
  } else if (s_min < tol) {
    out.verdict = Verdict::Impossible;
    out.success_probability = 0.0;
  } else {
    out.verdict = Verdict::Probabilistic;
    out.success_probability = s_min * s_min;
  }
  auto near = [tol](double q) { return q >= 0.1 * tol && q <= 10.0 * tol; };
  out.borderline = near(flat_dev) || near(s_min);
  return out;
}

Classification classify(const Channel& c, double tol) {
  return classify_operator(extract_sigma(c, BellIndex(1), BellIndex(1)).m, tol);
}

AnalysisReport analyze(const Channel& c, double tol) {
  const std::vector<TransformOp> ops = extract_all(c);
  AnalysisReport report;
  report.channel_name = c.name();
  report.sigma11 = ops.front().m;
  report.classification = classify_operator(report.sigma11, tol);
  report.completeness_defect = completeness_defect(ops);
  report.pauli_relation_defect = pauli_relation_defect(ops);
  return report;
}

}  // namespace teleop
