// Copyright 2026 The globalgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gg/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gg/error.hpp"

namespace gg {

namespace {

using Vec = std::vector<Complex>;

Complex dot(const Vec& a, const Vec& b) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm(const Vec& a) { return std::sqrt(std::real(dot(a, a))); }

GroundState dense_ground(const PauliSum& h) {
  if (h.qubit_count() > kMaxDenseQubits) {
    throw SizeError("dense diagonalization limited to " + std::to_string(kMaxDenseQubits) + " qubits");
  }
  const Eigen::MatrixXcd m = dense_matrix(h);
  std::vector<Complex> amps(m.rows());
  double energy = 0.0;
  if (h.is_real()) {
    const Eigen::MatrixXd real = m.real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(real);
    if (solver.info() != Eigen::Success) throw NumericalError("dense eigensolver failed");
    energy = solver.eigenvalues()[0];
    for (Eigen::Index i = 0; i < m.rows(); ++i) amps[i] = solver.eigenvectors()(i, 0);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) throw NumericalError("dense eigensolver failed");
    energy = solver.eigenvalues()[0];
    for (Eigen::Index i = 0; i < m.rows(); ++i) amps[i] = solver.eigenvectors()(i, 0);
  }
  GroundState gs{energy, StateVector::from_amplitudes(std::move(amps)), 0.0, 0};
  gs.state.normalize();
  gs.residual = eigen_residual(h, gs.state, energy);
  return gs;
}

GroundState lanczos_ground(const PauliSum& h, const LanczosOptions& opt) {
  if (h.qubit_count() > kMaxLanczosQubits) {
    throw SizeError("Lanczos limited to " + std::to_string(kMaxLanczosQubits) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << h.qubit_count();
  const std::size_t vec_bytes = dim * sizeof(Complex);
  const int max_iter = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(opt.max_iterations), std::max<std::size_t>(2, opt.memory_budget / vec_bytes)));
  const int krylov_cap = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(max_iter), dim));

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss;
  Vec v(dim);
  for (auto& x : v) x = {gauss(rng), gauss(rng)};
  {
    const double n0 = norm(v);
    for (auto& x : v) x /= n0;
  }

  std::vector<Vec> basis;
  std::vector<double> alpha, beta;
  Vec w(dim);
  double previous = std::numeric_limits<double>::infinity();
  double energy = 0.0;
  Eigen::VectorXd ritz;
  bool done = false;

  for (int it = 0; it < krylov_cap && !done; ++it) {
    basis.push_back(v);
    h.apply(basis.back(), w);
    const double a = std::real(dot(basis.back(), w));
    alpha.push_back(a);
    // Full reorthogonalization against every stored vector (twice is enough).
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vec& u : basis) {
        const Complex c = dot(u, w);
        for (std::size_t i = 0; i < dim; ++i) w[i] -= c * u[i];
      }
    }
    const double b = norm(w);

    const int m = static_cast<int>(alpha.size());
    Eigen::VectorXd diag(m), sub(std::max(m - 1, 0));
    for (int i = 0; i < m; ++i) diag[i] = alpha[i];
    for (int i = 0; i + 1 < m; ++i) sub[i] = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    energy = tri.eigenvalues()[0];
    ritz = tri.eigenvectors().col(0);
    const double residual_estimate = b * std::abs(ritz[m - 1]);

    const bool invariant = b < 1e-13;
    if (invariant || (std::abs(energy - previous) <= opt.eigenvalue_tol && residual_estimate <= opt.residual_tol)) {
      done = true;
      break;
    }
    previous = energy;
    beta.push_back(b);
    for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / b;
  }

  Vec psi(dim, Complex{0.0, 0.0});
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) psi[i] += ritz[static_cast<Eigen::Index>(j)] * basis[j][i];

  GroundState gs{energy, StateVector::from_amplitudes(std::move(psi)), 0.0, static_cast<int>(basis.size())};
  gs.state.normalize();
  gs.residual = eigen_residual(h, gs.state, energy);
  if (!done && gs.residual > 1e-8) {
    throw NumericalError("Lanczos did not converge after " + std::to_string(basis.size()) +
                         " iterations; residual " + std::to_string(gs.residual));
  }
  return gs;
}

}  // namespace

double eigen_residual(const PauliSum& h, const StateVector& psi, double energy) {
  const StateVector hpsi = h.apply(psi);
  double acc = 0.0;
  for (std::size_t i = 0; i < psi.dimension(); ++i) acc += std::norm(hpsi[i] - energy * psi[i]);
  return std::sqrt(acc);
}

GroundState ground_energy(const PauliSum& h, EdMethod method, const LanczosOptions& options) {
  return method == EdMethod::dense ? dense_ground(h) : lanczos_ground(h, options);
}

}  // namespace gg
