// Copyright 2026 The hybrid-anneal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hybrid_anneal/krylov.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "hybrid_anneal/errors.hpp"

namespace hanneal {

namespace {

// Complex vectors are handled as interleaved doubles; std::complex guarantees
// the layout and this avoids the NaN-checking complex multiply.
const double* raw(std::span<const Complex> v) { return reinterpret_cast<const double*>(v.data()); }
double* raw(std::span<Complex> v) { return reinterpret_cast<double*>(v.data()); }

// Reductions keep four independent partial sums so they vectorize without
// reassociation flags; the summation order is fixed, so results are reproducible.
double real_dot(std::span<const Complex> a, std::span<const Complex> b) {
  const double* x = raw(a);
  const double* y = raw(b);
  const std::size_t n = 2 * a.size();
  double s[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s[0] += x[i] * y[i];
    s[1] += x[i + 1] * y[i + 1];
    s[2] += x[i + 2] * y[i + 2];
    s[3] += x[i + 3] * y[i + 3];
  }
  for (; i < n; ++i) s[0] += x[i] * y[i];
  return (s[0] + s[1]) + (s[2] + s[3]);
}

double norm_sq(std::span<const Complex> a) { return real_dot(a, a); }

void scale_into(std::span<const Complex> in, double factor, std::span<Complex> out) {
  const double* x = raw(in);
  double* y = raw(out);
  const std::size_t n = 2 * in.size();
  for (std::size_t i = 0; i < n; ++i) y[i] = factor * x[i];
}

// w -= a * v + b * u (u may be null); returns {<v, w>, |w|^2} of the updated w.
std::pair<double, double> lanczos_update(double a, const double* v, double b, const double* u,
                                         double* w, std::size_t n) {
  double dot[4] = {0.0, 0.0, 0.0, 0.0};
  double nrm[4] = {0.0, 0.0, 0.0, 0.0};
  auto body = [&](std::size_t i, int lane) {
    double wi = w[i] - a * v[i];
    if (u) wi -= b * u[i];
    w[i] = wi;
    dot[lane] += v[i] * wi;
    nrm[lane] += wi * wi;
  };
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    body(i, 0);
    body(i + 1, 1);
    body(i + 2, 2);
    body(i + 3, 3);
  }
  for (; i < n; ++i) body(i, 0);
  return {(dot[0] + dot[1]) + (dot[2] + dot[3]), (nrm[0] + nrm[1]) + (nrm[2] + nrm[3])};
}

// out = (w - c * v) / b
void next_vector(const double* w, double c, const double* v, double b, double* out,
                 std::size_t n) {
  const double inv = 1.0 / b;
  for (std::size_t i = 0; i < n; ++i) out[i] = (w[i] - c * v[i]) * inv;
}

// Ritz data of the current Lanczos tridiagonal.
struct Tridiagonal {
  Eigen::VectorXd eigenvalues;
  Eigen::VectorXd first_row;  // Q(0, l)
  Eigen::VectorXd last_row;   // Q(m - 1, l)
  Eigen::MatrixXd vectors;

  void compute(const std::vector<double>& alpha, const std::vector<double>& beta, int m) {
    Eigen::VectorXd diag(m);
    Eigen::VectorXd sub(std::max(m - 1, 0));
    for (int i = 0; i < m; ++i) diag(i) = alpha[i];
    for (int i = 0; i + 1 < m; ++i) sub(i) = beta[i];
    if (m == 1) {
      eigenvalues = diag;
      vectors = Eigen::MatrixXd::Identity(1, 1);
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
      es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      eigenvalues = es.eigenvalues();
      vectors = es.eigenvectors();
    }
    first_row = vectors.row(0).transpose();
    last_row = vectors.row(m - 1).transpose();
  }

  // |e_m^T exp(-i T h) e_1|
  double tail(double h) const {
    Complex s{0.0, 0.0};
    for (Eigen::Index l = 0; l < eigenvalues.size(); ++l) {
      s += last_row(l) * first_row(l) * std::polar(1.0, -eigenvalues(l) * h);
    }
    return std::abs(s);
  }

  // exp(-i T h) e_1
  std::vector<Complex> propagate_first(double h) const {
    const auto m = eigenvalues.size();
    std::vector<Complex> phase(m);
    for (Eigen::Index l = 0; l < m; ++l) {
      phase[l] = first_row(l) * std::polar(1.0, -eigenvalues(l) * h);
    }
    std::vector<Complex> y(m, Complex{0.0, 0.0});
    for (Eigen::Index k = 0; k < m; ++k) {
      Complex s{0.0, 0.0};
      for (Eigen::Index l = 0; l < m; ++l) s += vectors(k, l) * phase[l];
      y[k] = s;
    }
    return y;
  }
};

}  // namespace

TransverseFieldOperator::TransverseFieldOperator(std::span<const double> diagonal,
                                                 int n_qubits, double field)
    : diagonal_(diagonal), n_qubits_(n_qubits), field_(field) {
  if (diagonal.size() != (std::size_t{1} << n_qubits)) {
    throw DimensionError("diagonal length does not match 2^N");
  }
}

void TransverseFieldOperator::apply(std::span<const Complex> in, std::span<Complex> out) const {
  const std::size_t dim = diagonal_.size();
  if (in.size() != dim || out.size() != dim) {
    throw DimensionError("state dimension does not match the Hamiltonian");
  }
  const double* x = raw(in);
  double* y = raw(out);
  for (std::size_t a = 0; a < dim; ++a) {
    y[2 * a] = diagonal_[a] * x[2 * a];
    y[2 * a + 1] = diagonal_[a] * x[2 * a + 1];
  }
  if (field_ == 0.0) return;
  const double b = field_;
  int q = 0;
  if (n_qubits_ >= 2) {
    // the two lowest spins flip within aligned blocks of four amplitudes
    for (std::size_t base = 0; base < dim; base += 4) {
      const double* xs = x + 2 * base;
      double* ys = y + 2 * base;
      for (int c = 0; c < 2; ++c) {
        const double x0 = xs[c], x1 = xs[2 + c], x2 = xs[4 + c], x3 = xs[6 + c];
        ys[c] += b * (x1 + x2);
        ys[2 + c] += b * (x0 + x3);
        ys[4 + c] += b * (x3 + x0);
        ys[6 + c] += b * (x2 + x1);
      }
    }
    q = 2;
  }
  for (; q < n_qubits_; ++q) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      double* lo = y + 2 * base;
      double* hi = y + 2 * (base + stride);
      const double* xlo = x + 2 * base;
      const double* xhi = x + 2 * (base + stride);
      for (std::size_t k = 0; k < 2 * stride; ++k) {
        lo[k] += b * xhi[k];
        hi[k] += b * xlo[k];
      }
    }
  }
}

KrylovPropagator::KrylovPropagator(std::size_t dimension, KrylovOptions options)
    : dimension_(dimension), options_(options) {
  if (options_.max_dimension < 2) throw ParameterError("Krylov dimension must be >= 2");
  if (!(options_.tolerance > 0.0)) throw ParameterError("Krylov tolerance must be > 0");
  basis_.assign(static_cast<std::size_t>(options_.max_dimension), Amplitudes(dimension));
  work_.assign(dimension, Complex{0.0, 0.0});
}

KrylovStats KrylovPropagator::propagate(const TransverseFieldOperator& op, double time,
                                        std::span<Complex> state) {
  if (state.size() != dimension_ || op.dimension() != dimension_) {
    throw DimensionError("Krylov workspace dimension mismatch");
  }
  KrylovStats stats;
  if (time == 0.0) return stats;
  if (!std::isfinite(time)) throw ParameterError("propagation time must be finite");

  const int max_m = options_.max_dimension;
  const double rate = options_.tolerance / std::abs(time);  // allowed error per unit time
  const double direction = time > 0.0 ? 1.0 : -1.0;
  double remaining = std::abs(time);
  std::vector<double> alpha;
  std::vector<double> beta;
  alpha.reserve(max_m);
  beta.reserve(max_m);
  Tridiagonal tri;

  while (remaining > 0.0) {
    if (++stats.substeps > options_.max_substeps) {
      throw ConvergenceError("Krylov propagation exceeded the substep cap", remaining);
    }
    const double nu = std::sqrt(norm_sq(state));
    if (nu == 0.0) return stats;
    scale_into(state, 1.0 / nu, basis_[0]);
    alpha.clear();
    beta.clear();

    double h = 0.0;
    double err = 0.0;
    int m = 0;
    for (int j = 0; j < max_m; ++j) {
      op.apply(basis_[j], work_);
      ++stats.matvecs;
      const double a = real_dot(basis_[j], work_);
      const double* vj = raw(std::span<const Complex>(basis_[j]));
      const double* vprev = j > 0 ? raw(std::span<const Complex>(basis_[j - 1])) : nullptr;
      const auto [c0, w2] = lanczos_update(a, vj, j > 0 ? beta[j - 1] : 0.0, vprev,
                                           raw(std::span<Complex>(work_)), 2 * dimension_);
      // one local reorthogonalization against v_j, folded into the next vector
      const double b = std::sqrt(std::max(w2 - c0 * c0, 0.0));
      alpha.push_back(a + c0);
      beta.push_back(b);
      m = j + 1;

      const double scale = std::max(std::abs(alpha.front()), 1.0);
      const bool breakdown = b <= 1e-13 * scale;
      const bool last = m == max_m;
      if (breakdown || last || (m >= 6 && (m <= 16 ? m % 2 == 0 : m % 8 == 0))) {
        tri.compute(alpha, beta, m);
        if (breakdown) {
          h = remaining;
          err = 0.0;
          break;
        }
        err = nu * b * tri.tail(remaining);
        if (err <= rate * remaining) {
          h = remaining;
          break;
        }
        if (last) {
          // error ~ h^m; shrink until the estimate meets the local budget
          h = remaining;
          for (int it = 0; it < 200 && err > rate * h; ++it) {
            const double ratio = std::clamp(rate * h / err, 1e-6, 1.0);
            h *= std::clamp(0.9 * std::pow(ratio, 1.0 / m), 0.05, 0.95);
            err = nu * b * tri.tail(h);
          }
          if (err > rate * h || h <= 1e-14 * std::abs(time)) {
            throw ConvergenceError("Krylov step size collapsed", err);
          }
          break;
        }
      }
      next_vector(raw(std::span<const Complex>(work_)), c0, vj, b,
                  raw(std::span<Complex>(basis_[j + 1])), 2 * dimension_);
    }

    const auto y = tri.propagate_first(direction * h);
    double* out = raw(state);
    std::fill(state.begin(), state.end(), Complex{0.0, 0.0});
    for (int k = 0; k < m; ++k) {
      const double yr = nu * y[k].real();
      const double yi = nu * y[k].imag();
      const double* v = raw(std::span<const Complex>(basis_[k]));
      for (std::size_t i = 0; i < dimension_; ++i) {
        out[2 * i] += yr * v[2 * i] - yi * v[2 * i + 1];
        out[2 * i + 1] += yr * v[2 * i + 1] + yi * v[2 * i];
      }
    }
    stats.error_estimate += err;
    remaining -= h;
    if (remaining < 1e-15 * std::abs(time)) remaining = 0.0;
  }
  return stats;
}

}  // namespace hanneal
