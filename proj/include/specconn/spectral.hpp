#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "specconn/graph.hpp"

namespace specconn {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Scalar = double>
DenseMatrix<Scalar> adjacency_matrix(const Graph& g) {
  const int n = g.order();
  DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Zero(n, n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) a(u, v) = Scalar(1);
  }
  return a;
}

template <typename Scalar = double>
struct SpectralResult {
  Scalar rho = 0;
  /// Unit Perron vector. On disconnected input it is supported on the
  /// dominant component only.
  DenseVector<Scalar> perron;
  int iterations = 0;
  /// ||A x - rho x||_inf
  Scalar residual = 0;
};

namespace detail {

template <typename Scalar>
int power_iteration_cap(int n, Scalar tol) {
  using std::log;
  const double l = std::max(1.0, static_cast<double>(-log(tol)));
  return static_cast<int>(200.0 * n * l);
}

// Shifted power iteration on A + I restricted to one connected vertex set.
template <typename Scalar>
SpectralResult<Scalar> dominant_pair(const DenseMatrix<Scalar>& a, Scalar tol) {
  using std::abs;
  using std::sqrt;
  const int n = static_cast<int>(a.rows());
  SpectralResult<Scalar> out;
  if (n == 1) {
    out.perron = DenseVector<Scalar>::Ones(1);
    return out;
  }

  // Start from the degree vector plus one: positive and already biased
  // towards the Perron direction.
  DenseVector<Scalar> x = a.rowwise().sum().array() + Scalar(1);
  x.normalize();
  DenseVector<Scalar> ax(n);
  const int cap = power_iteration_cap(n, tol);
  for (int it = 1; it <= cap; ++it) {
    ax.noalias() = a * x;
    const Scalar rho = x.dot(ax);
    const Scalar residual = (ax - rho * x).cwiseAbs().maxCoeff();
    if (residual <= tol * std::max(Scalar(1), rho)) {
      out.rho = rho;
      out.perron = x;
      out.iterations = it;
      out.residual = residual;
      return out;
    }
    x = ax + x;
    x.normalize();
  }
  throw ConvergenceError("power iteration did not converge within " + std::to_string(cap) +
                         " iterations");
}

}  // namespace detail

/// Spectral radius and Perron vector of the adjacency matrix.
///
/// Uses shifted power iteration on A + I. On return the residual satisfies
/// residual <= tol * max(1, rho). Disconnected graphs are solved per
/// component and the dominant one is reported.
template <typename Scalar = double>
SpectralResult<Scalar> spectral_radius(const Graph& g, Scalar tol = Scalar(1e-12)) {
  if (!(tol > Scalar(0))) throw std::invalid_argument("tolerance must be positive");
  const int n = g.order();
  SpectralResult<Scalar> best;
  best.perron = DenseVector<Scalar>::Zero(n);
  bool have = false;
  for (VertexSet part : components(g)) {
    const std::vector<Vertex> members = part.to_vector();
    DenseMatrix<Scalar> sub = adjacency_matrix<Scalar>(g.induced(part));
    SpectralResult<Scalar> r = detail::dominant_pair<Scalar>(sub, tol);
    best.iterations += r.iterations;
    if (!have || r.rho > best.rho) {
      have = true;
      best.rho = r.rho;
      best.residual = r.residual;
      best.perron.setZero();
      for (std::size_t i = 0; i < members.size(); ++i) best.perron(members[i]) = r.perron(i);
    }
  }
  return best;
}

/// K_s v (K_{n_1} u ... u K_{n_t}).
struct CliqueJoinShape {
  int core = 0;
  std::vector<int> parts;

  int order() const { return core + std::accumulate(parts.begin(), parts.end(), 0); }
};

void validate(const CliqueJoinShape& shape);

/// Assembles the graph: core vertices first, then each part in order.
Graph assemble(const CliqueJoinShape& shape);

/// Equitable quotient matrix, core row first when core > 0.
template <typename Scalar = double>
DenseMatrix<Scalar> quotient_matrix(const CliqueJoinShape& shape) {
  validate(shape);
  const int t = static_cast<int>(shape.parts.size());
  const int off = shape.core > 0 ? 1 : 0;
  DenseMatrix<Scalar> q = DenseMatrix<Scalar>::Zero(t + off, t + off);
  if (off) {
    q(0, 0) = Scalar(shape.core - 1);
    for (int i = 0; i < t; ++i) {
      q(0, i + 1) = Scalar(shape.parts[i]);
      q(i + 1, 0) = Scalar(shape.core);
    }
  }
  for (int i = 0; i < t; ++i) q(i + off, i + off) = Scalar(shape.parts[i] - 1);
  return q;
}

/// Monic characteristic polynomial det(xI - m) by Leverrier-Faddeev,
/// coefficients ordered from x^0 up to x^m (last entry 1).
template <typename Scalar>
std::vector<Scalar> characteristic_polynomial(const DenseMatrix<Scalar>& m) {
  const int size = static_cast<int>(m.rows());
  std::vector<Scalar> coeff(size + 1, Scalar(0));
  coeff[size] = Scalar(1);
  DenseMatrix<Scalar> mk = DenseMatrix<Scalar>::Zero(size, size);
  const DenseMatrix<Scalar> id = DenseMatrix<Scalar>::Identity(size, size);
  for (int k = 1; k <= size; ++k) {
    mk = m * mk + coeff[size - k + 1] * id;
    coeff[size - k] = -(m * mk).trace() / Scalar(k);
  }
  return coeff;
}

namespace detail {

template <typename Scalar>
std::vector<Scalar> derivative(const std::vector<Scalar>& p) {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Scalar(i));
  return d;
}

template <typename Scalar>
Scalar horner(const std::vector<Scalar>& p, Scalar x) {
  Scalar acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace detail

/// Largest root of a monic real-rooted polynomial inside [lo, hi]. Bisects
/// on "p and every derivative are non-negative at x", then takes one Newton
/// step.
template <typename Scalar>
Scalar largest_real_root(const std::vector<Scalar>& poly, Scalar lo, Scalar hi,
                         Scalar tol = Scalar(1e-13)) {
  std::vector<std::vector<Scalar>> chain{poly};
  while (chain.back().size() > 1) chain.push_back(detail::derivative(chain.back()));
  auto beyond = [&](Scalar x) {
    return std::all_of(chain.begin(), chain.end(),
                       [&](const auto& p) { return detail::horner(p, x) >= Scalar(0); });
  };
  while (hi - lo > tol) {
    const Scalar mid = lo + (hi - lo) / 2;
    if (beyond(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  // One Newton polish from the upper end.
  Scalar x = hi;
  const Scalar d = detail::horner(chain[1], x);
  if (d != Scalar(0)) {
    const Scalar step = detail::horner(poly, x) / d;
    if (x - step >= lo - tol && x - step <= hi + tol) x -= step;
  }
  return x;
}

/// Exact spectral radius of K_s v (K_{n_1} u ... u K_{n_t}) from the
/// characteristic polynomial of its equitable quotient matrix.
template <typename Scalar = double>
Scalar quotient_spectral_radius(const CliqueJoinShape& shape) {
  const DenseMatrix<Scalar> q = quotient_matrix<Scalar>(shape);
  const std::vector<Scalar> poly = characteristic_polynomial<Scalar>(q);
  // Non-negative matrix: min row sum <= rho <= n - 1.
  const Scalar lo = q.rowwise().sum().minCoeff();
  const Scalar hi = Scalar(shape.order());
  return largest_real_root<Scalar>(poly, lo, hi);
}

enum class PerronRelation {
  /// N(v)\{u} is a proper subset of N(u)\{v}: x(u) > x(v).
  u_dominates,
  /// N(u)\{v} is a proper subset of N(v)\{u}: x(v) > x(u).
  v_dominates,
  /// N(v) in N[u] and N(u) in N[v]: x(u) = x(v).
  twins,
  incomparable,
};

std::string to_string(PerronRelation r);

struct PerronComparison {
  PerronRelation relation = PerronRelation::incomparable;
  double x_u = 0;
  double x_v = 0;
  /// Whether the measured entries agree with the structural relation
  /// (always true for `incomparable`).
  bool consistent = true;
};

/// Structural classification of the pair (u, v), checked against the
/// measured Perron entries. Twins are compared at relative tolerance 1e-9.
/// Throws std::invalid_argument on disconnected input or u == v.
PerronComparison perron_compare(const Graph& g, Vertex u, Vertex v);

}  // namespace specconn
