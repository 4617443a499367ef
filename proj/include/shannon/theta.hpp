#pragma once

// Lovász theta as  min { Λ(A) : A symmetric, A_uv = 1 whenever u = v or
// {u, v} is not an edge }.  The edge entries are free. Solved as the dual of
//
//   maximize <J, X>  s.t.  tr X = 1,  X_uv = 0 for edges,  X ⪰ 0
//
// with a feasible-start primal-dual interior point method (HKM direction).
// Dual variables (t, y): Z = tI + Σ_e y_e (e_u e_vᵀ + e_v e_uᵀ) - J ⪰ 0 and
// A = J - Σ_e y_e (...), so Λ(A) <= t.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "shannon/errors.hpp"
#include "shannon/graph.hpp"
#include "shannon/sym_matrix.hpp"

namespace shannon {

struct ThetaOptions {
  std::size_t max_order = 16;
  std::size_t max_iterations = 100;
  double step_shrink = 0.8;       // backtracking factor for the PSD line search
  double boundary_damping = 0.95;  // fraction of the feasible step taken
};

struct ThetaResult {
  double value = 0.0;       // Λ(matrix); always a valid upper bound on ϑ
  SymMatrix matrix;         // pattern-feasible
  double tolerance = 0.0;
  double lower_estimate = 0.0;  // primal objective <J, X>
  std::size_t iterations = 0;
  bool converged = false;
};

/// True iff m has ones on the diagonal and at every non-adjacent pair.
inline bool theta_pattern_feasible(const Graph& g, const SymMatrix& m) {
  if (m.order() != g.order()) return false;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u; v < g.order(); ++v)
      if ((u == v || !g.adjacent(u, v)) && m(u, v) != 1.0) return false;
  return true;
}

inline ThetaResult lovasz_theta(const Graph& g, double tol = 1e-6,
                                const ThetaOptions& opts = {}) {
  using Eigen::MatrixXd;
  using Eigen::VectorXd;

  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("theta needs at least one vertex");
  if (n > opts.max_order)
    throw LimitError("theta: " + std::to_string(n) + " vertices exceeds limit " +
                     std::to_string(opts.max_order));
  if (!(tol >= 1e-6)) throw std::invalid_argument("theta tolerance must be >= 1e-6");

  const std::vector<Edge> edges = g.edges();
  const std::size_t m1 = edges.size();
  const std::size_t m = m1 + 1;  // constraint 0 is the trace
  const auto nd = static_cast<double>(n);

  ThetaResult result;
  result.tolerance = tol;
  VectorXd y = VectorXd::Zero(static_cast<Eigen::Index>(m));

  if (m1 > 0) {
    const double target = std::max(1e-10, tol * 1e-3);
    MatrixXd X = MatrixXd::Identity(n, n) / nd;
    y(0) = nd + 1.0;
    MatrixXd Z = y(0) * MatrixXd::Identity(n, n) - MatrixXd::Ones(n, n);
    double mu = (Z.array() * X.array()).sum() / (2.0 * nd);

    auto is_pd = [](const MatrixXd& s) {
      Eigen::LLT<MatrixXd> llt(s);
      return llt.info() == Eigen::Success;
    };
    auto max_step = [&](const MatrixXd& base, const MatrixXd& dir) {
      double a = 1.0;
      for (int k = 0; k < 200 && !is_pd(base + a * dir); ++k) a *= opts.step_shrink;
      if (!is_pd(base + a * dir)) return 0.0;
      return a < 1.0 ? a * opts.boundary_damping : a;
    };

    for (; result.iterations < opts.max_iterations; ++result.iterations) {
      const double dual = y(0);
      const double primal = X.sum();
      if (dual - primal <= target * std::max(1.0, std::abs(dual))) {
        result.converged = true;
        break;
      }

      MatrixXd Zi = Z.llt().solve(MatrixXd::Identity(n, n));
      Zi = (0.5 * (Zi + Zi.transpose())).eval();
      const MatrixXd P = X * Zi;

      // Schur complement M_kl = tr(A_k Zi A_l X).
      MatrixXd M(m, m);
      M(0, 0) = (Zi.array() * X.array()).sum();
      for (std::size_t e = 0; e < m1; ++e) {
        const auto [i, j] = edges[e];
        M(0, e + 1) = M(e + 1, 0) = P(j, i) + P(i, j);
        for (std::size_t f = e; f < m1; ++f) {
          const auto [a, b] = edges[f];
          const double v = Zi(j, a) * X(b, i) + Zi(j, b) * X(a, i) +
                           Zi(i, a) * X(b, j) + Zi(i, b) * X(a, j);
          M(e + 1, f + 1) = M(f + 1, e + 1) = v;
        }
      }
      VectorXd rhs(m);
      rhs(0) = mu * Zi.trace() - 1.0;
      for (std::size_t e = 0; e < m1; ++e)
        rhs(e + 1) = mu * 2.0 * Zi(edges[e].first, edges[e].second);

      const VectorXd dy = M.ldlt().solve(rhs);
      MatrixXd dZ = dy(0) * MatrixXd::Identity(n, n);
      for (std::size_t e = 0; e < m1; ++e) {
        dZ(edges[e].first, edges[e].second) += dy(e + 1);
        dZ(edges[e].second, edges[e].first) += dy(e + 1);
      }
      MatrixXd dX = mu * Zi - X - Zi * dZ * X;
      dX = (0.5 * (dX + dX.transpose())).eval();

      const double ap = max_step(X, dX);
      const double ad = max_step(Z, dZ);
      if (ap == 0.0 && ad == 0.0) break;
      X += ap * dX;
      y += ad * dy;
      Z += ad * dZ;
      mu = (Z.array() * X.array()).sum() / (2.0 * nd);
      if (ap + ad > 1.8) mu *= 0.5;
    }
    result.lower_estimate = X.sum();
  } else {
    result.converged = true;
    result.lower_estimate = nd;
  }

  SymMatrix a(n, 1.0);
  for (std::size_t e = 0; e < m1; ++e)
    a.set(edges[e].first, edges[e].second, 1.0 - y(static_cast<Eigen::Index>(e + 1)));
  result.value = lambda_max(a);
  result.matrix = std::move(a);
  return result;
}

}  // namespace shannon
