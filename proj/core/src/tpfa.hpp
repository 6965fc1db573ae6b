#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "dpnp/linalg.hpp"
#include "dpnp/mesh.hpp"

namespace dpnp::detail {

/// Two-point flux matrix of -div(c grad u) with homogeneous flux boundaries,
/// scaled by cell volume: row K holds sum_f c |f| / h (u_K - u_N).
inline SparseMatrix assemble_tpfa(const Grid& g, std::array<double, 2> coef) {
  TripletBuilder tb(g.num_cells(), g.num_cells());
  tb.reserve(4 * g.interior_faces().size() + g.num_cells());
  for (std::size_t c = 0; c < g.num_cells(); ++c) tb.add(c, c, 0.0);
  for (const auto& f : g.interior_faces()) {
    const double t = coef[g.is_x_face(f.face) ? 0 : 1] * g.face_length(f.face) / g.face_spacing(f.face);
    tb.add(f.minus, f.minus, t);
    tb.add(f.plus, f.plus, t);
    tb.add(f.minus, f.plus, -t);
    tb.add(f.plus, f.minus, -t);
  }
  return tb.build();
}

/// Removes the mean of a right-hand side so it lies in the range of a
/// pure-Neumann operator. A remainder at cancellation level is rounding noise
/// that would sit in the constant null space, so it is dropped.
inline void project_rhs(std::vector<double>& b) {
  double s = 0.0, big = 0.0;
  for (double v : b) {
    s += v;
    big = std::max(big, std::abs(v));
  }
  const double m = s / static_cast<double>(b.size());
  double left = 0.0;
  for (auto& v : b) {
    v -= m;
    left = std::max(left, std::abs(v));
  }
  if (left <= 64.0 * std::numeric_limits<double>::epsilon() * big) std::fill(b.begin(), b.end(), 0.0);
}

/// Solves the singular pure-Neumann system; a single cell has only the
/// trivial zero-mean solution.
inline SolveResult solve_neumann(const SparseMatrix& a, const std::vector<double>& b, const SolveOptions& opts) {
  if (a.rows() == 1) {
    SolveResult out;
    out.x = {0.0};
    out.report.converged = true;
    out.report.history = {0.0};
    return out;
  }
  return solve_spd(a, b, opts);
}

}  // namespace dpnp::detail
