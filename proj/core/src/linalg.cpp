#include "dpnp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dpnp {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<std::size_t> row_offsets,
                           std::vector<std::size_t> col_indices, std::vector<double> values)
    : rows_(rows),
      cols_(cols),
      offsets_(std::move(row_offsets)),
      cols_idx_(std::move(col_indices)),
      values_(std::move(values)) {
  if (offsets_.size() != rows_ + 1 || offsets_.front() != 0 || offsets_.back() != values_.size() ||
      cols_idx_.size() != values_.size()) {
    throw DimensionError("SparseMatrix: inconsistent CSR arrays");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    if (offsets_[r] > offsets_[r + 1]) throw DimensionError("SparseMatrix: offsets decrease");
    for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k) {
      if (cols_idx_[k] >= cols_) throw DimensionError("SparseMatrix: column index out of range");
      if (k > offsets_[r] && cols_idx_[k] <= cols_idx_[k - 1]) {
        throw DimensionError("SparseMatrix: column indices not strictly increasing");
      }
      if (!std::isfinite(values_[k])) throw DomainError("SparseMatrix: non-finite value");
    }
  }
}

void SparseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != cols_ || y.size() != rows_) throw DimensionError("SparseMatrix::multiply: size mismatch");
  for (std::size_t r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k) s += values_[k] * x[cols_idx_[k]];
    y[r] = s;
  }
}

std::vector<double> SparseMatrix::operator*(std::span<const double> x) const {
  std::vector<double> y(rows_);
  multiply(x, y);
  return y;
}

std::vector<double> SparseMatrix::diagonal() const {
  std::vector<double> d(std::min(rows_, cols_), 0.0);
  for (std::size_t r = 0; r < d.size(); ++r) d[r] = at(r, r);
  return d;
}

double SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto first = cols_idx_.begin() + static_cast<std::ptrdiff_t>(offsets_[r]);
  const auto last = cols_idx_.begin() + static_cast<std::ptrdiff_t>(offsets_[r + 1]);
  const auto it = std::lower_bound(first, last, c);
  if (it == last || *it != c) return 0.0;
  return values_[static_cast<std::size_t>(it - cols_idx_.begin())];
}

bool SparseMatrix::is_symmetric(double tol) const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k) {
      const double a = values_[k];
      const double b = at(cols_idx_[k], r);
      if (std::abs(a - b) > tol * std::max(std::abs(a), std::abs(b))) return false;
    }
  }
  return true;
}

SparseMatrix TripletBuilder::build() const {
  std::vector<std::size_t> counts(rows_ + 1, 0);
  for (const auto& e : entries_) {
    if (e.r >= rows_ || e.c >= cols_) throw DimensionError("TripletBuilder: index out of range");
    ++counts[e.r + 1];
  }
  std::partial_sum(counts.begin(), counts.end(), counts.begin());
  std::vector<std::size_t> order(entries_.size());
  {
    std::vector<std::size_t> next(counts.begin(), counts.end() - 1);
    for (std::size_t k = 0; k < entries_.size(); ++k) order[next[entries_[k].r]++] = k;
  }
  std::vector<std::size_t> offsets(rows_ + 1, 0);
  std::vector<std::size_t> cols;
  std::vector<double> vals;
  cols.reserve(entries_.size());
  vals.reserve(entries_.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    auto first = order.begin() + static_cast<std::ptrdiff_t>(counts[r]);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(counts[r + 1]);
    // stable so that summation order of duplicates is deterministic
    std::stable_sort(first, last, [&](std::size_t a, std::size_t b) { return entries_[a].c < entries_[b].c; });
    for (auto it = first; it != last; ++it) {
      const auto& e = entries_[*it];
      if (cols.size() > offsets[r] && cols.back() == e.c) {
        vals.back() += e.v;
      } else {
        cols.push_back(e.c);
        vals.push_back(e.v);
      }
    }
    offsets[r + 1] = cols.size();
  }
  return SparseMatrix(rows_, cols_, std::move(offsets), std::move(cols), std::move(vals));
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

namespace {

std::vector<double> inverse_diagonal(const SparseMatrix& a) {
  auto d = a.diagonal();
  for (auto& v : d) {
    if (!(v > 0.0)) throw DomainError("Jacobi preconditioner needs a positive diagonal");
    v = 1.0 / v;
  }
  return d;
}

void check_system(const SparseMatrix& a, std::span<const double> b, std::span<const double> x0) {
  if (a.rows() != a.cols()) throw DimensionError("solver: matrix is not square");
  if (b.size() != a.rows()) throw DimensionError("solver: right-hand side size mismatch");
  if (!x0.empty() && x0.size() != a.rows()) throw DimensionError("solver: initial guess size mismatch");
}

std::vector<double> residual(const SparseMatrix& a, std::span<const double> b, std::span<const double> x) {
  std::vector<double> r = a * x;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = b[k] - r[k];
  return r;
}

}  // namespace

SolveResult solve_spd(const SparseMatrix& a, std::span<const double> b, const SolveOptions& opts,
                      std::span<const double> x0) {
  check_system(a, b, x0);
  const std::size_t n = a.rows();
  const std::size_t max_iter = opts.max_iter ? opts.max_iter : 10 * n;
  const auto minv = inverse_diagonal(a);

  SolveResult out;
  out.x = x0.empty() ? std::vector<double>(n, 0.0) : std::vector<double>(x0.begin(), x0.end());
  const double bnorm = norm2(b);
  const double target = opts.tol * (bnorm > 0.0 ? bnorm : 1.0);

  std::vector<double> r = residual(a, b, out.x);
  std::vector<double> z(n), p(n), az(n), ap(n), map(n);
  auto& rep = out.report;

  auto restart = [&] {
    for (std::size_t k = 0; k < n; ++k) z[k] = minv[k] * r[k];
    a.multiply(z, az);
    p = z;
    ap = az;
  };
  restart();
  double rho = dot(z, az);
  rep.history.push_back(std::sqrt(std::max(0.0, dot(r, z))));
  double rnorm = norm2(r);

  while (rnorm > target) {
    if (rep.iterations >= max_iter) {
      rep.residual = bnorm > 0.0 ? rnorm / bnorm : rnorm;
      throw NonConvergence("solve_spd: iteration limit reached", rep);
    }
    for (std::size_t k = 0; k < n; ++k) map[k] = minv[k] * ap[k];
    const double denom = dot(ap, map);
    if (!(denom > 0.0) || !(rho > 0.0)) {
      rep.residual = bnorm > 0.0 ? rnorm / bnorm : rnorm;
      throw NonConvergence("solve_spd: breakdown", rep);
    }
    const double alpha = rho / denom;
    for (std::size_t k = 0; k < n; ++k) {
      out.x[k] += alpha * p[k];
      r[k] -= alpha * ap[k];
      z[k] -= alpha * map[k];
    }
    ++rep.iterations;
    rep.history.push_back(std::sqrt(std::max(0.0, dot(r, z))));
    rnorm = norm2(r);
    if (rnorm <= target) {
      // guard against drift between the recursive and the true residual
      r = residual(a, b, out.x);
      rnorm = norm2(r);
      if (rnorm <= target) break;
      restart();
      rho = dot(z, az);
      continue;
    }
    a.multiply(z, az);
    const double rho_next = dot(z, az);
    const double beta = rho_next / rho;
    rho = rho_next;
    for (std::size_t k = 0; k < n; ++k) {
      p[k] = z[k] + beta * p[k];
      ap[k] = az[k] + beta * ap[k];
    }
  }
  rep.converged = true;
  rep.residual = bnorm > 0.0 ? rnorm / bnorm : rnorm;
  return out;
}

SolveResult solve_nonsym(const SparseMatrix& a, std::span<const double> b, const SolveOptions& opts,
                         std::span<const double> x0) {
  check_system(a, b, x0);
  const std::size_t n = a.rows();
  const std::size_t max_iter = opts.max_iter ? opts.max_iter : 10 * n;
  const auto minv = inverse_diagonal(a);

  SolveResult out;
  out.x = x0.empty() ? std::vector<double>(n, 0.0) : std::vector<double>(x0.begin(), x0.end());
  auto& rep = out.report;
  const double bnorm = norm2(b);
  const double target = opts.tol * (bnorm > 0.0 ? bnorm : 1.0);

  std::vector<double> r = residual(a, b, out.x);
  double rnorm = norm2(r);
  rep.history.push_back(rnorm);
  std::vector<double> rhat = r, p(n, 0.0), v(n, 0.0), y(n), s(n), zs(n), t(n);
  double rho = 1.0, alpha = 1.0, omega = 1.0;
  std::size_t restarts = 0;

  auto fail = [&](const char* why) {
    rep.residual = bnorm > 0.0 ? rnorm / bnorm : rnorm;
    throw NonConvergence(std::string("solve_nonsym: ") + why, rep);
  };

  while (rnorm > target) {
    if (rep.iterations >= max_iter) fail("iteration limit reached");
    const double rho_next = dot(rhat, r);
    if (std::abs(rho_next) <= 1e-300 || std::abs(omega) <= 1e-300) {
      // shadow residual lost; restart from the current residual
      if (++restarts > 10) fail("breakdown");
      rhat = r;
      std::fill(p.begin(), p.end(), 0.0);
      std::fill(v.begin(), v.end(), 0.0);
      rho = alpha = omega = 1.0;
      continue;
    }
    const double beta = (rho_next / rho) * (alpha / omega);
    rho = rho_next;
    for (std::size_t k = 0; k < n; ++k) p[k] = r[k] + beta * (p[k] - omega * v[k]);
    for (std::size_t k = 0; k < n; ++k) y[k] = minv[k] * p[k];
    a.multiply(y, v);
    const double rv = dot(rhat, v);
    if (std::abs(rv) <= 1e-300) fail("breakdown");
    alpha = rho / rv;
    for (std::size_t k = 0; k < n; ++k) s[k] = r[k] - alpha * v[k];
    ++rep.iterations;
    if (norm2(s) <= target) {
      for (std::size_t k = 0; k < n; ++k) out.x[k] += alpha * y[k];
      r = residual(a, b, out.x);
      rnorm = norm2(r);
      rep.history.push_back(rnorm);
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) zs[k] = minv[k] * s[k];
    a.multiply(zs, t);
    const double tt = dot(t, t);
    omega = tt > 0.0 ? dot(t, s) / tt : 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      out.x[k] += alpha * y[k] + omega * zs[k];
      r[k] = s[k] - omega * t[k];
    }
    rnorm = norm2(r);
    if (rnorm <= target) {
      r = residual(a, b, out.x);
      rnorm = norm2(r);
    }
    rep.history.push_back(rnorm);
  }
  rep.converged = true;
  rep.residual = bnorm > 0.0 ? rnorm / bnorm : rnorm;
  return out;
}

std::vector<double> project_zero_mean(std::span<const double> x, std::span<const double> weights) {
  if (x.size() != weights.size()) throw DimensionError("project_zero_mean: size mismatch");
  double sw = 0.0, swx = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(weights[k] > 0.0)) throw DomainError("project_zero_mean: weights must be positive");
    sw += weights[k];
    swx += weights[k] * x[k];
  }
  const double mean = sw > 0.0 ? swx / sw : 0.0;
  std::vector<double> out(x.begin(), x.end());
  for (auto& v : out) v -= mean;
  return out;
}

}  // namespace dpnp
