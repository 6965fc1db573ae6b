#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dpnp/errors.hpp"

namespace dpnp {

/// Compressed sparse row matrix. Column indices are strictly increasing
/// within each row; duplicate triplets are summed on assembly.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<std::size_t> row_offsets,
               std::vector<std::size_t> col_indices, std::vector<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return values_.size(); }

  std::span<const std::size_t> row_offsets() const noexcept { return offsets_; }
  std::span<const std::size_t> col_indices() const noexcept { return cols_idx_; }
  std::span<const double> values() const noexcept { return values_; }

  /// y = A x
  void multiply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> operator*(std::span<const double> x) const;

  std::vector<double> diagonal() const;
  double at(std::size_t r, std::size_t c) const;
  bool is_symmetric(double tol = 0.0) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::size_t> cols_idx_;
  std::vector<double> values_;
};

/// Accumulates (row, col, value) entries and compresses them into CSR.
class TripletBuilder {
 public:
  TripletBuilder(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  void add(std::size_t r, std::size_t c, double v) { entries_.push_back({r, c, v}); }
  void reserve(std::size_t n) { entries_.reserve(n); }
  SparseMatrix build() const;

 private:
  struct Entry {
    std::size_t r, c;
    double v;
  };
  std::size_t rows_, cols_;
  std::vector<Entry> entries_;
};

struct SolveReport {
  std::size_t iterations = 0;
  double residual = 0.0;  ///< final ||A x - b||_2 / ||b||_2 (absolute when b = 0)
  bool converged = false;
  /// Residual norm in the norm minimised by the method, one entry per iteration
  /// (index 0 is the initial residual).
  std::vector<double> history;
};

/// Thrown on iteration-limit exhaustion or Krylov breakdown.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, SolveReport report)
      : Error(what), report_(std::move(report)) {}
  const SolveReport& report() const noexcept { return report_; }

 private:
  SolveReport report_;
};

struct SolveOptions {
  double tol = 1e-10;
  std::size_t max_iter = 0;  ///< 0 selects 10 * rows
};

struct SolveResult {
  std::vector<double> x;
  SolveReport report;
};

/// Jacobi-preconditioned conjugate residual method for symmetric positive
/// (semi)definite systems. The residual measured in the inverse-diagonal norm
/// decreases monotonically. `x0` is an optional initial guess.
SolveResult solve_spd(const SparseMatrix& a, std::span<const double> b, const SolveOptions& opts = {},
                      std::span<const double> x0 = {});

/// Jacobi-preconditioned BiCGStab for general nonsingular systems.
SolveResult solve_nonsym(const SparseMatrix& a, std::span<const double> b, const SolveOptions& opts = {},
                         std::span<const double> x0 = {});

/// Subtracts the weighted mean: result = x - (sum w x / sum w).
std::vector<double> project_zero_mean(std::span<const double> x, std::span<const double> weights);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

}  // namespace dpnp
