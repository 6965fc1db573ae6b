#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace dpnp {

enum class Side { Left, Right, Bottom, Top };

/// A face on the domain boundary. `outward` is +1 when the outward normal is
/// the face's reference direction (+x or +y) and -1 otherwise.
struct BoundaryFace {
  std::size_t face;
  std::size_t cell;
  Side side;
  double outward;
};

/// Uniform axis-aligned rectangular grid on [0,lx] x [0,ly].
///
/// Cells are numbered `i + nx*j`. Faces come in two blocks: the (nx+1)*ny
/// x-faces (normal +x) numbered `i + (nx+1)*j`, followed by the nx*(ny+1)
/// y-faces (normal +y) numbered `num_x_faces() + i + nx*j`. Face values are
/// always the component along the reference normal.
class Grid {
 public:
  Grid(std::size_t nx, std::size_t ny, double lx, double ly);

  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return ny_; }
  double lx() const noexcept { return lx_; }
  double ly() const noexcept { return ly_; }
  double hx() const noexcept { return hx_; }
  double hy() const noexcept { return hy_; }

  std::size_t num_cells() const noexcept { return nx_ * ny_; }
  std::size_t num_x_faces() const noexcept { return (nx_ + 1) * ny_; }
  std::size_t num_y_faces() const noexcept { return nx_ * (ny_ + 1); }
  std::size_t num_faces() const noexcept { return num_x_faces() + num_y_faces(); }

  std::size_t cell(std::size_t i, std::size_t j) const noexcept { return i + nx_ * j; }
  std::size_t x_face(std::size_t i, std::size_t j) const noexcept { return i + (nx_ + 1) * j; }
  std::size_t y_face(std::size_t i, std::size_t j) const noexcept {
    return num_x_faces() + i + nx_ * j;
  }
  std::size_t cell_i(std::size_t c) const noexcept { return c % nx_; }
  std::size_t cell_j(std::size_t c) const noexcept { return c / nx_; }

  double cell_volume() const noexcept { return hx_ * hy_; }
  double volume() const noexcept { return lx_ * ly_; }
  double boundary_length() const noexcept { return 2.0 * (lx_ + ly_); }

  double cell_x(std::size_t c) const noexcept { return (static_cast<double>(cell_i(c)) + 0.5) * hx_; }
  double cell_y(std::size_t c) const noexcept { return (static_cast<double>(cell_j(c)) + 0.5) * hy_; }

  bool is_x_face(std::size_t f) const noexcept { return f < num_x_faces(); }
  /// Length of the face (hy for x-faces, hx for y-faces).
  double face_length(std::size_t f) const noexcept { return is_x_face(f) ? hy_ : hx_; }
  /// Distance between the two cell centres adjacent to the face.
  double face_spacing(std::size_t f) const noexcept { return is_x_face(f) ? hx_ : hy_; }
  double face_x(std::size_t f) const noexcept;
  double face_y(std::size_t f) const noexcept;

  /// Interior face with its "minus" cell (left/below) and "plus" cell.
  struct InteriorFace {
    std::size_t face;
    std::size_t minus;
    std::size_t plus;
  };
  std::span<const InteriorFace> interior_faces() const noexcept { return interior_; }
  std::span<const BoundaryFace> boundary_faces() const noexcept { return boundary_; }

  bool operator==(const Grid& o) const noexcept {
    return nx_ == o.nx_ && ny_ == o.ny_ && lx_ == o.lx_ && ly_ == o.ly_;
  }

 private:
  std::size_t nx_, ny_;
  double lx_, ly_, hx_, hy_;
  std::vector<InteriorFace> interior_;
  std::vector<BoundaryFace> boundary_;
};

/// build_grid with precondition checks; throws InvalidConfig.
std::shared_ptr<const Grid> build_grid(std::size_t nx, std::size_t ny, double lx, double ly);

using GridPtr = std::shared_ptr<const Grid>;

namespace detail {
template <class Tag>
class GridField {
 public:
  GridField() = default;
  GridField(GridPtr grid, std::vector<double> values);
  explicit GridField(GridPtr grid, double fill = 0.0);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  double& operator[](std::size_t k) { return values_[k]; }
  double operator[](std::size_t k) const { return values_[k]; }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }
  std::vector<double>& vec() noexcept { return values_; }
  const std::vector<double>& vec() const noexcept { return values_; }

  bool all_finite() const noexcept;
  bool same_grid(const GridField& o) const noexcept {
    return grid_ == o.grid_ || (grid_ && o.grid_ && *grid_ == *o.grid_);
  }

 private:
  GridPtr grid_;
  std::vector<double> values_;
};
struct CellTag {};
struct FaceTag {};
}  // namespace detail

/// One scalar per cell.
using CellField = detail::GridField<detail::CellTag>;
/// One normal-component scalar per face.
using FaceField = detail::GridField<detail::FaceTag>;

/// One outward-normal value per boundary face, in `Grid::boundary_faces()` order.
struct BoundaryField {
  std::vector<double> outward;

  static BoundaryField zeros(const Grid& g) { return {std::vector<double>(g.boundary_faces().size(), 0.0)}; }
  /// Signed boundary integral of the outward values.
  double integral(const Grid& g) const;
  double max_abs() const;
};

/// Per cell: (sum of outward face fluxes times face length) / cell volume.
CellField cell_divergence(const Grid& grid, const FaceField& flux);

/// Volume-weighted inner product and norms over the grid.
double volume_integral(const CellField& u);
double l2_norm(const CellField& u);
double max_abs(std::span<const double> v);

}  // namespace dpnp
