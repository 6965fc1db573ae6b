#include "dpnp/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include "dpnp/errors.hpp"

namespace dpnp {

Grid::Grid(std::size_t nx, std::size_t ny, double lx, double ly)
    : nx_(nx), ny_(ny), lx_(lx), ly_(ly) {
  std::vector<std::string> bad;
  if (nx < 1) bad.emplace_back("grid: nx must be >= 1");
  if (ny < 1) bad.emplace_back("grid: ny must be >= 1");
  if (!(lx > 0.0) || !std::isfinite(lx)) bad.emplace_back("grid: lx must be > 0");
  if (!(ly > 0.0) || !std::isfinite(ly)) bad.emplace_back("grid: ly must be > 0");
  if (!bad.empty()) throw InvalidConfig(std::move(bad));

  hx_ = lx_ / static_cast<double>(nx_);
  hy_ = ly_ / static_cast<double>(ny_);

  interior_.reserve((nx_ - 1) * ny_ + nx_ * (ny_ - 1));
  boundary_.reserve(2 * (nx_ + ny_));
  for (std::size_t j = 0; j < ny_; ++j) {
    for (std::size_t i = 0; i <= nx_; ++i) {
      const std::size_t f = x_face(i, j);
      if (i == 0) {
        boundary_.push_back({f, cell(0, j), Side::Left, -1.0});
      } else if (i == nx_) {
        boundary_.push_back({f, cell(nx_ - 1, j), Side::Right, 1.0});
      } else {
        interior_.push_back({f, cell(i - 1, j), cell(i, j)});
      }
    }
  }
  for (std::size_t j = 0; j <= ny_; ++j) {
    for (std::size_t i = 0; i < nx_; ++i) {
      const std::size_t f = y_face(i, j);
      if (j == 0) {
        boundary_.push_back({f, cell(i, 0), Side::Bottom, -1.0});
      } else if (j == ny_) {
        boundary_.push_back({f, cell(i, ny_ - 1), Side::Top, 1.0});
      } else {
        interior_.push_back({f, cell(i, j - 1), cell(i, j)});
      }
    }
  }
}

double Grid::face_x(std::size_t f) const noexcept {
  if (is_x_face(f)) return static_cast<double>(f % (nx_ + 1)) * hx_;
  const std::size_t k = f - num_x_faces();
  return (static_cast<double>(k % nx_) + 0.5) * hx_;
}

double Grid::face_y(std::size_t f) const noexcept {
  if (is_x_face(f)) return (static_cast<double>(f / (nx_ + 1)) + 0.5) * hy_;
  const std::size_t k = f - num_x_faces();
  return static_cast<double>(k / nx_) * hy_;
}

std::shared_ptr<const Grid> build_grid(std::size_t nx, std::size_t ny, double lx, double ly) {
  return std::make_shared<const Grid>(nx, ny, lx, ly);
}

namespace detail {

template <class Tag>
static std::size_t expected_size(const Grid& g) {
  if constexpr (std::is_same_v<Tag, CellTag>) {
    return g.num_cells();
  } else {
    return g.num_faces();
  }
}

template <class Tag>
GridField<Tag>::GridField(GridPtr grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw DimensionError("field without grid");
  if (values_.size() != expected_size<Tag>(*grid_)) {
    throw DimensionError("field size " + std::to_string(values_.size()) + " does not match grid (" +
                         std::to_string(expected_size<Tag>(*grid_)) + ")");
  }
}

template <class Tag>
GridField<Tag>::GridField(GridPtr grid, double fill) : grid_(std::move(grid)) {
  if (!grid_) throw DimensionError("field without grid");
  values_.assign(expected_size<Tag>(*grid_), fill);
}

template <class Tag>
bool GridField<Tag>::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

template class GridField<CellTag>;
template class GridField<FaceTag>;

}  // namespace detail

double BoundaryField::integral(const Grid& g) const {
  const auto faces = g.boundary_faces();
  if (outward.size() != faces.size()) throw DimensionError("boundary field size mismatch");
  double s = 0.0;
  for (std::size_t b = 0; b < faces.size(); ++b) s += outward[b] * g.face_length(faces[b].face);
  return s;
}

double BoundaryField::max_abs() const { return dpnp::max_abs(outward); }

CellField cell_divergence(const Grid& grid, const FaceField& flux) {
  if (flux.size() == 0 || !(flux.grid() == grid)) throw DimensionError("cell_divergence: grid mismatch");
  CellField div(flux.grid_ptr(), 0.0);
  const double vol = grid.cell_volume();
  for (const auto& f : grid.interior_faces()) {
    const double q = flux[f.face] * grid.face_length(f.face);
    div[f.minus] += q;
    div[f.plus] -= q;
  }
  for (const auto& b : grid.boundary_faces()) {
    div[b.cell] += b.outward * flux[b.face] * grid.face_length(b.face);
  }
  for (auto& v : div.vec()) v /= vol;
  return div;
}

double volume_integral(const CellField& u) {
  double s = 0.0;
  for (double v : u.values()) s += v;
  return s * u.grid().cell_volume();
}

double l2_norm(const CellField& u) {
  double s = 0.0;
  for (double v : u.values()) s += v * v;
  return std::sqrt(s * u.grid().cell_volume());
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace dpnp
