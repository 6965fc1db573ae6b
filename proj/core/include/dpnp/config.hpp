#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>

#include "dpnp/boundary.hpp"
#include "dpnp/expression.hpp"
#include "dpnp/params.hpp"
#include "dpnp/transport.hpp"

namespace dpnp {

/// Spatial profile for initial data and the background charge.
struct FieldSpec {
  enum class Kind { Constant, Gaussian, Expression };
  Kind kind = Kind::Constant;
  double value = 0.0;  ///< Constant: the value; Gaussian: background level
  double cx = 0.5, cy = 0.5, width = 0.1, amplitude = 0.0;
  std::optional<dpnp::Expression> expr;

  double operator()(double x, double y) const;
  CellField sample(const GridPtr& g) const;
};

struct TimeSpec {
  double t_end = 0.1;
  double dt = 0.01;
  double tol = 1e-9;
  std::size_t max_sweeps = 50;
  double damping = 1.0;
  double linear_tol = 1e-12;
};

struct OutputSpec {
  std::string directory = "out";
  std::size_t stride = 1;
};

struct RunConfig {
  std::size_t nx = 16, ny = 16;
  double lx = 1.0, ly = 1.0;
  PhysParams params;
  std::array<FieldSpec, 2> initial;
  SideValues sigma, f, g1, g2;
  FieldSpec rho_b;
  TimeSpec time;
  OutputSpec output;

  GridPtr grid;       ///< built during validation
  double M0 = 0.0;    ///< max of the sampled initial data

  Concentrations initial_conc() const;
  BoundarySchedule schedule() const;
};

/// Parses and validates a JSON configuration. Throws InvalidConfig listing
/// every violation found (syntax errors carry the byte offset).
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace dpnp
