#include "dpnp/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace dpnp {

using nlohmann::json;

double FieldSpec::operator()(double x, double y) const {
  switch (kind) {
    case Kind::Constant: return value;
    case Kind::Gaussian: {
      const double dx = x - cx, dy = y - cy;
      return value + amplitude * std::exp(-(dx * dx + dy * dy) / (2.0 * width * width));
    }
    case Kind::Expression: return (*expr)(x, y);
  }
  return 0.0;
}

CellField FieldSpec::sample(const GridPtr& g) const {
  CellField out(g, 0.0);
  for (std::size_t k = 0; k < g->num_cells(); ++k) out[k] = (*this)(g->cell_x(k), g->cell_y(k));
  return out;
}

Concentrations RunConfig::initial_conc() const { return {initial[0].sample(grid), initial[1].sample(grid)}; }

BoundarySchedule RunConfig::schedule() const { return {sigma, f, g1, g2, rho_b.sample(grid)}; }

namespace {

/// Collects violations while reading optional keys from a JSON object.
class Reader {
 public:
  explicit Reader(std::vector<std::string>& errors) : errors_(errors) {}

  void object(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) {
      errors_.push_back(where + ": expected an object");
      return;
    }
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [k, v] : j.items()) {
      if (!ok.count(k)) errors_.push_back(where + ": unknown key '" + k + "'");
    }
  }

  template <class T>
  void get(const json& j, const char* key, T& out, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) return;
    try {
      out = j.at(key).get<T>();
    } catch (const json::exception&) {
      errors_.push_back(where + "." + key + ": wrong type");
    }
  }

  void error(std::string e) { errors_.push_back(std::move(e)); }

 private:
  std::vector<std::string>& errors_;
};

void read_field(Reader& r, const json& j, FieldSpec& out, const std::string& where) {
  if (j.is_number()) {
    out.kind = FieldSpec::Kind::Constant;
    out.value = j.get<double>();
    return;
  }
  r.object(j, where, {"type", "value", "center", "width", "amplitude", "background", "expr"});
  if (!j.is_object()) return;
  std::string type = "constant";
  r.get(j, "type", type, where);
  if (type == "constant") {
    out.kind = FieldSpec::Kind::Constant;
    r.get(j, "value", out.value, where);
  } else if (type == "gaussian") {
    out.kind = FieldSpec::Kind::Gaussian;
    std::array<double, 2> c{out.cx, out.cy};
    r.get(j, "center", c, where);
    out.cx = c[0];
    out.cy = c[1];
    r.get(j, "width", out.width, where);
    r.get(j, "amplitude", out.amplitude, where);
    r.get(j, "background", out.value, where);
    if (!(out.width > 0.0)) r.error(where + ": gaussian width must be > 0");
  } else if (type == "expression") {
    out.kind = FieldSpec::Kind::Expression;
    std::string text;
    r.get(j, "expr", text, where);
    try {
      out.expr.emplace(text);
    } catch (const InvalidConfig& e) {
      r.error(where + ": " + e.what());
      out.kind = FieldSpec::Kind::Constant;
    }
  } else {
    r.error(where + ": unknown type '" + type + "' (constant, gaussian, expression)");
  }
}

void read_sides(Reader& r, const json& j, SideValues& out, const std::string& where) {
  r.object(j, where, {"left", "right", "bottom", "top", "ramp"});
  r.get(j, "left", out.left, where);
  r.get(j, "right", out.right, where);
  r.get(j, "bottom", out.bottom, where);
  r.get(j, "top", out.top, where);
  if (j.is_object() && j.contains("ramp")) {
    const json& rj = j["ramp"];
    r.object(rj, where + ".ramp", {"kind", "duration"});
    std::string kind = "none";
    r.get(rj, "kind", kind, where + ".ramp");
    r.get(rj, "duration", out.ramp.duration, where + ".ramp");
    if (kind == "linear") {
      out.ramp.kind = Ramp::Kind::Linear;
      if (!(out.ramp.duration > 0.0)) r.error("boundary data: " + where + ".ramp: duration must be > 0");
    } else if (kind != "none") {
      r.error(where + ".ramp: unknown kind '" + kind + "' (none, linear)");
    }
  }
  for (double v : {out.left, out.right, out.bottom, out.top}) {
    if (!std::isfinite(v)) {
      r.error("boundary data: " + where + ": values must be finite");
      break;
    }
  }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidConfig("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  std::vector<std::string> errors;
  Reader r(errors);
  RunConfig cfg;
  r.object(root, "config", {"grid", "physics", "initial", "boundary", "rho_b", "time", "output"});
  if (!root.is_object()) throw InvalidConfig(std::move(errors));
  const json empty = json::object();
  auto block = [&](const char* k) -> const json& { return root.contains(k) ? root[k] : empty; };

  const json& gj = block("grid");
  r.object(gj, "grid", {"nx", "ny", "lx", "ly"});
  r.get(gj, "nx", cfg.nx, "grid");
  r.get(gj, "ny", cfg.ny, "grid");
  r.get(gj, "lx", cfg.lx, "grid");
  r.get(gj, "ly", cfg.ly, "grid");
  if (cfg.nx < 1 || cfg.ny < 1) errors.emplace_back("domain: grid nx and ny must be >= 1");
  if (!(cfg.lx > 0.0) || !(cfg.ly > 0.0) || !std::isfinite(cfg.lx) || !std::isfinite(cfg.ly)) {
    errors.emplace_back("domain: grid lx and ly must be finite and > 0");
  }

  const json& pj = block("physics");
  r.object(pj, "physics", {"theta", "D", "K", "mu", "eps_s", "kappa", "z1", "z2", "reaction"});
  auto& p = cfg.params;
  r.get(pj, "theta", p.theta, "physics");
  r.get(pj, "D", p.diffusion, "physics");
  r.get(pj, "K", p.permeability, "physics");
  r.get(pj, "mu", p.mu, "physics");
  r.get(pj, "eps_s", p.eps_s, "physics");
  r.get(pj, "kappa", p.kappa, "physics");
  r.get(pj, "z1", p.z1, "physics");
  r.get(pj, "z2", p.z2, "physics");
  if (pj.is_object() && pj.contains("reaction")) {
    const json& rj = pj["reaction"];
    r.object(rj, "physics.reaction", {"kind", "rate"});
    std::string kind = "none";
    r.get(rj, "kind", kind, "physics.reaction");
    r.get(rj, "rate", p.reaction.rate, "physics.reaction");
    if (kind == "exchange") {
      p.reaction.kind = ReactionSpec::Kind::Exchange;
    } else if (kind == "none") {
      p.reaction = ReactionSpec::none();
    } else {
      errors.emplace_back("reaction kinetics: physics.reaction unknown kind '" + kind + "' (none, exchange)");
    }
  }
  for (auto& v : p.violations()) errors.push_back(std::move(v));

  const json& ij = block("initial");
  r.object(ij, "initial", {"c1", "c2"});
  if (ij.contains("c1")) read_field(r, ij["c1"], cfg.initial[0], "initial.c1");
  if (ij.contains("c2")) read_field(r, ij["c2"], cfg.initial[1], "initial.c2");

  const json& bj = block("boundary");
  r.object(bj, "boundary", {"sigma", "f", "g1", "g2"});
  if (bj.contains("sigma")) read_sides(r, bj["sigma"], cfg.sigma, "boundary.sigma");
  if (bj.contains("f")) read_sides(r, bj["f"], cfg.f, "boundary.f");
  if (bj.contains("g1")) read_sides(r, bj["g1"], cfg.g1, "boundary.g1");
  if (bj.contains("g2")) read_sides(r, bj["g2"], cfg.g2, "boundary.g2");
  if (root.contains("rho_b")) read_field(r, root["rho_b"], cfg.rho_b, "rho_b");

  const json& tj = block("time");
  r.object(tj, "time", {"T_end", "dt", "tol", "max_sweeps", "damping", "linear_tol"});
  auto& t = cfg.time;
  r.get(tj, "T_end", t.t_end, "time");
  r.get(tj, "dt", t.dt, "time");
  r.get(tj, "tol", t.tol, "time");
  r.get(tj, "max_sweeps", t.max_sweeps, "time");
  r.get(tj, "damping", t.damping, "time");
  r.get(tj, "linear_tol", t.linear_tol, "time");
  if (!(t.dt > 0.0) || !std::isfinite(t.dt)) errors.emplace_back("time: dt must be finite and > 0");
  if (!(t.t_end >= t.dt) || !std::isfinite(t.t_end)) errors.emplace_back("time: T_end must be finite and >= dt");
  if (!(t.tol > 0.0)) errors.emplace_back("time: tol must be > 0");
  if (t.max_sweeps < 1) errors.emplace_back("time: max_sweeps must be >= 1");
  if (!(t.damping > 0.0 && t.damping <= 1.0)) errors.emplace_back("time: damping must lie in (0, 1]");
  if (!(t.linear_tol > 0.0 && t.linear_tol < 1.0)) errors.emplace_back("time: linear_tol must lie in (0, 1)");

  const json& oj = block("output");
  r.object(oj, "output", {"directory", "stride"});
  r.get(oj, "directory", cfg.output.directory, "output");
  r.get(oj, "stride", cfg.output.stride, "output");
  if (cfg.output.stride < 1) errors.emplace_back("output: stride must be >= 1");

  const bool geometry_ok = cfg.nx >= 1 && cfg.ny >= 1 && cfg.lx > 0.0 && cfg.ly > 0.0 && std::isfinite(cfg.lx) &&
                           std::isfinite(cfg.ly);
  if (geometry_ok) {
    cfg.grid = build_grid(cfg.nx, cfg.ny, cfg.lx, cfg.ly);
    const double net = cfg.f.net(*cfg.grid);
    const double gross = (std::abs(cfg.f.left) + std::abs(cfg.f.right)) * cfg.ly +
                         (std::abs(cfg.f.bottom) + std::abs(cfg.f.top)) * cfg.lx;
    if (std::abs(net) > 1e-10 * gross) {
      errors.push_back("incompressibility compatibility: net boundary flux of f is " + std::to_string(net) +
                       ", must vanish");
    }
    for (int l = 0; l < 2; ++l) {
      const CellField c0 = cfg.initial[static_cast<std::size_t>(l)].sample(cfg.grid);
      for (double v : c0.values()) {
        if (!std::isfinite(v) || v < 0.0) {
          errors.push_back("initial data: initial.c" + std::to_string(l + 1) + ": initial data must be finite and >= 0");
          break;
        }
        cfg.M0 = std::max(cfg.M0, v);
      }
    }
    const CellField rb = cfg.rho_b.sample(cfg.grid);
    if (!rb.all_finite()) errors.emplace_back("background charge: rho_b must be finite");
  }
  if (!errors.empty()) throw InvalidConfig(std::move(errors));
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidConfig("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace dpnp
