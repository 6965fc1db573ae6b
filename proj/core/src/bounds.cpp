#include "dpnp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <vector>

#include "dpnp/csv.hpp"

namespace dpnp {

DataNorms measure_data_norms(const Grid& grid, const BoundarySchedule& data, const Concentrations& c0, double T) {
  DataNorms n;
  n.sigma_inf = data.sigma.max_abs() * data.sigma.ramp.sup(T);
  n.f_inf = data.f.max_abs() * data.f.ramp.sup(T);
  n.sigma_l2 = std::sqrt(data.sigma.l2_sq(grid)) * data.sigma.ramp.sup(T);
  n.f_l2 = std::sqrt(data.f.l2_sq(grid)) * data.f.ramp.sup(T);
  if (data.rho_b.size()) {
    n.rhob_inf = max_abs(data.rho_b.values());
    n.rhob_l2 = l2_norm(data.rho_b);
  }
  const SideValues* g[2] = {&data.g1, &data.g2};
  for (std::size_t l = 0; l < 2; ++l) {
    n.g_inf[l] = g[l]->max_abs() * g[l]->ramp.sup(T);
    n.g_l2[l] = std::sqrt(g[l]->l2_sq(grid) * g[l]->ramp.integral_sq(T));
    n.c0_l2[l] = l2_norm(c0[static_cast<int>(l)]);
    n.c0_inf[l] = max_abs(c0[static_cast<int>(l)].values());
  }
  return n;
}

namespace {

double alpha_d(const PhysParams& p) { return std::min(p.diffusion[0], p.diffusion[1]); }

double reaction_lipschitz(const PhysParams& p) {
  return p.reaction.kind == ReactionSpec::Kind::Exchange ? p.reaction.rate : 0.0;
}

}  // namespace

double compute_B0(const PhysParams& params, const DataNorms& n) {
  const double ad = alpha_d(params);
  const double z = params.max_abs_valency();
  const double bracket = n.sigma_inf * n.sigma_inf + n.rhob_inf + n.f_inf * n.f_inf +
                         3.0 * params.theta * reaction_lipschitz(params);
  return std::max(2.0 / params.theta, 2.0 / ad) * 12.0 * params.kappa * params.kappa * z * z / ad * bracket;
}

std::pair<double, double> compute_energy_bound(const PhysParams& params, const DataNorms& n, double B0, double T) {
  const double z = params.max_abs_valency();
  double c0 = 0.0, g2 = 0.0, g1 = 0.0;
  for (std::size_t l = 0; l < 2; ++l) {
    c0 += std::abs(params.valency(static_cast<int>(l))) * n.c0_l2[l] * n.c0_l2[l];
    g2 += n.g_l2[l] * n.g_l2[l];
    g1 += n.g_l2[l];
  }
  const double hat = std::sqrt(std::exp(B0 * T) * (c0 + z * g2));
  const double full = hat + std::sqrt(B0) * z * std::sqrt(T) * hat + z * g1;
  return {hat, full};
}

double compute_moser_B0(const PhysParams& params, const DataNorms& n, double C0) {
  const double ad = alpha_d(params);
  const double z = params.max_abs_valency();
  const double k2 = params.kappa * params.kappa;
  // generic constants (boundary interpolation, Gagliardo-Nirenberg) are 1
  const double K0 = 2.0 * k2 * z * (6.0 / ad * n.sigma_inf * n.sigma_inf + n.rhob_inf);
  const double K1 = k2 * k2 * std::pow(z, 8) * std::pow(C0, 4);
  const double bracket = n.f_inf + 1.0 + K0 + K1 + 3.0 * params.theta * reaction_lipschitz(params);
  return std::min(2.0 / params.theta, 2.0 / ad) * 12.0 * z / ad * bracket;
}

double compute_CM(const DataNorms& n, double B0, double T) {
  const double c0 = n.c0_inf[0] + n.c0_inf[1];
  const double g = n.g_inf[0] + n.g_inf[1];
  return 2.0 * std::exp(B0 * T / 2.0) * (c0 + g) + g;
}

std::pair<double, double> compute_Ce_Cf(const PhysParams& params, const DataNorms& n, double C0, double CM,
                                        double /*T*/) {
  // lifting constant K and the generic constant of the field estimate are 1;
  // lifting norms of sigma and f are their boundary L2 norms
  const double z = params.max_abs_valency();
  const double ad = alpha_d(params);
  const double es = params.eps_s;
  const double th = params.theta;
  const double mu = params.mu;
  const double alpha_k = 1.0 / std::max(params.permeability[0], params.permeability[1]);
  const double c_k = 1.0 / std::min(params.permeability[0], params.permeability[1]);

  const double c1e = n.rhob_l2 + th * z * C0;
  const double c2e = n.sigma_l2 + n.rhob_l2 + th * z * C0;
  const double ce = c1e + c2e + c2e / std::sqrt(es * ad);

  const double c1f = 2.0 * th * z * ce * CM / (es * ad);
  const double c2f = (4.0 * c_k / (mu * alpha_k * alpha_k) + 2.0 * c_k / alpha_k + 2.0 / alpha_k) * n.f_l2 * n.f_l2 +
                     th * z * (8.0 / (es * ad * alpha_k) + 1.0 / (es * ad * alpha_k * mu) + 2.0 / alpha_k) * ce * CM;
  const double cf = c2f + 2.0 * mu * c_k * c2f + c1f;
  return {ce, cf};
}

BoundsLedger compute_ledger(const PhysParams& params, const DataNorms& norms, double T) {
  BoundsLedger b;
  b.T = T;
  b.norms = norms;
  b.B0 = compute_B0(params, norms);
  std::tie(b.C0_hat, b.C0) = compute_energy_bound(params, norms, b.B0, T);
  b.B0_moser = compute_moser_B0(params, norms, b.C0);
  b.CM = compute_CM(norms, b.B0_moser, T);
  std::tie(b.Ce, b.Cf) = compute_Ce_Cf(params, norms, b.C0, b.CM, T);
  return b;
}

namespace {

struct Entry {
  const char* key;
  double value;
  bool nominal;
};

std::vector<Entry> entries(const BoundsLedger& b) {
  const auto& n = b.norms;
  return {{"T", b.T, false},
          {"norm_sigma_inf", n.sigma_inf, false},
          {"norm_f_inf", n.f_inf, false},
          {"norm_rhob_inf", n.rhob_inf, false},
          {"norm_rhob_L2", n.rhob_l2, false},
          {"norm_sigma_L2_boundary", n.sigma_l2, false},
          {"norm_f_L2_boundary", n.f_l2, false},
          {"norm_g1_inf", n.g_inf[0], false},
          {"norm_g2_inf", n.g_inf[1], false},
          {"norm_g1_L2", n.g_l2[0], false},
          {"norm_g2_L2", n.g_l2[1], false},
          {"norm_c1_0_L2", n.c0_l2[0], false},
          {"norm_c2_0_L2", n.c0_l2[1], false},
          {"norm_c1_0_inf", n.c0_inf[0], false},
          {"norm_c2_0_inf", n.c0_inf[1], false},
          {"B0", b.B0, false},
          {"C0_hat", b.C0_hat, false},
          {"C0", b.C0, false},
          {"B0_moser", b.B0_moser, true},
          {"CM", b.CM, true},
          {"Ce", b.Ce, true},
          {"Cf", b.Cf, true}};
}

}  // namespace

std::string ledger_text(const BoundsLedger& b) {
  std::ostringstream os;
  for (const auto& e : entries(b)) {
    os << std::left << std::setw(24) << e.key;
    if (e.nominal) {
      os << std::setw(26) << format_double(e.value) << "nominal";
    } else {
      os << format_double(e.value);
    }
    os << '\n';
  }
  return os.str();
}

std::string ledger_csv(const BoundsLedger& b) {
  std::vector<std::string> keys, vals;
  for (const auto& e : entries(b)) {
    keys.emplace_back(e.key);
    vals.push_back(format_double(e.value));
  }
  return csv_line(keys) + '\n' + csv_line(vals) + '\n';
}

}  // namespace dpnp
