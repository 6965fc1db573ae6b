#pragma once

#include <array>
#include <string>
#include <utility>

#include "dpnp/boundary.hpp"
#include "dpnp/params.hpp"
#include "dpnp/transport.hpp"

namespace dpnp {

/// Norms of the run data over the horizon [0, T].
struct DataNorms {
  double sigma_inf = 0.0;  ///< sup over Gamma x [0,T]
  double f_inf = 0.0;
  double rhob_inf = 0.0;
  double rhob_l2 = 0.0;     ///< L2(Omega)
  double sigma_l2 = 0.0;    ///< sup over time of the L2(Gamma) norm
  double f_l2 = 0.0;
  std::array<double, 2> g_inf{};
  std::array<double, 2> g_l2{};  ///< L2(Gamma x [0,T])
  std::array<double, 2> c0_l2{};
  std::array<double, 2> c0_inf{};
};

DataNorms measure_data_norms(const Grid& grid, const BoundarySchedule& data, const Concentrations& c0, double T);

/// Growth rate of the energy estimate.
double compute_B0(const PhysParams& params, const DataNorms& norms);

/// (C0_hat, C0) of the energy estimate; weighted energy <= C0_hat^2.
std::pair<double, double> compute_energy_bound(const PhysParams& params, const DataNorms& norms, double B0,
                                               double T);

/// Growth rate of the Moser base case. Generic constants enter as 1.
double compute_moser_B0(const PhysParams& params, const DataNorms& norms, double C0);

/// 2 e^{B0 T / 2} (sum ||c0||_inf + sum ||g||_inf) + sum ||g||_inf
double compute_CM(const DataNorms& norms, double B0, double T);

/// Bounds for the (E, phi) and (q, p) pairs. Generic constants enter as 1.
std::pair<double, double> compute_Ce_Cf(const PhysParams& params, const DataNorms& norms, double C0, double CM,
                                        double T);

struct BoundsLedger {
  double T = 0.0;
  DataNorms norms;
  double B0 = 0.0;
  double C0_hat = 0.0;
  double C0 = 0.0;
  double B0_moser = 0.0;  ///< nominal
  double CM = 0.0;        ///< nominal: built on B0_moser
  double Ce = 0.0;        ///< nominal
  double Cf = 0.0;        ///< nominal
};

BoundsLedger compute_ledger(const PhysParams& params, const DataNorms& norms, double T);

/// Aligned "key  value  [nominal]" lines.
std::string ledger_text(const BoundsLedger& ledger);
/// Two-line CSV: header and values.
std::string ledger_csv(const BoundsLedger& ledger);

}  // namespace dpnp
