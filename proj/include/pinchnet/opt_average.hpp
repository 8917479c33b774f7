#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pinchnet/channel.hpp"

namespace pinchnet {

using ScalarFn = std::function<double(double)>;

struct Bracket {
  double lo;
  double hi;
};

enum class StationaryKind { kLocalMax, kLocalMin, kFlat };

std::string to_string(StationaryKind kind);

struct StationaryPoint {
  double x;
  StationaryKind kind;
  double bracket_lo;  // final refined interval, width <= eps_d
  double bracket_hi;
  double f_value;
};

/// Samples f' at j+1 uniform points on [a,b]. Adjacent sign flips become
/// brackets; samples where f' is exactly zero become zero-width brackets.
std::vector<Bracket> bracket_sign_changes(const ScalarFn& f_prime, double a,
                                          double b, int j);

/// Bisection until the interval width drops to eps_d; only the width is the
/// stopping rule. Returns the refined interval (zero-width in, zero-width out).
Bracket refine_bracket(const ScalarFn& f_prime, Bracket bracket, double eps_d);

/// Midpoint of refine_bracket. Throws std::invalid_argument when the bracket
/// carries no sign change.
double bisect_root(const ScalarFn& f_prime, Bracket bracket, double eps_d);

/// Sign probes at root +- probe: (+,-) is a local max, (-,+) a local min,
/// anything else stays flat-undetermined and is kept as a candidate.
StationaryKind classify(const ScalarFn& f_prime, double root, double probe);

struct AvgOptions {
  int j_subintervals = 10;
  double eps_d = 1e-3;
};

struct WaveguideResult {
  int n;
  double chosen_x;
  double chosen_f;
  std::vector<StationaryPoint> stationary;  // interior stationary points found
  std::vector<double> candidate_xs;         // full evaluated candidate set
};

/// Candidate-based global 1-D maximization of f_n: stationary points are
/// located between adjacent sorted hotspot x-centers (clipped to [0, D_x])
/// by coarse bracketing plus bisection, then compared together with the
/// clipped centers and the interval endpoints {0, D_x}. Correctness of the
/// global claim is conditional on j_subintervals resolving every sign
/// change; candidate_xs and stationary expose what the search saw.
WaveguideResult optimize_waveguide(const Geometry& geom, const GridField& grid,
                                   const TrafficMap& map, int n,
                                   const AvgOptions& opt = {});

struct AvgOptReport {
  Deployment deployment;
  double objective;  // linear
  std::vector<WaveguideResult> per_n;
  double wall_time_s;
};

/// Maximizes the traffic-weighted network average SNR; the objective splits
/// into independent per-waveguide problems, solved one by one.
AvgOptReport optimize_average(const Geometry& geom, const GridField& grid,
                              const TrafficMap& map, const AvgOptions& opt = {});

}  // namespace pinchnet
