#ifndef FPLOC_NUMCHECK_HPP
#define FPLOC_NUMCHECK_HPP

#include <cstdint>
#include <string>

#include "fploc/localization.hpp"

namespace fploc {

// Outcome of comparing the floating-point sum of per-component contributions
// against the exact localization polynomial at random generic points.
struct OracleReport {
  bool symbolic_polynomial = false;  // did the exact sum cancel to a polynomial
  int trials_run = 0;
  // |float sum - exact| scaled by max(|exact|, sum of |contribution|), with an
  // absolute floor of 1e-12 near zero; the scaling keeps cancelling sums
  // (exact value 0) judged against the magnitude of their terms.
  double max_rel_error = 0.0;
  std::string note;
};

// Draws rational points avoiding every weight hyperplane (exact test,
// resampling on hits), evaluates each component contribution in double
// arithmetic at the point, and compares the float sum against the exact
// polynomial value.  Throws std::runtime_error on resampling exhaustion.
OracleReport random_point_oracle(const Model& m, const ClassExpr& cls, int trials,
                                 std::uint64_t seed);

struct QuadratureSpec {
  double t = 1.0;
  int n_theta = 512;  // panels in the z direction
  int n_phi = 64;     // panels in the angular direction
  double tolerance = 1e-6;

  void validate() const;  // grid sizes >= 8, tolerance > 0
};

// Tensor-product composite quadrature of exp(t*z) over the unit sphere in
// cylindrical coordinates (area element dz dphi): Simpson in z, midpoint in
// phi.  Converges to 2*pi*(e^t - e^-t)/t (4*pi at t = 0).
double dh_quadrature(const QuadratureSpec& spec);

// The two-pole fixed-point sum of the same integral:
// 2*pi*(e^t/t + e^-t/(-t)).  Throws std::invalid_argument at t = 0
// (the limit 4*pi is not computed).
double dh_localization(double t);

}  // namespace fploc

#endif
