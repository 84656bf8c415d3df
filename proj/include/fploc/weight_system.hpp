#ifndef FPLOC_WEIGHT_SYSTEM_HPP
#define FPLOC_WEIGHT_SYSTEM_HPP

#include <span>
#include <vector>

#include "fploc/class_expr.hpp"
#include "fploc/polynomial.hpp"

namespace fploc {

// Isotropy data of one closed-leaf component: the q/2 weights of the
// transverse Killing-algebra action on the normal bundle, plus the sign
// comparing the simultaneous weight-space orientation with the transverse
// orientation.
struct WeightSystem {
  std::vector<LinearForm> weights;
  int sign = +1;  // epsilon, +1 or -1

  std::size_t num_vars() const { return weights.empty() ? 0 : weights[0].num_vars(); }

  // Enforces: sign is +1/-1, weights nonempty, all nonzero, consistent variable counts.
  void validate() const;

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) {
    return a.sign == b.sign && a.weights == b.weights;
  }
};

// e_j of the given values; e_0 = 1, e_j = 0 for j beyond the value count.
Polynomial elementary_symmetric(std::size_t j, std::span<const Polynomial> values);

// Evaluates an invariant-polynomial expression on the block-diagonalized
// infinitesimal transverse rotation: p_j -> e_j(alpha_1^2,..,alpha_m^2),
// e -> sign * prod(alpha).  Geometric normalization, no 2*pi factors.
Polynomial eval_at_weights(const ClassExpr& c, const WeightSystem& w);

// sign * prod(alpha) as a polynomial of cohomological degree q.
Polynomial equivariant_euler(const WeightSystem& w);

}  // namespace fploc

#endif
