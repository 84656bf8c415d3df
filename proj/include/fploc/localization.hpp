#ifndef FPLOC_LOCALIZATION_HPP
#define FPLOC_LOCALIZATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "fploc/model.hpp"

namespace fploc {

// Constant term of a polynomial: evaluation at zero.
Rational ev_zero(const Polynomial& p);

// The global factor s in front of every isolated contribution: +1 under the
// classical convention, (-1)^(q/2) under paper_corollary.
Rational sign_convention_factor(const Model& m);

// The localization summand of one component: for an isolated leaf
// s * c * eval_at_weights(cls, weights) / equivariant_euler(weights), where s
// is the sign-convention factor; a precomputed local integral, when present,
// is used as c * integral instead.
RationalFraction component_contribution(const Model& m, const FixedComponent& comp,
                                        const ClassExpr& cls);

// Sum of all component contributions, reduced.  For data coming from a
// genuine foliation/action the identity forces every denominator to cancel.
struct LocalizationResult {
  RationalFraction total;                  // reduced sum
  std::optional<Polynomial> polynomial;    // set iff the sum cancelled completely

  bool is_polynomial() const { return polynomial.has_value(); }
};

LocalizationResult localization_sum(const Model& m, const ClassExpr& cls);

// Characteristic number of a degree-q class: the localization sum must be a
// degree-0 polynomial; returns its value at zero.  Throws
// degree_mismatch_error when deg(cls) != q and not_polynomial_error when the
// sum fails to cancel.
Rational characteristic_number(const Model& m, const ClassExpr& cls);

// Per-class verdict of verify_model.
struct VerifyEntry {
  std::string class_text;
  std::uint32_t class_degree = 0;
  bool is_polynomial = false;
  bool degree_ok = false;     // cohomological degree of the sum equals class_degree - q
  bool pass = false;
  std::string value_text;     // reduced sum (polynomial or offending fraction)
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  bool all_pass = true;
};

// Runs localization_sum for every monomial in the generators e, p_1..p_{q/2}
// of cohomological degree <= max_degree and checks polynomiality and degree;
// classes below degree q must sum to zero exactly.
VerifyReport verify_model(const Model& m, std::uint32_t max_degree);

// The generator monomials of degree exactly d, in deterministic order.
std::vector<ClassExpr> generator_classes(std::uint32_t q, std::uint32_t d);

}  // namespace fploc

#endif
