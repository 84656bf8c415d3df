#ifndef FPLOC_RATIONAL_FRACTION_HPP
#define FPLOC_RATIONAL_FRACTION_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fploc/polynomial.hpp"

namespace fploc {

// Element of the subring of Q(a*) whose denominators are products of linear
// forms: numerator / (denom_scalar * prod(denom_factors)).  Kept reduced (no
// factor divides the numerator) with factors sorted and normalized so each
// first nonzero coefficient is 1; normalization scalars are absorbed into
// denom_scalar.  Arithmetic results always carry denom_scalar = 1, so the
// canonical form of a sum is independent of summation order.
class RationalFraction {
public:
  static RationalFraction from_polynomial(Polynomial numerator);
  static RationalFraction zero(std::size_t num_vars);

  // numerator / (scalar * prod(factors)); factors need not be normalized.
  // Throws on zero scalar or a zero factor.  Reduces.
  static RationalFraction over_linear_factors(Polynomial numerator, const Rational& scalar,
                                              const std::vector<LinearForm>& factors);

  std::size_t num_vars() const { return numerator_.num_vars(); }
  const Polynomial& numerator() const { return numerator_; }
  const Rational& denom_scalar() const { return denom_scalar_; }
  const std::vector<LinearForm>& denom_factors() const { return denom_factors_; }
  bool is_zero() const { return numerator_.is_zero(); }

  RationalFraction& operator+=(const RationalFraction& o);
  friend RationalFraction operator+(RationalFraction a, const RationalFraction& b) {
    return a += b;
  }
  RationalFraction operator-() const;
  RationalFraction& operator*=(const Rational& s);
  friend RationalFraction operator*(RationalFraction f, const Rational& s) { return f *= s; }
  friend RationalFraction operator*(const Rational& s, RationalFraction f) { return f *= s; }

  // Exact value equality.  Reduced forms of equal values share the factor
  // multiset (linear forms are primes), so this compares factors structurally
  // and cross-multiplies the scalars into the numerators.
  friend bool operator==(const RationalFraction& a, const RationalFraction& b);
  friend bool operator!=(const RationalFraction& a, const RationalFraction& b) {
    return !(a == b);
  }

  // numerator/denom_scalar when no factors remain, nullopt otherwise
  // (a claimed-polynomial sum failed to cancel).
  std::optional<Polynomial> to_polynomial() const;

  double eval_double(std::span<const double> point) const;
  Rational eval(std::span<const Rational> point) const;  // throws on a zero denominator

  std::string to_string() const;

private:
  explicit RationalFraction(std::size_t num_vars)
      : numerator_(num_vars), denom_scalar_(1) {}

  Polynomial numerator_;
  Rational denom_scalar_;
  std::vector<LinearForm> denom_factors_;  // sorted, each normalized

  // Cancels factors that divide the numerator; restores the zero canonical form.
  void reduce();
};

std::ostream& operator<<(std::ostream& os, const RationalFraction& f);

}  // namespace fploc

#endif
