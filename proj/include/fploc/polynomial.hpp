#ifndef FPLOC_POLYNOMIAL_HPP
#define FPLOC_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fploc/rational.hpp"

namespace fploc {

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order on exponent vectors: lower total degree first,
// ties broken lexicographically.  Map iteration is therefore deterministic
// and the largest term comes last.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Exact sparse multivariate polynomial over Rational in a fixed number of
// variables u1..uk.  Canonical form: no stored coefficient is zero, so two
// polynomials are equal iff their term maps are equal.  Each variable carries
// cohomological degree 2.
class Polynomial {
public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial zero(std::size_t num_vars) { return Polynomial(num_vars); }
  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial monomial(const Exponents& exponents, const Rational& coeff);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;

  // Accumulates c * u^e, dropping the term if the sum cancels.
  void add_term(const Exponents& exponents, const Rational& coeff);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const;

  // Exact evaluation; a ring homomorphism.
  Rational eval(std::span<const Rational> point) const;
  double eval_double(std::span<const double> point) const;

  // Max total exponent over terms; 0 for the zero polynomial.
  std::uint32_t total_degree() const;
  // True when all terms share one total exponent (zero counts as homogeneous).
  bool is_homogeneous() const;

  // Canonical text, largest term first: "u1^2 - 2*u1*u2 + 1/2".
  std::string to_string() const;

private:
  std::size_t num_vars_;
  TermMap terms_;

  void check_same_vars(const Polynomial& o) const;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Degree-1 polynomial with no constant term: an isotropy weight in a*.
// Stored as the k coefficients of u1..uk.
class LinearForm {
public:
  explicit LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t num_vars() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  Rational eval(std::span<const Rational> point) const;
  double eval_double(std::span<const double> point) const;
  Polynomial to_polynomial() const;

  LinearForm operator-() const;
  LinearForm scaled(const Rational& s) const;

  // Splits off the scalar making the first nonzero coefficient 1:
  // *this = scale * normalized.  Throws on the zero form.
  std::pair<LinearForm, Rational> normalized() const;

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LinearForm& a, const LinearForm& b) { return !(a == b); }
  // Lexicographic on coefficients; gives denominator multisets a canonical order.
  friend bool operator<(const LinearForm& a, const LinearForm& b);

  std::string to_string() const;

private:
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LinearForm& l);

// Exact division of p by a nonzero linear form.  Returns the quotient when l
// divides p, nullopt otherwise.  `pivot` selects which variable (with nonzero
// coefficient in l) is eliminated; the result does not depend on the choice.
std::optional<Polynomial> divide_by_linear(const Polynomial& p, const LinearForm& l,
                                           std::optional<std::size_t> pivot = std::nullopt);

}  // namespace fploc

#endif
