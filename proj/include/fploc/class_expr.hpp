#ifndef FPLOC_CLASS_EXPR_HPP
#define FPLOC_CLASS_EXPR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "fploc/rational.hpp"

namespace fploc {

// Monomial in the abstract generators of the SO(q)-invariant polynomials:
// the Euler generator e and the Pontryagin generators p1..p16.
struct GenMonomial {
  std::uint32_t e_exp = 0;
  std::map<std::uint32_t, std::uint32_t> p_exps;  // generator index (>= 1) -> exponent

  // Cohomological degree: e contributes q per power, p_j contributes 4j.
  std::uint32_t degree(std::uint32_t q) const;

  friend bool operator==(const GenMonomial& a, const GenMonomial& b) {
    return a.e_exp == b.e_exp && a.p_exps == b.p_exps;
  }
  friend bool operator<(const GenMonomial& a, const GenMonomial& b) {
    if (a.e_exp != b.e_exp) return a.e_exp < b.e_exp;
    return a.p_exps < b.p_exps;
  }

  std::string to_string() const;  // "1", "e^2*p1", "p1^2*p3"
};

// Polynomial expression in e and p_j with rational coefficients, declared
// against a codimension q.  Canonical: no zero coefficients stored.
class ClassExpr {
public:
  explicit ClassExpr(std::uint32_t codim);

  // Grammar:  expr   := ('+'|'-')? term (('+'|'-') term)*
  //           term   := factor ('*' factor)*
  //           factor := atom ('^' uint)?
  //           atom   := 'e' | 'p'uint | rational | '(' expr ')'
  // Whitespace insensitive.  Throws parse_error with position; rejects p0 and
  // generator indices above 16.  Requires q even, q >= 2.
  static ClassExpr parse(std::string_view text, std::uint32_t codim);

  static ClassExpr one(std::uint32_t codim);
  static ClassExpr monomial(std::uint32_t codim, const GenMonomial& m,
                            const Rational& coeff = Rational(1));

  std::uint32_t codim() const { return codim_; }
  const std::map<GenMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const GenMonomial& m, const Rational& coeff);

  ClassExpr& operator+=(const ClassExpr& o);
  ClassExpr& operator-=(const ClassExpr& o);
  friend ClassExpr operator+(ClassExpr a, const ClassExpr& b) { return a += b; }
  friend ClassExpr operator-(ClassExpr a, const ClassExpr& b) { return a -= b; }
  friend ClassExpr operator*(const ClassExpr& a, const ClassExpr& b);
  ClassExpr pow(unsigned e) const;

  friend bool operator==(const ClassExpr& a, const ClassExpr& b) {
    return a.codim_ == b.codim_ && a.terms_ == b.terms_;
  }

  // Common cohomological degree when homogeneous, nullopt otherwise.
  // The zero expression counts as homogeneous of degree 0.
  std::optional<std::uint32_t> degree() const;

  std::string to_string() const;

private:
  std::uint32_t codim_;
  std::map<GenMonomial, Rational> terms_;
};

}  // namespace fploc

#endif
