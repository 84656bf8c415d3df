#include "fploc/rational_fraction.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace fploc {

RationalFraction RationalFraction::from_polynomial(Polynomial numerator) {
  RationalFraction f(numerator.num_vars());
  f.numerator_ = std::move(numerator);
  return f;
}

RationalFraction RationalFraction::zero(std::size_t num_vars) {
  return RationalFraction(num_vars);
}

RationalFraction RationalFraction::over_linear_factors(Polynomial numerator,
                                                       const Rational& scalar,
                                                       const std::vector<LinearForm>& factors) {
  if (scalar.is_zero()) throw std::invalid_argument("zero denominator scalar");
  RationalFraction f(numerator.num_vars());
  f.numerator_ = std::move(numerator);
  f.denom_scalar_ = scalar;
  f.denom_factors_.reserve(factors.size());
  for (const auto& raw : factors) {
    if (raw.num_vars() != f.num_vars())
      throw std::invalid_argument("denominator factor variable count mismatch");
    auto [unit, scale] = raw.normalized();  // throws on zero factor
    f.denom_scalar_ *= scale;
    f.denom_factors_.push_back(std::move(unit));
  }
  std::sort(f.denom_factors_.begin(), f.denom_factors_.end());
  f.reduce();
  return f;
}

void RationalFraction::reduce() {
  if (numerator_.is_zero()) {
    denom_scalar_ = Rational(1);
    denom_factors_.clear();
    return;
  }
  // Staying at i after an erase retries the next copy of a repeated factor;
  // cancelling can never make an already-rejected factor divide the numerator.
  for (std::size_t i = 0; i < denom_factors_.size();) {
    if (auto q = divide_by_linear(numerator_, denom_factors_[i])) {
      numerator_ = std::move(*q);
      denom_factors_.erase(denom_factors_.begin() + static_cast<std::ptrdiff_t>(i));
      if (numerator_.is_zero()) {
        denom_scalar_ = Rational(1);
        denom_factors_.clear();
        return;
      }
    } else {
      ++i;
    }
  }
}

RationalFraction& RationalFraction::operator+=(const RationalFraction& o) {
  if (num_vars() != o.num_vars())
    throw std::invalid_argument("fraction variable counts differ");

  // Least common multiple of the two sorted factor multisets: set_union on
  // sorted ranges keeps max(multiplicity_a, multiplicity_b) of each factor.
  std::vector<LinearForm> lcm;
  std::set_union(denom_factors_.begin(), denom_factors_.end(), o.denom_factors_.begin(),
                 o.denom_factors_.end(), std::back_inserter(lcm));

  // cofactor(x) = prod(lcm \ x.denom_factors) as a polynomial.
  auto cofactor = [&](const std::vector<LinearForm>& own) {
    Polynomial prod = Polynomial::constant(num_vars(), Rational(1));
    std::vector<LinearForm> extra;
    std::set_difference(lcm.begin(), lcm.end(), own.begin(), own.end(),
                        std::back_inserter(extra));
    for (const auto& f : extra) prod = prod * f.to_polynomial();
    return prod;
  };

  Polynomial n = numerator_ * cofactor(denom_factors_) * denom_scalar_.reciprocal() +
                 o.numerator_ * cofactor(o.denom_factors_) * o.denom_scalar_.reciprocal();

  numerator_ = std::move(n);
  denom_scalar_ = Rational(1);
  denom_factors_ = std::move(lcm);
  reduce();
  return *this;
}

RationalFraction RationalFraction::operator-() const {
  RationalFraction r = *this;
  r.numerator_ = -r.numerator_;
  return r;
}

RationalFraction& RationalFraction::operator*=(const Rational& s) {
  numerator_ *= s;
  if (numerator_.is_zero()) {
    denom_scalar_ = Rational(1);
    denom_factors_.clear();
  }
  return *this;
}

bool operator==(const RationalFraction& a, const RationalFraction& b) {
  if (a.num_vars() != b.num_vars()) return false;
  if (a.denom_factors_ != b.denom_factors_) return false;
  return a.numerator_ * b.denom_scalar_ == b.numerator_ * a.denom_scalar_;
}

std::optional<Polynomial> RationalFraction::to_polynomial() const {
  if (!denom_factors_.empty()) return std::nullopt;
  return numerator_ * denom_scalar_.reciprocal();
}

double RationalFraction::eval_double(std::span<const double> point) const {
  double den = denom_scalar_.to_double();
  for (const auto& f : denom_factors_) den *= f.eval_double(point);
  return numerator_.eval_double(point) / den;
}

Rational RationalFraction::eval(std::span<const Rational> point) const {
  Rational den = denom_scalar_;
  for (const auto& f : denom_factors_) den *= f.eval(point);
  if (den.is_zero()) throw std::domain_error("fraction evaluated on a denominator zero set");
  return numerator_.eval(point) / den;
}

std::string RationalFraction::to_string() const {
  if (denom_factors_.empty() && denom_scalar_.is_one()) return numerator_.to_string();
  std::string den;
  if (!denom_scalar_.is_one()) den = denom_scalar_.to_string();
  for (const auto& f : denom_factors_) {
    if (!den.empty()) den += " * ";
    bool simple = f.to_polynomial().terms().size() <= 1;
    den += simple ? f.to_string() : "(" + f.to_string() + ")";
  }
  return "(" + numerator_.to_string() + ") / (" + den + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFraction& f) {
  return os << f.to_string();
}

}  // namespace fploc
