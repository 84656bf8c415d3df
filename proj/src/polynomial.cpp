#include "fploc/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fploc {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::invalid_argument("variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  return monomial(e, Rational(1));
}

Polynomial Polynomial::monomial(const Exponents& exponents, const Rational& coeff) {
  Polynomial p(exponents.size());
  p.add_term(exponents, coeff);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](std::uint32_t e) { return e == 0; }));
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(num_vars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& coeff) {
  if (exponents.size() != num_vars_)
    throw std::invalid_argument("exponent vector length does not match variable count");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_same_vars(const Polynomial& o) const {
  if (num_vars_ != o.num_vars_)
    throw std::invalid_argument("polynomial variable counts differ (" +
                                std::to_string(num_vars_) + " vs " +
                                std::to_string(o.num_vars_) + ")");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(num_vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_vars(b);
  Polynomial r(a.num_vars());
  Exponents e(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
  } else {
    for (auto& [e, c] : terms_) c *= s;
  }
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(num_vars_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  if (point.size() != num_vars_)
    throw std::invalid_argument("evaluation point dimension mismatch");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (e[i] != 0) t *= point[i].pow(e[i]);
    sum += t;
  }
  return sum;
}

double Polynomial::eval_double(std::span<const double> point) const {
  if (point.size() != num_vars_)
    throw std::invalid_argument("evaluation point dimension mismatch");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (e[i] != 0) t *= std::pow(point[i], static_cast<int>(e[i]));
    sum += t;
  }
  return sum;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), std::uint32_t{0}));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto deg = [](const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
  };
  std::uint32_t d0 = deg(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (deg(e) != d0) return false;
  return true;
}

namespace {

std::string monomial_string(const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "u" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Largest term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    Rational mag = c.abs();
    std::string mono = monomial_string(it->first);
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

Rational LinearForm::eval(std::span<const Rational> point) const {
  if (point.size() != coeffs_.size())
    throw std::invalid_argument("evaluation point dimension mismatch");
  Rational sum(0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum += coeffs_[i] * point[i];
  return sum;
}

double LinearForm::eval_double(std::span<const double> point) const {
  if (point.size() != coeffs_.size())
    throw std::invalid_argument("evaluation point dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    sum += coeffs_[i].to_double() * point[i];
  return sum;
}

Polynomial LinearForm::to_polynomial() const {
  Polynomial p(coeffs_.size());
  Exponents e(coeffs_.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    e[i] = 1;
    p.add_term(e, coeffs_[i]);
    e[i] = 0;
  }
  return p;
}

LinearForm LinearForm::operator-() const {
  std::vector<Rational> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(-x);
  return LinearForm(std::move(c));
}

LinearForm LinearForm::scaled(const Rational& s) const {
  std::vector<Rational> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(x * s);
  return LinearForm(std::move(c));
}

std::pair<LinearForm, Rational> LinearForm::normalized() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return {scaled(c.reciprocal()), c};
  }
  throw std::invalid_argument("cannot normalize the zero linear form");
}

bool operator<(const LinearForm& a, const LinearForm& b) {
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(),
                                      b.coeffs_.begin(), b.coeffs_.end());
}

std::string LinearForm::to_string() const {
  return to_polynomial().to_string();
}

std::ostream& operator<<(std::ostream& os, const LinearForm& l) {
  return os << l.to_string();
}

std::optional<Polynomial> divide_by_linear(const Polynomial& p, const LinearForm& l,
                                           std::optional<std::size_t> pivot) {
  if (p.num_vars() != l.num_vars())
    throw std::invalid_argument("polynomial/linear form variable counts differ");
  if (l.is_zero()) throw std::invalid_argument("division by the zero linear form");

  std::size_t piv;
  if (pivot) {
    piv = *pivot;
    if (piv >= l.num_vars() || l.coeffs()[piv].is_zero())
      throw std::invalid_argument("pivot variable has zero coefficient in the divisor");
  } else {
    piv = 0;
    while (l.coeffs()[piv].is_zero()) ++piv;
  }
  const Rational& c = l.coeffs()[piv];

  // rest = l - c*u_piv, a polynomial free of the pivot variable.
  Polynomial rest(p.num_vars());
  {
    Exponents e(p.num_vars(), 0);
    for (std::size_t i = 0; i < l.num_vars(); ++i) {
      if (i == piv || l.coeffs()[i].is_zero()) continue;
      e[i] = 1;
      rest.add_term(e, l.coeffs()[i]);
      e[i] = 0;
    }
  }

  // Group p by pivot degree, stripping the pivot exponent from the keys.
  std::uint32_t max_deg = 0;
  for (const auto& [e, coeff] : p.terms()) max_deg = std::max(max_deg, e[piv]);
  std::vector<Polynomial> by_deg(max_deg + 1, Polynomial(p.num_vars()));
  for (const auto& [e, coeff] : p.terms()) {
    Exponents stripped = e;
    std::uint32_t d = stripped[piv];
    stripped[piv] = 0;
    by_deg[d].add_term(stripped, coeff);
  }

  // Long division by c*u_piv + rest in the pivot variable.  The leading
  // coefficient c is a unit, so this is exact at every step.
  Rational inv_c = c.reciprocal();
  std::vector<Polynomial> q(max_deg == 0 ? 0 : max_deg, Polynomial(p.num_vars()));
  for (std::uint32_t d = max_deg; d >= 1; --d) {
    q[d - 1] = by_deg[d] * inv_c;
    by_deg[d - 1] -= q[d - 1] * rest;
  }
  if (!by_deg[0].is_zero()) return std::nullopt;

  Polynomial quotient(p.num_vars());
  for (std::uint32_t d = 0; d < q.size(); ++d) {
    for (const auto& [e, coeff] : q[d].terms()) {
      Exponents restored = e;
      restored[piv] = d;
      quotient.add_term(restored, coeff);
    }
  }
  return quotient;
}

}  // namespace fploc
