#include "fploc/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "fploc/errors.hpp"

namespace fploc {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("division of rational by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::from_string(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };

  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_int(num) || !is_int(den))
    throw parse_error("malformed rational literal '" + text + "'");

  mpq_class v{mpz_class(num), mpz_class(den)};
  if (v.get_den() == 0) throw parse_error("rational literal with zero denominator '" + text + "'");
  v.canonicalize();
  return Rational(v);
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::invalid_argument("reciprocal of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

Rational Rational::pow(unsigned e) const {
  mpq_class r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(v_.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(v_.get_mpq_t()), e);
  return Rational(r);
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rational::fits_int64() const {
  return is_integer() && v_.get_num().fits_slong_p();
}

std::int64_t Rational::to_int64() const {
  if (!fits_int64()) throw std::domain_error("rational does not fit int64: " + to_string());
  return v_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace fploc
