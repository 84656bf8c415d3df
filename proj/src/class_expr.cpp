#include "fploc/class_expr.hpp"

#include <cctype>
#include <stdexcept>

#include "fploc/errors.hpp"

namespace fploc {

namespace {
constexpr std::uint32_t kMaxGeneratorIndex = 16;
constexpr std::uint64_t kMaxExponent = 512;           // practical degree guard
constexpr std::uint64_t kMaxLiteral = 1000000000000;  // rational literal overflow guard
}  // namespace

std::uint32_t GenMonomial::degree(std::uint32_t q) const {
  std::uint32_t d = e_exp * q;
  for (const auto& [j, b] : p_exps) d += 4 * j * b;
  return d;
}

std::string GenMonomial::to_string() const {
  std::string s;
  auto append = [&s](const std::string& part) {
    if (!s.empty()) s += "*";
    s += part;
  };
  if (e_exp == 1) append("e");
  if (e_exp > 1) append("e^" + std::to_string(e_exp));
  for (const auto& [j, b] : p_exps) {
    std::string part = "p" + std::to_string(j);
    if (b > 1) part += "^" + std::to_string(b);
    append(part);
  }
  return s.empty() ? "1" : s;
}

ClassExpr::ClassExpr(std::uint32_t codim) : codim_(codim) {
  if (codim < 2 || codim % 2 != 0)
    throw std::invalid_argument("codimension must be even and >= 2");
}

ClassExpr ClassExpr::one(std::uint32_t codim) {
  return monomial(codim, GenMonomial{});
}

ClassExpr ClassExpr::monomial(std::uint32_t codim, const GenMonomial& m, const Rational& coeff) {
  ClassExpr c(codim);
  c.add_term(m, coeff);
  return c;
}

void ClassExpr::add_term(const GenMonomial& m, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ClassExpr& ClassExpr::operator+=(const ClassExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ClassExpr& ClassExpr::operator-=(const ClassExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ClassExpr operator*(const ClassExpr& a, const ClassExpr& b) {
  ClassExpr r(a.codim_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      GenMonomial m = ma;
      m.e_exp += mb.e_exp;
      for (const auto& [j, e] : mb.p_exps) m.p_exps[j] += e;
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

ClassExpr ClassExpr::pow(unsigned e) const {
  ClassExpr r = one(codim_);
  ClassExpr base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

std::optional<std::uint32_t> ClassExpr::degree() const {
  if (terms_.empty()) return 0;
  std::uint32_t d0 = terms_.begin()->first.degree(codim_);
  for (const auto& [m, c] : terms_)
    if (m.degree(codim_) != d0) return std::nullopt;
  return d0;
}

std::string ClassExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.abs();
    std::string mono = m.to_string();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (mono == "1") {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

namespace {

// Recursive-descent parser for the class-expression grammar.
class ExprParser {
public:
  ExprParser(std::string_view text, std::uint32_t codim) : text_(text), codim_(codim) {}

  ClassExpr run() {
    ClassExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

private:
  std::string_view text_;
  std::uint32_t codim_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  std::uint64_t parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an unsigned integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > kMaxLiteral) fail("integer literal too large");
      ++pos_;
    }
    return v;
  }

  ClassExpr parse_expr() {
    bool negate = false;
    skip_ws();
    if (consume('-')) {
      negate = true;
    } else {
      consume('+');
    }
    ClassExpr acc = parse_term();
    if (negate) acc = ClassExpr(codim_) - acc;
    for (;;) {
      if (consume('+')) {
        acc += parse_term();
      } else if (consume('-')) {
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  ClassExpr parse_term() {
    ClassExpr acc = parse_factor();
    while (consume('*')) acc = acc * parse_factor();
    return acc;
  }

  ClassExpr parse_factor() {
    ClassExpr base = parse_atom();
    if (consume('^')) {
      std::size_t exp_pos = pos_;
      std::uint64_t e = parse_uint();
      if (e > kMaxExponent)
        throw parse_error("exponent " + std::to_string(e) + " exceeds the practical cap of " +
                              std::to_string(kMaxExponent),
                          exp_pos);
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  ClassExpr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ClassExpr inner = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'e') {
      ++pos_;
      GenMonomial m;
      m.e_exp = 1;
      return ClassExpr::monomial(codim_, m);
    }
    if (c == 'p') {
      ++pos_;
      std::uint64_t j = parse_uint();
      if (j == 0) fail("generator index 0 is invalid (Pontryagin generators start at p1)");
      if (j > kMaxGeneratorIndex)
        fail("generator index " + std::to_string(j) + " exceeds the cap of " +
             std::to_string(kMaxGeneratorIndex));
      GenMonomial m;
      m.p_exps[static_cast<std::uint32_t>(j)] = 1;
      return ClassExpr::monomial(codim_, m);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t num = parse_uint();
      std::uint64_t den = 1;
      if (consume('/')) {
        std::size_t den_pos = pos_;
        den = parse_uint();
        if (den == 0) throw parse_error("rational literal with zero denominator", den_pos);
      }
      return ClassExpr::monomial(codim_, GenMonomial{},
                                 Rational(static_cast<long>(num), static_cast<long>(den)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

ClassExpr ClassExpr::parse(std::string_view text, std::uint32_t codim) {
  if (codim < 2 || codim % 2 != 0)
    throw std::invalid_argument("codimension must be even and >= 2");
  return ExprParser(text, codim).run();
}

}  // namespace fploc
