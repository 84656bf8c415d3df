#include "fploc/localization.hpp"

#include <stdexcept>

#include "fploc/errors.hpp"

namespace fploc {

Rational ev_zero(const Polynomial& p) { return p.constant_term(); }

Rational sign_convention_factor(const Model& m) {
  if (m.sign_convention == SignConvention::paper_corollary && (m.q / 2) % 2 == 1)
    return Rational(-1);
  return Rational(1);
}

RationalFraction component_contribution(const Model& m, const FixedComponent& comp,
                                        const ClassExpr& cls) {
  if (cls.codim() != m.q)
    throw std::invalid_argument("class expression parsed against codimension " +
                                std::to_string(cls.codim()) + ", model has q = " +
                                std::to_string(m.q));
  if (comp.local_integral) return comp.constant * *comp.local_integral;

  comp.weights.validate();
  Polynomial num = eval_at_weights(cls, comp.weights);
  RationalFraction frac = RationalFraction::over_linear_factors(
      std::move(num), Rational(comp.weights.sign), comp.weights.weights);
  return (sign_convention_factor(m) * comp.constant) * frac;
}

LocalizationResult localization_sum(const Model& m, const ClassExpr& cls) {
  if (!cls.degree().has_value())
    throw std::invalid_argument("localization sum requires a homogeneous class expression");
  RationalFraction acc = RationalFraction::zero(m.k);
  for (const auto& comp : m.components) acc += component_contribution(m, comp, cls);
  LocalizationResult result{acc, acc.to_polynomial()};
  return result;
}

Rational characteristic_number(const Model& m, const ClassExpr& cls) {
  auto deg = cls.degree();
  if (!deg.has_value())
    throw std::invalid_argument("characteristic number requires a homogeneous class expression");
  if (*deg != m.q)
    throw degree_mismatch_error("class degree " + std::to_string(*deg) +
                                " does not equal the codimension q = " + std::to_string(m.q));
  LocalizationResult result = localization_sum(m, cls);
  if (!result.polynomial) throw not_polynomial_error(result.total.to_string());
  return ev_zero(*result.polynomial);
}

std::vector<ClassExpr> generator_classes(std::uint32_t q, std::uint32_t d) {
  std::uint32_t m = q / 2;
  std::vector<ClassExpr> out;

  // Budgeted enumeration over [e, p1, .., pm], e first, ascending p index.
  GenMonomial current;
  auto recurse = [&](auto&& self, std::uint32_t j, std::uint32_t remaining) -> void {
    if (remaining == 0) {
      out.push_back(ClassExpr::monomial(q, current));
      return;
    }
    if (j > m) return;
    std::uint32_t gen_deg = 4 * j;
    for (std::uint32_t b = 0; b * gen_deg <= remaining; ++b) {
      if (b > 0) current.p_exps[j] = b;
      self(self, j + 1, remaining - b * gen_deg);
      current.p_exps.erase(j);
    }
  };
  for (std::uint32_t a = 0; a * q <= d; ++a) {
    current.e_exp = a;
    recurse(recurse, 1, d - a * q);
  }
  return out;
}

VerifyReport verify_model(const Model& m, std::uint32_t max_degree) {
  m.validate();
  VerifyReport report;
  for (std::uint32_t d = 0; d <= max_degree; d += 2) {
    for (const ClassExpr& cls : generator_classes(m.q, d)) {
      LocalizationResult result = localization_sum(m, cls);
      VerifyEntry entry;
      entry.class_text = cls.to_string();
      entry.class_degree = d;
      entry.is_polynomial = result.is_polynomial();
      if (result.polynomial) {
        const Polynomial& p = *result.polynomial;
        if (d < m.q) {
          entry.degree_ok = p.is_zero();
        } else {
          // Expected cohomological degree d - q, i.e. exponent degree (d-q)/2;
          // an exactly-zero sum (e.g. p_j beyond q/2 arguments) is consistent.
          entry.degree_ok =
              p.is_zero() || (p.is_homogeneous() && 2 * p.total_degree() == d - m.q);
        }
        entry.value_text = p.to_string();
      } else {
        entry.degree_ok = false;
        entry.value_text = result.total.to_string();
      }
      entry.pass = entry.is_polynomial && entry.degree_ok;
      report.all_pass = report.all_pass && entry.pass;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace fploc
