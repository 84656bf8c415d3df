#include "fploc/weight_system.hpp"

#include <stdexcept>

#include "fploc/errors.hpp"

namespace fploc {

void WeightSystem::validate() const {
  if (sign != 1 && sign != -1) throw validation_error("epsilon must be +1 or -1");
  if (weights.empty()) throw validation_error("weight system must be nonempty");
  std::size_t k = weights[0].num_vars();
  for (const auto& w : weights) {
    if (w.num_vars() != k) throw validation_error("weights have inconsistent variable counts");
    if (w.is_zero()) throw validation_error("zero weight");
  }
}

Polynomial elementary_symmetric(std::size_t j, std::span<const Polynomial> values) {
  if (values.empty()) throw std::invalid_argument("elementary_symmetric of an empty list");
  std::size_t k = values[0].num_vars();
  if (j > values.size()) return Polynomial::zero(k);

  // e[t] after processing i values = e_t of those values.
  std::vector<Polynomial> e;
  e.reserve(j + 1);
  e.push_back(Polynomial::constant(k, Rational(1)));
  for (std::size_t t = 1; t <= j; ++t) e.push_back(Polynomial::zero(k));
  std::size_t seen = 0;
  for (const auto& v : values) {
    ++seen;
    for (std::size_t t = std::min(j, seen); t >= 1; --t) e[t] += e[t - 1] * v;
  }
  return e[j];
}

Polynomial equivariant_euler(const WeightSystem& w) {
  w.validate();
  Polynomial prod = Polynomial::constant(w.num_vars(), Rational(w.sign));
  for (const auto& alpha : w.weights) prod = prod * alpha.to_polynomial();
  return prod;
}

Polynomial eval_at_weights(const ClassExpr& c, const WeightSystem& w) {
  w.validate();
  if (w.weights.size() != c.codim() / 2)
    throw std::invalid_argument("weight count " + std::to_string(w.weights.size()) +
                                " does not match codimension " + std::to_string(c.codim()));
  std::size_t k = w.num_vars();

  std::vector<Polynomial> alpha_sq;
  alpha_sq.reserve(w.weights.size());
  for (const auto& alpha : w.weights) {
    Polynomial a = alpha.to_polynomial();
    alpha_sq.push_back(a * a);
  }

  std::map<std::uint32_t, Polynomial> pontryagin;  // j -> e_j(alpha^2)
  auto pontryagin_value = [&](std::uint32_t j) -> const Polynomial& {
    auto it = pontryagin.find(j);
    if (it == pontryagin.end())
      it = pontryagin.emplace(j, elementary_symmetric(j, alpha_sq)).first;
    return it->second;
  };

  Polynomial euler(k);
  bool euler_ready = false;

  Polynomial result(k);
  for (const auto& [m, coeff] : c.terms()) {
    Polynomial term = Polynomial::constant(k, coeff);
    if (m.e_exp > 0) {
      if (!euler_ready) {
        euler = equivariant_euler(w);
        euler_ready = true;
      }
      term = term * euler.pow(m.e_exp);
    }
    for (const auto& [j, b] : m.p_exps) term = term * pontryagin_value(j).pow(b);
    result += term;
  }
  return result;
}

}  // namespace fploc
