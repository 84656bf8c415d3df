#ifndef FPLOC_TEST_GENERATORS_HPP
#define FPLOC_TEST_GENERATORS_HPP

#include <random>
#include <vector>

#include "fploc/model.hpp"
#include "fploc/polynomial.hpp"
#include "fploc/rational_fraction.hpp"

namespace fploc::testgen {

inline Rational random_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 4) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int max_num = 9,
                                        int max_den = 4) {
  for (;;) {
    Rational r = random_rational(rng, max_num, max_den);
    if (!r.is_zero()) return r;
  }
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t num_vars,
                                    unsigned max_degree = 6, unsigned max_terms = 6) {
  std::uniform_int_distribution<unsigned> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> expo(0, max_degree);
  Polynomial p(num_vars);
  unsigned n = nterms(rng);
  for (unsigned t = 0; t < n; ++t) {
    Exponents e(num_vars);
    unsigned budget = max_degree;
    for (std::size_t i = 0; i < num_vars; ++i) {
      unsigned x = expo(rng) % (budget + 1);
      e[i] = x;
      budget -= x;
    }
    p.add_term(e, random_rational(rng));
  }
  return p;
}

inline LinearForm random_linear_form(std::mt19937_64& rng, std::size_t num_vars) {
  for (;;) {
    std::vector<Rational> coeffs;
    coeffs.reserve(num_vars);
    std::uniform_int_distribution<int> c(-4, 4);
    for (std::size_t i = 0; i < num_vars; ++i) coeffs.emplace_back(c(rng));
    LinearForm l(std::move(coeffs));
    if (!l.is_zero()) return l;
  }
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t num_vars,
                                          int max_num = 9) {
  std::vector<Rational> x;
  x.reserve(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) x.push_back(random_rational(rng, max_num, 3));
  return x;
}

inline WeightSystem random_weight_system(std::mt19937_64& rng, std::size_t num_vars,
                                         std::size_t count) {
  WeightSystem w;
  std::uniform_int_distribution<int> sign(0, 1);
  w.sign = sign(rng) ? +1 : -1;
  for (std::size_t i = 0; i < count; ++i)
    w.weights.push_back(random_linear_form(rng, num_vars));
  return w;
}

// Structurally valid fixed-point dataset; generally NOT consistent data (the
// localization sum of most classes will not cancel), which is exactly what
// round-trip and invariance tests need.
inline Model random_model(std::mt19937_64& rng, bool positive_signs = false) {
  std::uniform_int_distribution<std::size_t> kdist(1, 3);
  std::uniform_int_distribution<std::uint32_t> half_q(1, 3);
  std::uniform_int_distribution<std::size_t> ncomp(1, 4);
  Model m;
  m.k = kdist(rng);
  m.q = 2 * half_q(rng);
  m.name = "random";
  std::size_t n = ncomp(rng);
  for (std::size_t i = 0; i < n; ++i) {
    FixedComponent comp;
    comp.id = "C" + std::to_string(i);
    comp.weights = random_weight_system(rng, m.k, m.q / 2);
    if (positive_signs) comp.weights.sign = +1;
    comp.constant = random_nonzero_rational(rng);
    m.components.push_back(std::move(comp));
  }
  return m;
}

inline Model scale_weights(Model m, const Rational& s) {
  for (auto& comp : m.components)
    for (auto& w : comp.weights.weights) w = w.scaled(s);
  return m;
}

inline Model scale_constants(Model m, const Rational& s) {
  for (auto& comp : m.components) comp.constant *= s;
  return m;
}

}  // namespace fploc::testgen

#endif
