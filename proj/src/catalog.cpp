#include "fploc/catalog.hpp"

#include <charconv>

#include "fploc/errors.hpp"

namespace fploc {

namespace {

LinearForm unit_weight(std::size_t k, std::size_t index, long scale = 1) {
  std::vector<Rational> c(k, Rational(0));
  c[index] = Rational(scale);
  return LinearForm(std::move(c));
}

// u_j - u_i in k variables.
LinearForm difference_weight(std::size_t k, std::size_t j, std::size_t i) {
  std::vector<Rational> c(k, Rational(0));
  c[j] = Rational(1);
  c[i] = Rational(-1);
  return LinearForm(std::move(c));
}

LinearForm embed(const LinearForm& w, std::size_t total, std::size_t offset) {
  std::vector<Rational> c(total, Rational(0));
  for (std::size_t i = 0; i < w.num_vars(); ++i) c[offset + i] = w.coeffs()[i];
  return LinearForm(std::move(c));
}

long parse_long_param(const std::string& s, const std::string& context) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw validation_error(context + ": malformed integer parameter '" + s + "'");
  return v;
}

}  // namespace

Model builtin_s2_rotation() {
  Model m;
  m.name = "s2_rotation";
  m.k = 1;
  m.q = 2;
  m.components = {
      {"N", WeightSystem{{unit_weight(1, 0, 1)}, +1}, Rational(1), std::nullopt},
      {"S", WeightSystem{{unit_weight(1, 0, -1)}, +1}, Rational(1), std::nullopt},
  };
  m.metadata["description"] = "S^2 with a circle rotation; fixed poles N and S";
  return m;
}

Model builtin_cpn(unsigned n) {
  if (n < 1) throw validation_error("cpn: parameter n must be >= 1");
  Model m;
  m.name = "cpn:" + std::to_string(n);
  m.k = n + 1;
  m.q = 2 * n;
  for (std::size_t i = 0; i <= n; ++i) {
    FixedComponent comp;
    comp.id = "P" + std::to_string(i);
    comp.weights.sign = +1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      comp.weights.weights.push_back(difference_weight(n + 1, j, i));
    }
    m.components.push_back(std::move(comp));
  }
  m.metadata["description"] =
      "CP^" + std::to_string(n) + " with the standard torus action (homogeneous presentation: "
      "k = n+1 variables; the diagonal acts trivially, which is harmless to the formula)";
  return m;
}

Model builtin_s4_t2() {
  Model m;
  m.name = "s4_t2";
  m.k = 2;
  m.q = 4;
  m.components = {
      {"N", WeightSystem{{unit_weight(2, 0, 1), unit_weight(2, 1, 1)}, +1}, Rational(1),
       std::nullopt},
      {"S", WeightSystem{{unit_weight(2, 0, -1), unit_weight(2, 1, 1)}, +1}, Rational(1),
       std::nullopt},
  };
  m.metadata["description"] = "S^4 with a 2-torus action; orientation signs fixed by chi = 2";
  return m;
}

Model builtin_hopf_flow(long a, long b) {
  if (a <= 0 || b <= 0) throw validation_error("hopf_flow: parameters must be positive");
  Model m;
  m.name = "hopf_flow:" + std::to_string(a) + "," + std::to_string(b);
  m.k = 1;
  m.q = 2;
  m.components = {
      {"C1", WeightSystem{{unit_weight(1, 0, a)}, +1}, Rational(1), std::nullopt},
      {"C2", WeightSystem{{unit_weight(1, 0, -b)}, +1}, Rational(1), std::nullopt},
  };
  m.metadata["description"] = "Hopf-flow surrogate with rational parameters (a,b) = (" +
                              std::to_string(a) + "," + std::to_string(b) + ")";
  m.metadata["caveat"] =
      "c_i = 1 is a stand-in: the defining transverse-volume integrals are not computed here. "
      "With c_i = 1 the dataset satisfies the forced cancellation only for a = b; other "
      "parameters make verify report NotPolynomial.";
  return m;
}

Model product_model(const Model& m1, const Model& m2) {
  if (m1.sign_convention != m2.sign_convention)
    throw validation_error("product of models with different sign conventions");
  Model m;
  m.name = m1.name + " x " + m2.name;
  m.k = m1.k + m2.k;
  m.q = m1.q + m2.q;
  m.sign_convention = m1.sign_convention;
  for (const auto& c1 : m1.components) {
    for (const auto& c2 : m2.components) {
      if (c1.local_integral || c2.local_integral)
        throw validation_error("product of components with precomputed local integrals "
                               "is unsupported");
      FixedComponent comp;
      comp.id = c1.id + "*" + c2.id;
      comp.weights.sign = c1.weights.sign * c2.weights.sign;
      for (const auto& w : c1.weights.weights)
        comp.weights.weights.push_back(embed(w, m.k, 0));
      for (const auto& w : c2.weights.weights)
        comp.weights.weights.push_back(embed(w, m.k, m1.k));
      comp.constant = c1.constant * c2.constant;
      m.components.push_back(std::move(comp));
    }
  }
  m.metadata["description"] = "product of " + m1.name + " and " + m2.name;
  return m;
}

Model builtin_model(const std::string& spec) {
  std::string name = spec;
  std::string params;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    params = spec.substr(colon + 1);
  }

  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
      if (i == s.size() || s[i] == sep) {
        parts.push_back(s.substr(start, i - start));
        start = i + 1;
      }
    }
    return parts;
  };

  if (name == "s2_rotation" || name == "s4_t2") {
    if (!params.empty()) throw validation_error(name + ": takes no parameters");
    return name == "s2_rotation" ? builtin_s2_rotation() : builtin_s4_t2();
  }
  if (name == "cpn") {
    if (params.empty()) throw validation_error("cpn: requires a parameter, e.g. cpn:2");
    long n = parse_long_param(params, "cpn");
    if (n < 1) throw validation_error("cpn: parameter n must be >= 1");
    return builtin_cpn(static_cast<unsigned>(n));
  }
  if (name == "hopf_flow") {
    auto parts = split(params, ',');
    if (params.empty() || parts.size() != 2)
      throw validation_error("hopf_flow: requires two parameters, e.g. hopf_flow:1,1");
    return builtin_hopf_flow(parse_long_param(parts[0], "hopf_flow"),
                             parse_long_param(parts[1], "hopf_flow"));
  }
  if (name == "product") {
    auto parts = split(params, '*');
    if (params.empty() || parts.size() < 2)
      throw validation_error("product: requires at least two factor specs joined by '*'");
    Model acc = builtin_model(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
      acc = product_model(acc, builtin_model(parts[i]));
    return acc;
  }
  throw validation_error("unknown builtin '" + name + "'");
}

const std::vector<BuiltinInfo>& catalog_listing() {
  static const std::vector<BuiltinInfo> infos = {
      {"s2_rotation", "", "S^2 with a circle rotation (k=1, q=2, two poles)",
       "chi = 2"},
      {"cpn", "n >= 1", "CP^n with the standard torus action (k=n+1, q=2n, n+1 points)",
       "chi = n+1; p1 on cpn:2 = 3"},
      {"s4_t2", "", "S^4 with a 2-torus action (k=2, q=4, two points)",
       "chi = 2; p1 = 0"},
      {"hopf_flow", "a,b > 0",
       "weighted Hopf-flow surrogate (k=1, q=2, two closed orbits, c_i = 1 caveat)",
       "consistent data only for a = b; chi = 2 there"},
      {"product", "<spec>*<spec>", "product dataset of two builtins",
       "chi multiplies"},
  };
  return infos;
}

std::vector<Model> catalog_models() {
  std::vector<Model> models;
  models.push_back(builtin_s2_rotation());
  for (unsigned n = 1; n <= 5; ++n) models.push_back(builtin_cpn(n));
  models.push_back(builtin_s4_t2());
  models.push_back(builtin_hopf_flow(1, 1));
  models.push_back(product_model(builtin_s2_rotation(), builtin_s2_rotation()));
  return models;
}

}  // namespace fploc
