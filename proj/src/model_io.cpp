#include "fploc/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fploc/errors.hpp"

namespace fploc {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Rational::from_string(j.get<std::string>());
    } catch (const parse_error& e) {
      throw validation_error(where + ": " + e.what());
    }
  }
  throw validation_error(where + ": expected an integer or a rational string \"a/b\"");
}

json rational_to_json(const Rational& r) {
  if (r.fits_int64()) return json(r.to_int64());
  return json(r.to_string());
}

const json& require_key(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw validation_error(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw validation_error(where + ": missing required key '" + key + "'");
  return *it;
}

LinearForm linear_form_from_json(const json& j, std::size_t k, const std::string& where) {
  if (!j.is_array() || j.size() != k)
    throw validation_error(where + ": expected an array of k = " + std::to_string(k) +
                           " rationals");
  std::vector<Rational> coeffs;
  coeffs.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    coeffs.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return LinearForm(std::move(coeffs));
}

json linear_form_to_json(const LinearForm& l) {
  json arr = json::array();
  for (const auto& c : l.coeffs()) arr.push_back(rational_to_json(c));
  return arr;
}

Polynomial polynomial_from_json(const json& j, std::size_t k, const std::string& where) {
  if (!j.is_array()) throw validation_error(where + ": expected an array of terms");
  Polynomial p(k);
  for (const auto& term : j) {
    const json& coeff = require_key(term, "coeff", where);
    const json& exps = require_key(term, "exponents", where);
    if (!exps.is_array() || exps.size() != k)
      throw validation_error(where + ": 'exponents' must be an array of k = " +
                             std::to_string(k) + " non-negative integers");
    Exponents e(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (!exps[i].is_number_integer() || exps[i].get<std::int64_t>() < 0 ||
          exps[i].get<std::int64_t>() > 1000000)
        throw validation_error(where +
                               ": exponents must be non-negative integers (at most 10^6)");
      e[i] = static_cast<std::uint32_t>(exps[i].get<std::int64_t>());
    }
    p.add_term(e, rational_from_json(coeff, where + ".coeff"));
  }
  return p;
}

json polynomial_to_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) {
    json term;
    term["coeff"] = c.to_string();
    term["exponents"] = e;
    arr.push_back(term);
  }
  return arr;
}

RationalFraction fraction_from_json(const json& j, std::size_t k, const std::string& where) {
  Polynomial num = polynomial_from_json(require_key(j, "numerator", where), k,
                                        where + ".numerator");
  Rational scalar = rational_from_json(require_key(j, "denom_scalar", where),
                                       where + ".denom_scalar");
  const json& factors_json = require_key(j, "denom_factors", where);
  if (!factors_json.is_array())
    throw validation_error(where + ": 'denom_factors' must be an array");
  std::vector<LinearForm> factors;
  for (std::size_t i = 0; i < factors_json.size(); ++i)
    factors.push_back(linear_form_from_json(factors_json[i], k,
                                            where + ".denom_factors[" + std::to_string(i) + "]"));
  try {
    return RationalFraction::over_linear_factors(std::move(num), scalar, factors);
  } catch (const std::invalid_argument& e) {
    throw validation_error(where + ": " + e.what());
  }
}

json fraction_to_json(const RationalFraction& f) {
  json j;
  j["numerator"] = polynomial_to_json(f.numerator());
  j["denom_scalar"] = f.denom_scalar().to_string();
  json factors = json::array();
  for (const auto& l : f.denom_factors()) factors.push_back(linear_form_to_json(l));
  j["denom_factors"] = factors;
  return j;
}

}  // namespace

Model load_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("model document is not valid JSON: ") + e.what(),
                      e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!doc.is_object()) throw validation_error("model document must be a JSON object");

  Model m;
  try {
    const json& name = require_key(doc, "name", "model");
    if (!name.is_string()) throw validation_error("model: 'name' must be a string");
    m.name = name.get<std::string>();

    const json& k = require_key(doc, "k", "model");
    if (!k.is_number_integer() || k.get<std::int64_t>() < 0)
      throw validation_error("model: 'k' must be a non-negative integer");
    m.k = static_cast<std::size_t>(k.get<std::int64_t>());

    const json& q = require_key(doc, "q", "model");
    if (!q.is_number_integer() || q.get<std::int64_t>() < 0)
      throw validation_error("model: 'q' must be a non-negative integer");
    m.q = static_cast<std::uint32_t>(q.get<std::int64_t>());

    if (auto it = doc.find("sign_convention"); it != doc.end()) {
      if (!it->is_string())
        throw validation_error("model: 'sign_convention' must be a string");
      m.sign_convention = sign_convention_from_string(it->get<std::string>());
    }

    const json& comps = require_key(doc, "components", "model");
    if (!comps.is_array()) throw validation_error("model: 'components' must be an array");
    for (const auto& cj : comps) {
      FixedComponent comp;
      const std::string where = "component";
      const json& id = require_key(cj, "id", where);
      if (!id.is_string()) throw validation_error("component: 'id' must be a string");
      comp.id = id.get<std::string>();

      const json& eps = require_key(cj, "epsilon", "component '" + comp.id + "'");
      if (!eps.is_number_integer())
        throw validation_error("component '" + comp.id + "': 'epsilon' must be an integer");
      std::int64_t eps_v = eps.get<std::int64_t>();
      if (eps_v != 1 && eps_v != -1)
        throw validation_error("component '" + comp.id + "': epsilon must be +1 or -1");
      comp.weights.sign = static_cast<int>(eps_v);

      if (auto it = cj.find("c"); it != cj.end())
        comp.constant = rational_from_json(*it, "component '" + comp.id + "' c");

      const json& weights = require_key(cj, "weights", "component '" + comp.id + "'");
      if (!weights.is_array())
        throw validation_error("component '" + comp.id + "': 'weights' must be an array");
      for (std::size_t i = 0; i < weights.size(); ++i)
        comp.weights.weights.push_back(linear_form_from_json(
            weights[i], m.k, "component '" + comp.id + "' weight " + std::to_string(i)));

      if (auto it = cj.find("local_integral"); it != cj.end())
        comp.local_integral =
            fraction_from_json(*it, m.k, "component '" + comp.id + "' local_integral");

      m.components.push_back(std::move(comp));
    }

    if (auto it = doc.find("metadata"); it != doc.end()) {
      if (!it->is_object()) throw validation_error("model: 'metadata' must be an object");
      for (const auto& [key, value] : it->items()) {
        if (!value.is_string())
          throw validation_error("model: metadata values must be strings");
        m.metadata[key] = value.get<std::string>();
      }
    }
  } catch (const json::exception& e) {
    throw validation_error(std::string("malformed model document: ") + e.what());
  }

  m.validate();
  return m;
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

std::string save_model(const Model& m) {
  json doc;
  doc["name"] = m.name;
  doc["k"] = m.k;
  doc["q"] = m.q;
  doc["sign_convention"] = to_string(m.sign_convention);
  json comps = json::array();
  for (const auto& comp : m.components) {
    json cj;
    cj["id"] = comp.id;
    cj["epsilon"] = comp.weights.sign;
    cj["c"] = comp.constant.to_string();
    json weights = json::array();
    for (const auto& w : comp.weights.weights) weights.push_back(linear_form_to_json(w));
    cj["weights"] = weights;
    if (comp.local_integral) cj["local_integral"] = fraction_to_json(*comp.local_integral);
    comps.push_back(cj);
  }
  doc["components"] = comps;
  if (!m.metadata.empty()) {
    json meta;
    for (const auto& [k, v] : m.metadata) meta[k] = v;
    doc["metadata"] = meta;
  }
  return doc.dump(2) + "\n";
}

}  // namespace fploc
