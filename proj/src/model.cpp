#include "fploc/model.hpp"

#include <set>

#include "fploc/errors.hpp"

namespace fploc {

std::string to_string(SignConvention s) {
  return s == SignConvention::classical ? "classical" : "paper_corollary";
}

SignConvention sign_convention_from_string(const std::string& s) {
  if (s == "classical") return SignConvention::classical;
  if (s == "paper_corollary") return SignConvention::paper_corollary;
  throw validation_error("unknown sign convention '" + s +
                         "' (expected 'classical' or 'paper_corollary')");
}

bool operator==(const FixedComponent& a, const FixedComponent& b) {
  return a.id == b.id && a.weights == b.weights && a.constant == b.constant &&
         a.local_integral == b.local_integral;
}

bool operator==(const Model& a, const Model& b) {
  return a.name == b.name && a.k == b.k && a.q == b.q && a.components == b.components &&
         a.sign_convention == b.sign_convention && a.metadata == b.metadata;
}

void Model::validate() const {
  if (k < 1) throw validation_error("k must be >= 1");
  if (q < 2) throw validation_error("q must be >= 2");
  if (q % 2 != 0) throw validation_error("q must be even");
  if (components.empty()) throw validation_error("model must have at least one component");

  std::set<std::string> ids;
  for (const auto& comp : components) {
    if (!ids.insert(comp.id).second)
      throw validation_error("duplicate component id '" + comp.id + "'");
    try {
      comp.weights.validate();
    } catch (const validation_error& e) {
      throw validation_error("component '" + comp.id + "': " + e.what());
    }
    if (comp.weights.weights.size() != q / 2)
      throw validation_error("component '" + comp.id + "': weight count " +
                             std::to_string(comp.weights.weights.size()) +
                             " must equal q/2 = " + std::to_string(q / 2));
    if (comp.weights.num_vars() != k)
      throw validation_error("component '" + comp.id + "': weight dimension " +
                             std::to_string(comp.weights.num_vars()) +
                             " must equal k = " + std::to_string(k));
    if (comp.constant.is_zero())
      throw validation_error("component '" + comp.id + "': c must be nonzero");
    if (comp.local_integral && comp.local_integral->num_vars() != k)
      throw validation_error("component '" + comp.id +
                             "': local integral dimension must equal k");
  }
}

}  // namespace fploc
