#ifndef FPLOC_CATALOG_HPP
#define FPLOC_CATALOG_HPP

#include <string>
#include <vector>

#include "fploc/model.hpp"

namespace fploc {

// S^2 with a circle rotation: k=1, q=2, poles with weights {u} and {-u}.
Model builtin_s2_rotation();

// CP^n with the standard torus action in the homogeneous presentation:
// k = n+1, q = 2n, component i carries weights {u_j - u_i : j != i}.
Model builtin_cpn(unsigned n);

// S^4 with a 2-torus action: k=2, q=4, two fixed points.
Model builtin_s4_t2();

// Weighted Hopf-flow surrogate: k=1, q=2, two closed orbits with weights
// {a*u} and {-b*u}.  Ships with c = 1, which is consistent data only for
// a = b; the metadata records the caveat.
Model builtin_hopf_flow(long a, long b);

// Product dataset: variables concatenate (k = k1+k2, q = q1+q2), components
// are all pairs with embedded weights, epsilon and c multiply.
Model product_model(const Model& m1, const Model& m2);

// Builds a model from a spec string: "s2_rotation", "cpn:2", "s4_t2",
// "hopf_flow:1,1", or "product:<spec>*<spec>".  Throws validation_error on
// unknown names or invalid parameters.
Model builtin_model(const std::string& spec);

struct BuiltinInfo {
  std::string name;
  std::string params;
  std::string description;
  std::string known_numbers;
};

const std::vector<BuiltinInfo>& catalog_listing();

// The pinned catalog instances exercised by the verification suites.
std::vector<Model> catalog_models();

}  // namespace fploc

#endif
