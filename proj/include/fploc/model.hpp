#ifndef FPLOC_MODEL_HPP
#define FPLOC_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fploc/rational_fraction.hpp"
#include "fploc/weight_system.hpp"

namespace fploc {

// Which sign the isolated-leaf contribution carries in front:
//   classical       s = +1; calibrated so torus-action models reproduce the
//                   classical characteristic numbers (chi(S^2) = 2, ...).
//   paper_corollary s = (-1)^(q/2), for data whose constants follow the
//                   corollary convention literally.
enum class SignConvention { classical, paper_corollary };

std::string to_string(SignConvention s);
SignConvention sign_convention_from_string(const std::string& s);

// One closed-leaf component: isotropy weights, orientation sign, and the
// transverse-volume constant c.  A non-isolated component enters through a
// user-supplied precomputed local integral which overrides the isolated-leaf
// evaluation.
struct FixedComponent {
  std::string id;
  WeightSystem weights;
  Rational constant = Rational(1);
  std::optional<RationalFraction> local_integral;

  friend bool operator==(const FixedComponent& a, const FixedComponent& b);
};

// Full fixed-point dataset of a Killing foliation / torus action.
struct Model {
  std::string name;
  std::size_t k = 1;       // dim of the structural Killing algebra, number of u variables
  std::uint32_t q = 2;     // codimension, even
  std::vector<FixedComponent> components;
  SignConvention sign_convention = SignConvention::classical;
  std::map<std::string, std::string> metadata;

  // Throws validation_error naming the violated invariant.
  void validate() const;

  friend bool operator==(const Model& a, const Model& b);
};

}  // namespace fploc

#endif
