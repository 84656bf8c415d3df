#ifndef FPLOC_MODEL_IO_HPP
#define FPLOC_MODEL_IO_HPP

#include <string>

#include "fploc/model.hpp"

namespace fploc {

// Parses and validates a model document (JSON).  Throws parse_error with the
// byte position on malformed JSON and validation_error naming the violated
// invariant otherwise.
Model load_model(const std::string& text);
Model load_model_file(const std::string& path);

// Deterministic serialization: sorted keys, rationals rendered canonically
// ("a" or "a/b"; weight entries as plain integers when possible).
// load_model(save_model(m)) == m structurally.
std::string save_model(const Model& m);

}  // namespace fploc

#endif
