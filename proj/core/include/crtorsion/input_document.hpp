#pragma once

#include <string>

#include "crtorsion/seifert_model.hpp"

namespace crtorsion {

/// The CLI input document: Seifert invariants plus holonomy blocks with
/// rationals serialized as "p/q" strings.
///
/// {
///   "seifert": {"genus": 0, "b": -1,
///               "fibers": [{"alpha": 2, "beta": 1}, ...]},
///   "holonomy": [
///     {"x": "0", "dim": 1, "fiber_spectra": [["0"], ["0"], ["0"]]},
///     ...
///   ]
/// }
///
/// fiber_spectra has one entry per fiber, each a list of dim rationals.
struct InputDocument {
  SeifertData seifert;
  HolonomyData holonomy;
};

/// Parse errors throw config_error naming the offending field.
InputDocument parse_input_document(const std::string& json_text);

InputDocument load_input_document(const std::string& path);

std::string input_document_to_json(const InputDocument& doc);

}  // namespace crtorsion
