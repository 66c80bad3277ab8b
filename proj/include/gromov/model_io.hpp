#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gromov/model.hpp"

namespace gromov {

/// Model documents are UTF-8 JSON:
///
///   {
///     "name": "cp2_blowup_1",
///     "basis": ["L", "E1"],
///     "gram": [[1, 0], [0, -1]],
///     "K": "-3L + E1",                 (or an integer array)
///     "area": ["3", "1"],              (rationals "p/q"; integers allowed)
///     "b2plus": 1,                     (optional override)
///     "exceptional": ["E1"],
///     "minimal": false,
///     "gr0_table":    [{"class": "L", "value": 1}],
///     "torus_table":  [{"class": "B", "label": "+0", "cover": 1}],
///                     (an entry with no label lists a class with no tori)
///     "sphere_table": [{"class": "L", "count": 1}]
///   }
///
/// Every invariant is checked before the model is returned; the first
/// violation throws ModelError carrying the JSON pointer of the offending
/// value and its line in the document.
ManifoldModel load_model_text(std::string_view text);
ManifoldModel load_model_file(const std::filesystem::path &path);

/// Serializes a model in the format above (class expressions for K, the
/// exceptional set and table keys).
std::string dump_model(const ManifoldModel &model);

/// 1-based line of the value addressed by a JSON pointer such as
/// "/gram/1/0"; 0 when the pointer does not resolve.
int locate_json_pointer(std::string_view text, std::string_view pointer);

} // namespace gromov
