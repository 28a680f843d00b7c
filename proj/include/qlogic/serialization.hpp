#pragma once

// JSON file formats.
//
// Model file, explicit form:
//   {"name": "C1", "size": 4, "unit": 0,
//    "dot": [[0,1,2,3], [1,1,3,3], [2,3,2,3], [3,3,3,3]],
//    "garbage": [3], "labels": ["e1", "ep", "eq", "e0"]}
// Model file, recipe form (optional top-level "labels" override the recipe's):
//   {"name": "B1", "recipe": {"kind": "ray", "ambient_dim": 2, "rays": ["1,0", "0,1"]}}
//   kinds: classical {variables}, ray {ambient_dim, rays}, random {size, seed,
//   projective, allow_unit_in_garbage}, enumerated {size, index}.
// Garbage members and assignment members may be indices or labels; a string
// that matches no label but is a number is read as an index.
//
// Assignment file: {"a": ["e0", "ep"], "b": [0, 3]}
// Proof file: {"rule": "Ex1", "conclusion": "|- a, ~a", "premises": [ ... ]}

#include <filesystem>
#include <string>

#include "json.hpp"
#include "qlogic/falsify.hpp"
#include "qlogic/proof.hpp"

namespace qlogic {

using Json = nlohmann::json;

/// Throws StructuralError for unreadable or malformed JSON.
Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text);

struct NamedModel {
  std::string name;
  QStructure structure;
};

NamedModel model_from_json(const Json& j);
NamedModel load_model(const std::filesystem::path& path);
Json model_to_json(const QStructure& q, const std::string& name = "");

Assignment assignment_from_json(const QStructure& q, const Json& j);
Json assignment_to_json(const QStructure& q, const Assignment& asg);

ProofTree proof_from_json(const Json& j);
Json proof_to_json(const ProofTree& t);

Json countermodel_to_json(const Sequent& s, const Countermodel& c);

}  // namespace qlogic
