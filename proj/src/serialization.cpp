#include "qlogic/serialization.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "qlogic/errors.hpp"
#include "qlogic/models.hpp"

namespace qlogic {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw StructuralError(what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) malformed(where + ": missing field '" + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    malformed(where + ": " + e.what());
  }
}

Element element_of(const Json& j, std::size_t size, const std::vector<std::string>& labels, const std::string& where) {
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0)) {
    const auto e = j.get<std::uint64_t>();
    if (e >= size) malformed(where + ": element index " + std::to_string(e) + " is outside the carrier");
    return static_cast<Element>(e);
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == s) return static_cast<Element>(i);
    }
    if (!s.empty() && s.size() < 4 && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      return element_of(Json(std::stoul(s)), size, labels, where);
    }
    malformed(where + ": unknown element label '" + s + "'");
  }
  malformed(where + ": elements must be indices or labels");
}

ElementSet element_set_of(const Json& j, std::size_t size, const std::vector<std::string>& labels,
                          const std::string& where) {
  if (!j.is_array()) malformed(where + ": expected an array of elements");
  ElementSet s;
  for (const auto& e : j) s.insert(element_of(e, size, labels, where));
  return s;
}

QStructure with_labels(const QStructure& q, std::vector<std::string> labels) {
  return QStructure(q.size(), q.unit(), q.table(), q.garbage(), std::move(labels));
}

QStructure recipe_model(const Json& r) {
  const std::string where = "recipe";
  const auto kind = get_as<std::string>(field(r, "kind", where), where + ".kind");
  ModelRecipe recipe;
  if (kind == "classical") {
    recipe.kind = ModelRecipe::Kind::Classical;
    recipe.variables = get_as<std::vector<std::string>>(field(r, "variables", where), where + ".variables");
  } else if (kind == "ray") {
    recipe.kind = ModelRecipe::Kind::Ray;
    recipe.ambient_dim = get_as<std::size_t>(field(r, "ambient_dim", where), where + ".ambient_dim");
    for (const auto& text : get_as<std::vector<std::string>>(field(r, "rays", where), where + ".rays")) {
      recipe.rays.push_back(parse_vector(text));
    }
  } else if (kind == "random") {
    recipe.kind = ModelRecipe::Kind::Random;
    recipe.size = get_as<std::size_t>(field(r, "size", where), where + ".size");
    recipe.seed = get_as<std::uint64_t>(field(r, "seed", where), where + ".seed");
    recipe.random_options.projective = r.value("projective", false);
    recipe.random_options.allow_unit_in_garbage = r.value("allow_unit_in_garbage", false);
  } else if (kind == "enumerated") {
    recipe.kind = ModelRecipe::Kind::Enumerated;
    recipe.size = get_as<std::size_t>(field(r, "size", where), where + ".size");
    recipe.index = get_as<std::uint64_t>(field(r, "index", where), where + ".index");
  } else {
    malformed("unknown recipe kind '" + kind + "'");
  }
  return build_model(recipe);
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    malformed(path.string() + ": invalid JSON: " + e.what());
  }
}

NamedModel model_from_json(const Json& j) {
  if (!j.is_object()) malformed("model file must be a JSON object");
  const std::string name = j.value("name", std::string{});
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = get_as<std::vector<std::string>>(j.at("labels"), "labels");

  if (j.contains("recipe")) {
    QStructure q = recipe_model(j.at("recipe"));
    if (!labels.empty()) q = with_labels(q, std::move(labels));
    return {name, q};
  }
  const auto size = get_as<std::size_t>(field(j, "size", "model"), "size");
  const auto& dot_json = field(j, "dot", "model");
  if (!dot_json.is_array() || dot_json.size() != size) {
    malformed("dot must be an array of " + std::to_string(size) + " rows");
  }
  std::vector<std::vector<Element>> dot;
  for (std::size_t r = 0; r < size; ++r) {
    dot.push_back(get_as<std::vector<Element>>(dot_json[r], "dot row " + std::to_string(r)));
  }
  if (size > ElementSet::kMaxElements) malformed("carrier size exceeds the 64-element limit");
  const Element unit = element_of(field(j, "unit", "model"), size, labels, "unit");
  const ElementSet garbage = element_set_of(field(j, "garbage", "model"), size, labels, "garbage");
  return {name, QStructure::from_table(unit, dot, garbage, std::move(labels))};
}

NamedModel load_model(const std::filesystem::path& path) { return model_from_json(read_json_file(path)); }

Json model_to_json(const QStructure& q, const std::string& name) {
  Json j;
  if (!name.empty()) j["name"] = name;
  j["size"] = q.size();
  j["unit"] = q.unit();
  Json dot = Json::array();
  for (Element x = 0; x < q.size(); ++x) {
    Json row = Json::array();
    for (Element y = 0; y < q.size(); ++y) row.push_back(q.dot(x, y));
    dot.push_back(row);
  }
  j["dot"] = dot;
  j["garbage"] = q.garbage().members();
  if (!q.labels().empty()) j["labels"] = q.labels();
  return j;
}

Assignment assignment_from_json(const QStructure& q, const Json& j) {
  if (!j.is_object()) malformed("assignment must be a JSON object mapping atoms to element lists");
  Assignment asg;
  for (const auto& [atom, members] : j.items()) {
    if (!is_valid_atom_name(atom)) malformed("bad atom name '" + atom + "' in assignment");
    const ElementSet s = element_set_of(members, q.size(), q.labels(), "assignment of " + atom);
    if (!is_fact(q, s)) {
      malformed("assignment of " + atom + ": " + q.format(s) + " is not a fact (closure " +
                q.format(biorth(q, s)) + ")");
    }
    asg.emplace(atom, Fact::from_set(q, s));
  }
  return asg;
}

Json assignment_to_json(const QStructure& q, const Assignment& asg) {
  Json j = Json::object();
  for (const auto& [atom, fact] : asg) {
    Json members = Json::array();
    fact.members().for_each([&](Element e) {
      if (q.labels().empty()) {
        members.push_back(e);
      } else {
        members.push_back(q.label(e));
      }
    });
    j[atom] = members;
  }
  return j;
}

ProofTree proof_from_json(const Json& j) {
  const auto rule_text = get_as<std::string>(field(j, "rule", "proof node"), "rule");
  const auto rule = parse_rule(rule_text);
  if (!rule) malformed("unknown rule '" + rule_text + "'");
  ProofTree t{parse_sequent(get_as<std::string>(field(j, "conclusion", "proof node"), "conclusion")), *rule, {}};
  if (j.contains("premises")) {
    if (!j.at("premises").is_array()) malformed("premises must be an array");
    for (const auto& p : j.at("premises")) t.premises.push_back(proof_from_json(p));
  }
  return t;
}

Json proof_to_json(const ProofTree& t) {
  Json j;
  j["rule"] = std::string(rule_name(t.rule));
  j["conclusion"] = to_string(t.conclusion);
  Json premises = Json::array();
  for (const auto& p : t.premises) premises.push_back(proof_to_json(p));
  j["premises"] = premises;
  return j;
}

Json countermodel_to_json(const Sequent& s, const Countermodel& c) {
  Json j;
  j["sequent"] = to_string(s);
  j["model"] = model_to_json(c.structure, "countermodel");
  j["assignment"] = assignment_to_json(c.structure, c.assignment);
  const auto& cert = c.certificate;
  Json cj;
  cj["phase"] = cert.phase == ReplayCertificate::Phase::Enumerated ? "enumerated" : "random";
  cj["size"] = cert.size;
  cj["probe"] = cert.probe;
  if (cert.phase == ReplayCertificate::Phase::Enumerated) {
    cj["index"] = cert.index;
    cj["assignment_index"] = cert.assignment_index;
  } else {
    cj["structure_seed"] = cert.structure_seed;
    cj["assignment_seed"] = cert.assignment_seed;
  }
  j["certificate"] = cj;
  return j;
}

}  // namespace qlogic
