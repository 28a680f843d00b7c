#pragma once

#include <initializer_list>
#include <string>

#include "qlogic/serialization.hpp"

namespace fixtures {

inline std::string path(const std::string& relative) { return std::string(QLOGIC_FIXTURES) + "/" + relative; }

inline qlogic::QStructure model(const std::string& file) { return qlogic::load_model(path("models/" + file)).structure; }

inline qlogic::QStructure c1() { return model("c1.json"); }
inline qlogic::QStructure b1() { return model("b1.json"); }

inline qlogic::ElementSet set(const qlogic::QStructure& q, std::initializer_list<const char*> labels) {
  qlogic::ElementSet s;
  for (const char* l : labels) s.insert(*q.find_label(l));
  return s;
}

inline qlogic::Fact fact(const qlogic::QStructure& q, std::initializer_list<const char*> labels) {
  return qlogic::Fact::from_set(q, set(q, labels));
}

}  // namespace fixtures
