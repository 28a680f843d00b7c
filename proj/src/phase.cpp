#include "qlogic/phase.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "qlogic/errors.hpp"

namespace qlogic {

QStructure::QStructure(std::size_t size, Element unit, std::vector<Element> dot_row_major, ElementSet garbage,
                       std::vector<std::string> labels) {
  if (size == 0) throw StructuralError("a Q-structure needs at least one element");
  if (size > ElementSet::kMaxElements) {
    throw StructuralError("carrier size " + std::to_string(size) + " exceeds the 64-element limit");
  }
  if (unit >= size) throw StructuralError("unit " + std::to_string(unit) + " is outside the carrier");
  if (dot_row_major.size() != size * size) {
    throw StructuralError("dot table has " + std::to_string(dot_row_major.size()) + " entries, expected " +
                          std::to_string(size * size));
  }
  for (std::size_t i = 0; i < dot_row_major.size(); ++i) {
    if (dot_row_major[i] >= size) {
      throw StructuralError("dot[" + std::to_string(i / size) + "][" + std::to_string(i % size) +
                            "] = " + std::to_string(dot_row_major[i]) + " is outside the carrier");
    }
  }
  if (!garbage.is_subset_of(ElementSet::full(size))) {
    throw StructuralError("garbage set " + to_string(garbage) + " is not inside the carrier");
  }
  if (!labels.empty()) {
    if (labels.size() != size) {
      throw StructuralError("expected " + std::to_string(size) + " labels, got " + std::to_string(labels.size()));
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty()) throw StructuralError("element labels must be nonempty");
      if (!seen.insert(l).second) throw StructuralError("duplicate element label '" + l + "'");
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->size = size;
  impl->unit = unit;
  impl->dot = std::move(dot_row_major);
  impl->garbage = garbage;
  impl->labels = std::move(labels);
  impl->orth_columns.assign(size, ElementSet{});
  for (Element b = 0; b < size; ++b) {
    for (Element a = 0; a < size; ++a) {
      if (garbage.contains(impl->dot[b * size + a])) impl->orth_columns[a].insert(b);
    }
  }
  impl_ = std::move(impl);
}

QStructure QStructure::from_table(Element unit, const std::vector<std::vector<Element>>& dot, ElementSet garbage,
                                  std::vector<std::string> labels) {
  const std::size_t n = dot.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (dot[r].size() != n) {
      throw StructuralError("dot table row " + std::to_string(r) + " has " + std::to_string(dot[r].size()) +
                            " entries, expected " + std::to_string(n));
    }
    flat.insert(flat.end(), dot[r].begin(), dot[r].end());
  }
  return QStructure(n, unit, std::move(flat), garbage, std::move(labels));
}

std::string QStructure::label(Element e) const {
  if (impl_->labels.empty()) return std::to_string(e);
  return impl_->labels.at(e);
}

std::optional<Element> QStructure::find_label(std::string_view label) const {
  for (Element e = 0; e < impl_->labels.size(); ++e) {
    if (impl_->labels[e] == label) return e;
  }
  return std::nullopt;
}

std::string QStructure::format(ElementSet s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    if (!first) out += ", ";
    out += label(e);
    first = false;
  });
  return out + "}";
}

bool operator==(const QStructure& a, const QStructure& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->size == b.impl_->size && a.impl_->unit == b.impl_->unit && a.impl_->garbage == b.impl_->garbage &&
         a.impl_->dot == b.impl_->dot;
}

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::UnitNeutrality:
      return "unit-neutrality";
    case Condition::Symmetry:
      return "symmetry";
    case Condition::Reversal:
      return "reversal";
  }
  return "unknown";
}

std::string Violation::describe(const QStructure& q) const {
  std::ostringstream os;
  os << condition_name(condition) << " at (";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << q.label(witness[i]);
  os << ")";
  switch (condition) {
    case Condition::UnitNeutrality:
      os << ": 1.x or x.1 differs from x";
      break;
    case Condition::Symmetry:
      os << ": x.y in Z but y.x not in Z, or vice versa";
      break;
    case Condition::Reversal:
      os << ": (x.y).z in Z differs from x.(z.y) in Z";
      break;
  }
  return os.str();
}

ValidationReport validate(const QStructure& q) {
  ValidationReport report;
  const auto n = static_cast<Element>(q.size());
  const Element u = q.unit();
  for (Element x = 0; x < n; ++x) {
    if (q.dot(u, x) != x || q.dot(x, u) != x) report.violations.push_back({Condition::UnitNeutrality, {x}});
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (q.in_garbage(q.dot(x, y)) != q.in_garbage(q.dot(y, x))) {
        report.violations.push_back({Condition::Symmetry, {x, y}});
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (q.in_garbage(q.dot(q.dot(x, y), z)) != q.in_garbage(q.dot(x, q.dot(z, y)))) {
          report.violations.push_back({Condition::Reversal, {x, y, z}});
        }
      }
    }
  }
  ElementSet products;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (q.in_garbage(q.dot(x, y))) products.insert(q.dot(x, y));
    }
  }
  report.garbage_is_orthogonal_products = products == q.garbage();
  return report;
}

bool satisfies_axioms(const QStructure& q) {
  const auto n = static_cast<Element>(q.size());
  const Element u = q.unit();
  for (Element x = 0; x < n; ++x) {
    if (q.dot(u, x) != x || q.dot(x, u) != x) return false;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (q.in_garbage(q.dot(x, y)) != q.in_garbage(q.dot(y, x))) return false;
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = q.dot(x, y);
      for (Element z = 0; z < n; ++z) {
        if (q.in_garbage(q.dot(xy, z)) != q.in_garbage(q.dot(x, q.dot(z, y)))) return false;
      }
    }
  }
  return true;
}

namespace {

void require_inside(const QStructure& q, ElementSet a, const char* op) {
  if (!a.is_subset_of(q.carrier())) {
    throw UsageError(std::string(op) + ": set " + to_string(a) + " is not inside the carrier");
  }
}

void require_same_structure(const Fact& f, const Fact& g, const char* op) {
  if (!(f.structure() == g.structure())) {
    throw UsageError(std::string(op) + ": arguments are facts of different Q-structures");
  }
}

}  // namespace

ElementSet orth(const QStructure& q, ElementSet a) {
  require_inside(q, a, "orth");
  ElementSet out = q.carrier();
  a.for_each([&](Element x) { out = out & q.orthogonal_to(x); });
  return out;
}

ElementSet biorth(const QStructure& q, ElementSet a) { return orth(q, orth(q, a)); }

bool is_fact(const QStructure& q, ElementSet a) { return biorth(q, a) == a; }

ElementSet dot_set(const QStructure& q, ElementSet a, ElementSet b) {
  require_inside(q, a, "dot_set");
  require_inside(q, b, "dot_set");
  ElementSet out;
  a.for_each([&](Element x) { b.for_each([&](Element y) { out.insert(q.dot(x, y)); }); });
  return out;
}

Fact Fact::from_set(const QStructure& q, ElementSet members) {
  if (!is_fact(q, members)) {
    throw UsageError("set " + q.format(members) + " is not a fact: its biorthogonal is " +
                     q.format(biorth(q, members)));
  }
  return Fact(q, members);
}

Fact Fact::orthogonal_of(const QStructure& q, ElementSet a) { return Fact(q, orth(q, a)); }

Fact Fact::closure_of(const QStructure& q, ElementSet a) { return Fact(q, biorth(q, a)); }

std::vector<Fact> all_facts(const QStructure& q) {
  std::unordered_set<std::uint64_t> closed{q.carrier().bits()};
  std::vector<std::uint64_t> snapshot;
  for (Element x = 0; x < q.size(); ++x) {
    const std::uint64_t generator = q.orthogonal_to(x).bits();
    if (closed.contains(generator)) continue;
    snapshot.assign(closed.begin(), closed.end());
    for (std::uint64_t f : snapshot) closed.insert(f & generator);
  }
  std::vector<std::uint64_t> sorted(closed.begin(), closed.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Fact> facts;
  facts.reserve(sorted.size());
  for (std::uint64_t bits : sorted) facts.push_back(Fact(q, ElementSet::from_bits(bits)));
  return facts;
}

Fact neg(const Fact& f) { return Fact::orthogonal_of(f.structure(), f.members()); }

Fact tensor(const Fact& f, const Fact& g) {
  require_same_structure(f, g, "tensor");
  const auto& q = f.structure();
  return Fact::closure_of(q, dot_set(q, f.members(), g.members()));
}

Fact par(const Fact& f, const Fact& g) {
  require_same_structure(f, g, "par");
  const auto& q = f.structure();
  return Fact::orthogonal_of(q, dot_set(q, orth(q, f.members()), orth(q, g.members())));
}

Fact limp(const Fact& f, const Fact& g) {
  require_same_structure(f, g, "limp");
  const auto& q = f.structure();
  return Fact::orthogonal_of(q, dot_set(q, f.members(), orth(q, g.members())));
}

Fact with_(const Fact& f, const Fact& g) {
  require_same_structure(f, g, "with");
  return Fact(f.structure(), f.members() & g.members());
}

Fact plus(const Fact& f, const Fact& g) {
  require_same_structure(f, g, "plus");
  return Fact::closure_of(f.structure(), f.members() | g.members());
}

Fact one_fact(const QStructure& q) { return Fact::orthogonal_of(q, q.garbage()); }
Fact zero_fact(const QStructure& q) { return Fact::orthogonal_of(q, q.carrier()); }
Fact top_fact(const QStructure& q) { return Fact::orthogonal_of(q, ElementSet{}); }
Fact z_fact(const QStructure& q) { return Fact::orthogonal_of(q, ElementSet{q.unit()}); }

bool is_valid_fact(const Fact& f) {
  const auto& q = f.structure();
  const bool has_unit = f.contains(q.unit());
  const bool contains_one = one_fact(q).is_subset_of(f);
  const bool orth_in_garbage = orth(q, f.members()).is_subset_of(q.garbage());
  if (has_unit != contains_one || has_unit != orth_in_garbage) {
    throw std::logic_error("validity characterizations disagree on " + q.format(f.members()));
  }
  return has_unit;
}

bool is_projective(const QStructure& q) {
  const auto n = static_cast<Element>(q.size());
  bool absorbs = true;
  q.garbage().for_each([&](Element z) {
    for (Element y = 0; y < n && absorbs; ++y) absorbs = q.in_garbage(q.dot(z, y));
  });
  return absorbs;
}

}  // namespace qlogic
