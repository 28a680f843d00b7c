#include "qlogic/rational_linalg.hpp"

#include <sstream>

#include "qlogic/errors.hpp"

namespace qlogic {

namespace {

void require_dim(std::size_t expected, std::size_t got, const char* op) {
  if (expected != got) {
    throw UsageError(std::string(op) + ": dimension mismatch (" + std::to_string(expected) + " vs " +
                     std::to_string(got) + ")");
  }
}

/// In-place reduced row-echelon form; zero rows are dropped.
std::vector<RationalVector> rref(std::vector<RationalVector> rows, std::size_t dim) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < dim && pivot_row < rows.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < rows.size() && rows[found].coords[col] == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    const Rational lead = rows[pivot_row].coords[col];
    for (auto& c : rows[pivot_row].coords) c /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r].coords[col] == 0) continue;
      const Rational factor = rows[r].coords[col];
      for (std::size_t k = col; k < dim; ++k) rows[r].coords[k] -= factor * rows[pivot_row].coords[k];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::size_t pivot_of(const RationalVector& row) {
  for (std::size_t k = 0; k < row.dim(); ++k) {
    if (row.coords[k] != 0) return k;
  }
  return row.dim();
}

Rational parse_rational(std::string_view token, std::size_t offset) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  token = trim(token);
  auto parse_int = [&](std::string_view s) -> boost::multiprecision::cpp_int {
    s = trim(s);
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
    if (i == s.size()) throw ParseError("expected an integer in '" + std::string(token) + "'", offset);
    boost::multiprecision::cpp_int value = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("bad digit in '" + std::string(token) + "'", offset);
      value = value * 10 + (s[i] - '0');
    }
    return negative ? -value : value;
  };
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(token));
  const auto den = parse_int(token.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(token) + "'", offset);
  return Rational(parse_int(token.substr(0, slash)), den);
}

}  // namespace

bool RationalVector::is_zero() const {
  for (const auto& c : coords) {
    if (c != 0) return false;
  }
  return true;
}

Rational inner(const RationalVector& a, const RationalVector& b) {
  require_dim(a.dim(), b.dim(), "inner");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a.coords[i] * b.coords[i];
  return sum;
}

RationalVector parse_vector(std::string_view text) {
  RationalVector v;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    v.coords.push_back(parse_rational(token, start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return v;
}

std::string to_string(const RationalVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v.coords[i];
  os << ")";
  return os.str();
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    RationalVector e(ambient_dim);
    e.coords[i] = 1;
    rows.push_back(std::move(e));
  }
  return span(ambient_dim, rows);
}

Subspace span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors) {
  for (const auto& v : vectors) require_dim(ambient_dim, v.dim(), "span");
  Subspace s(ambient_dim);
  s.basis_ = rref(vectors, ambient_dim);
  return s;
}

RationalVector project_vector(const RationalVector& v, const Subspace& target) {
  require_dim(target.ambient_dim(), v.dim(), "project_vector");
  const auto& basis = target.basis();
  const std::size_t k = basis.size();
  // Gram system G c = r, solved by Gauss-Jordan on the augmented matrix.
  std::vector<RationalVector> system;
  for (std::size_t i = 0; i < k; ++i) {
    RationalVector row(k + 1);
    for (std::size_t j = 0; j < k; ++j) row.coords[j] = inner(basis[i], basis[j]);
    row.coords[k] = inner(v, basis[i]);
    system.push_back(std::move(row));
  }
  const auto solved = rref(std::move(system), k + 1);
  RationalVector out(v.dim());
  for (std::size_t i = 0; i < k; ++i) {
    const Rational& c = solved[i].coords[k];
    if (c == 0) continue;
    for (std::size_t d = 0; d < v.dim(); ++d) out.coords[d] += c * basis[i].coords[d];
  }
  return out;
}

Subspace project_subspace(const Subspace& a, const Subspace& b) {
  require_dim(a.ambient_dim(), b.ambient_dim(), "project_subspace");
  std::vector<RationalVector> images;
  for (const auto& u : a.basis()) images.push_back(project_vector(u, b));
  return span(a.ambient_dim(), images);
}

Subspace ortho_complement(const Subspace& a) {
  const std::size_t d = a.ambient_dim();
  std::vector<bool> is_pivot(d, false);
  std::vector<std::size_t> pivots;
  for (const auto& row : a.basis()) {
    pivots.push_back(pivot_of(row));
    is_pivot[pivots.back()] = true;
  }
  std::vector<RationalVector> null_basis;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(d);
    v.coords[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v.coords[pivots[i]] = -a.basis()[i].coords[free];
    null_basis.push_back(std::move(v));
  }
  return span(d, null_basis);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_dim(a.ambient_dim(), b.ambient_dim(), "subspace_sum");
  auto rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return span(a.ambient_dim(), rows);
}

Subspace subspace_meet(const Subspace& a, const Subspace& b) {
  return ortho_complement(subspace_sum(ortho_complement(a), ortho_complement(b)));
}

bool is_zero(const Subspace& a) { return a.rank() == 0; }

bool contains(const Subspace& a, const RationalVector& v) {
  require_dim(a.ambient_dim(), v.dim(), "contains");
  RationalVector rest = v;
  for (const auto& row : a.basis()) {
    const Rational c = rest.coords[pivot_of(row)];
    if (c == 0) continue;
    for (std::size_t k = 0; k < rest.dim(); ++k) rest.coords[k] -= c * row.coords[k];
  }
  return rest.is_zero();
}

bool contains(const Subspace& a, const Subspace& b) {
  for (const auto& v : b.basis()) {
    if (!contains(a, v)) return false;
  }
  return true;
}

bool is_orthogonal(const Subspace& a, const Subspace& b) {
  require_dim(a.ambient_dim(), b.ambient_dim(), "is_orthogonal");
  for (const auto& u : a.basis()) {
    for (const auto& v : b.basis()) {
      if (inner(u, v) != 0) return false;
    }
  }
  return true;
}

Subspace parse_subspace(std::string_view text, std::size_t ambient_dim) {
  std::vector<RationalVector> vectors;
  std::size_t start = 0;
  const bool blank = text.find_first_not_of(" \t") == std::string_view::npos;
  while (!blank) {
    const auto semi = text.find(';', start);
    auto part = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    if (part.find_first_not_of(" \t") != std::string_view::npos) {
      try {
        vectors.push_back(parse_vector(part));
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad vector '") + std::string(part) + "'", start + e.position());
      }
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (ambient_dim == 0) {
    if (vectors.empty()) throw ParseError("cannot infer the dimension of an empty subspace", 0);
    ambient_dim = vectors.front().dim();
  }
  return span(ambient_dim, vectors);
}

std::string to_string(const Subspace& s) {
  std::string out = "span[";
  for (std::size_t i = 0; i < s.rank(); ++i) out += (i ? ", " : "") + to_string(s.basis()[i]);
  return out + "] in Q^" + std::to_string(s.ambient_dim());
}

Subspace random_subspace(std::size_t ambient_dim, Rng& rng) {
  const auto rank = static_cast<std::size_t>(rng.below(ambient_dim + 1));
  while (true) {
    std::vector<RationalVector> rows;
    for (std::size_t r = 0; r < rank; ++r) {
      RationalVector row(ambient_dim);
      for (auto& c : row.coords) c = Rational(rng.between(-9, 9), rng.between(1, 9));
      rows.push_back(std::move(row));
    }
    Subspace s = span(ambient_dim, rows);
    if (s.rank() == rank) return s;
  }
}

}  // namespace qlogic
