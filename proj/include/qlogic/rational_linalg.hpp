#pragma once

// Exact linear algebra over the rationals: subspaces of Q^d in canonical
// reduced row-echelon form, orthogonal projection of one subspace onto
// another, and orthogonal complements under the standard inner product.
//
// Projection of a subspace A onto B is computed basis-wise: A . B is the span
// of the projections of A's basis vectors. Projection is linear, so this
// equals the set of projections of all vectors of A.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/random.hpp"

namespace qlogic {

using Rational = boost::multiprecision::cpp_rational;

struct RationalVector {
  std::vector<Rational> coords;

  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords(dim) {}
  explicit RationalVector(std::vector<Rational> c) : coords(std::move(c)) {}
  RationalVector(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  bool is_zero() const;

  friend bool operator==(const RationalVector&, const RationalVector&) = default;
};

Rational inner(const RationalVector& a, const RationalVector& b);

/// Parses "1/2,-3,0". Throws ParseError.
RationalVector parse_vector(std::string_view text);
std::string to_string(const RationalVector& v);

/// A subspace of Q^d. The basis is kept in reduced row-echelon form with
/// leading coefficients 1, so equal subspaces have identical representations.
class Subspace {
 public:
  /// The zero subspace of Q^d.
  explicit Subspace(std::size_t ambient_dim) : dim_(ambient_dim) {}
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend Subspace span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors);

  std::size_t dim_;
  std::vector<RationalVector> basis_;
};

/// Throws UsageError when a vector's dimension differs from ambient_dim.
Subspace span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors);

RationalVector project_vector(const RationalVector& v, const Subspace& target);
/// A . B: the projection of a onto b.
Subspace project_subspace(const Subspace& a, const Subspace& b);
Subspace ortho_complement(const Subspace& a);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_meet(const Subspace& a, const Subspace& b);
bool is_zero(const Subspace& a);
bool contains(const Subspace& a, const RationalVector& v);
bool contains(const Subspace& a, const Subspace& b);
bool is_orthogonal(const Subspace& a, const Subspace& b);

/// Parses "1,0;0,1" (semicolon-separated vectors). An empty string is the zero
/// subspace of Q^ambient_dim; ambient_dim may be 0 to infer it from the vectors.
Subspace parse_subspace(std::string_view text, std::size_t ambient_dim = 0);
std::string to_string(const Subspace& s);

/// Rank uniform in [0, d]; rank x d matrix entries n/m with n in [-9, 9] and
/// m in [1, 9]; redrawn until the rows are independent.
Subspace random_subspace(std::size_t ambient_dim, Rng& rng);

}  // namespace qlogic
