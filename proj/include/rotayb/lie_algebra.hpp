#pragma once

#include "rotayb/linalg.hpp"
#include "rotayb/matrix.hpp"
#include "rotayb/scalar.hpp"

#include <string>
#include <vector>

namespace rotayb {

/// Unvalidated bracket table: entry (i, j) is the coordinate column of
/// [e_i, e_j]. Used as construction input and as the subject of validate().
class BracketTable {
public:
  explicit BracketTable(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const Vector &get(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  /// Sets [e_i, e_j] only.
  void set(std::size_t i, std::size_t j, Vector value);
  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_antisymmetric(std::size_t i, std::size_t j, const Vector &value);

private:
  std::size_t dim_;
  std::vector<Vector> table_;
};

struct Violation {
  enum class Kind { Antisymmetry, Jacobi };
  Kind kind;
  std::size_t i, j, k; // k unused for antisymmetry
  Vector value;        // [e_i,e_j] + [e_j,e_i], or the Jacobiator
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Every antisymmetry violation (i <= j) and every Jacobi violation on
/// triples i < j < k of the raw table.
ValidationReport validate(const BracketTable &table);

/// Finite-dimensional Lie algebra given by structure constants. Only
/// brackets [e_i, e_j] with i < j are stored; the rest follow by sign, so
/// antisymmetry is structural. Jacobi is checked on construction.
class LieAlgebra {
public:
  LieAlgebra() = default;

  /// Throws Error(InvalidAlgebra) listing the first violation if the table
  /// fails validate().
  LieAlgebra(std::vector<std::string> labels, const BracketTable &table);

  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string> &labels() const noexcept { return labels_; }

  /// [e_i, e_j].
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector &x, const Vector &y) const;

  /// Matrix of ad x = [x, -].
  Matrix ad(const Vector &x) const;
  /// Matrix of ad e_i.
  Matrix ad_basis(std::size_t i) const;

  BracketTable table() const;

  friend bool operator==(const LieAlgebra &, const LieAlgebra &) = default;

private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::vector<std::string> labels_;
  std::vector<Vector> upper_; // [e_i, e_j] for i < j, row-major over pairs
};

ValidationReport validate(const LieAlgebra &algebra);

/// Z(L) as the common kernel of all ad e_i.
Subspace center(const LieAlgebra &algebra);
/// [L, L].
Subspace derived_subalgebra(const LieAlgebra &algebra);
/// Smallest ideal containing s.
Subspace ideal_closure(const LieAlgebra &algebra, const Subspace &s);
bool is_ideal(const LieAlgebra &algebra, const Subspace &s);
/// Span of [x, y] for x in a, y in b.
Subspace bracket_span(const LieAlgebra &algebra, const Subspace &a, const Subspace &b);

/// Block-diagonal sum; labels of the second summand get a "'" suffix when
/// they collide with the first.
LieAlgebra direct_sum(const LieAlgebra &first, const LieAlgebra &second);

/// L / I with the complement spanned by the non-pivot coordinates of the
/// ideal's echelon basis.
struct QuotientAlgebra {
  LieAlgebra parent;
  Subspace ideal;
  Matrix section;    // dim(L) x dim(Q): coset representatives as columns
  LieAlgebra algebra; // bracket on the complement basis
  Matrix projection; // dim(Q) x dim(L)
};

/// Throws Error(NotAnIdeal) when `ideal` is not an ideal of the algebra.
QuotientAlgebra quotient(const LieAlgebra &algebra, const Subspace &ideal);

/// Operator induced on L/I by op. Throws Error(NotInvariant) when op does not
/// map the ideal into itself.
Matrix induce_operator(const QuotientAlgebra &q, const Matrix &op);

} // namespace rotayb
