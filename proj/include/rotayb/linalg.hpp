#pragma once

#include "rotayb/matrix.hpp"
#include "rotayb/scalar.hpp"

#include <optional>
#include <vector>

namespace rotayb {

/// Subspace of F^n stored as the nonzero rows of its reduced row-echelon
/// basis. The representation is canonical, so equal subspaces compare equal.
class Subspace {
public:
  Subspace() = default;
  /// Zero subspace of F^ambient.
  explicit Subspace(std::size_t ambient);

  /// Span of the given vectors (any number, possibly dependent).
  static Subspace span(std::size_t ambient, const std::vector<Vector> &vectors);
  static Subspace full(std::size_t ambient);
  /// Row space of m.
  static Subspace row_space(const Matrix &m);
  /// Column space of m.
  static Subspace column_space(const Matrix &m);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }

  /// Echelon basis, one vector per row.
  const Matrix &basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const;
  /// Column index of the leading 1 in each basis row.
  const std::vector<std::size_t> &pivots() const noexcept { return pivots_; }
  /// Coordinates not occupied by a pivot, ascending.
  std::vector<std::size_t> non_pivots() const;

  bool contains(const Vector &v) const;
  bool contains(const Subspace &other) const;

  /// v minus its components along the pivot rows; zero iff v is in the space.
  Vector reduce(const Vector &v) const;

  friend bool operator==(const Subspace &a, const Subspace &b) = default;

private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace &a, const Subspace &b);
Subspace intersect(const Subspace &a, const Subspace &b);
/// Image of a subspace under a linear map (columns-are-images convention).
Subspace image(const Matrix &map, const Subspace &s);
/// True when a ∩ b = 0.
bool independent(const std::vector<Subspace> &parts);

/// Reduced row-echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix &m);
std::size_t rank(Matrix m);

/// Some x with a·x = b, or nullopt for an inconsistent system.
std::optional<Vector> solve(const Matrix &a, const Vector &b);
/// {x : a·x = 0}.
Subspace kernel(const Matrix &a);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix &a);

/// Coefficients c_0..c_n of det(t·I - a) (lowest degree first, c_n = 1).
std::vector<Scalar> char_poly(const Matrix &a);
/// Rational roots of a polynomial (coefficients lowest degree first),
/// deduplicated and ascending.
std::vector<Scalar> rational_roots(const std::vector<Scalar> &poly);

struct EigenBlock {
  Scalar eigenvalue;
  Subspace space;
};

/// Generalized eigenspaces ker((a - αI)^n) for each rational root α of the
/// characteristic polynomial, in ascending order of α.
/// Throws Error(NonRationalSpectrum) when they do not fill the whole space.
std::vector<EigenBlock> rational_eigen_decomposition(const Matrix &a);

} // namespace rotayb
