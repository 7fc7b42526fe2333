#include "rotayb/lie_algebra.hpp"

#include "rotayb/error.hpp"

#include <set>

namespace rotayb {

BracketTable::BracketTable(std::size_t dim)
    : dim_(dim), table_(dim * dim, zero_vector(dim)) {}

void BracketTable::set(std::size_t i, std::size_t j, Vector value) {
  if (i >= dim_ || j >= dim_ || value.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "bracket table entry out of range");
  table_[i * dim_ + j] = std::move(value);
}

void BracketTable::set_antisymmetric(std::size_t i, std::size_t j, const Vector &value) {
  set(i, j, value);
  set(j, i, -value);
}

namespace {

// [e_a, v] through the raw table.
Vector raw_bracket(const BracketTable &t, std::size_t a, const Vector &v) {
  Vector out = zero_vector(t.dim());
  for (std::size_t m = 0; m < t.dim(); ++m)
    if (v[m] != 0)
      add_scaled(out, v[m], t.get(a, m));
  return out;
}

std::string describe(const Violation &v, const std::vector<std::string> &labels) {
  auto name = [&](std::size_t i) {
    return i < labels.size() ? labels[i] : std::to_string(i);
  };
  if (v.kind == Violation::Kind::Antisymmetry)
    return "antisymmetry fails at (" + name(v.i) + ", " + name(v.j) + ")";
  return "Jacobi identity fails at (" + name(v.i) + ", " + name(v.j) + ", " + name(v.k) + ")";
}

} // namespace

ValidationReport validate(const BracketTable &t) {
  ValidationReport report;
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector sum = t.get(i, j) + t.get(j, i);
      if (!is_zero(sum))
        report.violations.push_back({Violation::Kind::Antisymmetry, i, j, 0, std::move(sum)});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector jac = raw_bracket(t, i, t.get(j, k));
        jac += raw_bracket(t, j, t.get(k, i));
        jac += raw_bracket(t, k, t.get(i, j));
        if (!is_zero(jac))
          report.violations.push_back({Violation::Kind::Jacobi, i, j, k, std::move(jac)});
      }
  return report;
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, const BracketTable &table)
    : labels_(std::move(labels)) {
  const std::size_t n = table.dim();
  if (labels_.size() != n)
    throw Error(ErrorCode::DimensionMismatch, std::to_string(labels_.size()) +
                                                  " basis labels for dimension " +
                                                  std::to_string(n));
  auto report = validate(table);
  if (!report.ok())
    throw Error(ErrorCode::InvalidAlgebra,
                describe(report.violations.front(), labels_) + " (" +
                    std::to_string(report.violations.size()) + " violation(s) in total)");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      upper_.push_back(table.get(i, j));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i)
    labels.push_back("z" + std::to_string(i));
  return LieAlgebra(std::move(labels), BracketTable(dim));
}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
  // Row-major enumeration of pairs i < j.
  const std::size_t n = dim();
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim())
    throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  if (i == j)
    return zero_vector(dim());
  if (i < j)
    return upper_[pair_index(i, j)];
  return -upper_[pair_index(j, i)];
}

Vector LieAlgebra::bracket(const Vector &x, const Vector &y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "bracket of vectors of length " + std::to_string(x.size()) + " and " +
                    std::to_string(y.size()) + " in dimension " + std::to_string(n));
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar c = x[i] * y[j] - x[j] * y[i];
      if (c != 0)
        add_scaled(out, c, upper_[pair_index(i, j)]);
    }
  return out;
}

Matrix LieAlgebra::ad(const Vector &x) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    m.set_column(j, bracket(x, unit_vector(dim(), j)));
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vector(dim(), i)); }

BracketTable LieAlgebra::table() const {
  BracketTable t(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      t.set_antisymmetric(i, j, upper_[pair_index(i, j)]);
  return t;
}

ValidationReport validate(const LieAlgebra &algebra) { return validate(algebra.table()); }

Subspace center(const LieAlgebra &algebra) {
  const std::size_t n = algebra.dim();
  // z is central iff [z, e_i] = -ad(e_i) z = 0 for every i.
  Matrix stacked(0, n);
  for (std::size_t i = 0; i < n; ++i)
    stacked = vconcat(stacked, algebra.ad_basis(i));
  return kernel(stacked);
}

Subspace derived_subalgebra(const LieAlgebra &algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      brackets.push_back(algebra.basis_bracket(i, j));
  return Subspace::span(n, brackets);
}

Subspace bracket_span(const LieAlgebra &algebra, const Subspace &a, const Subspace &b) {
  std::vector<Vector> brackets;
  for (const auto &x : a.basis_vectors())
    for (const auto &y : b.basis_vectors())
      brackets.push_back(algebra.bracket(x, y));
  return Subspace::span(algebra.dim(), brackets);
}

Subspace ideal_closure(const LieAlgebra &algebra, const Subspace &s) {
  const std::size_t n = algebra.dim();
  if (s.ambient_dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension differs from algebra");
  Subspace current = s;
  const Subspace whole = Subspace::full(n);
  while (true) {
    Subspace next = current + bracket_span(algebra, current, whole);
    if (next.dim() == current.dim())
      return current;
    current = std::move(next);
  }
}

bool is_ideal(const LieAlgebra &algebra, const Subspace &s) {
  const std::size_t n = algebra.dim();
  if (s.ambient_dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension differs from algebra");
  for (const auto &x : s.basis_vectors())
    for (std::size_t i = 0; i < n; ++i)
      if (!s.contains(algebra.bracket(x, unit_vector(n, i))))
        return false;
  return true;
}

LieAlgebra direct_sum(const LieAlgebra &first, const LieAlgebra &second) {
  const std::size_t n1 = first.dim(), n2 = second.dim(), n = n1 + n2;
  std::vector<std::string> labels = first.labels();
  std::set<std::string> taken(labels.begin(), labels.end());
  for (auto label : second.labels()) {
    while (taken.count(label))
      label += "'";
    taken.insert(label);
    labels.push_back(label);
  }
  BracketTable t(n);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = i + 1; j < n1; ++j) {
      Vector v = zero_vector(n);
      auto b = first.basis_bracket(i, j);
      std::copy(b.begin(), b.end(), v.begin());
      t.set_antisymmetric(i, j, v);
    }
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = i + 1; j < n2; ++j) {
      Vector v = zero_vector(n);
      auto b = second.basis_bracket(i, j);
      std::copy(b.begin(), b.end(), v.begin() + static_cast<std::ptrdiff_t>(n1));
      t.set_antisymmetric(n1 + i, n1 + j, v);
    }
  return LieAlgebra(std::move(labels), t);
}

QuotientAlgebra quotient(const LieAlgebra &algebra, const Subspace &ideal) {
  if (!is_ideal(algebra, ideal))
    throw Error(ErrorCode::NotAnIdeal, "subspace of dimension " + std::to_string(ideal.dim()) +
                                           " is not closed under brackets with L");
  const std::size_t n = algebra.dim();
  const auto complement = ideal.non_pivots();
  const std::size_t q = complement.size();

  Matrix section(n, q);
  for (std::size_t a = 0; a < q; ++a)
    section(complement[a], a) = 1;

  Matrix projection(q, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vector reduced = ideal.reduce(unit_vector(n, c));
    for (std::size_t a = 0; a < q; ++a)
      projection(a, c) = reduced[complement[a]];
  }

  std::vector<std::string> labels;
  for (auto c : complement)
    labels.push_back(algebra.labels()[c]);
  BracketTable t(q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      t.set_antisymmetric(
          a, b, projection.apply(algebra.basis_bracket(complement[a], complement[b])));

  return {algebra, ideal, std::move(section), LieAlgebra(std::move(labels), t),
          std::move(projection)};
}

Matrix induce_operator(const QuotientAlgebra &q, const Matrix &op) {
  const std::size_t n = q.parent.dim();
  if (op.rows() != n || op.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "operator does not act on the parent algebra");
  if (!q.ideal.contains(image(op, q.ideal)))
    throw Error(ErrorCode::NotInvariant, "operator does not map the ideal into itself");
  return q.projection * op * q.section;
}

} // namespace rotayb
