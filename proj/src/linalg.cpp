#include "rotayb/linalg.hpp"

#include "rotayb/error.hpp"

#include <algorithm>

namespace rotayb {

std::vector<std::size_t> rref(Matrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c) == 0)
      ++p;
    if (p == m.rows())
      continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k)
        std::swap(m(p, k), m(lead_row, k));
    const Scalar inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k)
      m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0)
        continue;
      const Scalar factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (m(lead_row, k) != 0)
          m(r, k) -= factor * m(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::row_space(const Matrix &m) {
  Matrix reduced = m;
  auto pivots = rref(reduced);
  Subspace s(m.cols());
  s.basis_ = Matrix(pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      s.basis_(r, c) = reduced(r, c);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector> &vectors) {
  if (vectors.empty())
    return Subspace(ambient);
  return row_space(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::full(std::size_t ambient) {
  return row_space(Matrix::identity(ambient));
}

Subspace Subspace::column_space(const Matrix &m) { return row_space(m.transpose()); }

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r)
    out.push_back(basis_.row(r));
  return out;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      ++next;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vector Subspace::reduce(const Vector &v) const {
  if (v.size() != ambient_)
    throw Error(ErrorCode::DimensionMismatch, "vector of length " + std::to_string(v.size()) +
                                                  " in ambient dimension " +
                                                  std::to_string(ambient_));
  Vector out = v;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Scalar c = out[pivots_[r]];
    if (c == 0)
      continue;
    auto row = basis_.row_span(r);
    for (std::size_t k = 0; k < ambient_; ++k)
      if (row[k] != 0)
        out[k] -= c * row[k];
  }
  return out;
}

bool Subspace::contains(const Vector &v) const { return rotayb::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace &other) const {
  if (other.ambient_ != ambient_)
    throw Error(ErrorCode::DimensionMismatch, "subspaces of different ambient spaces");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r)))
      return false;
  return true;
}

Subspace operator+(const Subspace &a, const Subspace &b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "sum of subspaces of different ambient spaces");
  return Subspace::row_space(vconcat(a.basis(), b.basis()));
}

Subspace intersect(const Subspace &a, const Subspace &b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "intersection of subspaces of different ambient spaces");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero())
    return Subspace(n);
  // Solve sum_i x_i a_i = sum_j y_j b_j; the a-part of each solution spans the meet.
  Matrix system = hconcat(a.basis().transpose(), -b.basis().transpose());
  Subspace sols = kernel(system);
  std::vector<Vector> meet;
  for (const auto &s : sols.basis_vectors()) {
    Vector x(n, Scalar(0));
    for (std::size_t i = 0; i < a.dim(); ++i)
      add_scaled(x, s[i], a.basis().row(i));
    meet.push_back(std::move(x));
  }
  return Subspace::span(n, meet);
}

Subspace image(const Matrix &map, const Subspace &s) {
  if (map.cols() != s.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "image: map domain does not match subspace");
  std::vector<Vector> images;
  for (const auto &v : s.basis_vectors())
    images.push_back(map.apply(v));
  return Subspace::span(map.rows(), images);
}

bool independent(const std::vector<Subspace> &parts) {
  if (parts.empty())
    return true;
  std::size_t total = 0;
  Subspace sum(parts.front().ambient_dim());
  for (const auto &p : parts) {
    total += p.dim();
    sum = sum + p;
  }
  return sum.dim() == total;
}

std::optional<Vector> solve(const Matrix &a, const Vector &b) {
  if (a.rows() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "solve: right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols())
    return std::nullopt;
  Vector x(a.cols(), Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug(r, a.cols());
  return x;
}

Subspace kernel(const Matrix &a) {
  Matrix reduced = a;
  auto pivots = rref(reduced);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vector v(a.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(a.cols(), basis);
}

std::optional<Matrix> inverse(const Matrix &a) {
  if (!a.is_square())
    throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug = hconcat(a, Matrix::identity(n));
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<Scalar> char_poly(const Matrix &a) {
  if (!a.is_square())
    throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = a.rows();
  std::vector<Scalar> coeffs(n + 1, Scalar(0));
  coeffs[n] = 1;
  Matrix m = Matrix::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) += coeffs[n - k + 1];
    coeffs[n - k] = -trace(a * m) / Scalar(static_cast<long>(k));
  }
  return coeffs;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class value) {
  if (value < 0)
    value = -value;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= value; ++d) {
    if (value % d != 0)
      continue;
    small.push_back(d);
    if (d * d != value)
      large.push_back(value / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Scalar evaluate(const std::vector<Scalar> &poly, const Scalar &x) {
  Scalar acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

} // namespace

std::vector<Scalar> rational_roots(const std::vector<Scalar> &poly) {
  std::vector<Scalar> p = poly;
  while (!p.empty() && p.back() == 0)
    p.pop_back();
  if (p.size() <= 1)
    return {};

  // Clear denominators so the rational root theorem applies.
  mpz_class lcm = 1;
  for (const auto &c : p)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto &c : p) {
    Scalar scaled = c * lcm;
    ints.push_back(scaled.get_num());
  }

  std::vector<Scalar> roots;
  std::size_t low = 0;
  while (ints[low] == 0)
    ++low;
  if (low > 0)
    roots.emplace_back(0);
  if (low + 1 < ints.size()) {
    auto nums = positive_divisors(ints[low]);
    auto dens = positive_divisors(ints.back());
    for (const auto &q : dens)
      for (const auto &num : nums)
        for (int sign : {1, -1}) {
          Scalar cand(num * sign, q);
          cand.canonicalize();
          if (evaluate(p, cand) == 0)
            roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<EigenBlock> rational_eigen_decomposition(const Matrix &a) {
  if (!a.is_square())
    throw Error(ErrorCode::DimensionMismatch, "eigen decomposition of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<EigenBlock> blocks;
  std::size_t total = 0;
  for (const auto &alpha : rational_roots(char_poly(a))) {
    Matrix shifted = a - alpha * Matrix::identity(n);
    Subspace space = kernel(power(shifted, static_cast<unsigned>(n)));
    total += space.dim();
    blocks.push_back({alpha, std::move(space)});
  }
  if (total < n)
    throw Error(ErrorCode::NonRationalSpectrum,
                "rational generalized eigenspaces cover dimension " + std::to_string(total) +
                    " of " + std::to_string(n));
  return blocks;
}

} // namespace rotayb
