#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace rotayb {

/// Exact rational number. GMP keeps mpq_class values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Coordinate column of an element of an n-dimensional space.
using Vector = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q" into a canonical rational.
/// Throws Error(ParseError) on malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when q == 1.
std::string format_scalar(const Scalar &value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(const Vector &v);

Vector operator+(const Vector &a, const Vector &b);
Vector operator-(const Vector &a, const Vector &b);
Vector operator-(const Vector &a);
Vector operator*(const Scalar &c, const Vector &v);
Vector &operator+=(Vector &a, const Vector &b);
Vector &operator-=(Vector &a, const Vector &b);

/// a += c * b without materialising the product.
void add_scaled(Vector &a, const Scalar &c, const Vector &b);

std::string format_vector(const Vector &v);

} // namespace rotayb
