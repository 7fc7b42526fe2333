#include "rotayb/scalar.hpp"

#include "rotayb/error.hpp"

#include <cctype>
#include <sstream>

namespace rotayb {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty())
    return false;
  std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size())
    return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

void check_size(const Vector &a, const Vector &b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch,
                "vector lengths " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
}

} // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+')
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Scalar q(mpz_class(n, 10), d);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar &value) {
  if (value.get_den() == 1)
    return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v(n, Scalar(0));
  v.at(index) = 1;
  return v;
}

bool is_zero(const Vector &v) {
  for (const auto &x : v)
    if (x != 0)
      return false;
  return true;
}

Vector &operator+=(Vector &a, const Vector &b) {
  check_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += b[i];
  return a;
}

Vector &operator-=(Vector &a, const Vector &b) {
  check_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] -= b[i];
  return a;
}

Vector operator+(const Vector &a, const Vector &b) {
  Vector out = a;
  out += b;
  return out;
}

Vector operator-(const Vector &a, const Vector &b) {
  Vector out = a;
  out -= b;
  return out;
}

Vector operator-(const Vector &a) {
  Vector out = a;
  for (auto &x : out)
    x = -x;
  return out;
}

Vector operator*(const Scalar &c, const Vector &v) {
  Vector out = v;
  for (auto &x : out)
    x *= c;
  return out;
}

void add_scaled(Vector &a, const Scalar &c, const Vector &b) {
  check_size(a, b);
  if (c == 0)
    return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0)
      a[i] += c * b[i];
}

std::string format_vector(const Vector &v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out << ", ";
    out << format_scalar(v[i]);
  }
  out << ')';
  return out.str();
}

} // namespace rotayb
