#include "eskel/rational.hpp"

#include <cctype>

#include "eskel/error.hpp"

namespace eskel {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t bit_length(const mpz_class& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

}  // namespace

Scalar parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw MalformedInput("malformed rational literal '" + std::string(text) + "'");
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw MalformedInput("zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

std::string to_compact_string(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].get_str();
  }
  return out;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

std::size_t encoding_length(const Scalar& value) {
  mpz_class num = abs(value.get_num());
  return 1 + bit_length(num) + bit_length(value.get_den());
}

std::size_t encoding_length(const Vector& v) {
  std::size_t total = 0;
  for (const auto& x : v) total += encoding_length(x);
  return total;
}

Vector zeros(std::size_t dimension) { return Vector(dimension, Scalar(0)); }

Vector unit_vector(std::size_t dimension, std::size_t index) {
  Vector e = zeros(dimension);
  e.at(index) = 1;
  return e;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw MalformedInput("dot: dimension mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw MalformedInput("add: dimension mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw MalformedInput("sub: dimension mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scaled(const Vector& v, const Scalar& factor) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
  return out;
}

Vector add_scaled(const Vector& a, const Scalar& factor, const Vector& b) {
  if (a.size() != b.size()) throw MalformedInput("add_scaled: dimension mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += factor * b[i];
  return out;
}

Vector negated(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

bool is_integral(const Vector& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

void require_dimension(const Vector& v, std::size_t dimension, std::string_view what) {
  if (v.size() != dimension)
    throw MalformedInput(std::string(what) + ": expected dimension " + std::to_string(dimension) +
                         ", got " + std::to_string(v.size()));
}

}  // namespace eskel
