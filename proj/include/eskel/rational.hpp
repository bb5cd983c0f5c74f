#pragma once

// Exact scalars and dense vectors over the rationals.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace eskel {

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
using Scalar = mpq_class;
/// Point, objective, or direction in R^d with exact coordinates.
using Vector = std::vector<Scalar>;
/// Row-major dense matrix.
using Matrix = std::vector<Vector>;

/// Parses "p/q" or "p" (optional sign, decimal digits, q > 0). Throws MalformedInput.
Scalar parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& value);
/// Comma separated coordinates without spaces, e.g. "1,-1/2".
std::string to_compact_string(const Vector& v);
/// Human readable tuple, e.g. "(1, -1/2)".
std::string to_string(const Vector& v);

/// Bit size of a rational: 1 + bits(|p|) + bits(q).
std::size_t encoding_length(const Scalar& value);
/// Sum of the coordinate encoding lengths.
std::size_t encoding_length(const Vector& v);

Vector zeros(std::size_t dimension);
Vector unit_vector(std::size_t dimension, std::size_t index);

Scalar dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Scalar& factor);
/// a + factor * b
Vector add_scaled(const Vector& a, const Scalar& factor, const Vector& b);
Vector negated(const Vector& v);
bool is_zero(const Vector& v);
bool is_integral(const Vector& v);

/// Throws MalformedInput unless |v| == dimension.
void require_dimension(const Vector& v, std::size_t dimension, std::string_view what);

}  // namespace eskel
