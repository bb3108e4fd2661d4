#pragma once

#include "chpos/rational.hpp"

#include <optional>
#include <vector>

namespace chpos::linalg {

using Vector = std::vector<Rational>;
/// Row-major; every row has the same length.
using Matrix = std::vector<Vector>;

Matrix transpose(const Matrix& a, std::size_t cols);

std::size_t rank(Matrix a);

/// Some x with a*x == b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b, std::size_t cols);

/// Basis of {x : a*x == 0}.
Matrix nullspace(const Matrix& a, std::size_t cols);

/// Throws ParameterError if the matrix is singular.
Matrix inverse(const Matrix& a);

Vector multiply(const Matrix& a, const Vector& x);

Rational dot(const Vector& a, const Vector& b);

}  // namespace chpos::linalg
