#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "dq/surface.hpp"

namespace dq {

struct NoRealPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotFoundWithinBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotOnQuadric : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Integer point on the quadric sum a_i Y_i^2 = 0, coprime coordinates.
struct QuadricPoint {
  std::array<Int, 4> y;
};

// Diagonal quadratic form sum b_i X_i^2.
struct QuadraticForm {
  std::array<Int, 4> b;

  Rat eval(const std::array<Rat, 4>& x) const {
    Rat s = 0;
    for (int i = 0; i < 4; ++i) s += Rat(b[i]) * x[i] * x[i];
    return s;
  }
  Int eval(const std::array<Int, 4>& x) const {
    Int s = 0;
    for (int i = 0; i < 4; ++i) s += b[i] * x[i] * x[i];
    return s;
  }
};

// Demand that the coordinates away from one index are not all divisible by p.
struct AvoidConstraint {
  Int p;
  int exempt_index = 0;
};

// Smallest-height coprime integer solution of sum a_i y_i^2 = 0, enumerated
// by increasing max-norm. Throws NoRealPoint when all coefficients share a
// sign and NotFoundWithinBound past the height bound.
QuadricPoint find_point(const Surface& x,
                        const std::optional<AvoidConstraint>& avoid,
                        long height_bound = 10000);

// Tangent-plane form at P: coefficients (a_i y_i), divided by their gcd.
QuadraticForm tangent_form(const Surface& x, const QuadricPoint& p);

// The pullback along Y_i = X_i^2 keeps the same coefficient vector, read as
// a quadratic form in the X variables.
QuadraticForm pullback(const QuadraticForm& g);

bool on_quadric(const Surface& x, const QuadricPoint& p);

}  // namespace dq
