#pragma once

// The surface x^4 - y^4 = h(z^4 - w^4): intersection lattice on the rank-6
// basis, genus/degree, the h = 4 rational curves and the hyperplane conic.

#include <array>
#include <string>

#include "diag/poly.hpp"

namespace diag {

using DivisorClass = std::array<long, 6>;
using Matrix6 = std::array<std::array<long, 6>, 6>;

/// Intersection matrix on Delta_1..Delta_6 (h not a square).
const Matrix6& table1();
long pairing(const DivisorClass& d1, const DivisorClass& d2);
/// d = n1 + n2 + n3 + n4 + 2 n5 + 2 n6.
long degree(const DivisorClass& d);

struct GenusDegree {
  long genus;     // from 2g - 2 = (D.D)
  long degree;
  bool half_integral = false;  // (D.D) odd; never happens on this even lattice
};
GenusDegree genus_and_degree(const DivisorClass& d);

/// Five-square decomposition of d^2 - 4(D.D), evaluated at a class.
long five_squares(const DivisorClass& d);
/// Compares d^2 - 4(D.D) with the five-square expression as quadratic forms
/// (coefficient matrices), which proves the identity for all integer classes.
bool sum_of_squares_identity();

/// Determinant of the intersection matrix (nonzero: the lattice is nondegenerate).
Integer table1_determinant();

struct SurfaceParametrization {
  Poly x, y, z, w;
  Rational h;
};
enum class H4Curve { degree3, degree7 };
SurfaceParametrization h4_parametrization(H4Curve which);
/// x^4 - y^4 - h(z^4 - w^4).
Poly surface_residual(const SurfaceParametrization& s);
bool verify_h4_parametrization(H4Curve which);

/// With theta formal and w eliminated through x - y = theta(z - w), checks
/// x^4 - y^4 - theta^4(z^4 - w^4) = c (x - y)(x - theta z)(conic) for a
/// nonzero constant c, and returns c (0 when the factorization fails).
Rational verify_hyperplane_conic();
/// Same check after substituting a rational value for theta.
bool verify_hyperplane_conic_at(const Rational& theta);

}  // namespace diag
