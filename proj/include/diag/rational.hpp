#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace diag {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input violates a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Raised when a construction hits a degenerate locus (vanishing denominator,
/// point at infinity where an affine point is required, singular curve).
class Degenerate : public Error {
 public:
  using Error::Error;
};

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p", "-p/q", "+p/q". Throws InvalidInput on malformed text or q = 0.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Comma-separated list, e.g. "1,1,2,2".
std::vector<Rational> parse_rational_list(std::string_view text);

/// Floor of the square root of n >= 0.
Integer isqrt(const Integer& n);

/// The exact k-th root of r when it is rational, otherwise nullopt.
/// Negative r has a root only for odd k.
std::optional<Rational> exact_root(const Rational& r, unsigned long k);
std::optional<Integer> exact_root(const Integer& n, unsigned long k);

inline bool is_square(const Rational& r) { return exact_root(r, 2).has_value(); }

Rational power(const Rational& r, unsigned long e);
Integer power(const Integer& z, unsigned long e);

Integer ilcm(const Integer& x, const Integer& y);
Integer igcd(const Integer& x, const Integer& y);

/// Prime factorization of |n| (n != 0) as ascending (prime, exponent) pairs.
/// Trial division followed by Pollard-Brent rho.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// Exponent of the prime p in n != 0.
unsigned valuation(const Integer& n, const Integer& p);

}  // namespace diag
