#pragma once

#include <stdexcept>
#include <string>

namespace weakram {

// Base class for every error raised by the library.  Callers that need to
// distinguish failure modes catch the concrete subclasses below.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands belong to different fields or towers.
struct field_mismatch : error {
  using error::error;
};

// Division by an element that is zero, or indistinguishable from zero at its
// known precision.
struct division_by_zero : error {
  using error::error;
};

// Degree or index arguments are inconsistent (non-divisible degrees,
// out-of-range indices, elements outside the expected subfield).
struct invalid_degree : error {
  using error::error;
};

// A result cannot be certified to a single digit at the working precision.
struct precision_exhausted : error {
  using error::error;
};

// The Hensel/Newton hypothesis v(g(x0)) > 2 v(g'(x0)) fails.
struct hensel_failure : error {
  using error::error;
};

// The defining polynomial is reducible over the base field, or its
// irreducibility could not be certified.
struct reducible_polynomial : error {
  using error::error;
};

// The defining polynomial is irreducible but requires ramification data
// beyond first-order Newton polygon analysis (not supported).
struct unsupported_polynomial : error {
  using error::error;
};

// The extension is not Galois: fewer automorphisms than the degree.
struct not_galois : error {
  using error::error;
};

// The extension fails the G_2 = 1 test.
struct not_weakly_ramified : error {
  using error::error;
};

// A construction that needs a totally ramified extension got one with f > 1.
struct not_totally_ramified : error {
  using error::error;
};

// A construction that needs a tame extension got a wildly ramified one,
// or vice versa.
struct wild_degree : error {
  using error::error;
};

// The p-elements of the group do not form a subgroup.
struct not_normal_sylow : error {
  using error::error;
};

// No complement of the given normal subgroup exists.
struct no_complement : error {
  using error::error;
};

// The Galois group admits no compatible semidirect factorization.
struct not_doubly_split : error {
  using error::error;
};

// The element handed to the freeness test does not lie in the target ideal.
struct not_in_ideal : error {
  using error::error;
};

// Matrix or basis dimensions do not match.
struct dimension_mismatch : error {
  using error::error;
};

// A purported basis is singular.
struct singular_basis : error {
  using error::error;
};

// The requested ideal exponent violates the congruence required by the
// construction.
struct bad_exponent : error {
  using error::error;
};

// An identity that the theory guarantees failed to verify numerically.
struct theorem_violation : error {
  using error::error;
};

// Malformed configuration file, polynomial, or element string.
struct parse_error : error {
  using error::error;
};

}  // namespace weakram
