#pragma once

/// @file linear.hpp
/// Affine binary systems over Z_m:  x * y = a·x + b·y + c  (mod m).
/// The box product of two such systems is again one, and compose() tracks
/// the coefficients directly so the table-level product can be cross-checked
/// against closed-form arithmetic.

#include <cstdint>
#include <string>

#include "binx/groupoid.hpp"

namespace binx {

/// Coefficients (a, b, c) of x*y = ax + by + c over Z_modulus, stored as
/// canonical residues in [0, modulus).
struct LinearCoeffs {
  std::int64_t modulus = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  friend bool operator==(const LinearCoeffs&, const LinearCoeffs&) = default;
};

/// Validated constructor: requires modulus >= 1; reduces the coefficients
/// into canonical residues (negative inputs wrap).
LinearCoeffs make_linear(std::int64_t modulus, std::int64_t a, std::int64_t b,
                         std::int64_t c);

/// The Cayley table of the affine system.  Requires modulus <= 16 (the
/// table type's maximum order); throws otherwise.
Groupoid to_table(const LinearCoeffs& coeffs);

/// Coefficients of box(to_table(inner), to_table(outer)):
///   (d·a + e·b,  d·b + e·a,  (d + e)·c + f)  mod m
/// for inner (a, b, c) and outer (d, e, f).  Moduli must match.
LinearCoeffs compose(const LinearCoeffs& inner, const LinearCoeffs& outer);

/// "(a, b, c) mod m" — for diagnostics and reports.
std::string to_string(const LinearCoeffs& coeffs);

}  // namespace binx
