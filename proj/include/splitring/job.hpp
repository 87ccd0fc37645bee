#pragma once

// Turning a ring spec and a coefficient list into the input polynomial f.

#include <optional>
#include <string>

#include "splitring/poly.hpp"

namespace splitring {

enum class CoeffConvention {
  A,     // a_1..a_n with f = Z^n - a_1 Z^{n-1} + ... + (-1)^n a_n
  B,     // b_0..b_{n-1} with f = Z^n + b_{n-1} Z^{n-1} + ... + b_0
  Full,  // c_0..c_n, constant term first
};

struct JobSpec {
  std::string ring = "Z";
  std::string coeffs;
  CoeffConvention convention = CoeffConvention::B;
  /// Declared degree; must match the coefficient count when given.
  std::optional<int> n;
};

/// Builds f. Over PolyCoef:t:R with t >= n the first n indeterminates are
/// renamed a1..an (convention A) or b0..b{n-1} (B and Full), and when every
/// entry is a plain integer the coefficients become generic: entry i is
/// literal_i plus the i-th indeterminate, so "--a 0,0,0,0" means
/// a_i = a1..a4. Entries may otherwise be any expression in the ring.
Poly build_job_poly(const JobSpec& job);

}  // namespace splitring
