#pragma once

// Dense univariate polynomials over a Ring, lowest degree first.

#include <string>
#include <string_view>

#include "splitring/ring.hpp"

namespace splitring {

class Poly {
 public:
  Poly() = default;
  Poly(RingPtr ring, ElemVec coeffs);

  static Poly zero(RingPtr ring) { return Poly(std::move(ring), {}); }
  static Poly constant(const Elem& c) { return Poly(c.ring(), {c}); }
  static Poly monomial(const Elem& c, int degree);
  static Poly variable(const RingPtr& ring) { return monomial(ring->one(), 1); }

  const RingPtr& ring() const noexcept { return ring_; }
  const ElemVec& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of Z^i, zero outside the stored range.
  Elem coeff(int i) const;
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  bool has_central_coeffs() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Elem& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Z^k * p.
  Poly shifted(int k) const;
  /// Remainder modulo a monic polynomial.
  Poly mod(const Poly& monic) const;
  /// Coefficients mapped into `target` through Ring::embed.
  Poly embedded(const RingPtr& target) const;

  /// sum c_j x^j with coefficients on the left; x may live in any ring the
  /// coefficients embed into.
  Elem eval(const Elem& x) const;

  std::string str(std::string_view var = "Z") const;

 private:
  RingPtr ring_;
  ElemVec coeffs_;
};

// Two sign conventions name the coefficients of a monic f of degree n:
//   f = Z^n - a_1 Z^{n-1} + a_2 Z^{n-2} - ... + (-1)^n a_n
//   f = Z^n + b_{n-1} Z^{n-1} + ... + b_1 Z + b_0
// so b_{n-j} = (-1)^j a_j. Vectors hold a_1..a_n and b_0..b_{n-1}.

/// a_1..a_n of a monic f; NonMonic otherwise.
ElemVec signed_coefficients(const Poly& f);
Poly poly_from_signed(const RingPtr& ring, const ElemVec& a);
Poly poly_from_b(const RingPtr& ring, const ElemVec& b);
ElemVec a_to_b(const ElemVec& a);
ElemVec b_to_a(const ElemVec& b);

/// Coefficient list "c0,c1,...,cn" (constant term first) parsed in `ring`.
Poly parse_poly(const RingPtr& ring, std::string_view text);

}  // namespace splitring
