#pragma once

// Sparse polynomials in commuting variables X_1..X_n over a Ring. The
// variables commute with each other and with coefficients; coefficient
// products keep their left-to-right order.

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "splitring/ring.hpp"

namespace splitring {

class MPoly {
 public:
  /// Descending lexicographic order, X_1 > X_2 > ... (display order).
  using TermMap = std::map<Exponents, Elem, std::greater<>>;

  MPoly() = default;
  MPoly(RingPtr ring, int num_vars) : ring_(std::move(ring)), num_vars_(num_vars) {}

  static MPoly constant(const RingPtr& ring, int num_vars, const Elem& c);
  /// X_i, 1-based.
  static MPoly variable(const RingPtr& ring, int num_vars, int i);
  static MPoly monomial(const RingPtr& ring, Exponents exponents, const Elem& c);

  const RingPtr& ring() const noexcept { return ring_; }
  int num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Elem coeff(const Exponents& e) const;

  /// Adds c*X^e in place.
  void add_term(const Exponents& e, const Elem& c);

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Elem& c, const MPoly& p);
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
  MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
  MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
  MPoly pow(unsigned e) const;

  /// The polynomial with X_i and X_j exchanged (1-based).
  MPoly swapped(int i, int j) const;
  int degree_in(int i) const;
  int total_degree() const;
  /// True iff only X_1..X_k occur.
  bool uses_only(int k) const;

  /// Expanded text, e.g. "X1^2 + X1*X2 - a1*X1 + a2".
  std::string str(std::string_view var = "X") const;
  /// Terms grouped by shared coefficient, e.g. "X1^2 + X1*X2 - a1*(X1+X2) + a2".
  std::string grouped_str(std::string_view var = "X") const;

 private:
  void check_compatible(const MPoly& other) const;

  RingPtr ring_;
  int num_vars_ = 0;
  TermMap terms_;
};

/// Text in X1..Xn plus ring symbols and literals.
MPoly parse_mpoly(const RingPtr& ring, int num_vars, std::string_view text);

std::string monomial_str(const Exponents& e, std::string_view var = "X");

}  // namespace splitring
