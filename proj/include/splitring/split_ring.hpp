#pragma once

// The universal splitting ring R_f = R[X_1..X_n] / (sigma_i - a_i) as a free
// module on the monomials r^alpha, 0 <= alpha_i <= n - i.
//
// Basis index is mixed radix with alpha_1 fastest:
//   index(alpha) = alpha_1 + n*(alpha_2 + (n-1)*(alpha_3 + ...)).
// Products are reduced with the rules X_i^{n-i+1} -> X_i^{n-i+1} - f_i.
// Each rule lowers alpha_i and only touches alpha_j with j < i, so the
// exponent vectors read from alpha_n down to alpha_1 decrease
// lexicographically and rewriting terminates.

#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <vector>

#include <json.hpp>

#include "splitring/matrix.hpp"
#include "splitring/mpoly.hpp"

namespace splitring {

class SplitRing;
using SplitRingPtr = std::shared_ptr<const SplitRing>;

/// Largest n accepted by default; SPLITRING_CAP overrides it.
int default_cap();

class SplitElem {
 public:
  SplitElem() = default;
  SplitElem(SplitRingPtr ring, ElemVec coords) : ring_(std::move(ring)), coords_(std::move(coords)) {}

  const SplitRingPtr& ring() const noexcept { return ring_; }
  const ElemVec& coords() const noexcept { return coords_; }
  bool is_zero() const;

  SplitElem operator-() const;
  friend SplitElem operator+(const SplitElem& a, const SplitElem& b);
  friend SplitElem operator-(const SplitElem& a, const SplitElem& b);
  friend SplitElem operator*(const SplitElem& a, const SplitElem& b);
  /// Base scalar on the left.
  friend SplitElem operator*(const Elem& c, const SplitElem& x);
  friend bool operator==(const SplitElem& a, const SplitElem& b);
  friend bool operator!=(const SplitElem& a, const SplitElem& b) { return !(a == b); }
  SplitElem pow(unsigned e) const;

  /// Polynomial in r1..rn, e.g. "3 - r1".
  std::string str() const;
  /// {"basis": [[alpha...]...], "coords": [string...]}
  nlohmann::json to_json() const;

 private:
  SplitRingPtr ring_;
  ElemVec coords_;
};

class SplitRing : public std::enable_shared_from_this<SplitRing> {
 public:
  struct Private {};

  /// f monic of degree n >= 1 with central coefficients; n <= cap.
  /// Raises NonMonic, NonCentralCoefficients (apply central_quotient first
  /// for noncommutative finite rings) or CapExceeded.
  static SplitRingPtr create(const Poly& f, int cap = default_cap());

  SplitRing(Private, Poly f, std::vector<MPoly> relations);

  const RingPtr& base() const noexcept { return f_.ring(); }
  const Poly& f() const noexcept { return f_; }
  int n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<MPoly>& relations() const noexcept { return relations_; }
  const std::vector<Exponents>& basis() const noexcept { return basis_; }
  /// Position of r^alpha; IndexOutOfRange if alpha is not a basis exponent.
  std::size_t index(const Exponents& alpha) const;

  SplitElem zero() const;
  SplitElem one() const;
  SplitElem scalar(const Elem& c) const;
  /// r_i, 1-based.
  SplitElem root(int i) const;
  SplitElem basis_element(std::size_t k) const;
  SplitElem from_coords(ElemVec coords) const;

  /// Coordinates of m modulo I_f.
  SplitElem normal_form(const MPoly& m) const;
  /// Coordinates of the monomial X^alpha, memoized.
  SplitElem monomial(const Exponents& alpha) const;
  /// p(t_1, ..., t_n) computed in R_f.
  SplitElem evaluate(const MPoly& p, std::span<const SplitElem> values) const;

  SplitElem mul(const SplitElem& a, const SplitElem& b) const;

  /// Expands (Z - r_1)...(Z - r_n) and compares with f coefficientwise.
  bool universal_factorization_check() const;
  /// Coefficients (lowest first) of f_i(r_1, ..., r_{i-1}, Z) over R_f.
  std::vector<SplitElem> root_minimal_polynomial(int i) const;
  /// Matrix of x -> y*x on the basis; column k holds the coordinates of
  /// y * basis_k.
  SqMatrix regular_representation(const SplitElem& y) const;
  /// Whether c -> c*1 is injective on base scalars: exhaustive over a finite
  /// base, otherwise over `samples`.
  bool gamma_injectivity_check(std::span<const Elem> samples = {}) const;

 private:
  using Sparse = std::vector<std::pair<std::size_t, Elem>>;
  std::shared_ptr<const Sparse> reduce(const Exponents& alpha) const;
  void require(const SplitElem& x) const;

  Poly f_;
  int n_;
  std::vector<MPoly> relations_;
  std::vector<MPoly> tails_;  // X_i^{n-i+1} - f_i
  std::vector<Exponents> basis_;
  std::vector<std::size_t> radix_weight_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::map<Exponents, std::shared_ptr<const Sparse>> memo_;
};

/// Product of (Z - t_i) as a polynomial with coefficients in R_f, lowest
/// degree first.
std::vector<SplitElem> expand_linear_factors(const SplitRing& ring, std::span<const SplitElem> roots);

}  // namespace splitring
