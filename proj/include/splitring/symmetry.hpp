#pragma once

// The S_n action on R_f and verification of candidate automorphisms given by
// their images t_1, ..., t_n of the roots.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "splitring/split_ring.hpp"

namespace splitring {

/// Permutation of {1..n}; images[i-1] = p(i).
struct Perm {
  std::vector<int> images;

  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  /// All n! permutations in lexicographic order of their image lists.
  static std::vector<Perm> all(int n);

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[static_cast<std::size_t>(i - 1)]; }
  /// (p * q)(i) = p(q(i)).
  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm& a, const Perm& b) = default;
  std::string str() const;
};

/// Image of x under the automorphism induced by X_i -> X_{p(i)}.
SplitElem apply_perm(const SplitRing& ring, const Perm& p, const SplitElem& x);

/// Candidate images t_1..t_n of r_1..r_n.
struct RootSystem {
  SplitRingPtr ring;
  std::vector<SplitElem> roots;
  std::string label;
};

RootSystem permutation_system(const SplitRingPtr& ring, const Perm& p);

struct AutomorphismCertificate {
  std::string system;
  bool commute = false;
  bool factorization = false;
  /// nullopt when invertibility could not be decided over the base.
  std::optional<bool> basis_unit_det;
  bool verdict = false;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// Checks that the t_i commute with each other and with R, that
/// f = (Z - t_1)...(Z - t_n) in R_f[Z], and that the monomials t^alpha
/// form a basis (their coordinate matrix is invertible).
AutomorphismCertificate is_automorphism_system(const RootSystem& ts);

/// True iff the n! permutations act by pairwise different maps, compared
/// through their images of r_1..r_n.
bool theta_injectivity(const SplitRingPtr& ring);

/// t_i = u r_i. Requires d >= 1, d | n, a_i = 0 whenever d does not divide
/// i, and u a central unit with u^d = 1; PreconditionViolated otherwise.
RootSystem scaling_system(const SplitRingPtr& ring, const Elem& u, int d);

/// Whether a_i = 0 for every i not divisible by d (and d | n).
bool scaling_pattern_holds(const Poly& f, int d);

/// Central units u of a finite ring, or +-1 over Z and Q, with u^d = 1.
ElemVec roots_of_unity(const RingPtr& ring, int d);

}  // namespace splitring
