#pragma once

// Symmetric-function building blocks and the triangular generators
// f_1, ..., f_n of the ideal I_f = (sigma_1 - a_1, ..., sigma_n - a_n).

#include <optional>
#include <vector>

#include "splitring/mpoly.hpp"
#include "splitring/poly.hpp"

namespace splitring {

/// sigma_i(X_1..X_n), 1 <= i <= n.
MPoly elementary_symmetric(const RingPtr& ring, int n, int i);

/// S_j^i: sum of all monomials of total degree i in X_1..X_j, embedded in
/// n variables. S_j^0 = 1.
MPoly complete_homogeneous_prefix(const RingPtr& ring, int n, int j, int i);

/// Divided difference (p^(i,j) - p) / (X_j - X_i). The quotient is computed
/// by synthetic division in X_j; a nonzero remainder raises InexactDivision.
MPoly delta(const MPoly& p, int i, int j);

/// f_1 = f(X_1), f_{i+1} = delta_(i,i+1) f_i. f must be monic with central
/// coefficients; n = deg f.
std::vector<MPoly> build_relations_recursive(const Poly& f);

/// f_i = S_i^{n-i+1} - a_1 S_i^{n-i} + ... + (-1)^{n-i+1} a_{n-i+1}.
std::vector<MPoly> build_relations_closed(const Poly& f);

/// Result of checking one family of polynomial identities.
struct IdentityWitness {
  bool holds = true;
  int failing_index = 0;  // 1-based, 0 when the identity holds
  MPoly difference;       // lhs - rhs at the failing index
};

/// f_i = sum_k (-1)^{k-1} (sigma_k - a_k) S_i^{n-i+1-k} for every i.
IdentityWitness verify_sigma_expansion(const Poly& f);

/// The identity delta_(j,j+1) S_j^i = S_{j+1}^{i-1}, for 1 <= j < n.
IdentityWitness verify_prefix_delta(const RingPtr& ring, int n, int j, int i);

/// sum_k (-1)^k sigma_k S_i^{n-i+1-k} = 0; returns the left side.
MPoly prefix_root_residual(const RingPtr& ring, int n, int i);

/// X_1^n - sigma_1 X_1^{n-1} + ... + (-1)^n sigma_n = 0; returns the left side.
MPoly generic_root_residual(const RingPtr& ring, int n);

/// True iff p is invariant under every transposition (j, j+1), j < k.
/// PreconditionViolated if p involves a variable beyond X_k.
bool is_prefix_symmetric(const MPoly& p, int k);

}  // namespace splitring
