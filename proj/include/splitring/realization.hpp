#pragma once

// Companion matrices, derived polynomials and the commuting matrices
// A_1, ..., A_n of size n! that realize the splitting ring.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "splitring/matrix.hpp"
#include "splitring/split_ring.hpp"

namespace splitring {

/// Ones on the subdiagonal, last column -b_0, ..., -b_{n-1}.
SqMatrix companion(const Poly& f);

/// g^{[j]}: drop the j+1 lowest coefficients of g and shift down, so
/// g^{[j]} = c_{j+1} + c_{j+2} Z + ... + c_m Z^{m-j-1}; zero for j >= deg g.
Poly derived_poly(const Poly& g, int j);

/// g(C_f) assembled column by column: column k is the coordinate vector of
/// Z^k g mod f.
SqMatrix eval_at_companion(const Poly& g, const Poly& f);

/// g(C_f) by Horner's rule with matrix products.
SqMatrix horner_at_companion(const Poly& g, const Poly& f);

/// f^{[j]}(C_f) written down entry by entry from the banded shape: with
/// b_n = 1 and t = k - c + j + 1, entry (k, c) is b_t when c <= j < t <= n
/// and -b_t when j < c and 0 <= t <= j; all other entries vanish.
SqMatrix derived_at_companion_pattern(const Poly& f, int j);

/// A_1, ..., A_n over the ring of f, each of size n!. Runs the recursion on
/// the quotient tower R, R[Z]/(f), ...; raises CapExceeded when n > cap.
std::vector<SqMatrix> build_realization(const Poly& f, int cap = default_cap());

enum class Check : unsigned {
  Commutation = 1U << 0,
  Centrality = 1U << 1,
  SigmaIdentities = 1U << 2,
  Factorization = 1U << 3,
  IndependenceRank = 1U << 4,
  EntryPattern = 1U << 5,
  RegularRepAgreement = 1U << 6,
};
constexpr unsigned kAllChecks = 0x7F;

const char* check_name(Check c);
const std::vector<Check>& all_checks();

struct RealizationReport {
  int n = 0;
  std::vector<SqMatrix> matrices;
  /// One entry per check in all_checks() order; nullopt when not run.
  std::vector<std::pair<Check, std::optional<bool>>> checks;
  /// Rank of the vectorized monomials A^alpha when computed.
  std::optional<std::size_t> rank;
  std::vector<std::string> notes;

  std::optional<bool> get(Check c) const;
  /// True when every check that ran passed.
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Runs the selected checks (bitwise or of Check values) on A_1..A_n.
/// `split` is used for regular-representation agreement and built on
/// demand when null; `seed` drives the randomized rank specialization.
RealizationReport verify_realization(const Poly& f, const std::vector<SqMatrix>& matrices,
                                     unsigned checks = kAllChecks, SplitRingPtr split = nullptr,
                                     std::uint64_t seed = 1);

/// Parses a comma-separated list of check names ("all" selects every check).
unsigned parse_checks(const std::string& text);

/// sigma_1(A), ..., sigma_n(A) for commuting matrices.
std::vector<SqMatrix> elementary_symmetric_matrices(const std::vector<SqMatrix>& a);

/// Coefficients (lowest first) of (Z - A_1)...(Z - A_n).
std::vector<SqMatrix> expand_matrix_factors(const std::vector<SqMatrix>& a);

/// The n! products A_1^{alpha_1}...A_n^{alpha_n}, 0 <= alpha_i <= n - i, in
/// basis order.
std::vector<SqMatrix> basis_monomials(const std::vector<SqMatrix>& a);

}  // namespace splitring
