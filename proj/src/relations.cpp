#include "splitring/relations.hpp"

#include <map>

namespace splitring {

namespace {

void check_range(int n, int i, const char* what) {
  if (i < 1 || i > n)
    throw Error(ErrorKind::IndexOutOfRange, std::string(what) + " index " + std::to_string(i) + " outside 1.." +
                                                std::to_string(n));
}

Elem signed_elem(const Elem& x, int k) { return k % 2 == 0 ? x : -x; }

void require_relation_input(const Poly& f) {
  if (!f.is_monic()) throw Error(ErrorKind::NonMonic, f.str() + " is not monic");
  if (f.degree() < 1) throw Error(ErrorKind::NonMonic, "degree must be >= 1");
  if (!f.has_central_coeffs())
    throw Error(ErrorKind::NonCentralCoefficients, "coefficients of " + f.str() + " are not central");
}

}  // namespace

MPoly elementary_symmetric(const RingPtr& ring, int n, int i) {
  check_range(n, i, "elementary symmetric");
  MPoly p(ring, n);
  // Enumerate i-subsets of {0..n-1} as 0/1 exponent vectors.
  std::vector<int> pick(static_cast<std::size_t>(i));
  for (int k = 0; k < i; ++k) pick[static_cast<std::size_t>(k)] = k;
  for (;;) {
    Exponents e(static_cast<std::size_t>(n), 0);
    for (int v : pick) e[static_cast<std::size_t>(v)] = 1;
    p.add_term(e, ring->one());
    int k = i - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == n - i + k) --k;
    if (k < 0) break;
    ++pick[static_cast<std::size_t>(k)];
    for (int m = k + 1; m < i; ++m) pick[static_cast<std::size_t>(m)] = pick[static_cast<std::size_t>(m - 1)] + 1;
  }
  return p;
}

MPoly complete_homogeneous_prefix(const RingPtr& ring, int n, int j, int i) {
  check_range(n, j, "prefix length");
  if (i < 0) throw Error(ErrorKind::IndexOutOfRange, "degree must be >= 0");
  MPoly p(ring, n);
  Exponents e(static_cast<std::size_t>(n), 0);
  // Compositions of i into j parts, filled left to right.
  auto fill = [&](auto&& self, int pos, int left) -> void {
    if (pos == j - 1) {
      e[static_cast<std::size_t>(pos)] = left;
      p.add_term(e, ring->one());
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  fill(fill, 0, i);
  return p;
}

MPoly delta(const MPoly& p, int i, int j) {
  const int n = p.num_vars();
  check_range(n, i, "delta");
  check_range(n, j, "delta");
  if (i == j) throw Error(ErrorKind::IndexOutOfRange, "delta needs i != j");
  const MPoly numerator = p.swapped(i, j) - p;
  const auto ji = static_cast<std::size_t>(j - 1);

  // numerator = sum_k N_k X_j^k with N_k free of X_j.
  std::map<int, MPoly> slices;
  for (const auto& [e, c] : numerator.terms()) {
    Exponents stripped = e;
    stripped[ji] = 0;
    auto [it, inserted] = slices.try_emplace(e[ji], p.ring(), n);
    it->second.add_term(stripped, c);
  }
  MPoly quotient(p.ring(), n);
  if (slices.empty()) return quotient;

  // (X_j - X_i) Q = N gives Q_{D-1} = N_D and Q_{k-1} = N_k + X_i Q_k.
  const MPoly xi = MPoly::variable(p.ring(), n, i);
  const int top = slices.rbegin()->first;
  MPoly q_k(p.ring(), n);
  for (int k = top; k >= 1; --k) {
    auto it = slices.find(k);
    MPoly q_prev = (it != slices.end() ? it->second : MPoly(p.ring(), n)) + xi * q_k;
    for (const auto& [e, c] : q_prev.terms()) {
      Exponents shifted = e;
      shifted[ji] += k - 1;
      quotient.add_term(shifted, c);
    }
    q_k = std::move(q_prev);
  }
  auto it0 = slices.find(0);
  MPoly remainder = (it0 != slices.end() ? it0->second : MPoly(p.ring(), n)) + xi * q_k;
  if (!remainder.is_zero())
    throw Error(ErrorKind::InexactDivision, "divided difference left remainder " + remainder.str());
  return quotient;
}

std::vector<MPoly> build_relations_recursive(const Poly& f) {
  require_relation_input(f);
  const int n = f.degree();
  const RingPtr& ring = f.ring();
  MPoly f1(ring, n);
  for (int k = 0; k <= n; ++k) {
    Exponents e(static_cast<std::size_t>(n), 0);
    e[0] = k;
    f1.add_term(e, f.coeff(k));
  }
  std::vector<MPoly> out{f1};
  for (int i = 1; i < n; ++i) out.push_back(delta(out.back(), i, i + 1));
  return out;
}

std::vector<MPoly> build_relations_closed(const Poly& f) {
  require_relation_input(f);
  const int n = f.degree();
  const RingPtr& ring = f.ring();
  const ElemVec a = signed_coefficients(f);
  std::vector<MPoly> out;
  for (int i = 1; i <= n; ++i) {
    const int top = n - i + 1;
    MPoly fi = complete_homogeneous_prefix(ring, n, i, top);
    for (int k = 1; k <= top; ++k)
      fi += signed_elem(a[static_cast<std::size_t>(k - 1)], k) * complete_homogeneous_prefix(ring, n, i, top - k);
    out.push_back(std::move(fi));
  }
  return out;
}

IdentityWitness verify_sigma_expansion(const Poly& f) {
  const auto fs = build_relations_recursive(f);
  const int n = f.degree();
  const RingPtr& ring = f.ring();
  const ElemVec a = signed_coefficients(f);
  for (int i = 1; i <= n; ++i) {
    const int top = n - i + 1;
    MPoly rhs(ring, n);
    for (int k = 1; k <= top; ++k) {
      MPoly g = elementary_symmetric(ring, n, k) - MPoly::constant(ring, n, a[static_cast<std::size_t>(k - 1)]);
      MPoly term = g * complete_homogeneous_prefix(ring, n, i, top - k);
      rhs += k % 2 == 1 ? term : -term;
    }
    MPoly diff = fs[static_cast<std::size_t>(i - 1)] - rhs;
    if (!diff.is_zero()) return IdentityWitness{false, i, diff};
  }
  return IdentityWitness{true, 0, MPoly(ring, n)};
}

IdentityWitness verify_prefix_delta(const RingPtr& ring, int n, int j, int i) {
  if (j < 1 || j >= n) throw Error(ErrorKind::IndexOutOfRange, "prefix delta needs 1 <= j < n");
  MPoly lhs = delta(complete_homogeneous_prefix(ring, n, j, i), j, j + 1);
  MPoly rhs = i >= 1 ? complete_homogeneous_prefix(ring, n, j + 1, i - 1) : MPoly(ring, n);
  MPoly diff = lhs - rhs;
  if (!diff.is_zero()) return IdentityWitness{false, j, diff};
  return IdentityWitness{true, 0, diff};
}

MPoly prefix_root_residual(const RingPtr& ring, int n, int i) {
  check_range(n, i, "prefix");
  const int top = n - i + 1;
  MPoly sum = complete_homogeneous_prefix(ring, n, i, top);
  for (int k = 1; k <= top; ++k) {
    MPoly term = elementary_symmetric(ring, n, k) * complete_homogeneous_prefix(ring, n, i, top - k);
    sum += k % 2 == 0 ? term : -term;
  }
  return sum;
}

MPoly generic_root_residual(const RingPtr& ring, int n) {
  const MPoly x1 = MPoly::variable(ring, n, 1);
  MPoly sum = x1.pow(static_cast<unsigned>(n));
  for (int k = 1; k <= n; ++k) {
    MPoly term = elementary_symmetric(ring, n, k) * x1.pow(static_cast<unsigned>(n - k));
    sum += k % 2 == 0 ? term : -term;
  }
  return sum;
}

bool is_prefix_symmetric(const MPoly& p, int k) {
  if (!p.uses_only(k))
    throw Error(ErrorKind::PreconditionViolated, "polynomial involves variables beyond X" + std::to_string(k));
  for (int j = 1; j < k; ++j)
    if (p.swapped(j, j + 1) != p) return false;
  return true;
}

}  // namespace splitring
