#include "splitring/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "splitring/linalg.hpp"

namespace splitring {

Perm::Perm(std::vector<int> im) : images(std::move(im)) {
  std::vector<int> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw Error(ErrorKind::PreconditionViolated, "not a permutation of 1.." + std::to_string(images.size()));
}

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

std::vector<Perm> Perm::all(int n) {
  std::vector<Perm> out;
  std::vector<int> v = identity(n).images;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw Error(ErrorKind::LengthMismatch, "permutations of different degree");
  std::vector<int> v;
  for (int i = 1; i <= q.size(); ++i) v.push_back(p(q(i)));
  return Perm(std::move(v));
}

std::string Perm::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images.size(); ++i) s += (i ? "," : "") + std::to_string(images[i]);
  return s + "]";
}

SplitElem apply_perm(const SplitRing& ring, const Perm& p, const SplitElem& x) {
  if (p.size() != ring.n()) throw Error(ErrorKind::LengthMismatch, "permutation degree differs from n");
  SplitElem acc = ring.zero();
  for (std::size_t k = 0; k < ring.dim(); ++k) {
    const Elem& c = x.coords()[k];
    if (c.is_zero()) continue;
    Exponents beta(static_cast<std::size_t>(ring.n()), 0);
    for (int i = 1; i <= ring.n(); ++i)
      beta[static_cast<std::size_t>(p(i) - 1)] = ring.basis()[k][static_cast<std::size_t>(i - 1)];
    acc = acc + c * ring.monomial(beta);
  }
  return acc;
}

RootSystem permutation_system(const SplitRingPtr& ring, const Perm& p) {
  RootSystem ts{ring, {}, "perm " + p.str()};
  for (int i = 1; i <= ring->n(); ++i) ts.roots.push_back(ring->root(p(i)));
  return ts;
}

nlohmann::json AutomorphismCertificate::to_json() const {
  nlohmann::json j{{"system", system},
                   {"commute", commute},
                   {"factorization", factorization},
                   {"basis_unit_det", basis_unit_det ? nlohmann::json(*basis_unit_det) : nlohmann::json(nullptr)},
                   {"verdict", verdict}};
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

namespace {

// Elements of R that generate it as a ring together with the centre, used
// to test commutation with all of R.
ElemVec commutation_probes(const RingPtr& r) {
  if (r->is_commutative()) return {};
  if (r->is_finite() && r->order() && *r->order() <= 4096) return r->elements();
  ElemVec probes;
  if (r->kind() == RingKind::MatrixRing) {
    const int k = r->size();
    for (const auto& b : commutation_probes(r->base())) probes.push_back(r->embed(b));
    for (int i = 0; i < k * k; ++i) {
      ElemVec e(static_cast<std::size_t>(k * k), r->base()->zero());
      e[static_cast<std::size_t>(i)] = r->base()->one();
      probes.push_back(r->matrix(std::move(e)));
    }
  }
  return probes;
}

}  // namespace

AutomorphismCertificate is_automorphism_system(const RootSystem& ts) {
  AutomorphismCertificate cert;
  cert.system = ts.label;
  const SplitRing& s = *ts.ring;
  const int n = s.n();
  if (static_cast<int>(ts.roots.size()) != n) {
    cert.notes.push_back("expected " + std::to_string(n) + " images");
    return cert;
  }
  cert.commute = true;
  for (int i = 0; i < n && cert.commute; ++i)
    for (int j = i + 1; j < n && cert.commute; ++j)
      cert.commute = ts.roots[static_cast<std::size_t>(i)] * ts.roots[static_cast<std::size_t>(j)] ==
                     ts.roots[static_cast<std::size_t>(j)] * ts.roots[static_cast<std::size_t>(i)];
  const RingPtr& base = s.base();
  if (!base->is_commutative() && base->kind() != RingKind::MatrixRing && !base->is_finite())
    cert.notes.push_back("commutation with the base tested on no probes");
  for (const auto& c : commutation_probes(base))
    for (const auto& t : ts.roots)
      if (cert.commute && s.scalar(c) * t != t * s.scalar(c)) cert.commute = false;

  auto p = expand_linear_factors(s, ts.roots);
  cert.factorization = true;
  for (int k = 0; k <= n && cert.factorization; ++k)
    cert.factorization = p[static_cast<std::size_t>(k)] == s.scalar(s.f().coeff(k));

  // Column alpha holds the coordinates of t^alpha.
  SqMatrix change(base, static_cast<int>(s.dim()));
  for (std::size_t k = 0; k < s.dim(); ++k) {
    SplitElem m = s.one();
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < s.basis()[k][static_cast<std::size_t>(i)]; ++e) m = m * ts.roots[static_cast<std::size_t>(i)];
    for (std::size_t row = 0; row < s.dim(); ++row) change(static_cast<int>(row), static_cast<int>(k)) = m.coords()[row];
  }
  try {
    cert.basis_unit_det = is_invertible(change);
  } catch (const Error& e) {
    cert.notes.push_back(std::string("basis condition undecided: ") + e.what());
  }
  cert.verdict = cert.commute && cert.factorization && cert.basis_unit_det.value_or(false);
  return cert;
}

bool theta_injectivity(const SplitRingPtr& ring) {
  std::set<std::vector<std::string>> seen;
  for (const auto& p : Perm::all(ring->n())) {
    std::vector<std::string> key;
    for (int i = 1; i <= ring->n(); ++i) {
      SplitElem img = apply_perm(*ring, p, ring->root(i));
      std::string s;
      for (const auto& c : img.coords()) s += c.str() + ";";
      key.push_back(std::move(s));
    }
    if (!seen.insert(std::move(key)).second) return false;
  }
  return true;
}

bool scaling_pattern_holds(const Poly& f, int d) {
  const int n = f.degree();
  if (d < 1 || n % d != 0) return false;
  ElemVec a = signed_coefficients(f);
  for (int i = 1; i <= n; ++i)
    if (i % d != 0 && !a[static_cast<std::size_t>(i - 1)].is_zero()) return false;
  return true;
}

RootSystem scaling_system(const SplitRingPtr& ring, const Elem& u, int d) {
  const int n = ring->n();
  const RingPtr& r = ring->base();
  r->require(u);
  auto fail = [](const std::string& what) { throw Error(ErrorKind::PreconditionViolated, what); };
  if (d < 1 || n % d != 0) fail("d = " + std::to_string(d) + " does not divide n = " + std::to_string(n));
  ElemVec a = signed_coefficients(ring->f());
  for (int i = 1; i <= n; ++i)
    if (i % d != 0 && !a[static_cast<std::size_t>(i - 1)].is_zero())
      fail("a" + std::to_string(i) + " = " + a[static_cast<std::size_t>(i - 1)].str() + " is nonzero but " +
           std::to_string(d) + " does not divide " + std::to_string(i));
  if (!r->is_central(u)) fail(u.str() + " is not central");
  if (!r->pow(u, static_cast<unsigned>(d)).is_one()) fail(u.str() + "^" + std::to_string(d) + " != 1");
  if (!r->try_invert(u)) fail(u.str() + " is not a unit");
  RootSystem ts{ring, {}, "scale u=" + u.str() + " d=" + std::to_string(d)};
  for (int i = 1; i <= n; ++i) ts.roots.push_back(u * ring->root(i));
  return ts;
}

ElemVec roots_of_unity(const RingPtr& ring, int d) {
  ElemVec candidates;
  if (ring->is_finite())
    candidates = ring->elements();
  else if (ring->kind() == RingKind::Integers || ring->kind() == RingKind::Rationals)
    candidates = {ring->one(), -ring->one()};
  else
    throw Error(ErrorKind::Unsupported, "roots of unity in " + ring->spec());
  ElemVec out;
  for (const auto& u : candidates)
    if (ring->pow(u, static_cast<unsigned>(d)).is_one() && ring->is_central(u) &&
        std::none_of(out.begin(), out.end(), [&](const Elem& v) { return v == u; }))
      out.push_back(u);
  return out;
}

}  // namespace splitring
