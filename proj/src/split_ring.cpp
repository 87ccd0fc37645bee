#include "splitring/split_ring.hpp"

#include <cstdlib>
#include <mutex>
#include <set>

#include "splitring/relations.hpp"

namespace splitring {

int default_cap() {
  if (const char* env = std::getenv("SPLITRING_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 6;
}

SplitRingPtr SplitRing::create(const Poly& f, int cap) {
  if (!f.is_monic()) throw Error(ErrorKind::NonMonic, f.str() + " is not monic");
  if (f.degree() < 1) throw Error(ErrorKind::PreconditionViolated, "degree must be at least 1");
  if (f.degree() > cap)
    throw Error(ErrorKind::CapExceeded, "degree " + std::to_string(f.degree()) + " exceeds the cap " +
                                            std::to_string(cap) + " (raise it with --cap-override or SPLITRING_CAP)");
  if (!f.has_central_coeffs())
    throw Error(ErrorKind::NonCentralCoefficients,
                "coefficients of " + f.str() + " are not central; reduce by the commutator ideal first");
  return std::make_shared<SplitRing>(Private{}, f, build_relations_closed(f));
}

SplitRing::SplitRing(Private, Poly f, std::vector<MPoly> relations)
    : f_(std::move(f)), n_(f_.degree()), relations_(std::move(relations)) {
  const RingPtr& r = f_.ring();
  for (int i = 1; i <= n_; ++i) {
    Exponents lead(static_cast<std::size_t>(n_), 0);
    lead[static_cast<std::size_t>(i - 1)] = n_ - i + 1;
    tails_.push_back(MPoly::monomial(r, lead, r->one()) - relations_[static_cast<std::size_t>(i - 1)]);
  }
  // Weight of alpha_i in the mixed-radix index: n (n-1) ... (n-i+2).
  std::size_t w = 1;
  for (int i = 1; i <= n_; ++i) {
    radix_weight_.push_back(w);
    w *= static_cast<std::size_t>(n_ - i + 1);
  }
  basis_.resize(w);
  for (std::size_t k = 0; k < w; ++k) {
    Exponents a(static_cast<std::size_t>(n_));
    std::size_t rest = k;
    for (int i = 1; i <= n_; ++i) {
      const auto radix = static_cast<std::size_t>(n_ - i + 1);
      a[static_cast<std::size_t>(i - 1)] = static_cast<int>(rest % radix);
      rest /= radix;
    }
    basis_[k] = std::move(a);
  }
}

std::size_t SplitRing::index(const Exponents& alpha) const {
  if (alpha.size() != static_cast<std::size_t>(n_))
    throw Error(ErrorKind::LengthMismatch, "exponent vector of length " + std::to_string(alpha.size()));
  std::size_t k = 0;
  for (int i = 0; i < n_; ++i) {
    const int a = alpha[static_cast<std::size_t>(i)];
    if (a < 0 || a > n_ - 1 - i)
      throw Error(ErrorKind::IndexOutOfRange, monomial_str(alpha, "r") + " is not a basis monomial");
    k += static_cast<std::size_t>(a) * radix_weight_[static_cast<std::size_t>(i)];
  }
  return k;
}

std::shared_ptr<const SplitRing::Sparse> SplitRing::reduce(const Exponents& alpha) const {
  int top = -1;
  for (int i = n_ - 1; i >= 0; --i)
    if (alpha[static_cast<std::size_t>(i)] > n_ - 1 - i) {
      top = i;
      break;
    }
  const RingPtr& r = base();
  if (top < 0) return std::make_shared<const Sparse>(Sparse{{index(alpha), r->one()}});
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(alpha);
    if (it != memo_.end()) return it->second;
  }
  Exponents rest = alpha;
  rest[static_cast<std::size_t>(top)] -= n_ - top;
  ElemVec acc(dim(), r->zero());
  std::vector<bool> touched(dim(), false);
  for (const auto& [beta, c] : tails_[static_cast<std::size_t>(top)].terms()) {
    Exponents g = rest;
    for (int i = 0; i < n_; ++i) g[static_cast<std::size_t>(i)] += beta[static_cast<std::size_t>(i)];
    const auto red = reduce(g);
    for (const auto& [k, v] : *red) {
      acc[k] = r->add(acc[k], r->mul(c, v));
      touched[k] = true;
    }
  }
  auto out = std::make_shared<Sparse>();
  for (std::size_t k = 0; k < dim(); ++k)
    if (touched[k] && !acc[k].is_zero()) out->emplace_back(k, acc[k]);
  std::unique_lock lock(memo_mutex_);
  return memo_.emplace(alpha, std::move(out)).first->second;
}

SplitElem SplitRing::zero() const { return SplitElem(shared_from_this(), ElemVec(dim(), base()->zero())); }

SplitElem SplitRing::one() const { return scalar(base()->one()); }

SplitElem SplitRing::scalar(const Elem& c) const {
  base()->require(c);
  ElemVec v(dim(), base()->zero());
  v[0] = c;
  return SplitElem(shared_from_this(), std::move(v));
}

SplitElem SplitRing::root(int i) const {
  if (i < 1 || i > n_) throw Error(ErrorKind::IndexOutOfRange, "root r" + std::to_string(i));
  Exponents e(static_cast<std::size_t>(n_), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(e);
}

SplitElem SplitRing::basis_element(std::size_t k) const {
  if (k >= dim()) throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(k));
  ElemVec v(dim(), base()->zero());
  v[k] = base()->one();
  return SplitElem(shared_from_this(), std::move(v));
}

SplitElem SplitRing::from_coords(ElemVec coords) const {
  if (coords.size() != dim()) throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(dim()) + " coordinates");
  for (const auto& c : coords) base()->require(c);
  return SplitElem(shared_from_this(), std::move(coords));
}

SplitElem SplitRing::monomial(const Exponents& alpha) const {
  if (alpha.size() != static_cast<std::size_t>(n_))
    throw Error(ErrorKind::LengthMismatch, "exponent vector of length " + std::to_string(alpha.size()));
  ElemVec v(dim(), base()->zero());
  const auto red = reduce(alpha);
  for (const auto& [k, c] : *red) v[k] = c;
  return SplitElem(shared_from_this(), std::move(v));
}

SplitElem SplitRing::normal_form(const MPoly& m) const {
  if (!m.ring()->same(*base()) || m.num_vars() != n_)
    throw Error(ErrorKind::RingMismatch, "polynomial over " + m.ring()->spec() + " in " +
                                             std::to_string(m.num_vars()) + " variables");
  const RingPtr& r = base();
  ElemVec v(dim(), r->zero());
  for (const auto& [e, c] : m.terms()) {
    const auto red = reduce(e);
    for (const auto& [k, x] : *red) v[k] = r->add(v[k], r->mul(c, x));
  }
  return SplitElem(shared_from_this(), std::move(v));
}

SplitElem SplitRing::evaluate(const MPoly& p, std::span<const SplitElem> values) const {
  if (static_cast<int>(values.size()) != p.num_vars())
    throw Error(ErrorKind::LengthMismatch, "need " + std::to_string(p.num_vars()) + " values");
  for (const auto& v : values) require(v);
  SplitElem acc = zero();
  for (const auto& [e, c] : p.terms()) {
    SplitElem term = scalar(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * values[i].pow(static_cast<unsigned>(e[i]));
    acc = acc + term;
  }
  return acc;
}

void SplitRing::require(const SplitElem& x) const {
  if (x.ring().get() != this) throw Error(ErrorKind::RingMismatch, "element of a different splitting ring");
}

SplitElem SplitRing::mul(const SplitElem& a, const SplitElem& b) const {
  require(a);
  require(b);
  const RingPtr& r = base();
  ElemVec v(dim(), r->zero());
  Exponents g(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a.coords()[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b.coords()[j].is_zero()) continue;
      const Elem ab = r->mul(a.coords()[i], b.coords()[j]);
      for (int t = 0; t < n_; ++t)
        g[static_cast<std::size_t>(t)] = basis_[i][static_cast<std::size_t>(t)] + basis_[j][static_cast<std::size_t>(t)];
      const auto red = reduce(g);
      for (const auto& [k, x] : *red) v[k] = r->add(v[k], r->mul(ab, x));
    }
  }
  return SplitElem(shared_from_this(), std::move(v));
}

std::vector<SplitElem> expand_linear_factors(const SplitRing& ring, std::span<const SplitElem> roots) {
  std::vector<SplitElem> p{ring.one()};
  for (const auto& t : roots) {
    // p * (Z - t): new_k = p_{k-1} - p_k * t.
    std::vector<SplitElem> q(p.size() + 1, ring.zero());
    for (std::size_t k = 0; k < p.size(); ++k) {
      q[k + 1] = q[k + 1] + p[k];
      q[k] = q[k] - p[k] * t;
    }
    p = std::move(q);
  }
  return p;
}

bool SplitRing::universal_factorization_check() const {
  std::vector<SplitElem> roots;
  for (int i = 1; i <= n_; ++i) roots.push_back(root(i));
  auto p = expand_linear_factors(*this, roots);
  for (int k = 0; k <= n_; ++k)
    if (p[static_cast<std::size_t>(k)] != scalar(f_.coeff(k))) return false;
  return true;
}

std::vector<SplitElem> SplitRing::root_minimal_polynomial(int i) const {
  if (i < 1 || i > n_) throw Error(ErrorKind::IndexOutOfRange, "root r" + std::to_string(i));
  const MPoly& fi = relations_[static_cast<std::size_t>(i - 1)];
  std::vector<SplitElem> coeffs(static_cast<std::size_t>(n_ - i + 2), zero());
  for (const auto& [e, c] : fi.terms()) {
    Exponents rest = e;
    const int d = rest[static_cast<std::size_t>(i - 1)];
    rest[static_cast<std::size_t>(i - 1)] = 0;
    SplitElem m = monomial(rest);
    coeffs[static_cast<std::size_t>(d)] = coeffs[static_cast<std::size_t>(d)] + c * m;
  }
  return coeffs;
}

SqMatrix SplitRing::regular_representation(const SplitElem& y) const {
  require(y);
  SqMatrix m(base(), static_cast<int>(dim()));
  for (std::size_t k = 0; k < dim(); ++k) {
    SplitElem col = mul(y, basis_element(k));
    for (std::size_t i = 0; i < dim(); ++i) m(static_cast<int>(i), static_cast<int>(k)) = col.coords()[i];
  }
  return m;
}

bool SplitRing::gamma_injectivity_check(std::span<const Elem> samples) const {
  ElemVec pool;
  if (base()->is_finite())
    pool = base()->elements();
  else
    pool.assign(samples.begin(), samples.end());
  std::set<std::string> seen;
  for (const auto& c : pool) {
    SplitElem x = normal_form(MPoly::constant(base(), n_, c));
    if (!c.is_zero() && x.is_zero()) return false;
    std::string key;
    for (const auto& v : x.coords()) key += v.str() + ";";
    if (!seen.insert(key).second) return false;
  }
  return true;
}

bool SplitElem::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

namespace {

const SplitRingPtr& common(const SplitElem& a, const SplitElem& b) {
  if (a.ring() != b.ring()) throw Error(ErrorKind::RingMismatch, "elements of different splitting rings");
  return a.ring();
}

}  // namespace

SplitElem SplitElem::operator-() const {
  ElemVec v = coords_;
  for (auto& x : v) x = -x;
  return SplitElem(ring_, std::move(v));
}

SplitElem operator+(const SplitElem& a, const SplitElem& b) {
  const auto& r = common(a, b);
  ElemVec v = a.coords_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] + b.coords_[i];
  return SplitElem(r, std::move(v));
}

SplitElem operator-(const SplitElem& a, const SplitElem& b) {
  const auto& r = common(a, b);
  ElemVec v = a.coords_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] - b.coords_[i];
  return SplitElem(r, std::move(v));
}

SplitElem operator*(const SplitElem& a, const SplitElem& b) { return common(a, b)->mul(a, b); }

SplitElem operator*(const Elem& c, const SplitElem& x) {
  ElemVec v = x.coords_;
  for (auto& e : v) e = c * e;
  return SplitElem(x.ring_, std::move(v));
}

bool operator==(const SplitElem& a, const SplitElem& b) {
  if (a.ring_ != b.ring_) return false;
  return a.coords_ == b.coords_;
}

SplitElem SplitElem::pow(unsigned e) const {
  SplitElem result = ring_->one(), b = *this;
  while (e) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return result;
}

std::string SplitElem::str() const {
  MPoly p(ring_->base(), ring_->n());
  for (std::size_t k = 0; k < coords_.size(); ++k)
    if (!coords_[k].is_zero()) p.add_term(ring_->basis()[k], coords_[k]);
  return p.str("r");
}

nlohmann::json SplitElem::to_json() const {
  nlohmann::json basis = nlohmann::json::array(), coords = nlohmann::json::array();
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    basis.push_back(ring_->basis()[k]);
    coords.push_back(coords_[k].str());
  }
  return {{"basis", basis}, {"coords", coords}};
}

}  // namespace splitring
