#include "splitring/linalg.hpp"

#include <map>
#include <optional>
#include <random>

namespace splitring {

std::vector<std::int64_t> prime_factors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= m / p; ++p) {
    if (m % p != 0) continue;
    out.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) out.push_back(m);
  return out;
}

namespace {

struct QField {
  using T = mpq_class;
  T from(const Elem& x) const {
    return x.ring()->kind() == RingKind::Integers ? mpq_class(x.integer()) : x.rational();
  }
  static bool is_zero(const T& x) { return sgn(x) == 0; }
  static T sub_mul(const T& a, const T& f, const T& b) { return a - f * b; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T div(const T& a, const T& b) { return a / b; }
};

struct FpField {
  using T = std::int64_t;
  std::int64_t p;
  T from(const Elem& x) const {
    if (x.ring()->kind() == RingKind::ModularIntegers) return x.small() % p;
    mpz_class r;
    const mpz_class& v = x.integer();
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_si();
  }
  static bool is_zero(T x) { return x == 0; }
  T mul(T a, T b) const {
    return static_cast<T>(static_cast<__int128>(a) * b % p);
  }
  T sub_mul(T a, T f, T b) const {
    T r = (a - mul(f, b)) % p;
    return r < 0 ? r + p : r;
  }
  T inv(T a) const {
    T r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  T div(T a, T b) const { return mul(a, inv(b)); }
};

// Incremental row echelon form: rows are kept with a unit pivot.
template <class F>
class Echelon {
 public:
  explicit Echelon(F field) : f_(std::move(field)) {}

  /// Adds v to the span; true when it was independent.
  bool insert(std::vector<typename F::T> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& x = v[pivots_[r]];
      if (F::is_zero(x)) continue;
      const auto factor = x;
      for (std::size_t c = pivots_[r]; c < v.size(); ++c)
        if (!F::is_zero(rows_[r][c])) v[c] = f_.sub_mul(v[c], factor, rows_[r][c]);
    }
    std::size_t p = 0;
    while (p < v.size() && F::is_zero(v[p])) ++p;
    if (p == v.size()) return false;
    const auto lead = v[p];
    for (std::size_t c = p; c < v.size(); ++c)
      if (!F::is_zero(v[c])) v[c] = f_.div(v[c], lead);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  F f_;
  std::vector<std::vector<typename F::T>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class F>
std::size_t field_rank(const F& field, const std::vector<ElemVec>& rows) {
  Echelon<F> e(field);
  for (const auto& r : rows) {
    std::vector<typename F::T> v;
    v.reserve(r.size());
    for (const auto& x : r) v.push_back(field.from(x));
    e.insert(std::move(v));
  }
  return e.rank();
}

// Substitutes random base values for the indeterminates of every
// PolynomialCoefficients layer, ending in a scalar ring.
class Specializer {
 public:
  explicit Specializer(std::uint64_t seed) : rng_(seed) {}

  Elem operator()(const Elem& x) {
    const RingPtr& r = x.ring();
    if (r->kind() != RingKind::PolynomialCoefficients) return x;
    auto& pt = points_[r.get()];
    if (pt.empty())
      for (int i = 0; i < r->size(); ++i) pt.push_back(r->base()->from_int(static_cast<long long>(rng_() % 1000003) - 500001));
    const RingPtr& b = r->base();
    Elem acc = b->zero();
    for (const auto& t : x.terms()) {
      Elem m = t.coeff;
      for (int i = 0; i < r->size(); ++i) m = b->mul(m, b->pow(pt[static_cast<std::size_t>(i)], static_cast<unsigned>(t.exponents[static_cast<std::size_t>(i)])));
      acc = b->add(acc, m);
    }
    return (*this)(acc);
  }

 private:
  std::mt19937_64 rng_;
  std::map<const Ring*, ElemVec> points_;
};

RingPtr scalar_ring(RingPtr r) {
  while (r->kind() == RingKind::PolynomialCoefficients) r = r->base();
  return r;
}

std::size_t scalar_rank(const RingPtr& r, const std::vector<ElemVec>& rows) {
  switch (r->kind()) {
    case RingKind::Integers:
    case RingKind::Rationals: return field_rank(QField{}, rows);
    case RingKind::ModularIntegers: {
      std::size_t best = rows.size();
      for (auto p : prime_factors(r->modulus())) best = std::min(best, field_rank(FpField{p}, rows));
      return best;
    }
    default: throw Error(ErrorKind::Unsupported, "rank over " + r->spec());
  }
}

bool is_field(const RingPtr& r) {
  return r->kind() == RingKind::Rationals ||
         (r->kind() == RingKind::ModularIntegers && prime_factors(r->modulus()).size() == 1 &&
          prime_factors(r->modulus())[0] == r->modulus());
}

}  // namespace

bool rank_supported(const RingPtr& ring) {
  auto k = scalar_ring(ring)->kind();
  return k == RingKind::Integers || k == RingKind::Rationals || k == RingKind::ModularIntegers;
}

std::size_t rank(const RingPtr& ring, const std::vector<ElemVec>& rows, std::uint64_t seed) {
  if (!rank_supported(ring)) throw Error(ErrorKind::Unsupported, "rank over " + ring->spec());
  for (const auto& r : rows)
    for (const auto& x : r) ring->require(x);
  const RingPtr s = scalar_ring(ring);
  if (ring->kind() != RingKind::PolynomialCoefficients) return scalar_rank(s, rows);
  std::size_t best = 0;
  for (std::uint64_t draw = 0; draw < 3 && best < rows.size(); ++draw) {
    Specializer spec(seed * 7919 + draw);
    std::vector<ElemVec> sp;
    for (const auto& r : rows) {
      ElemVec v;
      for (const auto& x : r) v.push_back(spec(x));
      sp.push_back(std::move(v));
    }
    best = std::max(best, scalar_rank(s, sp));
  }
  return best;
}

namespace {

Elem berkowitz(const SqMatrix& m) {
  const Ring& r = *m.ring();
  const int n = m.size();
  // c holds det(xI - A_k) for the leading k x k block, highest degree first.
  ElemVec c{r.one()};
  for (int k = 0; k < n; ++k) {
    // Column of the Toeplitz factor: 1, -a_kk, -R S, -R A S, ..., -R A^{k-1} S.
    ElemVec t{r.one(), r.neg(m(k, k))};
    ElemVec s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = m(i, k);
    for (int p = 0; p < k; ++p) {
      Elem dot = r.zero();
      for (int j = 0; j < k; ++j) dot = r.add(dot, r.mul(m(k, j), s[static_cast<std::size_t>(j)]));
      t.push_back(r.neg(dot));
      ElemVec next(static_cast<std::size_t>(k), r.zero());
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          next[static_cast<std::size_t>(i)] =
              r.add(next[static_cast<std::size_t>(i)], r.mul(m(i, j), s[static_cast<std::size_t>(j)]));
      s = std::move(next);
    }
    ElemVec nc(static_cast<std::size_t>(k + 2), r.zero());
    for (std::size_t i = 0; i < nc.size(); ++i)
      for (std::size_t j = 0; j < c.size() && j <= i; ++j)
        nc[i] = r.add(nc[i], r.mul(t[i - j], c[j]));
    c = std::move(nc);
  }
  return n % 2 == 0 ? c.back() : r.neg(c.back());
}

mpz_class bareiss(const SqMatrix& m) {
  const int n = m.size();
  std::vector<mpz_class> a;
  for (const auto& x : m.entries()) a.push_back(x.integer());
  auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i * n + j)]; };
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && at(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

template <class F>
typename F::T field_det(const F& f, const SqMatrix& m, typename F::T one) {
  const int n = m.size();
  std::vector<typename F::T> a;
  for (const auto& x : m.entries()) a.push_back(f.from(x));
  auto at = [&](int i, int j) -> typename F::T& { return a[static_cast<std::size_t>(i * n + j)]; };
  typename F::T det = one;
  bool negate = false;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && F::is_zero(at(piv, k))) ++piv;
    if (piv == n) return typename F::T(0);
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      if (F::is_zero(at(i, k))) continue;
      auto factor = f.div(at(i, k), at(k, k));
      for (int j = k; j < n; ++j) at(i, j) = f.sub_mul(at(i, j), factor, at(k, j));
    }
    det = f.mul(det, at(k, k));
  }
  return negate ? f.sub_mul(typename F::T(0), one, det) : det;
}

bool unit_triangular(const SqMatrix& m) {
  const int n = m.size();
  bool upper = true, lower = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i > j && !m(i, j).is_zero()) upper = false;
      if (i < j && !m(i, j).is_zero()) lower = false;
    }
  if (!upper && !lower) return false;
  for (int i = 0; i < n; ++i)
    if (!m(i, i).is_one()) return false;
  return true;
}

}  // namespace

Elem determinant(const SqMatrix& m) {
  const RingPtr& r = m.ring();
  if (!r->is_commutative()) throw Error(ErrorKind::Unsupported, "determinant over noncommutative " + r->spec());
  if (m.size() == 0) return r->one();
  switch (r->kind()) {
    case RingKind::Integers: return r->from_integer(bareiss(m));
    case RingKind::Rationals: return r->rational(field_det(QField{}, m, mpq_class(1)));
    case RingKind::ModularIntegers:
      if (is_field(r)) return r->from_int(field_det(FpField{r->modulus()}, m, std::int64_t{1}));
      return berkowitz(m);
    default: return berkowitz(m);
  }
}

SqMatrix flatten(const SqMatrix& m) {
  const RingPtr& r = m.ring();
  if (r->kind() != RingKind::MatrixRing) throw Error(ErrorKind::RingMismatch, "flatten needs a matrix-ring base");
  const int k = r->size();
  return substitute_blocks(m, r->base(), k, [&](const Elem& e) { return SqMatrix(r->base(), k, e.entries()); });
}

bool is_invertible(const SqMatrix& m) {
  if (unit_triangular(m)) return true;
  const RingPtr& r = m.ring();
  switch (r->kind()) {
    case RingKind::MatrixRing: return is_invertible(flatten(m));
    case RingKind::Integers: {
      mpz_class d = bareiss(m);
      return d == 1 || d == -1;
    }
    case RingKind::Rationals: return !determinant(m).is_zero();
    case RingKind::ModularIntegers: {
      std::vector<ElemVec> rows;
      for (int i = 0; i < m.size(); ++i) rows.push_back(m.row(i));
      return scalar_rank(r, rows) == static_cast<std::size_t>(m.size());
    }
    default:
      if (!r->is_commutative()) throw Error(ErrorKind::Unsupported, "invertibility over noncommutative " + r->spec());
      return r->is_unit(determinant(m));
  }
}

int minimal_polynomial_degree(const SqMatrix& m) {
  const RingPtr& r = m.ring();
  auto run = [&](auto field) {
    using F = decltype(field);
    Echelon<F> e(field);
    SqMatrix power = SqMatrix::identity(r, m.size());
    for (int k = 0;; ++k) {
      std::vector<typename F::T> v;
      for (const auto& x : power.entries()) v.push_back(field.from(x));
      if (!e.insert(std::move(v))) return k;
      power = power * m;
    }
  };
  if (r->kind() == RingKind::Rationals || r->kind() == RingKind::Integers) return run(QField{});
  if (is_field(r)) return run(FpField{r->modulus()});
  throw Error(ErrorKind::Unsupported, "minimal polynomial over " + r->spec());
}

}  // namespace splitring
