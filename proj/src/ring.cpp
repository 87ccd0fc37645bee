#include <charconv>
#include "splitring/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "splitring/detail/expr_parser.hpp"

namespace splitring {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NonMonic: return "NonMonic";
    case ErrorKind::InfiniteRing: return "InfiniteRing";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::NonCentralCoefficients: return "NonCentralCoefficients";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Error";
}

namespace {

constexpr std::size_t kEnumerationLimit = std::size_t{1} << 20;

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) return std::nullopt;
  return mod_reduce(old_s, m);
}

bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  for (std::int64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) return false;
  return true;
}

bool is_atomic(const std::string& s) {
  if (s.find(' ') != std::string::npos) return false;
  return s.find_first_of("+-", 1) == std::string::npos;
}

// Renders sum of (coefficient, monomial) pairs; monomial "" is the constant.
std::string join_terms(const std::vector<std::pair<std::string, std::string>>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& [c, m] = pieces[i];
    std::string piece;
    if (m.empty()) {
      piece = is_atomic(c) ? c : "(" + c + ")";
      if (pieces.size() == 1) piece = c;
    } else if (c == "1") {
      piece = m;
    } else if (c == "-1") {
      piece = "-" + m;
    } else {
      piece = (is_atomic(c) ? c : "(" + c + ")") + "*" + m;
    }
    if (i == 0) {
      out = piece;
    } else if (piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

std::string power_name(const std::string& name, int e) {
  return e == 1 ? name : name + "^" + std::to_string(e);
}

// Display order for coefficient polynomials: higher total degree first,
// ties broken lexicographically with the first indeterminate largest.
bool display_before(const Exponents& a, const Exponents& b) {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

// ---------------------------------------------------------------- Elem

bool Elem::is_zero() const { return ring_->is_zero(*this); }
bool Elem::is_one() const { return ring_->equal(*this, ring_->one()); }
std::string Elem::str() const { return ring_ ? ring_->format(*this) : "<null>"; }
Elem Elem::operator-() const { return ring_->neg(*this); }
Elem operator+(const Elem& a, const Elem& b) { return a.ring_->add(a, b); }
Elem operator-(const Elem& a, const Elem& b) { return a.ring_->sub(a, b); }
Elem operator*(const Elem& a, const Elem& b) { return a.ring_->mul(a, b); }
bool operator==(const Elem& a, const Elem& b) {
  if (a.is_null() || b.is_null()) return a.is_null() && b.is_null();
  return a.ring_->equal(a, b);
}

// ---------------------------------------------------------------- factories

RingPtr Ring::integers() {
  static const RingPtr z = std::make_shared<Ring>(Private{}, RingKind::Integers);
  return z;
}

RingPtr Ring::rationals() {
  static const RingPtr q = std::make_shared<Ring>(Private{}, RingKind::Rationals);
  return q;
}

RingPtr Ring::modular(std::int64_t m) {
  if (m < 2 || m > (std::int64_t{1} << 62))
    throw Error(ErrorKind::InvalidRing, "modulus must satisfy 2 <= m <= 2^62, got " + std::to_string(m));
  auto r = std::make_shared<Ring>(Private{}, RingKind::ModularIntegers);
  r->modulus_ = m;
  return r;
}

RingPtr Ring::matrices(int k, RingPtr base) {
  if (k < 1) throw Error(ErrorKind::InvalidRing, "matrix size must be >= 1");
  if (!base) throw Error(ErrorKind::InvalidRing, "matrix ring needs a base ring");
  auto r = std::make_shared<Ring>(Private{}, RingKind::MatrixRing);
  r->size_ = k;
  r->base_ = std::move(base);
  return r;
}

RingPtr Ring::quotient(RingPtr base, const ElemVec& modulus, std::string root_name) {
  if (modulus.size() < 2) throw Error(ErrorKind::NonMonic, "quotient modulus must have degree >= 1");
  for (const auto& c : modulus) base->require(c);
  if (!modulus.back().is_one()) throw Error(ErrorKind::NonMonic, "quotient modulus must be monic");
  for (const auto& c : modulus)
    if (!base->is_central(c))
      throw Error(ErrorKind::NonCentralCoefficients, "quotient modulus coefficient " + c.str() + " is not central");
  auto r = std::make_shared<Ring>(Private{}, RingKind::UnivariateQuotient);
  r->base_ = std::move(base);
  r->poly_ = modulus;
  r->root_name_ = std::move(root_name);
  return r;
}

RingPtr Ring::polynomials(int t, RingPtr base, std::vector<std::string> names) {
  if (t < 1) throw Error(ErrorKind::InvalidRing, "PolyCoef needs at least one indeterminate");
  if (names.empty())
    for (int i = 1; i <= t; ++i) names.push_back("y" + std::to_string(i));
  if (static_cast<int>(names.size()) != t)
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(t) + " indeterminate names");
  auto r = std::make_shared<Ring>(Private{}, RingKind::PolynomialCoefficients);
  r->size_ = t;
  r->base_ = std::move(base);
  r->names_ = std::move(names);
  return r;
}

namespace {

void verify_table(const TableData& d, bool allow_trivial) {
  const std::size_t n = d.order;
  auto bad = [](const std::string& what) { throw Error(ErrorKind::InvalidRing, "table ring: " + what); };
  if (n == 0) bad("empty ring");
  if (d.add.size() != n * n || d.mul.size() != n * n) bad("tables must be order x order");
  if (d.zero >= n || d.one >= n) bad("identity index out of range");
  if (!d.names.empty() && d.names.size() != n) bad("names must list every element");
  for (auto v : d.add)
    if (v >= n) bad("addition table entry out of range");
  for (auto v : d.mul)
    if (v >= n) bad("multiplication table entry out of range");
  if (!allow_trivial && d.zero == d.one) bad("1 == 0");
  auto A = [&](std::size_t a, std::size_t b) { return d.add[a * n + b]; };
  auto M = [&](std::size_t a, std::size_t b) { return d.mul[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (A(a, d.zero) != a || A(d.zero, a) != a) bad("zero is not an additive identity");
    if (M(a, d.one) != a || M(d.one, a) != a) bad("one is not a multiplicative identity");
    bool has_neg = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) bad("addition is not commutative");
      if (A(a, b) == d.zero) has_neg = true;
    }
    if (!has_neg) bad("missing additive inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (A(A(a, b), c) != A(a, A(b, c))) bad("addition is not associative");
        if (M(M(a, b), c) != M(a, M(b, c))) bad("multiplication is not associative");
        if (M(a, A(b, c)) != A(M(a, b), M(a, c))) bad("left distributivity fails");
        if (M(A(a, b), c) != A(M(a, c), M(b, c))) bad("right distributivity fails");
      }
}

}  // namespace

RingPtr Ring::table(TableData data) {
  verify_table(data, false);
  if (data.names.empty())
    for (std::size_t i = 0; i < data.order; ++i) data.names.push_back("e" + std::to_string(i));
  auto r = std::make_shared<Ring>(Private{}, RingKind::FiniteTable);
  const std::size_t n = data.order;
  bool comm = true;
  for (std::size_t a = 0; a < n && comm; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (data.mul[a * n + b] != data.mul[b * n + a]) {
        comm = false;
        break;
      }
  r->table_commutative_ = comm;
  r->table_ = std::make_shared<const TableData>(std::move(data));
  return r;
}

RingPtr Ring::zero_ring() {
  TableData d;
  d.order = 1;
  d.add = {0};
  d.mul = {0};
  d.names = {"0"};
  auto r = std::make_shared<Ring>(Private{}, RingKind::FiniteTable);
  r->table_commutative_ = true;
  r->table_ = std::make_shared<const TableData>(std::move(d));
  return r;
}

RingPtr Ring::tabulate(RingPtr source, ElemVec elements) {
  std::map<std::string, std::uint32_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    source->require(elements[i]);
    index.emplace(source->format(elements[i]), static_cast<std::uint32_t>(i));
  }
  if (index.size() != elements.size()) throw Error(ErrorKind::InvalidRing, "tabulate: duplicate elements");
  auto find = [&](const Elem& e) {
    auto it = index.find(source->format(e));
    if (it == index.end()) throw Error(ErrorKind::InvalidRing, "tabulate: subset not closed, missing " + e.str());
    return it->second;
  };
  TableData d;
  d.order = elements.size();
  d.add.resize(d.order * d.order);
  d.mul.resize(d.order * d.order);
  for (std::size_t a = 0; a < d.order; ++a)
    for (std::size_t b = 0; b < d.order; ++b) {
      d.add[a * d.order + b] = find(elements[a] + elements[b]);
      d.mul[a * d.order + b] = find(elements[a] * elements[b]);
    }
  d.zero = find(source->zero());
  d.one = find(source->one());
  for (const auto& e : elements) d.names.push_back(source->format(e));
  RingPtr built = d.order == 1 ? zero_ring() : table(std::move(d));
  auto r = std::const_pointer_cast<Ring>(built);
  r->source_ = std::move(source);
  r->source_elems_ = std::move(elements);
  return r;
}

// ---------------------------------------------------------------- basics

void Ring::require(const Elem& a) const {
  if (a.is_null()) throw Error(ErrorKind::RingMismatch, "null element");
  if (a.ring().get() != this && !a.ring()->same(*this))
    throw Error(ErrorKind::RingMismatch, "element of " + a.ring()->spec() + " used in " + spec());
}

bool Ring::same(const Ring& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Rationals: return true;
    case RingKind::ModularIntegers: return modulus_ == o.modulus_;
    case RingKind::MatrixRing:
    case RingKind::PolynomialCoefficients: return size_ == o.size_ && base_->same(*o.base_);
    case RingKind::UnivariateQuotient:
      if (!base_->same(*o.base_) || poly_.size() != o.poly_.size()) return false;
      for (std::size_t i = 0; i < poly_.size(); ++i)
        if (!base_->equal(poly_[i], o.poly_[i])) return false;
      return true;
    case RingKind::FiniteTable: return table_ == o.table_;
  }
  return false;
}

Elem Ring::zero() const { return from_int(0); }
Elem Ring::one() const { return from_int(1); }
Elem Ring::from_int(long long v) const {
  if (kind_ == RingKind::ModularIntegers) return make(mod_reduce(v, modulus_));
  return from_integer(mpz_class(static_cast<long>(v)));
}

Elem Ring::from_integer(const mpz_class& v) const {
  switch (kind_) {
    case RingKind::Integers: return make(v);
    case RingKind::Rationals: return make(mpq_class(v));
    case RingKind::ModularIntegers: {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mpz_class(static_cast<long>(modulus_)).get_mpz_t());
      return make(static_cast<std::int64_t>(r.get_si()));
    }
    case RingKind::MatrixRing: {
      ElemVec e(static_cast<std::size_t>(size_ * size_), base_->zero());
      Elem d = base_->from_integer(v);
      for (int i = 0; i < size_; ++i) e[static_cast<std::size_t>(i * size_ + i)] = d;
      return make(std::make_shared<const ElemVec>(std::move(e)));
    }
    case RingKind::UnivariateQuotient: return residue({base_->from_integer(v)});
    case RingKind::PolynomialCoefficients:
      return polynomial({Term{Exponents(static_cast<std::size_t>(size_), 0), base_->from_integer(v)}});
    case RingKind::FiniteTable: {
      const auto& t = *table_;
      std::uint32_t acc = t.zero, step = t.one;
      mpz_class k = abs(v);
      while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = t.add[acc * t.order + step];
        step = t.add[step * t.order + step];
        k >>= 1;
      }
      Elem e = make(static_cast<std::int64_t>(acc));
      return v < 0 ? neg(e) : e;
    }
  }
  throw Error(ErrorKind::InvalidRing, "unknown ring kind");
}

Elem Ring::rational(const mpq_class& q) const {
  if (kind_ == RingKind::Rationals) {
    mpq_class c = q;
    c.canonicalize();
    return make(std::move(c));
  }
  return mul(from_integer(q.get_num()), invert(from_integer(q.get_den())));
}

Elem Ring::matrix(ElemVec entries) const {
  if (kind_ != RingKind::MatrixRing) throw Error(ErrorKind::RingMismatch, "not a matrix ring: " + spec());
  if (entries.size() != static_cast<std::size_t>(size_ * size_))
    throw Error(ErrorKind::LengthMismatch, "matrix literal must have " + std::to_string(size_ * size_) + " entries");
  for (const auto& e : entries) base_->require(e);
  return make(std::make_shared<const ElemVec>(std::move(entries)));
}

Elem Ring::reduce_residue(ElemVec v) const {
  const int d = quotient_degree();
  for (int deg = static_cast<int>(v.size()) - 1; deg >= d; --deg) {
    Elem c = v[static_cast<std::size_t>(deg)];
    if (base_->is_zero(c)) continue;
    for (int k = 0; k < d; ++k)
      v[static_cast<std::size_t>(deg - d + k)] =
          base_->sub(v[static_cast<std::size_t>(deg - d + k)], base_->mul(c, poly_[static_cast<std::size_t>(k)]));
  }
  if (static_cast<int>(v.size()) > d) v.resize(static_cast<std::size_t>(d));
  while (!v.empty() && base_->is_zero(v.back())) v.pop_back();
  return make(std::make_shared<const ElemVec>(std::move(v)));
}

Elem Ring::residue(ElemVec coeffs) const {
  if (kind_ != RingKind::UnivariateQuotient) throw Error(ErrorKind::RingMismatch, "not a quotient ring: " + spec());
  for (const auto& c : coeffs) base_->require(c);
  return reduce_residue(std::move(coeffs));
}

Elem Ring::normalize_terms(TermVec terms) const {
  std::map<Exponents, Elem> acc;
  for (auto& t : terms) {
    auto [it, inserted] = acc.emplace(t.exponents, t.coeff);
    if (!inserted) it->second = base_->add(it->second, t.coeff);
  }
  TermVec out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!base_->is_zero(c)) out.push_back(Term{e, c});
  return make(std::make_shared<const TermVec>(std::move(out)));
}

Elem Ring::polynomial(TermVec terms) const {
  if (kind_ != RingKind::PolynomialCoefficients)
    throw Error(ErrorKind::RingMismatch, "not a polynomial coefficient ring: " + spec());
  for (const auto& t : terms) {
    if (t.exponents.size() != static_cast<std::size_t>(size_))
      throw Error(ErrorKind::LengthMismatch, "exponent vector length mismatch");
    base_->require(t.coeff);
  }
  return normalize_terms(std::move(terms));
}

Elem Ring::table_elem(std::uint32_t index) const {
  if (kind_ != RingKind::FiniteTable) throw Error(ErrorKind::RingMismatch, "not a table ring: " + spec());
  if (index >= table_->order) throw Error(ErrorKind::IndexOutOfRange, "table index out of range");
  return make(static_cast<std::int64_t>(index));
}

Elem Ring::indeterminate(int i) const {
  if (kind_ != RingKind::PolynomialCoefficients) throw Error(ErrorKind::RingMismatch, "no indeterminates in " + spec());
  if (i < 0 || i >= size_) throw Error(ErrorKind::IndexOutOfRange, "indeterminate index " + std::to_string(i));
  Exponents e(static_cast<std::size_t>(size_), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return polynomial({Term{e, base_->one()}});
}

Elem Ring::root() const {
  if (kind_ != RingKind::UnivariateQuotient) throw Error(ErrorKind::RingMismatch, "no adjoined root in " + spec());
  return reduce_residue({base_->zero(), base_->one()});
}

Elem Ring::embed(const Elem& x) const {
  if (x.ring().get() == this || x.ring()->same(*this)) return x;
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::ModularIntegers:
    case RingKind::FiniteTable:
      if (x.ring()->kind() == RingKind::Integers) return from_integer(x.integer());
      if (x.ring()->kind() == RingKind::Rationals && kind_ != RingKind::FiniteTable) return rational(x.rational());
      break;
    case RingKind::MatrixRing: {
      Elem d = base_->embed(x);
      ElemVec e(static_cast<std::size_t>(size_ * size_), base_->zero());
      for (int i = 0; i < size_; ++i) e[static_cast<std::size_t>(i * size_ + i)] = d;
      return make(std::make_shared<const ElemVec>(std::move(e)));
    }
    case RingKind::UnivariateQuotient: return reduce_residue({base_->embed(x)});
    case RingKind::PolynomialCoefficients:
      return normalize_terms({Term{Exponents(static_cast<std::size_t>(size_), 0), base_->embed(x)}});
  }
  throw Error(ErrorKind::RingMismatch, "cannot embed element of " + x.ring()->spec() + " into " + spec());
}

// ---------------------------------------------------------------- arithmetic

Elem Ring::add(const Elem& a, const Elem& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case RingKind::Integers: return make(mpz_class(a.integer() + b.integer()));
    case RingKind::Rationals: return make(mpq_class(a.rational() + b.rational()));
    case RingKind::ModularIntegers: {
      std::int64_t s = a.small() + b.small();
      return make(s >= modulus_ ? s - modulus_ : s);
    }
    case RingKind::MatrixRing: {
      const auto &x = a.entries(), &y = b.entries();
      ElemVec e(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) e[i] = base_->add(x[i], y[i]);
      return make(std::make_shared<const ElemVec>(std::move(e)));
    }
    case RingKind::UnivariateQuotient: {
      const auto &x = a.entries(), &y = b.entries();
      ElemVec e(std::max(x.size(), y.size()), base_->zero());
      for (std::size_t i = 0; i < x.size(); ++i) e[i] = x[i];
      for (std::size_t i = 0; i < y.size(); ++i) e[i] = base_->add(e[i], y[i]);
      return reduce_residue(std::move(e));
    }
    case RingKind::PolynomialCoefficients: {
      TermVec t = a.terms();
      t.insert(t.end(), b.terms().begin(), b.terms().end());
      return normalize_terms(std::move(t));
    }
    case RingKind::FiniteTable:
      return make(static_cast<std::int64_t>(table_->add[static_cast<std::size_t>(a.small()) * table_->order +
                                                        static_cast<std::size_t>(b.small())]));
  }
  throw Error(ErrorKind::InvalidRing, "unknown ring kind");
}

Elem Ring::neg(const Elem& a) const {
  require(a);
  switch (kind_) {
    case RingKind::Integers: return make(mpz_class(-a.integer()));
    case RingKind::Rationals: return make(mpq_class(-a.rational()));
    case RingKind::ModularIntegers: return make(a.small() == 0 ? std::int64_t{0} : modulus_ - a.small());
    case RingKind::MatrixRing:
    case RingKind::UnivariateQuotient: {
      ElemVec e = a.entries();
      for (auto& x : e) x = base_->neg(x);
      return make(std::make_shared<const ElemVec>(std::move(e)));
    }
    case RingKind::PolynomialCoefficients: {
      TermVec t = a.terms();
      for (auto& x : t) x.coeff = base_->neg(x.coeff);
      return make(std::make_shared<const TermVec>(std::move(t)));
    }
    case RingKind::FiniteTable: {
      const std::size_t n = table_->order;
      for (std::size_t b = 0; b < n; ++b)
        if (table_->add[static_cast<std::size_t>(a.small()) * n + b] == table_->zero)
          return make(static_cast<std::int64_t>(b));
      break;
    }
  }
  throw Error(ErrorKind::InvalidRing, "negation failed");
}

Elem Ring::sub(const Elem& a, const Elem& b) const {
  if (kind_ == RingKind::Integers) {
    require(a);
    require(b);
    return make(mpz_class(a.integer() - b.integer()));
  }
  if (kind_ == RingKind::ModularIntegers) {
    require(a);
    require(b);
    std::int64_t s = a.small() - b.small();
    return make(s < 0 ? s + modulus_ : s);
  }
  return add(a, neg(b));
}

Elem Ring::mul(const Elem& a, const Elem& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case RingKind::Integers: return make(mpz_class(a.integer() * b.integer()));
    case RingKind::Rationals: return make(mpq_class(a.rational() * b.rational()));
    case RingKind::ModularIntegers: return make(mod_mul(a.small(), b.small(), modulus_));
    case RingKind::MatrixRing: {
      const auto &x = a.entries(), &y = b.entries();
      const auto k = static_cast<std::size_t>(size_);
      ElemVec e(k * k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          Elem s = base_->mul(x[i * k], y[j]);
          for (std::size_t l = 1; l < k; ++l) s = base_->add(s, base_->mul(x[i * k + l], y[l * k + j]));
          e[i * k + j] = s;
        }
      return make(std::make_shared<const ElemVec>(std::move(e)));
    }
    case RingKind::UnivariateQuotient: {
      const auto &x = a.entries(), &y = b.entries();
      if (x.empty() || y.empty()) return reduce_residue({});
      ElemVec e(x.size() + y.size() - 1, base_->zero());
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) e[i + j] = base_->add(e[i + j], base_->mul(x[i], y[j]));
      return reduce_residue(std::move(e));
    }
    case RingKind::PolynomialCoefficients: {
      std::map<Exponents, Elem> acc;
      for (const auto& s : a.terms())
        for (const auto& t : b.terms()) {
          Exponents e = s.exponents;
          for (std::size_t i = 0; i < e.size(); ++i) e[i] += t.exponents[i];
          Elem c = base_->mul(s.coeff, t.coeff);
          auto [it, inserted] = acc.emplace(std::move(e), c);
          if (!inserted) it->second = base_->add(it->second, c);
        }
      TermVec out;
      out.reserve(acc.size());
      for (auto& [e, c] : acc)
        if (!base_->is_zero(c)) out.push_back(Term{e, c});
      return make(std::make_shared<const TermVec>(std::move(out)));
    }
    case RingKind::FiniteTable:
      return make(static_cast<std::int64_t>(table_->mul[static_cast<std::size_t>(a.small()) * table_->order +
                                                        static_cast<std::size_t>(b.small())]));
  }
  throw Error(ErrorKind::InvalidRing, "unknown ring kind");
}

Elem Ring::pow(const Elem& a, unsigned e) const {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

std::optional<Elem> Ring::try_invert(const Elem& a) const {
  require(a);
  switch (kind_) {
    case RingKind::Integers:
      if (a.integer() == 1 || a.integer() == -1) return a;
      return std::nullopt;
    case RingKind::Rationals:
      if (a.rational() == 0) return std::nullopt;
      return make(mpq_class(1 / a.rational()));
    case RingKind::ModularIntegers: {
      auto inv = mod_inverse(a.small(), modulus_);
      if (!inv) return std::nullopt;
      return make(*inv);
    }
    case RingKind::PolynomialCoefficients: {
      const auto& t = a.terms();
      if (t.size() != 1 || std::any_of(t[0].exponents.begin(), t[0].exponents.end(), [](int e) { return e != 0; }))
        return std::nullopt;
      auto c = base_->try_invert(t[0].coeff);
      if (!c) return std::nullopt;
      return embed(*c);
    }
    case RingKind::MatrixRing: {
      const bool field = base_->kind() == RingKind::Rationals ||
                         (base_->kind() == RingKind::ModularIntegers && is_prime(base_->modulus()));
      if (field) {
        const auto k = static_cast<std::size_t>(size_);
        ElemVec m = a.entries(), inv(k * k, base_->zero());
        for (std::size_t i = 0; i < k; ++i) inv[i * k + i] = base_->one();
        for (std::size_t col = 0; col < k; ++col) {
          std::size_t piv = col;
          while (piv < k && base_->is_zero(m[piv * k + col])) ++piv;
          if (piv == k) return std::nullopt;
          for (std::size_t j = 0; j < k; ++j) {
            std::swap(m[piv * k + j], m[col * k + j]);
            std::swap(inv[piv * k + j], inv[col * k + j]);
          }
          Elem p = base_->invert(m[col * k + col]);
          for (std::size_t j = 0; j < k; ++j) {
            m[col * k + j] = base_->mul(p, m[col * k + j]);
            inv[col * k + j] = base_->mul(p, inv[col * k + j]);
          }
          for (std::size_t r = 0; r < k; ++r) {
            if (r == col || base_->is_zero(m[r * k + col])) continue;
            Elem f = m[r * k + col];
            for (std::size_t j = 0; j < k; ++j) {
              m[r * k + j] = base_->sub(m[r * k + j], base_->mul(f, m[col * k + j]));
              inv[r * k + j] = base_->sub(inv[r * k + j], base_->mul(f, inv[col * k + j]));
            }
          }
        }
        return make(std::make_shared<const ElemVec>(std::move(inv)));
      }
      [[fallthrough]];
    }
    case RingKind::UnivariateQuotient:
    case RingKind::FiniteTable: {
      if (!is_finite()) throw Error(ErrorKind::Unsupported, "inversion in " + spec());
      const Elem u = one();
      for (const auto& b : elements())
        if (equal(mul(a, b), u) && equal(mul(b, a), u)) return b;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Elem Ring::invert(const Elem& a) const {
  auto inv = try_invert(a);
  if (!inv) throw Error(ErrorKind::NotAUnit, format(a) + " is not a unit in " + spec());
  return *inv;
}

bool Ring::is_zero(const Elem& a) const {
  require(a);
  switch (kind_) {
    case RingKind::Integers: return a.integer() == 0;
    case RingKind::Rationals: return a.rational() == 0;
    case RingKind::ModularIntegers: return a.small() == 0;
    case RingKind::MatrixRing:
      return std::all_of(a.entries().begin(), a.entries().end(), [&](const Elem& x) { return base_->is_zero(x); });
    case RingKind::UnivariateQuotient: return a.entries().empty();
    case RingKind::PolynomialCoefficients: return a.terms().empty();
    case RingKind::FiniteTable: return static_cast<std::uint32_t>(a.small()) == table_->zero;
  }
  return false;
}

bool Ring::equal(const Elem& a, const Elem& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case RingKind::Integers: return a.integer() == b.integer();
    case RingKind::Rationals: return a.rational() == b.rational();
    case RingKind::ModularIntegers:
    case RingKind::FiniteTable: return a.small() == b.small();
    case RingKind::MatrixRing:
    case RingKind::UnivariateQuotient: {
      const auto &x = a.entries(), &y = b.entries();
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (!base_->equal(x[i], y[i])) return false;
      return true;
    }
    case RingKind::PolynomialCoefficients: {
      const auto &x = a.terms(), &y = b.terms();
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].exponents != y[i].exponents || !base_->equal(x[i].coeff, y[i].coeff)) return false;
      return true;
    }
  }
  return false;
}

bool Ring::is_central(const Elem& a) const {
  require(a);
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::ModularIntegers: return true;
    case RingKind::MatrixRing: {
      const auto& e = a.entries();
      const auto k = static_cast<std::size_t>(size_);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          if (i != j && !base_->is_zero(e[i * k + j])) return false;
          if (i == j && !base_->equal(e[i * k + j], e[0])) return false;
        }
      return base_->is_central(e[0]);
    }
    case RingKind::UnivariateQuotient:
      return std::all_of(a.entries().begin(), a.entries().end(), [&](const Elem& c) { return base_->is_central(c); });
    case RingKind::PolynomialCoefficients:
      return std::all_of(a.terms().begin(), a.terms().end(),
                         [&](const Term& t) { return base_->is_central(t.coeff); });
    case RingKind::FiniteTable: {
      if (table_commutative_) return true;
      const std::size_t n = table_->order;
      const auto x = static_cast<std::size_t>(a.small());
      for (std::size_t b = 0; b < n; ++b)
        if (table_->mul[x * n + b] != table_->mul[b * n + x]) return false;
      return true;
    }
  }
  return false;
}

bool Ring::is_commutative() const {
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::ModularIntegers: return true;
    case RingKind::MatrixRing: return size_ == 1 && base_->is_commutative();
    case RingKind::UnivariateQuotient:
    case RingKind::PolynomialCoefficients: return base_->is_commutative();
    case RingKind::FiniteTable: return table_commutative_;
  }
  return false;
}

bool Ring::is_finite() const {
  switch (kind_) {
    case RingKind::ModularIntegers:
    case RingKind::FiniteTable: return true;
    case RingKind::MatrixRing:
    case RingKind::UnivariateQuotient: return base_->is_finite();
    default: return false;
  }
}

bool Ring::is_zero_ring() const { return kind_ == RingKind::FiniteTable && table_->order == 1; }

std::optional<std::size_t> Ring::order() const {
  auto power = [](std::size_t b, std::size_t e) -> std::optional<std::size_t> {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
      if (r > (std::size_t{1} << 40) / std::max<std::size_t>(b, 1)) return std::nullopt;
      r *= b;
    }
    return r;
  };
  switch (kind_) {
    case RingKind::ModularIntegers: return static_cast<std::size_t>(modulus_);
    case RingKind::FiniteTable: return table_->order;
    case RingKind::MatrixRing:
    case RingKind::UnivariateQuotient: {
      auto b = base_->order();
      if (!b) return std::nullopt;
      std::size_t e = kind_ == RingKind::MatrixRing ? static_cast<std::size_t>(size_ * size_)
                                                    : static_cast<std::size_t>(quotient_degree());
      return power(*b, e);
    }
    default: return std::nullopt;
  }
}

ElemVec Ring::elements() const {
  if (!is_finite()) throw Error(ErrorKind::InfiniteRing, spec() + " is not finite");
  auto n = order();
  if (!n || *n > kEnumerationLimit) throw Error(ErrorKind::Unsupported, spec() + " is too large to enumerate");
  ElemVec out;
  out.reserve(*n);
  switch (kind_) {
    case RingKind::ModularIntegers:
    case RingKind::FiniteTable:
      for (std::size_t i = 0; i < *n; ++i) out.push_back(make(static_cast<std::int64_t>(i)));
      return out;
    case RingKind::MatrixRing:
    case RingKind::UnivariateQuotient: {
      const ElemVec digits = base_->elements();
      const std::size_t slots = kind_ == RingKind::MatrixRing ? static_cast<std::size_t>(size_ * size_)
                                                              : static_cast<std::size_t>(quotient_degree());
      std::vector<std::size_t> idx(slots, 0);
      for (std::size_t count = 0; count < *n; ++count) {
        ElemVec e(slots);
        for (std::size_t s = 0; s < slots; ++s) e[s] = digits[idx[s]];
        out.push_back(kind_ == RingKind::MatrixRing ? matrix(std::move(e)) : residue(std::move(e)));
        for (std::size_t s = 0; s < slots; ++s) {
          if (++idx[s] < digits.size()) break;
          idx[s] = 0;
        }
      }
      return out;
    }
    default: break;
  }
  throw Error(ErrorKind::InfiniteRing, spec() + " is not finite");
}

// ---------------------------------------------------------------- text

std::string Ring::format(const Elem& a) const {
  require(a);
  switch (kind_) {
    case RingKind::Integers: return a.integer().get_str();
    case RingKind::Rationals: return a.rational().get_str();
    case RingKind::ModularIntegers: return std::to_string(a.small());
    case RingKind::MatrixRing: {
      const auto& e = a.entries();
      const auto k = static_cast<std::size_t>(size_);
      std::string out = "[";
      for (std::size_t i = 0; i < k; ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < k; ++j) out += (j ? "," : "") + base_->format(e[i * k + j]);
        out += "]";
      }
      return out + "]";
    }
    case RingKind::UnivariateQuotient: {
      const auto& e = a.entries();
      std::vector<std::pair<std::string, std::string>> pieces;
      for (std::size_t d = e.size(); d-- > 0;)
        if (!base_->is_zero(e[d]))
          pieces.emplace_back(base_->format(e[d]), d == 0 ? "" : power_name(root_name_, static_cast<int>(d)));
      return join_terms(pieces);
    }
    case RingKind::PolynomialCoefficients: {
      TermVec t = a.terms();
      std::sort(t.begin(), t.end(), [](const Term& x, const Term& y) { return display_before(x.exponents, y.exponents); });
      std::vector<std::pair<std::string, std::string>> pieces;
      for (const auto& term : t) {
        std::string mono;
        for (std::size_t i = 0; i < term.exponents.size(); ++i)
          if (term.exponents[i] > 0) mono += (mono.empty() ? "" : "*") + power_name(names_[i], term.exponents[i]);
        pieces.emplace_back(base_->format(term.coeff), mono);
      }
      return join_terms(pieces);
    }
    case RingKind::FiniteTable: return table_->names[static_cast<std::size_t>(a.small())];
  }
  return "?";
}

std::string Ring::spec() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::ModularIntegers: return "Zmod:" + std::to_string(modulus_);
    case RingKind::MatrixRing: return "Mat:" + std::to_string(size_) + ":" + base_->spec();
    case RingKind::PolynomialCoefficients: return "PolyCoef:" + std::to_string(size_) + ":" + base_->spec();
    case RingKind::UnivariateQuotient: {
      std::string m;
      for (std::size_t i = 0; i < poly_.size(); ++i) m += (i ? "," : "") + base_->format(poly_[i]);
      return "Quot:" + base_->spec() + ":[" + m + "]";
    }
    case RingKind::FiniteTable:
      if (source_) return "Table:" + std::to_string(table_->order) + ":" + source_->spec();
      return "Table:" + std::to_string(table_->order);
  }
  return "?";
}

std::optional<Elem> Ring::symbol(std::string_view name) const {
  switch (kind_) {
    case RingKind::PolynomialCoefficients:
      for (int i = 0; i < size_; ++i)
        if (names_[static_cast<std::size_t>(i)] == name) return indeterminate(i);
      break;
    case RingKind::UnivariateQuotient:
      if (root_name_ == name) return root();
      break;
    case RingKind::FiniteTable:
      for (std::size_t i = 0; i < table_->order; ++i)
        if (table_->names[i] == name) return make(static_cast<std::int64_t>(i));
      return std::nullopt;
    default: break;
  }
  if (base_) {
    auto s = base_->symbol(name);
    if (s) return embed(*s);
  }
  return std::nullopt;
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& s : out) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
  }
  return out;
}

namespace {

struct ElemOps {
  using Value = Elem;
  RingPtr ring;

  Elem integer(const mpz_class& v) { return ring->from_integer(v); }
  Elem symbol(std::string_view name) {
    auto s = ring->symbol(name);
    if (!s) throw Error(ErrorKind::Parse, "unknown symbol '" + std::string(name) + "' in " + ring->spec());
    return *s;
  }
  Elem add(const Elem& a, const Elem& b) { return a + b; }
  Elem sub(const Elem& a, const Elem& b) { return a - b; }
  Elem mul(const Elem& a, const Elem& b) { return a * b; }
  Elem neg(const Elem& a) { return -a; }
  Elem div(const Elem& a, const Elem& b) { return a * ring->invert(b); }
  Elem pow(const Elem& a, unsigned e) { return ring->pow(a, e); }
  Elem bracket(std::string_view text) {
    if (ring->kind() == RingKind::MatrixRing) {
      auto strip = [](std::string_view s) {
        if (s.size() < 2 || s.front() != '[' || s.back() != ']')
          throw Error(ErrorKind::Parse, "malformed matrix literal '" + std::string(s) + "'");
        return s.substr(1, s.size() - 2);
      };
      ElemVec entries;
      for (const auto& row : split_top_level(strip(text)))
        for (const auto& cell : split_top_level(strip(row))) entries.push_back(parse_elem(ring->base(), cell));
      return ring->matrix(std::move(entries));
    }
    if (ring->kind() == RingKind::FiniteTable && ring->table_source()) {
      Elem s = parse_elem(ring->table_source(), text);
      const auto& src = ring->table_source_elements();
      for (std::size_t i = 0; i < src.size(); ++i)
        if (src[i] == s) return ring->table_elem(static_cast<std::uint32_t>(i));
      throw Error(ErrorKind::Parse, "'" + std::string(text) + "' is not an element of " + ring->spec());
    }
    if (ring->base()) return ring->embed(parse_elem(ring->base(), text));
    throw Error(ErrorKind::Parse, "matrix literal in non-matrix ring " + ring->spec());
  }
};

}  // namespace

Elem parse_elem(const RingPtr& ring, std::string_view text) {
  ElemOps ops{ring};
  return detail::ExprParser<ElemOps>(text, ops).parse();
}

namespace {

RingPtr parse_ring_at(std::string_view s, std::size_t offset) {
  auto fail = [&](const std::string& what) -> RingPtr {
    throw Error(ErrorKind::InvalidRing, what + " at position " + std::to_string(offset));
  };
  auto head_end = s.find(':');
  std::string_view head = s.substr(0, head_end);
  auto number_then_rest = [&](std::string_view what) -> std::pair<long long, std::size_t> {
    if (head_end == std::string_view::npos) fail(std::string(what) + " needs ':<number>'");
    std::size_t p = head_end + 1, q = p;
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
    if (q == p) fail("expected a number");
    long long v = 0;
    if (std::from_chars(s.data() + p, s.data() + q, v).ec != std::errc{}) fail("number too large");
    return {v, q};
  };
  if (head == "Z" && head_end == std::string_view::npos) return Ring::integers();
  if (head == "Q" && head_end == std::string_view::npos) return Ring::rationals();
  if (head == "Zmod") {
    auto [m, q] = number_then_rest(head);
    if (q != s.size()) fail("trailing characters after modulus");
    return Ring::modular(m);
  }
  if (head == "Mat" || head == "PolyCoef" || head == "UTri") {
    auto [k, q] = number_then_rest(head);
    if (q >= s.size() || s[q] != ':') fail("expected ':<ringspec>' after size");
    RingPtr base = parse_ring_at(s.substr(q + 1), offset + q + 1);
    if (head == "Mat") return Ring::matrices(static_cast<int>(k), base);
    if (head == "PolyCoef") return Ring::polynomials(static_cast<int>(k), base);
    if (!base->is_finite()) fail("UTri needs a finite base ring");
    RingPtr full = Ring::matrices(static_cast<int>(k), base);
    ElemVec upper;
    for (const auto& m : full->elements()) {
      bool ok = true;
      for (long long i = 0; i < k && ok; ++i)
        for (long long j = 0; j < i; ++j)
          if (!m.entries()[static_cast<std::size_t>(i * k + j)].is_zero()) {
            ok = false;
            break;
          }
      if (ok) upper.push_back(m);
    }
    return Ring::tabulate(full, std::move(upper));
  }
  return fail("unknown ring '" + std::string(s) + "'");
}

}  // namespace

RingPtr parse_ring(std::string_view spec) { return parse_ring_at(spec, 0); }

}  // namespace splitring
