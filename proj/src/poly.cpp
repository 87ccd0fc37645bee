#include "splitring/poly.hpp"

#include <algorithm>

namespace splitring {

Poly::Poly(RingPtr ring, ElemVec coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) ring_->require(c);
  // In the zero ring every coefficient is 0 == 1; keep the stated degree.
  if (ring_->is_zero_ring()) return;
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::monomial(const Elem& c, int degree) {
  ElemVec v(static_cast<std::size_t>(degree + 1), c.ring()->zero());
  v.back() = c;
  return Poly(c.ring(), std::move(v));
}

Elem Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return ring_->zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

bool Poly::has_central_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const Elem& c) { return ring_->is_central(c); });
}

Poly Poly::operator-() const {
  ElemVec v = coeffs_;
  for (auto& c : v) c = -c;
  return Poly(ring_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  ElemVec v(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1), a.ring_->zero());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly(a.ring_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.ring_);
  ElemVec v(a.coeffs_.size() + b.coeffs_.size() - 1, a.ring_->zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(a.ring_, std::move(v));
}

Poly operator*(const Elem& c, const Poly& p) {
  ElemVec v = p.coeffs_;
  for (auto& x : v) x = c * x;
  return Poly(p.ring_, std::move(v));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  ElemVec v(static_cast<std::size_t>(k), ring_->zero());
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(ring_, std::move(v));
}

Poly Poly::mod(const Poly& m) const {
  if (!m.is_monic()) throw Error(ErrorKind::NonMonic, "division by non-monic " + m.str());
  const int d = m.degree();
  ElemVec v = coeffs_;
  for (int deg = degree(); deg >= d; --deg) {
    Elem c = v[static_cast<std::size_t>(deg)];
    if (c.is_zero()) continue;
    for (int k = 0; k <= d; ++k)
      v[static_cast<std::size_t>(deg - d + k)] -= c * m.coeffs_[static_cast<std::size_t>(k)];
  }
  if (static_cast<int>(v.size()) > d) v.resize(static_cast<std::size_t>(d));
  return Poly(ring_, std::move(v));
}

Poly Poly::embedded(const RingPtr& target) const {
  ElemVec v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(target->embed(c));
  return Poly(target, std::move(v));
}

Elem Poly::eval(const Elem& x) const {
  const RingPtr& r = x.ring();
  Elem acc = r->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + r->embed(coeffs_[i]);
  return acc;
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Elem& c = coeffs_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    std::string mono = d == 0 ? "" : (d == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(d));
    bool compound = cs.find(' ') != std::string::npos;
    std::string piece;
    if (mono.empty()) {
      piece = compound ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      piece = mono;
    } else if (cs == "-1") {
      piece = "-" + mono;
    } else {
      piece = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    }
    if (out.empty()) {
      out = piece;
    } else if (piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

ElemVec signed_coefficients(const Poly& f) {
  if (!f.is_monic()) throw Error(ErrorKind::NonMonic, f.str() + " is not monic");
  const int n = f.degree();
  ElemVec a;
  for (int k = 1; k <= n; ++k) {
    Elem c = f.coeff(n - k);
    a.push_back(k % 2 == 0 ? c : -c);
  }
  return a;
}

Poly poly_from_signed(const RingPtr& ring, const ElemVec& a) {
  const int n = static_cast<int>(a.size());
  ElemVec c(static_cast<std::size_t>(n + 1), ring->zero());
  c[static_cast<std::size_t>(n)] = ring->one();
  for (int k = 1; k <= n; ++k) {
    ring->require(a[static_cast<std::size_t>(k - 1)]);
    c[static_cast<std::size_t>(n - k)] = k % 2 == 0 ? a[static_cast<std::size_t>(k - 1)] : -a[static_cast<std::size_t>(k - 1)];
  }
  return Poly(ring, std::move(c));
}

ElemVec a_to_b(const ElemVec& a) {
  const std::size_t n = a.size();
  ElemVec b(n);
  for (std::size_t j = 1; j <= n; ++j) b[n - j] = j % 2 == 0 ? a[j - 1] : -a[j - 1];
  return b;
}

ElemVec b_to_a(const ElemVec& b) {
  const std::size_t n = b.size();
  ElemVec a(n);
  for (std::size_t j = 1; j <= n; ++j) a[j - 1] = j % 2 == 0 ? b[n - j] : -b[n - j];
  return a;
}

Poly poly_from_b(const RingPtr& ring, const ElemVec& b) {
  ElemVec c = b;
  for (const auto& x : c) ring->require(x);
  c.push_back(ring->one());
  return Poly(ring, std::move(c));
}

Poly parse_poly(const RingPtr& ring, std::string_view text) {
  ElemVec v;
  for (const auto& tok : split_top_level(text)) {
    if (tok.empty()) throw Error(ErrorKind::Parse, "empty coefficient in \"" + std::string(text) + "\"");
    v.push_back(parse_elem(ring, tok));
  }
  return Poly(ring, std::move(v));
}

}  // namespace splitring
