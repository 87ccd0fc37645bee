#include "splitring/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "splitring/detail/expr_parser.hpp"

namespace splitring {

MPoly MPoly::constant(const RingPtr& ring, int num_vars, const Elem& c) {
  MPoly p(ring, num_vars);
  p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), c);
  return p;
}

MPoly MPoly::variable(const RingPtr& ring, int num_vars, int i) {
  if (i < 1 || i > num_vars)
    throw Error(ErrorKind::IndexOutOfRange, "variable X" + std::to_string(i) + " outside 1.." + std::to_string(num_vars));
  Exponents e(static_cast<std::size_t>(num_vars), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(ring, std::move(e), ring->one());
}

MPoly MPoly::monomial(const RingPtr& ring, Exponents exponents, const Elem& c) {
  MPoly p(ring, static_cast<int>(exponents.size()));
  p.add_term(exponents, c);
  return p;
}

Elem MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ring_->zero() : it->second;
}

void MPoly::add_term(const Exponents& e, const Elem& c) {
  if (e.size() != static_cast<std::size_t>(num_vars_))
    throw Error(ErrorKind::LengthMismatch, "exponent vector length " + std::to_string(e.size()) + " in " +
                                               std::to_string(num_vars_) + " variables");
  ring_->require(c);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::check_compatible(const MPoly& other) const {
  if (num_vars_ != other.num_vars_)
    throw Error(ErrorKind::LengthMismatch, "polynomials in different numbers of variables");
  if (ring_.get() != other.ring_.get() && !ring_->same(*other.ring_))
    throw Error(ErrorKind::RingMismatch, "polynomials over " + ring_->spec() + " and " + other.ring_->spec());
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  a.check_compatible(b);
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_compatible(b);
  MPoly r(a.ring_, a.num_vars_);
  Exponents e(static_cast<std::size_t>(a.num_vars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly operator*(const Elem& c, const MPoly& p) {
  MPoly r(p.ring_, p.num_vars_);
  for (const auto& [e, x] : p.terms_) r.add_term(e, c * x);
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.num_vars_ != b.num_vars_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (it->first != e || it->second != c) return false;
    ++it;
  }
  return true;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(ring_, num_vars_, ring_->one());
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

MPoly MPoly::swapped(int i, int j) const {
  if (i < 1 || j < 1 || i > num_vars_ || j > num_vars_)
    throw Error(ErrorKind::IndexOutOfRange, "swap of X" + std::to_string(i) + ", X" + std::to_string(j));
  MPoly r(ring_, num_vars_);
  for (const auto& [e, c] : terms_) {
    Exponents s = e;
    std::swap(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(j - 1)]);
    r.terms_.emplace(std::move(s), c);
  }
  return r;
}

int MPoly::degree_in(int i) const {
  int d = is_zero() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i - 1)]);
  return d;
}

int MPoly::total_degree() const {
  int d = is_zero() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MPoly::uses_only(int k) const {
  for (const auto& [e, c] : terms_)
    for (std::size_t i = static_cast<std::size_t>(std::max(k, 0)); i < e.size(); ++i)
      if (e[i] != 0) return false;
  return true;
}

std::string monomial_str(const Exponents& e, std::string_view var) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += std::string(var) + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

namespace {

bool compound(const std::string& s) {
  return s.find(' ') != std::string::npos || s.find_first_of("+-", 1) != std::string::npos;
}

std::string signed_piece(const std::string& coeff, const std::string& mono) {
  if (mono.empty()) return compound(coeff) ? "(" + coeff + ")" : coeff;
  if (coeff == "1") return mono;
  if (coeff == "-1") return "-" + mono;
  return (compound(coeff) ? "(" + coeff + ")" : coeff) + "*" + mono;
}

void append(std::string& out, const std::string& piece, const char* plus, const char* minus) {
  if (out.empty()) {
    out = piece;
  } else if (piece[0] == '-') {
    out += minus + piece.substr(1);
  } else {
    out += plus + piece;
  }
}

}  // namespace

std::string MPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) append(out, signed_piece(c.str(), monomial_str(e, var)), " + ", " - ");
  return out;
}

std::string MPoly::grouped_str(std::string_view var) const {
  if (is_zero()) return "0";
  struct Group {
    std::string key;
    std::vector<std::pair<bool, std::string>> members;  // (negative, monomial)
  };
  std::vector<Group> groups;
  for (const auto& [e, c] : terms_) {
    std::string s = c.str();
    bool negative = s[0] == '-';
    std::string key = negative ? (-c).str() : s;
    if (key[0] == '-') {
      negative = false;
      key = s;
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return g.key == key; });
    if (it == groups.end()) {
      groups.push_back(Group{key, {}});
      it = std::prev(groups.end());
    }
    it->members.emplace_back(negative, monomial_str(e, var));
  }
  std::string out;
  std::optional<bool> unit_constant;  // sign of a +-1 constant term, printed last
  for (const auto& g : groups) {
    if (g.key == "1") {
      for (const auto& [neg, mono] : g.members) {
        if (mono.empty())
          unit_constant = neg;
        else
          append(out, neg ? "-" + mono : mono, " + ", " - ");
      }
      continue;
    }
    const bool lead_negative = g.members.front().first;
    std::string inner;
    for (const auto& [neg, mono] : g.members) {
      std::string m = mono.empty() ? "1" : mono;
      append(inner, neg != lead_negative ? "-" + m : m, "+", "-");
    }
    std::string piece;
    if (g.members.size() == 1) {
      piece = signed_piece(g.key, g.members.front().second);
    } else {
      piece = (compound(g.key) ? "(" + g.key + ")" : g.key) + "*(" + inner + ")";
    }
    append(out, lead_negative ? "-" + piece : piece, " + ", " - ");
  }
  if (unit_constant) append(out, *unit_constant ? "-1" : "1", " + ", " - ");
  return out;
}

namespace {

struct MPolyOps {
  using Value = MPoly;
  RingPtr ring;
  int n;

  MPoly integer(const mpz_class& v) { return MPoly::constant(ring, n, ring->from_integer(v)); }
  MPoly symbol(std::string_view name) {
    if (name.size() > 1 && name[0] == 'X' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return MPoly::variable(ring, n, std::stoi(std::string(name.substr(1))));
    auto s = ring->symbol(name);
    if (!s) throw Error(ErrorKind::Parse, "unknown symbol '" + std::string(name) + "'");
    return MPoly::constant(ring, n, *s);
  }
  MPoly add(const MPoly& a, const MPoly& b) { return a + b; }
  MPoly sub(const MPoly& a, const MPoly& b) { return a - b; }
  MPoly mul(const MPoly& a, const MPoly& b) { return a * b; }
  MPoly neg(const MPoly& a) { return -a; }
  MPoly div(const MPoly& a, const MPoly& b) {
    if (b.total_degree() != 0) throw Error(ErrorKind::Parse, "division by a non-constant polynomial");
    return ring->invert(b.coeff(Exponents(static_cast<std::size_t>(n), 0))) * a;
  }
  MPoly pow(const MPoly& a, unsigned e) { return a.pow(e); }
  MPoly bracket(std::string_view text) { return MPoly::constant(ring, n, parse_elem(ring, text)); }
};

}  // namespace

MPoly parse_mpoly(const RingPtr& ring, int num_vars, std::string_view text) {
  MPolyOps ops{ring, num_vars};
  return detail::ExprParser<MPolyOps>(text, ops).parse();
}

}  // namespace splitring
