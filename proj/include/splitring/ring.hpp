#pragma once

// Exact base rings: Z, Q, Z/m, matrix rings, univariate quotient rings,
// polynomial coefficient rings and finite rings given by tables.
//
// A Ring is an immutable descriptor shared through RingPtr. An Elem pairs a
// descriptor with a canonical payload, so equality of payloads is semantic
// equality. Composite payloads (matrix entries, residue coefficients,
// polynomial terms) are shared immutable vectors and copy in O(1).

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "splitring/error.hpp"

namespace splitring {

class Ring;
class Elem;
struct Term;

using RingPtr = std::shared_ptr<const Ring>;
using Exponents = std::vector<int>;
using ElemVec = std::vector<Elem>;
using TermVec = std::vector<Term>;

enum class RingKind {
  Integers,
  Rationals,
  ModularIntegers,
  MatrixRing,
  UnivariateQuotient,
  PolynomialCoefficients,
  FiniteTable,
};

class Elem {
 public:
  using Payload = std::variant<std::monostate, std::int64_t, mpz_class, mpq_class,
                               std::shared_ptr<const ElemVec>, std::shared_ptr<const TermVec>>;

  Elem() = default;
  Elem(RingPtr ring, Payload value) : ring_(std::move(ring)), value_(std::move(value)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const Payload& value() const noexcept { return value_; }
  bool is_null() const noexcept { return ring_ == nullptr; }

  // Kind-specific views of the payload.
  std::int64_t small() const { return std::get<std::int64_t>(value_); }
  const mpz_class& integer() const { return std::get<mpz_class>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  const ElemVec& entries() const { return *std::get<std::shared_ptr<const ElemVec>>(value_); }
  const TermVec& terms() const { return *std::get<std::shared_ptr<const TermVec>>(value_); }

  bool is_zero() const;
  bool is_one() const;
  std::string str() const;

  Elem operator-() const;
  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  friend bool operator==(const Elem& a, const Elem& b);
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
  Elem& operator+=(const Elem& b) { return *this = *this + b; }
  Elem& operator-=(const Elem& b) { return *this = *this - b; }
  Elem& operator*=(const Elem& b) { return *this = *this * b; }

 private:
  RingPtr ring_;
  Payload value_;
};

/// One monomial of a PolynomialCoefficients element.
struct Term {
  Exponents exponents;
  Elem coeff;
};

/// Addition and multiplication tables of a finite ring, indices 0..order-1.
struct TableData {
  std::size_t order = 0;
  std::vector<std::uint32_t> add;
  std::vector<std::uint32_t> mul;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::vector<std::string> names;
};

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  struct Private {};

  static RingPtr integers();
  static RingPtr rationals();
  static RingPtr modular(std::int64_t m);
  static RingPtr matrices(int k, RingPtr base);
  /// base[Z]/(modulus); `modulus` lists coefficients lowest degree first and
  /// must be monic of degree >= 1 with central coefficients.
  static RingPtr quotient(RingPtr base, const ElemVec& modulus, std::string root_name = "z");
  static RingPtr polynomials(int t, RingPtr base, std::vector<std::string> names = {});
  /// Finite ring from explicit tables. The ring axioms and 1 != 0 are
  /// verified exhaustively; violations raise InvalidRing.
  static RingPtr table(TableData data);
  /// The ring with a single element; only produced by collapsing quotients.
  static RingPtr zero_ring();
  /// Table ring on a finite subset of `source` closed under the ring
  /// operations. Element i of the result corresponds to elements[i].
  static RingPtr tabulate(RingPtr source, ElemVec elements);

  explicit Ring(Private, RingKind kind) : kind_(kind) {}

  RingKind kind() const noexcept { return kind_; }
  std::int64_t modulus() const { return modulus_; }
  int size() const { return size_; }
  const RingPtr& base() const { return base_; }
  const ElemVec& modulus_coeffs() const { return poly_; }
  int quotient_degree() const { return static_cast<int>(poly_.size()) - 1; }
  const std::string& root_name() const { return root_name_; }
  const std::vector<std::string>& names() const { return names_; }
  const TableData& table_data() const { return *table_; }
  /// For tabulated rings: the ring the table was built from, else null.
  const RingPtr& table_source() const { return source_; }
  const ElemVec& table_source_elements() const { return source_elems_; }

  Elem zero() const;
  Elem one() const;
  Elem from_int(long long v) const;
  Elem from_integer(const mpz_class& v) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem pow(const Elem& a, unsigned e) const;
  std::optional<Elem> try_invert(const Elem& a) const;
  /// Throws NotAUnit for non-units, Unsupported where the kind cannot decide.
  Elem invert(const Elem& a) const;

  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const;
  bool is_unit(const Elem& a) const { return try_invert(a).has_value(); }
  bool is_central(const Elem& a) const;

  bool is_commutative() const;
  bool is_finite() const;
  bool is_zero_ring() const;
  /// Number of elements for finite rings (nullopt when infinite or huge).
  std::optional<std::size_t> order() const;
  /// All elements of a finite ring in a fixed order; InfiniteRing otherwise.
  ElemVec elements() const;

  /// Natural map from the immediate base (or from Z for the scalar kinds).
  Elem embed(const Elem& x) const;
  Elem indeterminate(int i) const;
  Elem root() const;
  Elem matrix(ElemVec entries) const;
  Elem residue(ElemVec coeffs) const;
  Elem polynomial(TermVec terms) const;
  Elem table_elem(std::uint32_t index) const;
  Elem rational(const mpq_class& q) const;
  std::optional<Elem> symbol(std::string_view name) const;

  /// Canonical text; parse_elem accepts it back.
  std::string format(const Elem& a) const;
  /// Ring-spec string (Z, Q, Zmod:m, Mat:k:..., PolyCoef:t:...).
  std::string spec() const;
  /// Structural equality of descriptors (indeterminate names ignored).
  bool same(const Ring& other) const;
  void require(const Elem& a) const;

 private:
  RingPtr self() const { return shared_from_this(); }
  Elem make(Elem::Payload p) const { return Elem(self(), std::move(p)); }
  Elem reduce_residue(ElemVec coeffs) const;
  Elem normalize_terms(TermVec terms) const;

  RingKind kind_;
  std::int64_t modulus_ = 0;
  int size_ = 0;
  RingPtr base_;
  ElemVec poly_;
  std::string root_name_;
  std::vector<std::string> names_;
  std::shared_ptr<const TableData> table_;
  bool table_commutative_ = false;
  RingPtr source_;
  ElemVec source_elems_;
};

/// Parse text in the ring's canonical format: integer and rational literals,
/// ring symbols (indeterminate names, quotient roots, table names), matrix
/// literals [[..],[..]] and + - * / ^ ( ).
Elem parse_elem(const RingPtr& ring, std::string_view text);

/// Parse a ring-spec string. Besides Z, Q, Zmod:<m>, Mat:<k>:<spec> and
/// PolyCoef:<t>:<spec>, accepts UTri:<k>:<spec> (upper-triangular matrices
/// over a finite ring, tabulated).
RingPtr parse_ring(std::string_view spec);

/// Split a comma-separated list, ignoring commas nested in brackets.
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

}  // namespace splitring
