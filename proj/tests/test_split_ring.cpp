#include <thread>

#include "splitring/linalg.hpp"
#include "splitring/relations.hpp"
#include "test_support.hpp"

using namespace splitring;
using test::random_monic;

namespace {

Poly P(const RingPtr& r, const char* coeffs) { return parse_poly(r, coeffs); }

MPoly M(const SplitRing& s, const char* text) { return parse_mpoly(s.base(), s.n(), text); }

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Companion matrix written out by hand: ones below the diagonal, last column
// -c_0 .. -c_{n-1}.
SqMatrix companion_oracle(const Poly& f) {
  const int n = f.degree();
  SqMatrix c(f.ring(), n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = f.ring()->one();
  for (int i = 0; i < n; ++i) c(i, n - 1) = -f.coeff(i);
  return c;
}

}  // namespace

TEST_CASE("splitting ring of Z^2 - 3Z + 2") {
  auto z = Ring::integers();
  auto s = SplitRing::create(P(z, "2,-3,1"));
  REQUIRE(s->dim() == 2);
  CHECK(s->basis() == std::vector<Exponents>{{0, 0}, {1, 0}});
  CHECK(s->root(2).str() == "-r1 + 3");
  CHECK(s->normal_form(M(*s, "X2")) == s->from_coords({z->from_int(3), z->from_int(-1)}));
  CHECK(s->normal_form(M(*s, "X1*X2")) == s->scalar(z->from_int(2)));
  CHECK(s->root(1) * s->root(2) == s->scalar(z->from_int(2)));
  CHECK(s->root(1) + s->root(2) == s->scalar(z->from_int(3)));
  CHECK(s->one() * s->root(1) == s->root(1));
  CHECK(s->universal_factorization_check());
  SqMatrix r2 = s->regular_representation(s->root(2));
  CHECK(r2 == SqMatrix::from_rows(z, {{z->from_int(3), z->from_int(2)}, {z->from_int(-1), z->zero()}}));
}

TEST_CASE("small splitting rings") {
  auto z = Ring::integers();
  SUBCASE("n = 1") {
    auto s = SplitRing::create(P(z, "-7,1"));
    CHECK(s->dim() == 1);
    CHECK(s->root(1) == s->scalar(z->from_int(7)));
    CHECK(s->universal_factorization_check());
  }
  SUBCASE("Z^3 - 1 over Z/5") {
    auto s = SplitRing::create(P(parse_ring("Zmod:5"), "-1,0,0,1"));
    CHECK(s->dim() == 6);
    CHECK(s->universal_factorization_check());
  }
  SUBCASE("Z^3 - Z - 1 over Q") {
    auto s = SplitRing::create(P(Ring::rationals(), "-1,-1,0,1"));
    CHECK(s->universal_factorization_check());
  }
  SUBCASE("basis count") {
    for (int n = 1; n <= 6; ++n) {
      ElemVec c(static_cast<std::size_t>(n), z->zero());
      c.push_back(z->one());
      auto s = SplitRing::create(Poly(z, c));
      CHECK(s->dim() == static_cast<std::size_t>(factorial(n)));
      for (std::size_t k = 0; k < s->dim(); ++k) CHECK(s->index(s->basis()[k]) == k);
    }
  }
  SUBCASE("mixed-radix order") {
    auto s = SplitRing::create(P(z, "0,0,0,1"));
    CHECK(s->basis() == std::vector<Exponents>{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {1, 1, 0}, {2, 1, 0}});
  }
}

TEST_CASE("splitting ring errors") {
  auto z = Ring::integers();
  auto expect = [](auto&& fn, ErrorKind k) {
    try {
      fn();
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.kind() == k);
    }
  };
  expect([&] { SplitRing::create(P(z, "1,2")); }, ErrorKind::NonMonic);
  expect([&] { SplitRing::create(P(z, "1,0,0,0,0,0,0,1")); }, ErrorKind::CapExceeded);
  auto m2 = parse_ring("Mat:2:Zmod:2");
  Poly f(m2, {-parse_elem(m2, "[[1,0],[0,0]]"), m2->one()});
  expect([&] { SplitRing::create(f); }, ErrorKind::NonCentralCoefficients);
  auto s = SplitRing::create(P(z, "2,-3,1"));
  auto t = SplitRing::create(P(z, "2,-3,1"));
  expect([&] { (void)(s->root(1) * t->root(1)); }, ErrorKind::RingMismatch);
  expect([&] { (void)s->index({1, 1}); }, ErrorKind::IndexOutOfRange);
  CHECK(SplitRing::create(P(z, "1,0,0,0,0,0,0,1"), 7)->dim() == 5040);
}

TEST_CASE("elementary symmetric functions of the roots") {
  std::mt19937 rng(21);
  for (const char* spec : {"Z", "Q", "Zmod:12"}) {
    RingPtr r = parse_ring(spec);
    for (int n = 1; n <= 4; ++n) {
      Poly f = random_monic(r, n, rng);
      auto s = SplitRing::create(f);
      ElemVec a = signed_coefficients(f);
      for (int i = 1; i <= n; ++i)
        CHECK(s->normal_form(elementary_symmetric(r, n, i)) == s->scalar(a[static_cast<std::size_t>(i - 1)]));
      CHECK(s->universal_factorization_check());
    }
  }
  auto sym = test::symbolic_ring(4, "a", 1);
  ElemVec a;
  for (int i = 0; i < 4; ++i) a.push_back(sym->indeterminate(i));
  auto s = SplitRing::create(poly_from_signed(sym, a));
  for (int i = 1; i <= 4; ++i) CHECK(s->normal_form(elementary_symmetric(sym, 4, i)) == s->scalar(a[static_cast<std::size_t>(i - 1)]));
  CHECK(s->universal_factorization_check());
}

TEST_CASE("normal form is a ring homomorphism") {
  std::mt19937 rng(8);
  for (const char* spec : {"Z", "Zmod:7", "PolyCoef:2:Z"}) {
    CAPTURE(spec);
    RingPtr r = parse_ring(spec);
    for (int n = 2; n <= 4; ++n) {
      auto s = SplitRing::create(random_monic(r, n, rng, 3));
      for (int trial = 0; trial < 3; ++trial) {
        MPoly m1 = test::random_mpoly(r, n, rng, 3, 2), m2 = test::random_mpoly(r, n, rng, 3, 2);
        CHECK(s->normal_form(m1 * m2) == s->normal_form(m1) * s->normal_form(m2));
        CHECK(s->normal_form(m1 + m2) == s->normal_form(m1) + s->normal_form(m2));
      }
    }
  }
}

TEST_CASE("split multiplication is associative and commutative") {
  std::mt19937 rng(9);
  for (const char* spec : {"Z", "Q", "Zmod:6", "Mat:2:Zmod:3"}) {
    CAPTURE(spec);
    RingPtr r = parse_ring(spec);
    for (int n = 1; n <= 4; ++n) {
      // Central coefficients: scalars embedded in the base.
      ElemVec c;
      for (int i = 0; i < n; ++i) c.push_back(r->from_int(static_cast<int>(rng() % 19) - 9));
      c.push_back(r->one());
      auto s = SplitRing::create(Poly(r, c));
      auto rand_elem = [&] {
        ElemVec v;
        for (std::size_t k = 0; k < s->dim(); ++k) v.push_back(test::random_elem(r, rng, 3));
        return s->from_coords(v);
      };
      for (int trial = 0; trial < 3; ++trial) {
        SplitElem x = rand_elem(), y = rand_elem(), w = rand_elem();
        CHECK((x * y) * w == x * (y * w));
        CHECK(x * (y + w) == x * y + x * w);
        if (r->is_commutative()) CHECK(x * y == y * x);
        for (int i = 1; i <= n; ++i) CHECK(x * s->root(i) == s->root(i) * x);
      }
    }
  }
}

TEST_CASE("roots satisfy their minimal polynomials and their powers are independent") {
  std::mt19937 rng(4);
  for (const char* spec : {"Z", "Zmod:101"}) {
    RingPtr r = parse_ring(spec);
    for (int n = 1; n <= 4; ++n) {
      auto s = SplitRing::create(random_monic(r, n, rng));
      for (int i = 1; i <= n; ++i) {
        auto coeffs = s->root_minimal_polynomial(i);
        REQUIRE(coeffs.size() == static_cast<std::size_t>(n - i + 2));
        CHECK(coeffs.back() == s->one());
        SplitElem acc = s->zero();
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s->root(i) + *it;
        CHECK(acc.is_zero());
        std::vector<ElemVec> rows;
        for (int k = 0; k <= n - i; ++k) rows.push_back(s->root(i).pow(static_cast<unsigned>(k)).coords());
        CHECK(rank(r, rows) == static_cast<std::size_t>(n - i + 1));
      }
    }
  }
}

TEST_CASE("regular representation") {
  std::mt19937 rng(13);
  auto z = Ring::integers();
  for (int n = 1; n <= 4; ++n) {
    Poly f = random_monic(z, n, rng);
    auto s = SplitRing::create(f);
    CHECK(s->regular_representation(s->one()).is_identity());
    std::vector<SqMatrix> blocks(static_cast<std::size_t>(factorial(n - 1)), companion_oracle(f));
    CHECK(s->regular_representation(s->root(1)) == SqMatrix::block_diagonal(blocks));
    auto rand_elem = [&] {
      ElemVec v;
      for (std::size_t k = 0; k < s->dim(); ++k) v.push_back(test::random_elem(z, rng, 4));
      return s->from_coords(v);
    };
    for (int trial = 0; trial < 3; ++trial) {
      SplitElem x = rand_elem(), y = rand_elem();
      CHECK(s->regular_representation(x * y) == s->regular_representation(x) * s->regular_representation(y));
      CHECK(s->regular_representation(x + y) == s->regular_representation(x) + s->regular_representation(y));
    }
  }
}

TEST_CASE("gamma injectivity") {
  auto z6 = parse_ring("Zmod:6");
  CHECK(SplitRing::create(P(z6, "0,-1,1"))->gamma_injectivity_check());
  auto z = Ring::integers();
  ElemVec samples{z->from_int(1), z->from_int(-1), z->from_int(2)};
  CHECK(SplitRing::create(P(z, "2,-3,1"))->gamma_injectivity_check(samples));
  auto zero = Ring::zero_ring();
  auto s = SplitRing::create(Poly(zero, {zero->zero(), zero->one()}));
  CHECK(zero->is_zero_ring());
  CHECK(s->gamma_injectivity_check());
}

TEST_CASE("JSON export of elements") {
  auto z = Ring::integers();
  auto s = SplitRing::create(P(z, "2,-3,1"));
  auto j = s->root(2).to_json();
  CHECK(j["basis"].dump() == "[[0,0],[1,0]]");
  CHECK(j["coords"].dump() == R"(["3","-1"])");
}

TEST_CASE("memoized reduction is consistent across threads") {
  auto sym = test::symbolic_ring(4, "a", 1);
  ElemVec a;
  for (int i = 0; i < 4; ++i) a.push_back(sym->indeterminate(i));
  Poly f = poly_from_signed(sym, a);
  auto fresh = SplitRing::create(f);
  std::vector<Exponents> monos;
  for (int e1 = 0; e1 < 6; ++e1)
    for (int e2 = 0; e2 < 5; ++e2)
      for (int e4 = 0; e4 < 3; ++e4) monos.push_back({e1, e2, 1, e4});
  std::vector<SplitElem> serial;
  for (const auto& m : monos) serial.push_back(fresh->monomial(m));

  auto shared = SplitRing::create(f);
  std::vector<std::vector<SplitElem>> results(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t k = 0; k < monos.size(); ++k)
        results[static_cast<std::size_t>(t)].push_back(shared->monomial(monos[(k * 7 + static_cast<std::size_t>(t) * 13) % monos.size()]));
    });
  for (auto& th : pool) th.join();
  for (int t = 0; t < 4; ++t)
    for (std::size_t k = 0; k < monos.size(); ++k)
      CHECK(results[static_cast<std::size_t>(t)][k].coords() ==
            serial[(k * 7 + static_cast<std::size_t>(t) * 13) % monos.size()].coords());
}
