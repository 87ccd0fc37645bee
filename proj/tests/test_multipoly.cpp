#include <random>

#include "doctest.h"
#include "splitring/relations.hpp"
#include "test_support.hpp"

using namespace splitring;

namespace {

RingPtr symbolic_a(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  return Ring::polynomials(n, Ring::integers(), names);
}

Poly generic_poly(const RingPtr& ring, int n) {
  ElemVec a;
  for (int i = 0; i < n; ++i) a.push_back(ring->indeterminate(i));
  return poly_from_signed(ring, a);
}

MPoly P(const RingPtr& r, int n, const char* text) { return parse_mpoly(r, n, text); }

}  // namespace

TEST_CASE("elementary_symmetric") {
  auto z = Ring::integers();
  CHECK(elementary_symmetric(z, 3, 2) == P(z, 3, "X1*X2 + X1*X3 + X2*X3"));
  CHECK(elementary_symmetric(z, 2, 1) == P(z, 2, "X1 + X2"));
  CHECK(elementary_symmetric(z, 4, 4) == P(z, 4, "X1*X2*X3*X4"));
  CHECK(elementary_symmetric(z, 6, 3).terms().size() == 20);
  CHECK_THROWS_AS(elementary_symmetric(z, 3, 0), Error);
  CHECK_THROWS_AS(elementary_symmetric(z, 3, 4), Error);
}

TEST_CASE("complete_homogeneous_prefix") {
  auto z = Ring::integers();
  CHECK(complete_homogeneous_prefix(z, 4, 2, 2) == P(z, 4, "X1^2 + X1*X2 + X2^2"));
  CHECK(complete_homogeneous_prefix(z, 4, 1, 3) == P(z, 4, "X1^3"));
  CHECK(complete_homogeneous_prefix(z, 4, 3, 1) == P(z, 4, "X1 + X2 + X3"));
  CHECK(complete_homogeneous_prefix(z, 4, 3, 0) == P(z, 4, "1"));
  CHECK(complete_homogeneous_prefix(z, 5, 3, 4).terms().size() == 15);  // C(6,2)
  CHECK_THROWS_AS(complete_homogeneous_prefix(z, 3, 4, 1), Error);
  CHECK_THROWS_AS(complete_homogeneous_prefix(z, 3, 2, -1), Error);
}

TEST_CASE("delta") {
  auto z = Ring::integers();
  CHECK(delta(P(z, 2, "X1^2"), 1, 2) == P(z, 2, "X1 + X2"));
  CHECK(delta(P(z, 2, "X1 + X2"), 1, 2).is_zero());
  for (int n = 2; n <= 4; ++n)
    for (int j = 1; j < n; ++j)
      for (int i = 1; i <= 4; ++i)
        CHECK(delta(complete_homogeneous_prefix(z, n, j, i), j, j + 1) ==
              complete_homogeneous_prefix(z, n, j + 1, i - 1));
  CHECK_THROWS_AS(delta(P(z, 2, "X1"), 1, 1), Error);
}

TEST_CASE("delta: multiplying back recovers the antisymmetrized numerator") {
  std::mt19937 rng(5);
  for (const char* spec : {"Z", "Zmod:7", "PolyCoef:1:Z", "Mat:2:Z"}) {
    auto r = parse_ring(spec);
    for (int trial = 0; trial < 10; ++trial) {
      int n = 2 + trial % 3;
      MPoly p = test::random_mpoly(r, n, rng);
      int i = 1 + trial % n, j = 1 + (trial + 1) % n;
      MPoly d = delta(p, i, j);
      MPoly back = (MPoly::variable(r, n, j) - MPoly::variable(r, n, i)) * d;
      CHECK(back == p.swapped(i, j) - p);
    }
  }
}

TEST_CASE("generator polynomials for n = 4 match the displayed families") {
  auto r = symbolic_a(4);
  Poly f = generic_poly(r, 4);
  auto rec = build_relations_recursive(f);
  auto closed = build_relations_closed(f);
  // Alternative (expanded) form.
  std::vector<MPoly> expanded = {
      P(r, 4, "X1^4 - a1*X1^3 + a2*X1^2 - a3*X1 + a4"),
      P(r, 4, "X1^3 + X2^3 + X1*X2^2 + X2*X1^2 - a1*(X1^2 + X2^2 + X1*X2) + a2*(X1 + X2) - a3"),
      P(r, 4, "X1^2 + X2^2 + X3^2 + X1*X2 + X2*X3 + X1*X3 - a1*(X1 + X2 + X3) + a2"),
      P(r, 4, "X1 + X2 + X3 + X4 - a1")};
  // Form in terms of sigma_i - a_i.
  const char* s1 = "(X1 + X2 + X3 + X4 - a1)";
  const char* s2 = "(X1*X2 + X1*X3 + X1*X4 + X2*X3 + X2*X4 + X3*X4 - a2)";
  const char* s3 = "(X1*X2*X3 + X1*X2*X4 + X1*X3*X4 + X2*X3*X4 - a3)";
  const char* s4 = "(X1*X2*X3*X4 - a4)";
  std::vector<MPoly> sigma_form = {
      P(r, 4, (std::string(s1) + "*X1^3 - " + s2 + "*X1^2 + " + s3 + "*X1 - " + s4).c_str()),
      P(r, 4, (std::string(s1) + "*(X1^2 + X2^2 + X1*X2) - " + s2 + "*(X1 + X2) + " + s3).c_str()),
      P(r, 4, (std::string(s1) + "*(X1 + X2 + X3) - " + s2).c_str()), P(r, 4, s1)};
  for (int i = 0; i < 4; ++i) {
    CHECK(rec[static_cast<std::size_t>(i)] == expanded[static_cast<std::size_t>(i)]);
    CHECK(closed[static_cast<std::size_t>(i)] == expanded[static_cast<std::size_t>(i)]);
    CHECK(rec[static_cast<std::size_t>(i)] == sigma_form[static_cast<std::size_t>(i)]);
  }
  CHECK(rec[2].grouped_str() == "X1^2 + X1*X2 + X1*X3 + X2^2 + X2*X3 + X3^2 - a1*(X1+X2+X3) + a2");
  CHECK(rec[3].grouped_str() == "X1 + X2 + X3 + X4 - a1");
}

TEST_CASE("generator polynomials: small cases") {
  auto z = Ring::integers();
  // n = 1: f_1 = f(X1).
  auto one = build_relations_recursive(parse_poly(z, "-7,1"));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == P(z, 1, "X1 - 7"));
  CHECK(build_relations_closed(parse_poly(z, "-7,1"))[0] == one[0]);

  auto r2 = symbolic_a(2);
  CHECK(build_relations_closed(generic_poly(r2, 2))[1] == P(r2, 2, "X1 + X2 - a1"));

  auto cubic = build_relations_closed(parse_poly(z, "-1,0,0,1"));
  CHECK(cubic[1] == P(z, 3, "X1^2 + X1*X2 + X2^2"));
  CHECK(cubic[2] == P(z, 3, "X1 + X2 + X3"));

  auto quad = build_relations_recursive(parse_poly(z, "2,-3,1"));
  CHECK(quad[1] == P(z, 2, "X1 + X2 - 3"));
  CHECK(quad[1].grouped_str() == "X1 + X2 - 3");

  CHECK_THROWS_AS(build_relations_recursive(parse_poly(z, "1,2")), Error);
  auto m2 = parse_ring("Mat:2:Z");
  try {
    build_relations_closed(parse_poly(m2, "[[1,0],[0,0]],1"));
    FAIL("expected NonCentralCoefficients");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonCentralCoefficients);
  }
}

TEST_CASE("recursive and closed constructions agree for n <= 6, symbolic") {
  for (int n = 1; n <= 6; ++n) {
    auto r = symbolic_a(n);
    Poly f = generic_poly(r, n);
    auto rec = build_relations_recursive(f);
    auto closed = build_relations_closed(f);
    REQUIRE(rec.size() == static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      const MPoly& fi = rec[static_cast<std::size_t>(i - 1)];
      CHECK(fi == closed[static_cast<std::size_t>(i - 1)]);
      CHECK(fi.uses_only(i));
      CHECK(fi.degree_in(i) == n - i + 1);
      CHECK(fi.total_degree() == n - i + 1);
      Exponents lead(static_cast<std::size_t>(n), 0);
      lead[static_cast<std::size_t>(i - 1)] = n - i + 1;
      CHECK(fi.coeff(lead).is_one());
      CHECK(is_prefix_symmetric(fi, i));
    }
  }
}

TEST_CASE("sigma expansion identity") {
  auto r = symbolic_a(4);
  CHECK(verify_sigma_expansion(generic_poly(r, 4)).holds);
  auto z = Ring::integers();
  CHECK(verify_sigma_expansion(poly_from_signed(z, {z->from_int(1), z->from_int(2), z->from_int(3)})).holds);
  for (int n = 1; n <= 5; ++n) CHECK(verify_sigma_expansion(generic_poly(symbolic_a(n), n)).holds);
  auto m2 = parse_ring("Mat:2:Zmod:3");
  CHECK(verify_sigma_expansion(parse_poly(m2, "2,[[1,0],[0,1]],0,1")).holds);
}

TEST_CASE("identity families") {
  auto z = Ring::integers();
  for (int n = 1; n <= 6; ++n) {
    CHECK(generic_root_residual(z, n).is_zero());
    for (int j = 1; j < n; ++j)
      for (int i = 0; i <= 6; ++i) CHECK(verify_prefix_delta(z, n, j, i).holds);
  }
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n; ++i) CHECK(prefix_root_residual(z, n, i).is_zero());
  // Truncating the sum breaks it.
  CHECK_FALSE((generic_root_residual(z, 3) + elementary_symmetric(z, 3, 3)).is_zero());
}

TEST_CASE("is_prefix_symmetric") {
  auto z = Ring::integers();
  auto r = symbolic_a(4);
  CHECK(is_prefix_symmetric(build_relations_recursive(generic_poly(r, 4))[1], 2));
  CHECK_FALSE(is_prefix_symmetric(P(z, 2, "X1 - X2"), 2));
  CHECK(is_prefix_symmetric(P(z, 3, "X1^3 - 5*X1"), 1));
  CHECK_THROWS_AS(is_prefix_symmetric(P(z, 3, "X3"), 2), Error);
}

TEST_CASE("mpoly text") {
  auto z = Ring::integers();
  auto p = P(z, 3, "X2*X1 - 2*X3^2 + 5");
  CHECK(p.str() == "X1*X2 - 2*X3^2 + 5");
  CHECK(parse_mpoly(z, 3, p.str()) == p);
  CHECK(MPoly(z, 2).str() == "0");
  auto r = symbolic_a(4);
  auto f2 = build_relations_recursive(generic_poly(r, 4))[1];
  CHECK(f2.grouped_str() ==
        "X1^3 + X1^2*X2 + X1*X2^2 + X2^3 - a1*(X1^2+X1*X2+X2^2) + a2*(X1+X2) - a3");
  CHECK(parse_mpoly(r, 4, f2.grouped_str()) == f2);
  CHECK(parse_mpoly(r, 4, f2.str()) == f2);
}
