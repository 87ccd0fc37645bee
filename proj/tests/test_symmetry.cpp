#include "splitring/relations.hpp"
#include "splitring/symmetry.hpp"
#include "test_support.hpp"

using namespace splitring;
using test::random_monic;

namespace {

SplitRingPtr make(const char* ring, const char* coeffs) { return SplitRing::create(parse_poly(parse_ring(ring), coeffs)); }

SplitElem random_split(const SplitRing& s, std::mt19937& rng) {
  ElemVec v;
  for (std::size_t k = 0; k < s.dim(); ++k) v.push_back(test::random_elem(s.base(), rng, 4));
  return s.from_coords(v);
}

}  // namespace

TEST_CASE("permutations") {
  CHECK(Perm::all(3).size() == 6);
  CHECK(Perm::all(4).size() == 24);
  Perm p({2, 3, 1}), q({2, 1, 3});
  CHECK((p * q).images == std::vector<int>{3, 2, 1});
  CHECK(p * Perm::identity(3) == p);
  CHECK_THROWS_AS(Perm({1, 1, 2}), Error);
}

TEST_CASE("apply_perm examples") {
  auto s = make("Z", "2,-3,1");
  auto z = s->base();
  Perm swap({2, 1});
  CHECK(apply_perm(*s, swap, s->root(1)) == s->from_coords({z->from_int(3), z->from_int(-1)}));
  std::mt19937 rng(1);
  SplitElem x = random_split(*s, rng);
  CHECK(apply_perm(*s, Perm::identity(2), x) == x);
  for (int n = 1; n <= 4; ++n) {
    auto t = SplitRing::create(random_monic(Ring::integers(), n, rng));
    ElemVec a = signed_coefficients(t->f());
    for (const auto& p : Perm::all(n))
      for (int i = 1; i <= n; ++i) {
        SplitElem sigma = t->normal_form(elementary_symmetric(t->base(), n, i));
        CHECK(apply_perm(*t, p, sigma) == t->scalar(a[static_cast<std::size_t>(i - 1)]));
      }
  }
}

TEST_CASE("permutations act by ring automorphisms and compose") {
  std::mt19937 rng(44);
  for (const char* spec : {"Z", "Zmod:5"}) {
    RingPtr r = parse_ring(spec);
    for (int n = 2; n <= 4; ++n) {
      auto s = SplitRing::create(random_monic(r, n, rng));
      auto perms = Perm::all(n);
      for (int trial = 0; trial < 4; ++trial) {
        const Perm& p = perms[rng() % perms.size()];
        const Perm& q = perms[rng() % perms.size()];
        SplitElem x = random_split(*s, rng), y = random_split(*s, rng);
        CHECK(apply_perm(*s, p, x * y) == apply_perm(*s, p, x) * apply_perm(*s, p, y));
        CHECK(apply_perm(*s, p, x + y) == apply_perm(*s, p, x) + apply_perm(*s, p, y));
        for (std::size_t k = 0; k < s->dim(); ++k) {
          SplitElem b = s->basis_element(k);
          CHECK(apply_perm(*s, p * q, b) == apply_perm(*s, p, apply_perm(*s, q, b)));
        }
      }
    }
  }
}

TEST_CASE("automorphism systems") {
  SUBCASE("every permutation system passes") {
    for (const char* coeffs : {"-1,-1,0,1", "1,2,3,1"}) {
      auto s = make("Q", coeffs);
      for (const auto& p : Perm::all(3)) {
        auto cert = is_automorphism_system(permutation_system(s, p));
        CHECK(cert.verdict);
        CHECK(cert.basis_unit_det == std::optional<bool>(true));
      }
    }
    auto s = make("Z", "5,0,-2,0,1");
    for (const auto& p : Perm::all(4)) CHECK(is_automorphism_system(permutation_system(s, p)).verdict);
  }
  SUBCASE("Z^2 over Z with u = -1") {
    auto s = make("Z", "0,0,1");
    auto ts = scaling_system(s, s->base()->from_int(-1), 2);
    CHECK(ts.roots[0] == -s->root(1));
    auto cert = is_automorphism_system(ts);
    CHECK(cert.verdict);
    CHECK(cert.commute);
    CHECK(cert.factorization);
  }
  SUBCASE("repeated root is rejected") {
    auto s = make("Z", "2,-3,1");
    RootSystem ts{s, {s->root(1), s->root(1)}, "repeat"};
    auto cert = is_automorphism_system(ts);
    CHECK_FALSE(cert.verdict);
    CHECK_FALSE(cert.factorization);
    // For n = 2 the t-monomials are just 1 and t_1 = r_1, still a basis.
    CHECK(cert.basis_unit_det == std::optional<bool>(true));

    auto s3 = make("Z", "1,2,3,1");
    RootSystem ts3{s3, {s3->root(1), s3->root(1), s3->root(2)}, "repeat"};
    auto cert3 = is_automorphism_system(ts3);
    CHECK_FALSE(cert3.verdict);
    CHECK(cert3.basis_unit_det == std::optional<bool>(false));
  }
  SUBCASE("a non-unit scaling over Z fails the basis condition") {
    auto s = make("Z", "0,0,1");
    RootSystem ts{s, {s->base()->from_int(2) * s->root(1), s->base()->from_int(2) * s->root(2)}, "x2"};
    auto cert = is_automorphism_system(ts);
    CHECK_FALSE(cert.verdict);
  }
  SUBCASE("certificate JSON") {
    auto s = make("Z", "2,-3,1");
    auto j = is_automorphism_system(permutation_system(s, Perm({2, 1}))).to_json();
    CHECK(j["verdict"] == true);
    CHECK(j["system"] == "perm [2,1]");
    for (const char* key : {"system", "commute", "factorization", "basis_unit_det", "verdict"}) CHECK(j.contains(key));
  }
}

TEST_CASE("theta injectivity") {
  CHECK(theta_injectivity(make("Q", "-1,-1,0,1")));
  CHECK(theta_injectivity(make("Z", "-3,1")));
  CHECK(theta_injectivity(make("Zmod:5", "-1,0,0,0,1")));
  CHECK(theta_injectivity(make("Q", "1,0,1,0,1")));
  // With n = 2 over Z/2 and f = Z^2, r_2 = -r_1 = r_1, so the swap acts trivially.
  CHECK_FALSE(theta_injectivity(make("Zmod:2", "0,0,1")));
}

TEST_CASE("scaling systems") {
  SUBCASE("f = Z^n and every n-th root of unity") {
    for (int n = 1; n <= 4; ++n) {
      RingPtr z5 = parse_ring("Zmod:5");
      ElemVec c(static_cast<std::size_t>(n), z5->zero());
      c.push_back(z5->one());
      auto s = SplitRing::create(Poly(z5, c));
      for (const auto& u : roots_of_unity(z5, n)) {
        auto ts = scaling_system(s, u, n);
        CHECK(is_automorphism_system(ts).verdict);
        for (int i = 1; i <= n; ++i) {
          // sigma_i(t) = u^i sigma_i(r) = a_i.
          std::vector<SplitElem> roots = ts.roots;
          SplitElem sigma = s->evaluate(elementary_symmetric(z5, n, i), roots);
          CHECK(sigma == s->scalar(signed_coefficients(s->f())[static_cast<std::size_t>(i - 1)]));
        }
      }
    }
    CHECK(roots_of_unity(parse_ring("Zmod:5"), 4).size() == 4);
    CHECK(roots_of_unity(parse_ring("Zmod:5"), 2).size() == 2);
  }
  SUBCASE("even pattern with u = -1") {
    auto sym = test::symbolic_ring(2, "a", 1);
    // f = Z^4 + a2 Z^2 + a4 with a1 = a3 = 0.
    Poly f(sym, {sym->indeterminate(1), sym->zero(), sym->indeterminate(0), sym->zero(), sym->one()});
    CHECK(scaling_pattern_holds(f, 2));
    CHECK_FALSE(scaling_pattern_holds(f, 4));
    auto s = SplitRing::create(f);
    auto cert = is_automorphism_system(scaling_system(s, -sym->one(), 2));
    CHECK(cert.commute);
    CHECK(cert.factorization);
    CHECK(cert.verdict);
  }
  SUBCASE("violated hypotheses") {
    auto s = make("Z", "2,-3,1");
    auto expect = [&](const Elem& u, int d) {
      try {
        scaling_system(s, u, d);
        FAIL("expected PreconditionViolated");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PreconditionViolated);
      }
    };
    expect(s->base()->from_int(-1), 2);
    auto z2 = make("Z", "0,0,1");
    auto expect2 = [&](const Elem& u, int d) {
      try {
        scaling_system(z2, u, d);
        FAIL("expected PreconditionViolated");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PreconditionViolated);
      }
    };
    expect2(z2->base()->from_int(2), 2);
    expect2(z2->base()->from_int(-1), 3);
  }
}

TEST_CASE("scaling systems over Z/5 for f = Z^4 are automorphisms") {
  auto s = make("Zmod:5", "0,0,0,0,1");
  ElemVec us = roots_of_unity(s->base(), 4);
  REQUIRE(us.size() == 4);
  for (const auto& u : us) CHECK(is_automorphism_system(scaling_system(s, u, 4)).verdict);
}
