#include "splitring/linalg.hpp"
#include "test_support.hpp"

using namespace splitring;
using test::random_elem;

namespace {

SqMatrix random_matrix(const RingPtr& r, int n, std::mt19937& rng, long long bound = 9) {
  ElemVec e;
  for (int i = 0; i < n * n; ++i) e.push_back(random_elem(r, rng, bound));
  return SqMatrix(r, n, std::move(e));
}

// Cofactor expansion along the first row; only used on tiny matrices.
Elem laplace_det(const SqMatrix& m) {
  const int n = m.size();
  const RingPtr& r = m.ring();
  if (n == 0) return r->one();
  Elem acc = r->zero();
  for (int j = 0; j < n; ++j) {
    SqMatrix minor(r, n - 1);
    for (int i = 1; i < n; ++i)
      for (int c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = m(i, c);
    Elem term = m(0, j) * laplace_det(minor);
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

TEST_CASE("matrix arithmetic") {
  RingPtr z2 = parse_ring("Zmod:2");
  SqMatrix a = SqMatrix::from_rows(z2, {{z2->one(), z2->one()}, {z2->zero(), z2->one()}});
  SqMatrix b = SqMatrix::from_rows(z2, {{z2->one(), z2->zero()}, {z2->one(), z2->one()}});
  CHECK((a * b).to_json()["rows"].dump() == R"([["0","1"],["1","1"]])");
  CHECK((a * b) != (b * a));
  CHECK(SqMatrix::identity(z2, 3).is_identity());
  CHECK((a - a).is_zero());
  CHECK(a.pow(2) == SqMatrix::identity(z2, 2));

  RingPtr z = Ring::integers();
  SqMatrix c = SqMatrix::from_rows(z, {{z->from_int(1), z->from_int(2)}, {z->from_int(3), z->from_int(4)}});
  std::vector<SqMatrix> blocks{c, SqMatrix::scalar(z->from_int(5), 1)};
  SqMatrix d = SqMatrix::block_diagonal(blocks);
  CHECK(d.size() == 3);
  CHECK(d(2, 2).str() == "5");
  CHECK(d(0, 2).is_zero());
  CHECK(d(1, 0).str() == "3");
  CHECK_THROWS_AS(c * a, Error);
}

TEST_CASE("matrix ring laws on random samples") {
  std::mt19937 rng(11);
  for (const char* spec : {"Z", "Q", "Zmod:101", "Zmod:12", "PolyCoef:2:Z", "Mat:2:Zmod:3"}) {
    CAPTURE(spec);
    RingPtr r = parse_ring(spec);
    for (int trial = 0; trial < 5; ++trial) {
      int n = 1 + static_cast<int>(rng() % 4);
      SqMatrix x = random_matrix(r, n, rng), y = random_matrix(r, n, rng), w = random_matrix(r, n, rng);
      CHECK((x * y) * w == x * (y * w));
      CHECK(x * (y + w) == x * y + x * w);
      CHECK(x * SqMatrix::identity(r, n) == x);
      CHECK(x.pow(3) == x * x * x);
    }
  }
}

TEST_CASE("modular fast product agrees with entrywise definition") {
  std::mt19937 rng(5);
  RingPtr r = parse_ring("Zmod:4611686018427387847");  // near 2^62
  for (int trial = 0; trial < 5; ++trial) {
    SqMatrix x = random_matrix(r, 5, rng, 1000000), y = random_matrix(r, 5, rng, 1000000);
    SqMatrix p = x * y;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        mpz_class s = 0;
        for (int k = 0; k < 5; ++k) s += mpz_class(static_cast<long>(x(i, k).small())) * mpz_class(static_cast<long>(y(k, j).small()));
        CHECK(p(i, j) == r->from_integer(s));
      }
  }
}

TEST_CASE("matrix JSON round trip") {
  RingPtr r = parse_ring("PolyCoef:3:Z");
  std::mt19937 rng(3);
  SqMatrix m = random_matrix(r, 3, rng);
  auto j = m.to_json();
  CHECK(j["size"] == 3);
  CHECK(j["ring"] == "PolyCoef:3:Z");
  CHECK(matrix_from_json(j) == m);
  CHECK(matrix_from_json(nlohmann::json::parse(j.dump())).to_json() == j);
  RingPtr mat = parse_ring("Mat:2:Zmod:5");
  SqMatrix mm = random_matrix(mat, 2, rng);
  CHECK(matrix_from_json(mm.to_json()) == mm);
}

TEST_CASE("determinants agree with cofactor expansion") {
  std::mt19937 rng(17);
  for (const char* spec : {"Z", "Q", "Zmod:7", "Zmod:12", "PolyCoef:2:Z"}) {
    CAPTURE(spec);
    RingPtr r = parse_ring(spec);
    for (int trial = 0; trial < 8; ++trial) {
      int n = static_cast<int>(rng() % 5);
      SqMatrix m = random_matrix(r, n, rng, 4);
      CHECK(determinant(m) == laplace_det(m));
    }
  }
}

TEST_CASE("rank and invertibility") {
  RingPtr q = Ring::rationals();
  auto row = [&](std::initializer_list<long long> v) {
    ElemVec e;
    for (auto x : v) e.push_back(q->from_int(x));
    return e;
  };
  CHECK(rank(q, {row({1, 2, 3}), row({2, 4, 6}), row({0, 1, 1})}) == 2);
  CHECK(rank(q, {row({1, 0}), row({0, 1})}) == 2);
  CHECK(rank(q, {}) == 0);

  RingPtr z6 = parse_ring("Zmod:6");
  // 3 is a unit nowhere mod 3, so the row (3) has rank 0 mod 3.
  CHECK(rank(z6, {{z6->from_int(3)}}) == 0);
  CHECK(rank(z6, {{z6->from_int(5)}}) == 1);
  CHECK_FALSE(is_invertible(SqMatrix::scalar(z6->from_int(2), 2)));
  CHECK(is_invertible(SqMatrix::scalar(z6->from_int(5), 2)));

  RingPtr z = Ring::integers();
  CHECK_FALSE(is_invertible(SqMatrix::scalar(z->from_int(2), 2)));
  SqMatrix u = SqMatrix::from_rows(z, {{z->from_int(2), z->from_int(1)}, {z->from_int(1), z->from_int(1)}});
  CHECK(is_invertible(u));
  CHECK(is_invertible(SqMatrix::scalar(q->from_int(2), 3)));

  RingPtr p = parse_ring("PolyCoef:2:Z");
  Elem y1 = p->indeterminate(0), y2 = p->indeterminate(1);
  CHECK(rank(p, {{y1, y2}, {y1 * y1, y1 * y2}}) == 1);
  CHECK(rank(p, {{y1, y2}, {y2, y1}}) == 2);
  CHECK_FALSE(is_invertible(SqMatrix::scalar(y1, 2)));
  CHECK(prime_factors(360) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(prime_factors(101) == std::vector<std::int64_t>{101});

  RingPtr m2 = parse_ring("Mat:2:Zmod:2");
  CHECK(is_invertible(SqMatrix::from_rows(m2, {{parse_elem(m2, "[[0,1],[1,0]]")}})));
  CHECK_FALSE(is_invertible(SqMatrix::from_rows(m2, {{parse_elem(m2, "[[1,0],[0,0]]")}})));
}

TEST_CASE("minimal polynomial degree") {
  RingPtr q = Ring::rationals();
  CHECK(minimal_polynomial_degree(SqMatrix::identity(q, 4)) == 1);
  CHECK(minimal_polynomial_degree(SqMatrix(q, 3)) == 1);
  SqMatrix nil(q, 3);
  nil(1, 0) = q->one();
  nil(2, 1) = q->one();
  CHECK(minimal_polynomial_degree(nil) == 3);
  RingPtr f7 = parse_ring("Zmod:7");
  SqMatrix d = SqMatrix::scalar(f7->one(), 3);
  d(2, 2) = f7->from_int(2);
  CHECK(minimal_polynomial_degree(d) == 2);
}
