#include "doctest.h"
#include "lwr/partition.hpp"
#include "oracles.hpp"

using namespace lwr;

TEST_CASE("parse, print and transpose") {
  Partition p = Partition::parse("5,3,2");
  CHECK(p.str() == "5,3,2");
  CHECK(p.transpose() == Partition{3, 3, 2, 1, 1});
  CHECK(Partition::parse("").empty());
  CHECK(Partition{2, 0, 0} == Partition{2});
  CHECK_THROWS_AS(Partition::parse("1,2"), DomainError);
  CHECK_THROWS_AS(Partition::parse("a"), DomainError);
  for (int s = 0; s <= 8; ++s)
    for (const auto& q : partitions_of(s)) CHECK(q.transpose().transpose() == q);
}

TEST_CASE("rectangles and complements") {
  CHECK(add_rect(3, 2, {2, 1}) == Partition{4, 3, 2});
  CHECK(Partition{2, 1}.complement(3, 3) == Partition{3, 2, 1});
  CHECK(Partition{}.complement(2, 3) == Partition{3, 3});
  CHECK(partitions_in_box(2, 2).size() == 6);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(5, 2).size() == 3);
}

TEST_CASE("LR coefficients against polynomial multiplication") {
  CHECK(lr_coefficient({2, 1}, {1}, {3, 1}) == 1);
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
  for (int s = 0; s <= 7; ++s)
    for (int a = 0; a <= s; ++a)
      for (const auto& lam : partitions_of(a))
        for (const auto& mu : partitions_of(s - a)) CHECK(lr_product(lam, mu) == oracle::lr_by_polys(lam, mu));
}

TEST_CASE("skew Schur functions invert the product") {
  for (const auto& nu : partitions_of(6))
    for (int a = 0; a <= 6; ++a)
      for (const auto& lam : partitions_of(a)) {
        if (!nu.contains(lam)) continue;
        for (const auto& [mu, c] : lr_skew(nu, lam)) CHECK(lr_coefficient(lam, mu, nu) == c);
      }
}

TEST_CASE("dimensions by counting tableaux") {
  for (int N = 1; N <= 4; ++N)
    for (int s = 0; s <= 6; ++s)
      for (const auto& lam : partitions_of(s, N)) {
        Int count = 0;
        for (const auto& [w, c] : oracle::schur_poly(lam, N)) count += c;
        CHECK(dim_gl(lam, N) == count);
      }
  CHECK(dim_gl(Weight{1, 0, -1}, 3) == 8);
  CHECK(dim_sp({1, 1}, 2) == 5);
  CHECK(dim_sp({1, 1, 1, 1}, 4) == 42);
  CHECK(dim_o({1, 1}, 4) == 6);
  CHECK(dim_so({1, -1}, 4) == 3);
  CHECK(dim_o({1}, 5) == 5);
}

TEST_CASE("GL tensor products of mixed weights") {
  // V (x) V* = adjoint + trivial
  auto t = gl_tensor({1, 0, 0}, {0, 0, -1}, 3);
  CHECK(t.size() == 2);
  CHECK(t[Weight{1, 0, -1}] == 1);
  CHECK(t[Weight{0, 0, 0}] == 1);
  // dimension multiplicativity
  Weight a{2, 0, -1}, b{1, 1, -2};
  Int total = 0;
  for (const auto& [w, c] : gl_tensor(a, b, 3)) total += c * dim_gl(w, 3);
  CHECK(total == dim_gl(a, 3) * dim_gl(b, 3));
}

TEST_CASE("Cauchy identities preserve dimension") {
  for (int deg = 0; deg <= 5; ++deg) {
    Int sym = 0, ext = 0;
    for (const auto& [a, b] : cauchy_sym(2, 3, deg)) sym += dim_gl(a, 2) * dim_gl(b, 3);
    for (const auto& [a, b] : cauchy_ext(2, 3, deg)) ext += dim_gl(a, 2) * dim_gl(b, 3);
    // dim Sym^deg and Lambda^deg of a 6-dimensional space
    Int s = 1, e = 1;
    for (int i = 0; i < deg; ++i) s = s * (6 + i) / (i + 1), e = e * (6 - i) / (i + 1);
    CHECK(sym == s);
    CHECK(ext == e);
  }
}

TEST_CASE("sigma on O labels") {
  CHECK(o_sigma({1}, 4) == Partition{1, 1, 1});
  CHECK(o_sigma({1, 1, 1}, 4) == Partition{1});
  CHECK(o_admissible({1, 1}, 3));
  CHECK_FALSE(o_admissible({1, 1}, 1));
}
