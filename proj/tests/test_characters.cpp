#include "doctest.h"
#include "lwr/characters.hpp"

using namespace lwr;

namespace {

Int binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  Int r = 1;
  for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("configs validate their constraints") {
  CHECK_NOTHROW(sympl_config(4, 0, 1, {}));
  CHECK_THROWS_AS(sympl_config(2, 1, 1, {2}), DomainError);  // nu not inside (k^d)
  CHECK_THROWS_AS(complexes_config(2, 2, 1, 1, 1, 0, {}, {}), DomainError);  // a < n
  CHECK(sympl_config(3, 1, 1, {1}).dimV() == 8);
  CHECK(orth_config(2, 0, 1, 1, {}).dimV() == 5);
  CHECK(complexes_config(1, 2, 1, 2, 1, 1, {}, {}).dimV() == 4);
  CHECK(ol_nu(complexes_config(1, 1, 2, 2, 2, 1, {1}, {1})) == Weight{1, 0});
}

TEST_CASE("low degrees of B") {
  CaseConfig c = sympl_config(3, 1, 0, {});
  auto ch = coord_ring_character(c, 2);
  CHECK(sum_dim(c, ch[1]) == 3 * 8);
  CHECK(sum_dim(c, ch[2]) == binom(25, 2) - binom(3, 2));
  Series hs = hilbert_series_B(c, 3);
  CHECK(hs[0] == 1);
  CHECK(hs[1] == 24);
}

TEST_CASE("coordinate ring matches the complete intersection series") {
  std::vector<CaseConfig> cfgs;
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 1; ++d) {
      cfgs.push_back(sympl_config(n, d, 0, {}));
      cfgs.push_back(orth_config(n, d + 1, 0, 0, {}));
      cfgs.push_back(orth_config(n, d, 1, 0, {}));
      cfgs.push_back(complexes_config(n, 2, d, n, 1, 0, {}, {}));
    }
  for (const auto& c : cfgs) {
    auto ch = coord_ring_character(c, 8);
    Series hs = hilbert_series_B(c, 8);
    for (int j = 0; j <= 8; ++j) {
      INFO(c.describe() << " degree " << j);
      CHECK(sum_dim(c, ch[j]) == hs[j]);
    }
  }
}

TEST_CASE("module generators") {
  // first example: generators S_(1^4) E (x) [1^4], 42-dimensional
  CaseConfig c = sympl_config(4, 0, 1, {});
  auto ch = module_character(c, 4);
  REQUIRE(ch.count(4));
  CHECK(ch[4].size() == 1);
  CHECK(sum_dim(c, ch[4]) == 42);
  CHECK(ch.begin()->first == c.gen_degree());
  // nu = (k^d): powers of the maximal minors, generators S_(k^n) E (x) [k^n]
  c = sympl_config(2, 1, 2, {2});
  ch = module_character(c, 4);
  REQUIRE(ch[4].size() == 1);
  CHECK(ch[4].begin()->first.E == Weight{2, 2});
  CHECK(ch[4].begin()->first.V == Weight{2, 2, 0});
}

TEST_CASE("Koszul dual series") {
  CaseConfig c = orth_config(2, 1, 1, 1, {});
  Series b = hilbert_series_B(c, 20), bd = hilbert_series_koszul_dual(c, 20);
  CHECK(bd[1] == linear_count(c));
  Series prod = series_mul(b, series_negate_var(bd), 20);
  CHECK(prod[0] == 1);
  for (int j = 1; j <= 20; ++j) CHECK(prod[j] == 0);
  CHECK(quadric_count(c) == 3);
  CHECK(quadric_count(sympl_config(4, 0, 0, {})) == 6);
  CHECK(quadric_count(complexes_config(2, 3, 0, 2, 1, 0, {}, {})) == 6);
}

TEST_CASE("determinantal module over the polynomial ring") {
  // maximal minors of a 2 x 3 matrix: generators Lambda^2 E (x) Lambda^2 F
  auto ch = poly_det_module_character(2, 3, 1, {}, 3);
  REQUIRE(ch.count(2));
  Int gens = 0;
  for (const auto& [l, c] : ch[2]) gens += c;
  CHECK(gens == 1);
}
