#include <random>

#include "doctest.h"

#include "ugn/algebras.hpp"
#include "ugn/certificates.hpp"

using namespace ugn;
using namespace ugn::algebras;

namespace {

  // Random generator words of length 1..max_len.
  struct WordSampler {
    Ring                 R;
    std::vector<Element> gens;
    std::mt19937_64      rng;

    std::vector<Element> word(std::size_t max_len) {
      std::vector<Element> w;
      std::size_t          len = 1 + rng() % max_len;
      for (std::size_t i = 0; i < len; ++i) w.push_back(gens[rng() % gens.size()]);
      return w;
    }
  };

  Element fold_left(Ring const& R, std::vector<Element> const& w) {
    auto acc = R.one();
    for (auto const& g : w) acc = R.mul(acc, g);
    return acc;
  }

  Element fold_right(Ring const& R, std::vector<Element> const& w) {
    auto acc = R.one();
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = R.mul(*it, acc);
    return acc;
  }

}  // namespace

TEST_CASE("Leavitt relations") {
  auto L = leavitt_algebra(2);
  CHECK(L.is_zero(L.parse("e1'*e2")));
  CHECK(L.is_one(L.parse("e1'*e1")));
  CHECK(L.equal(L.parse("e2*e2'"), L.parse("1 - e1*e1'")));
  CHECK(L.is_one(L.parse("e1*e1' + e2*e2'")));
  auto L3 = leavitt_algebra(3);
  CHECK(L3.is_one(L3.parse("e1*e1' + e2*e2' + e3*e3'")));
  CHECK_THROWS_AS(L.parse("e3"), ParseError);
  CHECK_THROWS_AS(leavitt_algebra(1), Error);
  auto x = L.parse("2*e1*e2' - e2*e2*e1'");
  CHECK(L.equal(L.parse(L.format(x)), x));
}

TEST_CASE("Leavitt normal forms are confluent and graded") {
  for (std::size_t n : {2, 3}) {
    auto L = leavitt_algebra(n, rings::ScalarDomain::integers_mod(7));
    std::vector<Element> gens;
    for (std::size_t i = 1; i <= n; ++i) {
      gens.push_back(leavitt_generator(L, i, false));
      gens.push_back(leavitt_generator(L, i, true));
    }
    WordSampler s{L, gens, std::mt19937_64(n)};
    for (int trial = 0; trial < 150; ++trial) {
      auto u  = s.word(4);
      auto v  = s.word(4);
      auto uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      auto a = fold_left(L, uv);
      CHECK(L.equal(a, fold_right(L, uv)));
      CHECK(L.equal(a, L.mul(fold_left(L, u), fold_right(L, v))));
      long du = 0;
      for (auto const& g : uv) du += *leavitt_degrees(g).begin();
      for (long d : leavitt_degrees(a)) CHECK(d == du);
      for (auto const& [m, c] : leavitt_terms(a)) {
        CHECK(c != 0);
        bool both_end_n = !m.alpha.empty() && !m.beta.empty() && m.alpha.back() == n - 1
                          && m.beta.back() == n - 1;
        CHECK_FALSE(both_end_n);
      }
    }
  }
}

TEST_CASE("Leavitt rank certificates") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto c = leavitt_rank_certificate(n);
    CHECK(c.ab_is_identity);
    CHECK(c.ba_is_one);
    CHECK(c.verdict.bgn());
    CHECK(rings::verify_certificate(c.certificate).bgn());
  }
}

TEST_CASE("matrix-unit towers") {
  auto L   = leavitt_algebra(2);
  auto e11 = L.parse("e1*e1'");
  auto e12 = L.parse("e1*e2'");
  auto e21 = L.parse("e2*e1'");
  CHECK(L.equal(L.mul(e12, e21), e11));
  for (auto [n, l] : {std::pair<std::size_t, std::size_t>{2, 1}, {2, 2}, {3, 1}}) {
    auto r = leavitt_matrix_units(n, l);
    CHECK(r.ok());
    CHECK(r.size == static_cast<std::size_t>(std::pow(n, l)));
    CHECK(r.product_instances == r.size * r.size * r.size * r.size);
  }
  std::vector<Word> swapped{{1}, {0}};
  CHECK(leavitt_matrix_units(2, 1, swapped).ok());
  CHECK_THROWS_AS(leavitt_matrix_units(2, 1, {{0}, {0}}), Error);
  CHECK_THROWS_AS(leavitt_matrix_units(3, 4), Error);

  // e1 e1* expanded one level: e1 e1 (e1 e1)* + e1 e2 (e1 e2)*.
  auto ex = leavitt_expand_to_level(e11, 2);
  CHECK(ex.size() == 2);
  CHECK(L.equal(leavitt_element(L, ex), e11));
}

TEST_CASE("Weyl relations") {
  auto W = weyl_algebra({1, {1}, {1}});
  CHECK(W.equal(W.parse("y*x1"), W.parse("x1*y + 1")));
  CHECK(W.equal(W.parse("y*x1*x1"), W.parse("x1*x1*y + 2*x1")));
  CHECK(W.equal(W.mul(W.parse("y"), W.one()), W.parse("y")));

  WeylParameters p{2, {2, Scalar(1, 3)}, {1, -1}, rings::ScalarDomain::rationals()};
  auto V = weyl_algebra(p);
  CHECK(V.equal(V.parse("y*x2"), V.parse("1/3*x2*y - 1")));
  CHECK_THROWS_AS(weyl_algebra({1, {2}, {0}}), Error);
}

TEST_CASE("Weyl normal forms are confluent and graded") {
  WeylParameters p{2, {2, Scalar(1, 3)}, {1, -1}, rings::ScalarDomain::rationals()};
  auto W = weyl_algebra(p);
  WordSampler s{W, {weyl_x(W, 1), weyl_x(W, 2), weyl_y(W)}, std::mt19937_64(17)};
  for (int trial = 0; trial < 200; ++trial) {
    auto u  = s.word(4);
    auto v  = s.word(4);
    auto uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    auto a = fold_left(W, uv);
    CHECK(W.equal(a, fold_right(W, uv)));
    CHECK(W.equal(a, W.mul(fold_left(W, u), fold_left(W, v))));
    CHECK(W.equal(W.parse(W.format(a)), a));
    auto degs = weyl_degrees(a);
    CHECK(degs.size() <= 1);
  }
}

TEST_CASE("Weyl degree-zero character") {
  auto W = weyl_algebra({1, {1}, {1}});
  CHECK(weyl_phi0(W, W.one()) == 1);
  auto xy = W.parse("x1*y");
  CHECK(weyl_phi0(W, xy) == 0);
  CHECK(weyl_phi0(W, W.parse("y*x1")) == 1);
  CHECK_THROWS_AS(weyl_phi0(W, W.parse("x1")), Error);
  std::vector<std::pair<Element, Element>> pairs{{xy, W.parse("y*x1")},
                                                 {W.parse("y*x1 + 3"), W.parse("x1*x1*y*y")}};
  CHECK(weyl_phi0_check(W, pairs).ok());
}

TEST_CASE("Weyl component bases") {
  WeylParameters p{2, {1, 1}, {1, 1}, rings::ScalarDomain::integers()};
  auto W  = weyl_algebra(p);
  auto b1 = weyl_component_basis(W, 1);
  REQUIRE(b1.elements.size() == 2);
  CHECK(b1.elements[0].x == Word{0});
  CHECK(b1.elements[1].x == Word{1});
  auto bm3 = weyl_component_basis(W, -3);
  REQUIRE(bm3.elements.size() == 1);
  CHECK(bm3.elements[0].y == 3);
  CHECK(bm3.elements[0].x.empty());
  auto b0 = weyl_component_basis(W, 0);
  CHECK_FALSE(b0.finite);
  CHECK(b0.elements.size() == 1 + 2 + 4);
  CHECK(weyl_component_basis(W, 2).elements.size() == 4);

  auto r  = W.parse("x1*x2*x1*y + 2*x2*x2");
  auto cs = weyl_right_coordinates(W, r, 2);
  REQUIRE(cs.size() == 4);
  auto sum = W.zero();
  auto basis = weyl_component_basis(W, 2).elements;
  for (std::size_t i = 0; i < 4; ++i) {
    sum = W.add(sum, W.mul(weyl_monomial(W, basis[i].x, basis[i].y), cs[i]));
  }
  CHECK(W.equal(sum, r));
}
