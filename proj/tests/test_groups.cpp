#include <random>
#include <set>

#include "doctest.h"

#include "ugn/groups.hpp"

using namespace ugn;
using namespace ugn::groups;

namespace {

  // Independent ball oracle for F_k: enumerate all words of length <= r over
  // a_i^{+-1} and reduce them as strings.
  std::set<std::string> free_ball_oracle(std::size_t k, std::size_t r) {
    std::set<std::string> out{""};
    std::vector<std::string> frontier{""};
    for (std::size_t len = 0; len < r; ++len) {
      std::vector<std::string> next;
      for (auto const& w : frontier) {
        for (std::size_t g = 0; g < 2 * k; ++g) {
          char c = static_cast<char>(g % 2 == 0 ? 'a' + g / 2 : 'A' + g / 2);
          std::string v = w;
          char inv = static_cast<char>(c >= 'a' ? c - 'a' + 'A' : c - 'A' + 'a');
          if (!v.empty() && v.back() == inv) {
            v.pop_back();
          } else {
            v.push_back(c);
          }
          next.push_back(v);
        }
      }
      for (auto const& v : next) out.insert(v);
      frontier = std::move(next);
    }
    return out;
  }

}  // namespace

TEST_CASE("parsing and formatting") {
  for (auto name : {"F2", "Z", "Z^3", "BS(1,2)", "C(4)", "C(2)xC(3)"}) {
    auto G = Group::parse(name);
    CHECK(Group::parse(G.name()) == G);
  }
  CHECK(Group::parse("C4") == Group::cyclic(4));
  CHECK_THROWS_AS(Group::parse("Q8"), ParseError);
  CHECK_THROWS_AS(Group::parse("C(0)"), Error);
  auto F = Group::free(2);
  for (auto const& x : ball(F, 3)) {
    CHECK(F.parse_element(F.format(x)) == x);
  }
}

TEST_CASE("products in BS(1,2) and F2") {
  auto B = Group::baumslag_solitar(2);
  auto a = B.generators()[0];
  auto b = B.generators()[1];
  CHECK(B.mul(B.mul(b, a), B.inverse(b)) == B.pow(a, 2));
  CHECK(B.bs_t(B.pow(a, 2)) == 2);
  CHECK(B.bs_m(b) == 1);
  auto F = Group::free(2);
  auto x = F.parse_element("a*b");
  auto y = F.parse_element("b^-1*a");
  CHECK(F.mul(x, y) == F.parse_element("a^2"));
  CHECK(F.mul(x, F.identity()) == x);
}

TEST_CASE("group axioms on sampled elements") {
  std::mt19937_64 rng(11);
  for (auto name : {"F2", "Z^2", "BS(1,3)", "C(5)", "C(2)xZ"}) {
    auto G = Group::parse(name);
    auto S = ball(G, 3);
    std::uniform_int_distribution<std::size_t> d(0, S.size() - 1);
    for (int i = 0; i < 60; ++i) {
      auto x = S[d(rng)], y = S[d(rng)], z = S[d(rng)];
      CHECK(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)));
      CHECK(G.mul(x, G.inverse(x)) == G.identity());
      CHECK(G.mul(G.identity(), x) == x);
      CHECK_NOTHROW(G.check(G.mul(x, y)));
    }
  }
}

TEST_CASE("balls") {
  CHECK(ball(Group::free(2), 0).size() == 1);
  auto F = Group::free(2);
  for (std::size_t r = 0; r <= 4; ++r) {
    auto B = ball(F, r);
    CHECK(B.size() == 2 * static_cast<std::size_t>(std::pow(3, r)) - 1);
    CHECK(B.size() == free_ball_oracle(2, r).size());
    CHECK(canonical_set(B).size() == B.size());
  }
  auto Z = Group::free_abelian(1);
  auto b3 = canonical_set(ball(Z, 3));
  CHECK(b3 == canonical_set(parse_set(Z, "{-3,-2,-1,0,1,2,3}")));
  CHECK(ball(Group::free_abelian(2), 2).size() == 13);
  CHECK(elements(Group::cyclic(6)).size() == 6);
  CHECK(*Group::parse("C(2)xC(3)").order() == 6);
  CHECK_THROWS_AS(elements(Group::free(1)), Error);
  CHECK_THROWS_AS(ball(F, 9), Error);
  CHECK_NOTHROW(ball(F, 9, 9));
}

TEST_CASE("set products") {
  auto Z  = Group::free_abelian(1);
  auto K  = parse_set(Z, "{-1,0,1}");
  auto F  = parse_set(Z, "{0,1,2,3,4,5}");
  auto KF = set_product(Z, K, F);
  CHECK(KF.size() == 8);
  CHECK(set_contains(KF, Z.parse_element("-1")));
  CHECK(set_contains(KF, Z.parse_element("6")));
  CHECK(set_product(Z, {Z.identity()}, F) == canonical_set(F));

  auto G = Group::free(2);
  CHECK(set_product(G, ball(G, 1), ball(G, 2)) == canonical_set(ball(G, 3)));
  CHECK(set_product(G, ball(G, 1), ball(G, 2)).size() == 53);
  auto t = translate_set(G, G.parse_element("a"), {G.identity(), G.parse_element("a^-1")});
  CHECK(t == canonical_set({G.parse_element("a"), G.identity()}));
}
