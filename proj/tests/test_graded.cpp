#include "doctest.h"

#include "ugn/algebras.hpp"
#include "ugn/graded.hpp"

using namespace ugn;
using namespace ugn::graded;

namespace {

  // omega((i,j),(k,l)) = (-1)^(j k) on C2 x C2.
  CrossedSystem sign_twist() {
    auto G = Group::parse("C(2)xC(2)");
    auto R = rings::integers();
    return twisted_system(
        G, R,
        [R](GroupElement const& g, GroupElement const& h) {
          return g.parts[1].v[0] * h.parts[0].v[0] == 1 ? R.from_int(-1) : R.one();
        },
        {R.one(), R.from_int(3)}, "sign");
  }

}  // namespace

TEST_CASE("crossed system conditions") {
  auto Z = rings::integers();
  CHECK(verify_crossed_system(group_ring_system(Group::cyclic(3), Z)).ok());
  auto tw = sign_twist();
  auto r  = verify_crossed_system(tw);
  CHECK(r.ok());
  CHECK(r.checks >= 64);

  auto G      = Group::cyclic(2);
  auto broken = twisted_system(
      G, Z, [Z](GroupElement const&, GroupElement const&) { return Z.from_int(-1); }, {Z.one()},
      "broken");
  CHECK_FALSE(verify_crossed_system(broken).ok());
  CHECK_THROWS_AS(crossed_product(broken), Error);
}

TEST_CASE("crossed products") {
  auto Z  = rings::integers();
  auto G  = Group::cyclic(3);
  auto RG = group_ring(G, Z);
  auto g  = G.generators()[0];
  auto x  = crossed_term(RG, g, Z.one());
  auto xi = crossed_term(RG, G.inverse(g), Z.one());
  CHECK(RG.is_one(RG.mul(x, xi)));

  auto tw = crossed_product(sign_twist());
  auto TG = sign_twist().G;
  auto a  = TG.parse_element("[0; 1]");
  auto b  = TG.parse_element("[1; 0]");
  auto ab = tw.mul(crossed_term(tw, a, Z.one()), crossed_term(tw, b, Z.one()));
  CHECK(tw.equal(ab, crossed_term(tw, TG.parse_element("[1; 1]"), Z.from_int(-1))));
  auto ba = tw.mul(crossed_term(tw, b, Z.one()), crossed_term(tw, a, Z.one()));
  CHECK(tw.equal(ba, crossed_term(tw, TG.parse_element("[1; 1]"), Z.one())));

  // Associativity on all triples of basis terms.
  auto els = groups::elements(TG);
  for (auto const& p : els) {
    for (auto const& q : els) {
      for (auto const& s : els) {
        auto P = crossed_term(tw, p, Z.one());
        auto Q = crossed_term(tw, q, Z.from_int(2));
        auto S = crossed_term(tw, s, Z.from_int(-1));
        CHECK(tw.equal(tw.mul(tw.mul(P, Q), S), tw.mul(P, tw.mul(Q, S))));
      }
    }
  }
}

TEST_CASE("skew actions") {
  // C2 acting on Z x Z by swapping the factors.
  auto Z = rings::integers();
  auto P = rings::product({Z, Z});
  auto G = Group::cyclic(2);
  auto swap = [](GroupElement const& g, Element const& f) {
    if (g.v[0] == 0) return f;
    return Element(Element::Parts{f.parts()[1], f.parts()[0]});
  };
  auto cs  = skew_system(G, P, swap, swap, {P.parse("(1; 0)"), P.parse("(2; 5)")}, "swap");
  CHECK(verify_crossed_system(cs).ok());
  auto CP = crossed_product(cs);
  auto t  = G.generators()[0];
  auto r  = P.parse("(1; 0)");
  auto s  = P.parse("(2; 5)");
  auto lhs = CP.mul(crossed_term(CP, t, r), crossed_term(CP, t, s));
  CHECK(CP.equal(lhs, crossed_term(CP, G.identity(), P.mul(r, swap(t, s)))));
}

TEST_CASE("augmentation") {
  auto Z   = rings::integers();
  auto G   = Group::cyclic(4);
  auto RG  = group_ring(G, Z);
  auto aug = augmentation(RG);
  auto g   = crossed_term(RG, G.generators()[0], Z.one());
  auto h   = crossed_term(RG, G.pow(G.generators()[0], 2), Z.one());
  CHECK(aug(g).scalar() == 1);
  CHECK(aug(RG.zero()).scalar() == 0);
  auto s = RG.add(g, h);
  CHECK(aug(RG.mul(s, s)).scalar() == 4);
  auto u = RG.add(g, crossed_term(RG, G.identity(), Z.from_int(-3)));
  CHECK(aug(RG.mul(u, s)) .scalar() == aug(u).scalar() * aug(s).scalar());
  CHECK_THROWS_AS(augmentation(Z), Error);
}

TEST_CASE("strong gradings") {
  auto Z  = rings::integers();
  auto G  = Group::cyclic(3);
  auto RG = group_ring(G, Z);
  SpanningData data{G, RG, [RG, Z](GroupElement const& g) {
                      return std::vector<Element>{crossed_term(RG, g, Z.one())};
                    }};
  CHECK(strong_grading_check(data, groups::elements(G)).ok());

  auto L   = algebras::leavitt_algebra(2);
  auto sd  = algebras::leavitt_spanning_data(L);
  auto Zg  = Group::free_abelian(1);
  auto rep = strong_grading_check(sd, {Zg.identity(), Zg.parse_element("1")});
  CHECK(rep.ok());
  for (auto const& e : rep.entries) {
    Element sum = L.zero();
    for (auto const& w : e.witness) {
      sum = L.add(sum, L.mul(L.from_int(w.coefficient), L.mul(w.left, w.right)));
    }
    CHECK(L.is_one(sum));
  }

  // Z graded trivially by C2: the odd component is zero.
  SpanningData zero_odd{Group::cyclic(2), Z, [Z](GroupElement const& g) {
                          return g.v[0] == 0 ? std::vector<Element>{Z.one()}
                                             : std::vector<Element>{Z.zero()};
                        }};
  CHECK_FALSE(strong_grading_check(zero_odd, groups::elements(Group::cyclic(2))).ok());
}

TEST_CASE("endomorphism rings graded by block support") {
  auto [T2, r2] = endo_graded_construction(rings::integers_mod(5), Group::cyclic(2), 2, 1);
  CHECK(r2.ok());
  CHECK(r2.p == 1);
  CHECK(T2.size == 2);
  auto [T3, r3] = endo_graded_construction(rings::integers(), Group::cyclic(3), 2, 2);
  CHECK(r3.ok());
  CHECK(r3.p == 2);
  CHECK(T3.size == 4);
  for (auto const& g : T3.elements) {
    for (auto const& x : T3.component_basis(g)) {
      CHECK(*T3.degree(x) == g);
    }
  }
  CHECK_THROWS_AS(endo_graded_construction(rings::integers(), Group::cyclic(3), 1, 2), Error);
  CHECK_THROWS_AS(endo_graded_construction(rings::integers(), Group::cyclic(1), 2, 1), Error);
}

TEST_CASE("block embedding of the Weyl algebra") {
  CHECK(rho(3, 3) == 3);
  CHECK(rho(3, 4) == 1);
  CHECK(rho(3, -1) == 2);
  CHECK(rho(1, 7) == 1);

  auto W  = algebras::weyl_algebra({1, {1}, {1}});
  auto fg = algebras::weyl_free_grading(W);
  auto x  = algebras::weyl_x(W, 1);
  auto y  = algebras::weyl_y(W);
  auto one = psi_embedding_check(fg, {W.one()}, {-3, 3}, {-8, 8});
  CHECK(one.ok());
  auto rep = psi_embedding_check(fg, {x, y}, {-2, 2}, {-8, 8});
  CHECK(rep.ok());
  CHECK(rep.entries_checked > 0);

  // Psi(theta(1)) is the identity on the window.
  for (long i = -3; i <= 3; ++i) {
    for (long j = -3; j <= 3; ++j) {
      CHECK(W.equal(psi_entry(fg, W.one(), 0, 0, i, j), i == j ? W.one() : W.zero()));
    }
  }

  algebras::WeylParameters p2{2, {1, 1}, {1, 0}, rings::ScalarDomain::integers()};
  auto W2 = algebras::weyl_algebra(p2);
  auto r2 = psi_embedding_check(algebras::weyl_free_grading(W2),
                                {algebras::weyl_x(W2, 1), algebras::weyl_y(W2)}, {-1, 1}, {-4, 4});
  CHECK(r2.ok());
}
