#include <random>

#include "doctest.h"

#include "ugn/amenability.hpp"

using namespace ugn;
using namespace ugn::amenability;
using groups::ball;
using groups::parse_set;

TEST_CASE("Følner search on Z") {
  auto Z = Group::free_abelian(1);
  auto X = SubsetPredicate::whole_group();
  auto K = parse_set(Z, "{-1,0,1}");

  auto user = folner_search(Z, X, K, Rational(1, 2), {parse_set(Z, "{0,1,2,3,4,5}")});
  REQUIRE(user.witness.has_value());
  CHECK(user.witness->kf_in_x == 8);
  CHECK(user.witness->f_in_x == 6);
  CHECK(verify_folner(Z, X, *user.witness));

  auto tenth = folner_search(Z, X, K, Rational(1, 10), 25);
  REQUIRE(tenth.witness.has_value());
  CHECK(*tenth.radius == 10);
  CHECK(tenth.witness->f_in_x == 21);
  CHECK(tenth.witness->kf_in_x == 23);

  // Ratios (2r+3)/(2r+1).
  auto prof = expansion_profile(Z, X, K, 5);
  for (auto const& row : prof) {
    long r = static_cast<long>(row.radius);
    CHECK(*row.ratio == Rational(2 * r + 3, 2 * r + 1));
  }
  CHECK(*prof[1].ratio == Rational(5, 3));
}

TEST_CASE("no Følner sets in F2 up to radius 6") {
  auto F = Group::free(2);
  auto r = folner_search(F, SubsetPredicate::whole_group(), ball(F, 1), Rational(1, 2), 6);
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.rows.size() == 7);
  for (auto const& row : r.rows) {
    CHECK(*row.ratio > 2);
  }
}

TEST_CASE("Følner witnesses are re-verified") {
  auto Z = Group::free_abelian(1);
  auto X = SubsetPredicate::whole_group();
  FolnerWitness w{parse_set(Z, "{-1,0,1}"), Rational(1, 2), parse_set(Z, "{0,1}"), 0, 0};
  CHECK_FALSE(verify_folner(Z, X, w));
  w.F = parse_set(Z, "{}");
  CHECK_FALSE(verify_folner(Z, X, w));
}

TEST_CASE("subset predicates") {
  auto B  = Group::baumslag_solitar(2);
  auto X  = SubsetPredicate::bs_x();
  auto X0 = SubsetPredicate::bs_x0();
  auto a  = B.generators()[0];
  auto b  = B.generators()[1];
  CHECK(X.contains(B, a));
  CHECK_FALSE(X0.contains(B, a));
  CHECK(X0.contains(B, B.pow(a, 2)));
  CHECK_FALSE(X.contains(B, B.bs_element(Rational(1, 2), 0)));
  // x in X^-1 iff x^-1 in X.
  auto Xi = X.inverse();
  for (auto const& x : ball(B, 3)) {
    CHECK(Xi.contains(B, x) == X.contains(B, B.inverse(x)));
  }
  CHECK(Xi.inverse().contains(B, b) == X.contains(B, b));
  auto T = SubsetPredicate::user_table({{a, true}});
  CHECK(T.contains(B, a));
  CHECK_THROWS_AS(T.contains(B, b), Error);
}

TEST_CASE("two-to-one injections") {
  auto Z = Group::free_abelian(1);
  auto K = parse_set(Z, "{-1,0,1}");
  auto empty = find_two_to_one_injection(Z, {}, {}, K);
  REQUIRE(empty.witness.has_value());
  CHECK(empty.witness->V.empty());

  auto V   = parse_set(Z, "{0,1,2,3,4}");
  auto W   = groups::set_product(Z, K, V);
  auto res = find_two_to_one_injection(Z, V, W, K);
  CHECK_FALSE(res.witness.has_value());
  CHECK(W.size() == 7);
  CHECK(neighbourhood(Z, res.hall_set, W, K).size() < 2 * res.hall_set.size());
  CHECK(res.hall_neighbours == neighbourhood(Z, res.hall_set, W, K));

  auto F  = Group::free(2);
  auto fw = find_two_to_one_injection(F, ball(F, 2), ball(F, 3), ball(F, 1));
  REQUIRE(fw.witness.has_value());
  CHECK_FALSE(check_injection(F, *fw.witness).has_value());
  CHECK(fw.flow == 2 * 17);

  auto broken = *fw.witness;
  broken.beta[0] = broken.alpha[0];
  CHECK(check_injection(F, broken).has_value());
}

TEST_CASE("injection witnesses agree with a Hall-count oracle on small Z instances") {
  // On Z with K = {-1,0,1}, an interval V of size s has |KV| = s + 2, so a
  // witness exists iff s + 2 >= 2s.
  auto Z = Group::free_abelian(1);
  auto K = parse_set(Z, "{-1,0,1}");
  for (long s = 1; s <= 6; ++s) {
    groups::ElementSet V;
    for (long i = 0; i < s; ++i) V.push_back(Z.parse_element(std::to_string(i)));
    auto W = groups::set_product(Z, K, V);
    auto r = find_two_to_one_injection(Z, V, W, K);
    CHECK(r.witness.has_value() == (s + 2 >= 2 * s));
  }
}

TEST_CASE("equidecompositions") {
  auto Z = Group::free_abelian(1);
  auto A = parse_set(Z, "{0,1}");
  EquidecompositionWitness w{{parse_set(Z, "{0}"), parse_set(Z, "{1}")},
                             {Z.parse_element("2"), Z.parse_element("4")}};
  CHECK(verify_equidecomposition(Z, w, A, parse_set(Z, "{2,5}")));
  EquidecompositionWitness trivial{{A}, {Z.identity()}};
  CHECK(verify_equidecomposition(Z, trivial, A, A));
  EquidecompositionWitness overlap{{parse_set(Z, "{0}"), parse_set(Z, "{1}")},
                                   {Z.parse_element("2"), Z.parse_element("1")}};
  CHECK_FALSE(verify_equidecomposition(Z, overlap, A, parse_set(Z, "{2}")));
}

TEST_CASE("Baumslag-Solitar subset") {
  CHECK(bs_example_check(2, 4).ok());
  CHECK(bs_example_check(3, 3).ok());
  auto r0 = bs_example_check(2, 0);
  CHECK(r0.ok());
  CHECK(r0.ball_size == 1);
}

TEST_CASE("Rosenblatt witnesses") {
  auto B = Group::baumslag_solitar(2);
  auto X = SubsetPredicate::bs_x();
  auto e = [&](Rational t, long m) { return B.bs_element(t, m); };

  auto r = rosenblatt_find(B, {e(0, 0)}, {e(0, 0), e(Rational(1, 2), 0)});
  CHECK(r.frac == Rational(1, 2));
  CHECK(r.u_count == 0);
  CHECK(r.v_count == 1);

  auto r2 = rosenblatt_find(B, {}, {e(0, 0)});
  CHECK(r2.u_count < r2.v_count);

  auto r3 = rosenblatt_find(B, {e(Rational(1, 2), 1)}, {e(0, 0), e(1, 3)});
  CHECK(r3.frac == 0);
  CHECK(r3.u_count == 0);
  CHECK(r3.v_count == 2);
  CHECK_THROWS_AS(rosenblatt_find(B, {e(0, 0)}, {e(0, 0)}), Error);

  std::mt19937_64 rng(3);
  auto pool = ball(B, 4);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t nv = 1 + trial % 6, nu = trial % nv;
    std::vector<GroupElement> u, v;
    for (std::size_t i = 0; i < nu; ++i) u.push_back(pool[pick(rng)]);
    for (std::size_t i = 0; i < nv; ++i) v.push_back(pool[pick(rng)]);
    auto w = rosenblatt_find(B, u, v);
    CHECK(tuple_count(B, w.g, X, u) == w.u_count);
    CHECK(tuple_count(B, w.g, X, v) == w.v_count);
    CHECK(w.u_count < w.v_count);
  }
}
