#include <random>

#include "doctest.h"
#include "repro.hpp"

#include "ugn/algebras.hpp"
#include "ugn/translation.hpp"

using namespace ugn;
using namespace ugn::translation;
using amenability::InjectionWitness;
using groups::ball;
using groups::parse_set;

namespace {

  struct Sampler {
    Group                  G;
    SubsetPredicate        X;
    Ring                   R;
    Side                   side;
    ElementSet             shifts;
    ElementSet             points;
    std::mt19937_64        rng;

    TranslationElement random_element() {
      std::uniform_int_distribution<long>        c(-3, 3);
      std::uniform_int_distribution<std::size_t> s(0, shifts.size() - 1);
      std::uniform_int_distribution<std::size_t> p(0, points.size() - 1);
      auto M = tr_zero(G, X, R, side);
      int  terms = 1 + static_cast<int>(rng() % 3);
      for (int t = 0; t < terms; ++t) {
        auto f = CoefficientFunction::constant_value(R.from_int(c(rng)));
        if (rng() % 2 == 0) {
          auto tab = CoefficientFunction::finite(R, {{points[p(rng)], R.from_int(c(rng))}});
          f.table  = tab.table;
        }
        M = tr_add(M, tr_term(G, X, R, shifts[s(rng)], f, side));
      }
      return M;
    }
  };

  // (MN)(x, y) = sum over z in X of M(x, z) N(z, y); `zs` must cover every z
  // that can contribute.
  Element product_oracle(TranslationElement const& M,
                         TranslationElement const& N,
                         GroupElement const&       x,
                         GroupElement const&       y,
                         ElementSet const&         zs) {
    auto s = M.R.zero();
    for (auto const& z : zs) {
      if (M.X.contains(M.G, z)) {
        s = M.R.add(s, M.R.mul(tr_entry(M, x, z), tr_entry(N, z, y)));
      }
    }
    return s;
  }

  ElementSet in_x(Group const& G, SubsetPredicate const& X, ElementSet const& s) {
    return amenability::intersect(G, s, X);
  }

}  // namespace

TEST_CASE("entries of shifts") {
  auto Z = Group::free_abelian(1);
  auto X = SubsetPredicate::whole_group();
  auto R = rings::integers();
  auto one = Z.parse_element("1");
  auto A1  = tr_term(Z, X, R, one, CoefficientFunction::constant_value(R.one()));
  CHECK(R.is_one(tr_entry(A1, Z.parse_element("3"), Z.parse_element("2"))));
  CHECK(R.is_zero(tr_entry(A1, Z.parse_element("2"), Z.parse_element("3"))));
  auto A2 = tr_mul(A1, A1);
  CHECK(tr_support(A2) == ElementSet{Z.parse_element("2")});
  CHECK(R.is_one(tr_entry(A2, Z.parse_element("5"), Z.parse_element("3"))));
  auto I = tr_identity(Z, X, R);
  CHECK(R.is_one(tr_entry(I, Z.identity(), Z.identity())));
  CHECK(tr_mul(A1, I).terms.size() == 1);

  auto Xf = SubsetPredicate::explicit_set(parse_set(Z, "{0,1}"));
  auto B  = tr_term(Z, Xf, R, one, CoefficientFunction::constant_value(R.one()));
  CHECK_THROWS_AS(tr_entry(B, Z.parse_element("2"), Z.parse_element("1")), Error);
  CHECK_THROWS_AS(tr_add(A1, B), Error);
}

TEST_CASE("products and transposes match the defining sums") {
  auto R = rings::integers();
  auto Zg = Group::free_abelian(1);
  auto F  = Group::free(2);
  auto B  = Group::baumslag_solitar(2);
  std::vector<std::pair<Group, SubsetPredicate>> cases{
      {Zg, SubsetPredicate::whole_group()},
      {Zg, SubsetPredicate::explicit_set(parse_set(Zg, "{-2,0,1,2,3,5}"))},
      {F, SubsetPredicate::explicit_set(ball(F, 2))},
      {B, SubsetPredicate::bs_x()},
  };
  for (auto& [G, X] : cases) {
    for (auto side : {Side::left, Side::right}) {
      Sampler s{G, X, R, side, ball(G, 1), ball(G, 2), std::mt19937_64(5)};
      auto window = in_x(G, X, ball(G, 2));
      auto zs     = in_x(G, X, ball(G, 4));
      for (int trial = 0; trial < 6; ++trial) {
        auto M  = s.random_element();
        auto N  = s.random_element();
        auto MN = tr_mul(M, N);
        auto Mt = tr_transpose(M);
        auto lhs = tr_transpose(MN);
        auto rhs = tr_mul(tr_transpose(N), Mt);
        for (auto const& x : window) {
          for (auto const& y : window) {
            CHECK(R.equal(tr_entry(MN, x, y), product_oracle(M, N, x, y, zs)));
            CHECK(R.equal(tr_entry(Mt, x, y), tr_entry(M, y, x)));
            CHECK(R.equal(tr_entry(lhs, x, y), tr_entry(rhs, x, y)));
            CHECK(R.equal(tr_entry(tr_add(M, tr_neg(M)), x, y), R.zero()));
          }
        }
      }
    }
  }
}

TEST_CASE("right translation elements mirror to the left") {
  auto F  = Group::free(2);
  auto X  = SubsetPredicate::explicit_set(ball(F, 2));
  auto R  = rings::integers_mod(7);
  Sampler s{F, X, R, Side::right, ball(F, 1), ball(F, 2), std::mt19937_64(9)};
  auto window = ball(F, 2);
  auto I  = right_translation_iso(tr_identity(F, X, R, Side::right));
  for (auto const& x : window) {
    CHECK(R.equal(tr_entry(I, F.inverse(x), F.inverse(x)), R.one()));
  }
  for (int trial = 0; trial < 5; ++trial) {
    auto M  = s.random_element();
    auto N  = s.random_element();
    auto Ms = right_translation_iso(M);
    CHECK(Ms.side == Side::left);
    auto prod = tr_mul(Ms, right_translation_iso(N));
    auto want = right_translation_iso(tr_mul(M, N));
    for (auto const& x : window) {
      for (auto const& y : window) {
        CHECK(R.equal(tr_entry(Ms, F.inverse(x), F.inverse(y)), tr_entry(M, x, y)));
        CHECK(R.equal(tr_entry(prod, F.inverse(x), F.inverse(y)),
                      tr_entry(want, F.inverse(x), F.inverse(y))));
      }
    }
    auto back = right_translation_iso_inverse(Ms);
    for (auto const& x : window) {
      for (auto const& y : window) {
        CHECK(R.equal(tr_entry(back, x, y), tr_entry(M, x, y)));
      }
    }
  }

  // On Z a right shift becomes a left shift over the negated index set.
  auto Z  = Group::free_abelian(1);
  auto Xz = SubsetPredicate::explicit_set(parse_set(Z, "{0,1,2}"));
  auto Rz = rings::integers();
  auto r  = tr_term(Z, Xz, Rz, Z.parse_element("1"),
                    CoefficientFunction::constant_value(Rz.one()), Side::right);
  CHECK(Rz.is_one(tr_entry(r, Z.parse_element("0"), Z.parse_element("1"))));
  auto l = right_translation_iso(r);
  CHECK(Rz.is_one(tr_entry(l, Z.parse_element("0"), Z.parse_element("-1"))));
  CHECK(l.X.contains(Z, Z.parse_element("-2")));
}

TEST_CASE("finite group skew group rings") {
  auto c2 = finite_group_iso(Group::cyclic(2), rings::integers());
  CHECK(c2.ok());
  CHECK(c2.order == 2);
  CHECK(finite_group_iso(Group::cyclic(1), rings::integers()).ok());
  CHECK(finite_group_iso(Group::parse("C(2)xC(2)"), rings::integers_mod(3)).ok());
  CHECK_THROWS_AS(finite_group_iso(Group::cyclic(13), rings::integers()), Error);
  CHECK_THROWS_AS(finite_group_iso(Group::free(1), rings::integers()), Error);
}

TEST_CASE("rank collapse matrices") {
  auto R = rings::integers();
  auto F = Group::free(2);
  auto e = collapse_matrices(F, InjectionWitness{}, R);
  CHECK(e.ok());
  CHECK(e.M.rows() == 0);

  auto w = amenability::find_two_to_one_injection(F, ball(F, 2), ball(F, 3), ball(F, 1));
  REQUIRE(w.witness.has_value());
  auto rep = collapse_matrices(F, *w.witness, R);
  CHECK(rep.ok());
  CHECK(rep.M.rows() == 17);
  CHECK(rep.M.cols() == 53);
  CHECK(rep.uncovered.size() == 53 - 34);

  // Independent check of M M^t = I.
  auto mmt = rings::mat_mul(rep.M, rep.M.transpose());
  CHECK(mmt.is_identity());

  auto bad = *w.witness;
  bad.alpha[1] = bad.alpha[0];
  auto br = collapse_matrices(F, bad, R);
  CHECK_FALSE(br.mmt_identity);
  CHECK(br.witness_problem.has_value());
  CHECK_FALSE(br.ok());
}

TEST_CASE("certificate compression") {
  auto c = cli::leavitt_translation_certificate();
  auto G = c.A[0].G;
  auto L = c.A[0].R;
  auto r1 = compress_certificate(c, parse_set(G, "{0}"), parse_set(G, "{0}"));
  CHECK(r1.verdict.bgn());
  CHECK(r1.certificate.m == 2);
  CHECK(r1.certificate.n == 1);
  CHECK(L.equal(r1.certificate.A.at(0, 0), L.parse("e1'")));
  CHECK(L.equal(r1.certificate.A.at(1, 0), L.parse("e2'")));
  CHECK(L.equal(r1.certificate.B.at(0, 1), L.parse("e2")));

  auto r2 = compress_certificate(c, parse_set(G, "{0,1}"), parse_set(G, "{0}"));
  CHECK(r2.verdict.bgn());
  CHECK(r2.certificate.m == 4);
  CHECK(r2.certificate.n == 2);
  CHECK(r2.U.size() == 2);
  CHECK(L.is_zero(r2.certificate.A.at(2, 0)));

  CHECK_THROWS_AS(compress_certificate(c, parse_set(G, "{0,1}"), parse_set(G, "{-1,0,1}")),
                  Error);
  CHECK_THROWS_AS(compress_certificate(c, parse_set(G, "{0}"), parse_set(G, "{0,1}")), Error);
}
