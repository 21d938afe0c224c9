#include <queue>
#include <set>

#include "doctest.h"

#include "ugn/monoids.hpp"

using namespace ugn;
using namespace ugn::monoids;

namespace {

  // Breadth-first closure of lambda under (n+k)a <-> na, capped at `bound`.
  std::set<long> closure(Cnk const& c, long lambda, long bound = 200) {
    std::set<long>   seen{lambda};
    std::queue<long> q;
    q.push(lambda);
    while (!q.empty()) {
      long x = q.front();
      q.pop();
      for (long y : {x + c.k, x - c.k}) {
        bool ok = (y > x) ? x >= c.n : y >= c.n;
        if (ok && y >= 0 && y <= bound && seen.insert(y).second) q.push(y);
      }
    }
    return seen;
  }

  bool leq_oracle(Cnk const& c, long lambda, long mu) {
    auto target = closure(c, mu);
    for (long nu = 0; lambda + nu <= 200; ++nu) {
      for (long v : closure(c, lambda + nu)) {
        if (target.count(v)) return true;
      }
    }
    return false;
  }

  MnklElement x_j(Mnkl const& m, long coeff, long j) {
    auto e = mnkl_zero(m);
    e.x[j - 1] = coeff;
    return e;
  }

}  // namespace

TEST_CASE("C(n,k) normal forms") {
  Cnk c{3, 2};
  CHECK(cnk_normalize(c, 0) == 0);
  CHECK(cnk_normalize(c, 7) == 3);
  CHECK(cnk_normalize(c, 4) == 4);
  for (long n = 1; n <= 4; ++n) {
    for (long k = 1; k <= 4; ++k) {
      Cnk d{n, k};
      for (long l = 0; l <= 30; ++l) {
        auto cl = closure(d, l);
        CHECK(cl.count(cnk_normalize(d, l)) == 1);
        CHECK(cnk_normalize(d, l) == *cl.begin());
      }
    }
  }
  CHECK_THROWS_AS(check(Cnk{0, 1}), Error);
  CHECK_THROWS_AS(cnk_normalize(c, -1), Error);
}

TEST_CASE("C(n,k) order matches the closure oracle") {
  Cnk c{3, 2};
  CHECK(cnk_leq(c, 4, 3));
  CHECK_FALSE(cnk_leq(c, 3, 2));
  for (long n = 1; n <= 4; ++n) {
    for (long k = 1; k <= 3; ++k) {
      Cnk d{n, k};
      CHECK(cnk_leq(d, 0, 9));
      for (long l = 0; l <= 12; ++l) {
        for (long m = 0; m <= 12; ++m) {
          CHECK(cnk_leq(d, l, m) == leq_oracle(d, l, m));
        }
      }
    }
  }
}

TEST_CASE("generating numbers") {
  CHECK(cnk_generating_number({1, 1}) == 1);
  CHECK(cnk_generating_number({3, 2}) == 3);
  CHECK(cnk_generating_number({5, 7}) == 5);
}

TEST_CASE("separator homomorphisms") {
  Mnkl m{2, 1, 2};
  auto z = mnkl_zero(m);
  CHECK(mnkl_phi(m, z) == 0);
  CHECK(mnkl_psi(m, z, 1) == 0);
  auto e = parse_mnkl_element(m, "u + x1 + y2");
  CHECK(mnkl_phi(m, e) == 2);
  CHECK(mnkl_psi(m, parse_mnkl_element(m, "x1 + y1"), 1) == -1);
  // Every relation step preserves phi and psi_j.
  for (auto const& nb : mnkl_neighbours(m, parse_mnkl_element(m, "3*u + 2*x1 + 4*y2"))) {
    CHECK(mnkl_phi(m, nb) == mnkl_phi(m, parse_mnkl_element(m, "3*u + 2*x1 + 4*y2")));
    for (long j = 1; j <= 2; ++j) {
      CHECK(mnkl_psi(m, nb, j) == mnkl_psi(m, parse_mnkl_element(m, "3*u + 2*x1 + 4*y2"), j));
    }
  }
}

TEST_CASE("M(n,k,l) order") {
  Mnkl m{2, 1, 1};
  auto s = x_j(m, 3, 1);
  auto r = mnkl_leq(m, s, s);
  CHECK(r.verdict == LeqResult::Verdict::yes);
  CHECK(witness_holds(m, s, s, r));

  auto no = mnkl_leq(m, x_j(m, 3, 1), x_j(m, 2, 1));
  REQUIRE(no.verdict == LeqResult::Verdict::no);
  REQUIRE(no.separator.has_value());
  CHECK(no.separator->kind == Separator::Kind::psi);
  CHECK(separator_refutes(m, x_j(m, 3, 1), x_j(m, 2, 1), *no.separator));

  auto big = parse_mnkl_element(m, "3*u + 3*x1");
  auto small = parse_mnkl_element(m, "2*u + 2*x1");
  auto rel = mnkl_leq(m, big, small);
  REQUIRE(rel.verdict == LeqResult::Verdict::yes);
  CHECK(witness_holds(m, big, small, rel));
}

TEST_CASE("queries") {
  auto q = parse_query("3*x1 <= 2*x1 in M(2,1,1)");
  CHECK_FALSE(q.is_cnk);
  CHECK(q.lhs.x[0] == 3);
  auto c = parse_query("4 <= 3 in C(3,2)");
  CHECK(c.is_cnk);
  CHECK(c.lhs_cnk == 4);
  CHECK(parse_query("4a <= 3a in C(3,2)").rhs_cnk == 3);
  CHECK_THROWS_AS(parse_query("4 <= 3"), ParseError);
  CHECK_THROWS_AS(parse_query("x3 <= 1 in M(2,1,1)"), ParseError);
}
