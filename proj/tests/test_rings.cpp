#include <random>

#include "doctest.h"
#include "support.hpp"

#include "ugn/algebras.hpp"
#include "ugn/certificates.hpp"
#include "ugn/graded.hpp"
#include "ugn/ring_text.hpp"

using namespace ugn;
using namespace ugn::rings;
using test::matrix;

namespace {

  RankCertificate leavitt2() {
    return algebras::leavitt_rank_certificate(2).certificate;
  }

  RankCertificate identity_cert(Ring const& R, std::size_t n) {
    return make_certificate(RingMatrix::identity(R, n), RingMatrix::identity(R, n));
  }

}  // namespace

TEST_CASE("scalar domains canonicalise and invert") {
  auto z5 = ScalarDomain::integers_mod(5);
  CHECK(z5.canonical(Scalar(-1)) == 4);
  CHECK(z5.mul(2, 3) == 1);
  CHECK(*z5.inverse(2) == 3);
  CHECK_FALSE(ScalarDomain::integers().inverse(2).has_value());
  CHECK(*ScalarDomain::integers().inverse(-1) == -1);
  CHECK(*ScalarDomain::rationals().inverse(Scalar(2, 3)) == Scalar(3, 2));
  CHECK_THROWS_AS(ScalarDomain::integers().canonical(Scalar(1, 2)), Error);
  CHECK_THROWS_AS(ScalarDomain::integers_mod(1), Error);
  CHECK_THROWS_AS(ScalarDomain::integers().parse("x"), ParseError);
}

TEST_CASE("matrix products") {
  auto Z = integers();
  auto I = RingMatrix::identity(Z, 2);
  CHECK(mat_equal(mat_mul(I, I), I));
  auto a = matrix(Z, 2, 2, {"1", "2", "3", "4"});
  auto b = matrix(Z, 2, 2, {"0", "1", "1", "0"});
  CHECK(mat_equal(mat_mul(a, b), matrix(Z, 2, 2, {"2", "1", "4", "3"})));
  auto Z5 = integers_mod(5);
  CHECK(mat_equal(mat_mul(matrix(Z5, 1, 1, {"2"}), matrix(Z5, 1, 1, {"3"})),
                  matrix(Z5, 1, 1, {"1"})));
  CHECK_THROWS_AS(mat_mul(a, matrix(Z, 1, 2, {"1", "1"})), Error);
  CHECK_THROWS_AS(mat_mul(a, matrix(Z5, 2, 2, {"1", "1", "1", "1"})), Error);
}

TEST_CASE("matrix products agree with a plain integer oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-9, 9);
  auto Z = integers();
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t p = 1 + trial % 4, q = 1 + (trial / 4) % 3, r = 1 + trial % 3;
    std::vector<long> a(p * q), b(q * r);
    for (auto& x : a) x = d(rng);
    for (auto& x : b) x = d(rng);
    std::vector<Element> ea, eb;
    for (long x : a) ea.push_back(Z.from_int(x));
    for (long x : b) eb.push_back(Z.from_int(x));
    auto c = mat_mul(RingMatrix(Z, p, q, ea), RingMatrix(Z, q, r, eb));
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        long s = 0;
        for (std::size_t k = 0; k < q; ++k) s += a[i * q + k] * b[k * r + j];
        CHECK(c.at(i, j).scalar() == s);
      }
    }
  }
}

TEST_CASE("matrix, product and opposite rings") {
  auto M2 = matrix_ring(integers(), 2);
  auto x  = M2.parse("[[1, 2], [0, 1]]");
  auto y  = M2.parse("[[0, 1], [1, 0]]");
  CHECK(M2.equal(M2.mul(x, y), M2.parse("[[2, 1], [1, 0]]")));
  CHECK(M2.format(M2.one()) == "[[1, 0], [0, 1]]");
  auto op = opposite(M2);
  CHECK(op.equal(op.mul(x, y), M2.mul(y, x)));
  CHECK(opposite(op) == M2);
  auto P = product({integers_mod(2), integers_mod(3)});
  auto u = P.parse("(1; 2)");
  CHECK(P.equal(P.mul(u, u), P.parse("(1; 1)")));
  CHECK(P.equal(P.from_int(5), P.parse("(1; 2)")));
  CHECK(parse_ring("M2(Z)") == M2);
  CHECK(parse_ring("op(M2(Z))") == op);
  CHECK_THROWS_AS(parse_ring("M0(Z)"), ParseError);
  CHECK_THROWS_AS(parse_ring("nonsense"), ParseError);
}

TEST_CASE("certificate verdicts") {
  auto Z = integers();
  CHECK(verify_certificate(identity_cert(Z, 1)).kind == CertificateVerdict::Kind::valid);
  CHECK(verify_certificate(leavitt2()).bgn());

  auto L  = algebras::leavitt_algebra(2);
  auto bad = make_certificate(matrix(L, 2, 1, {"e1'", "e1'"}), matrix(L, 1, 2, {"e1", "e2"}));
  auto v   = verify_certificate(bad);
  CHECK(v.kind == CertificateVerdict::Kind::invalid);
  CHECK(v.row == 2);
  CHECK(v.col == 1);
  CHECK_THROWS_AS(make_certificate(matrix(Z, 2, 1, {"1", "1"}), matrix(Z, 2, 1, {"1", "1"})),
                  Error);
}

TEST_CASE("extension") {
  auto c3 = extend_certificate(leavitt2(), 3);
  CHECK(c3.n == 1);
  CHECK(c3.m == 3);
  CHECK(verify_certificate(c3).bgn());
  auto c4 = extend_certificate(leavitt2(), 4);
  CHECK(verify_certificate(c4).bgn());
  auto same = extend_certificate(leavitt2(), 2);
  CHECK(mat_equal(same.A, leavitt2().A));
  CHECK_THROWS_AS(extend_certificate(identity_cert(integers(), 1), 3), Error);
}

TEST_CASE("opposite certificates") {
  auto id = identity_cert(integers(), 2);
  auto o  = opposite_certificate(id);
  CHECK(verify_certificate(o).ok());
  auto c  = leavitt2();
  auto co = opposite_certificate(c);
  CHECK(co.ring == opposite(c.ring));
  CHECK(verify_certificate(co).bgn());
  auto back = opposite_certificate(co);
  CHECK(back.ring == c.ring);
  CHECK(mat_equal(back.A, c.A));
  CHECK(mat_equal(back.B, c.B));
}

TEST_CASE("block flattening and grouping") {
  auto Z  = integers();
  auto M2 = matrix_ring(Z, 2);
  auto down = block_down_certificate(identity_cert(M2, 1));
  CHECK(down.ring == Z);
  CHECK(down.m == 2);
  CHECK(down.A.is_identity());

  auto up = block_up_certificate(identity_cert(Z, 4), 2);
  CHECK(up.ring == M2);
  CHECK(up.m == 2);
  CHECK(verify_certificate(up).ok());
  CHECK(mat_equal(block_up_certificate(leavitt2(), 1).A, leavitt2().A));

  auto c = leavitt2();
  auto L = c.ring;
  // diag(c, c): 4 x 2, grouped into a 2 x 1 certificate over M2(L).
  RingMatrix A(L, 4, 2), B(L, 2, 4);
  for (std::size_t b = 0; b < 2; ++b) {
    for (std::size_t i = 0; i < 2; ++i) {
      A.set(2 * b + i, b, c.A.at(i, 0));
      B.set(b, 2 * b + i, c.B.at(0, i));
    }
  }
  auto grouped = block_up_certificate(make_certificate(A, B), 2);
  CHECK(grouped.n == 1);
  CHECK(grouped.m == 2);
  CHECK(verify_certificate(grouped).bgn());
  auto flat = block_down_certificate(grouped);
  CHECK(verify_certificate(flat).bgn());
  CHECK(mat_equal(flat.A, A));
  CHECK_THROWS_AS(block_up_certificate(c, 2), Error);
}

TEST_CASE("product certificates") {
  auto c2 = leavitt2();
  auto single = product_certificate({c2});
  CHECK(verify_certificate(single).bgn());
  auto c3  = algebras::leavitt_rank_certificate(3).certificate;
  auto cut = make_certificate(
      RingMatrix(c3.ring, 2, 1, {c3.A.at(0, 0), c3.A.at(1, 0)}),
      RingMatrix(c3.ring, 1, 2, {c3.B.at(0, 0), c3.B.at(0, 1)}));
  REQUIRE(verify_certificate(cut).bgn());
  auto p = product_certificate({c2, cut});
  CHECK(p.n == 1);
  CHECK(p.m == 2);
  CHECK(verify_certificate(p).bgn());
  for (std::size_t i = 0; i < 2; ++i) {
    auto proj = hom_certificate(p, projection_hom(p.ring, i));
    CHECK(verify_certificate(proj).bgn());
  }
  CHECK_THROWS_AS(product_certificate({}), Error);
}

TEST_CASE("homomorphic images") {
  auto id = identity_cert(integers(), 2);
  auto same = hom_certificate(id, identity_hom(id.ring));
  CHECK(mat_equal(same.A, id.A));

  auto Z  = integers();
  auto A  = matrix(Z, 2, 2, {"2", "1", "1", "1"});
  auto B  = matrix(Z, 2, 2, {"1", "-1", "-1", "2"});
  auto c  = make_certificate(A, B);
  REQUIRE(verify_certificate(c).ok());
  auto r = hom_certificate(c, reduction_hom(5));
  CHECK(r.ring == integers_mod(5));
  CHECK(verify_certificate(r).ok());
  CHECK(r.B.at(0, 1).scalar() == 4);

  auto RG  = graded::group_ring(groups::Group::cyclic(2), Z);
  auto aug = graded::augmentation(RG);
  auto x   = RG.parse("(1)[1]");
  CHECK(aug(x).scalar() == 1);
  auto s = RG.add(RG.parse("(1)[0]"), x);
  CHECK(aug(RG.mul(s, s)).scalar() == 4);
  CHECK(aug(RG.zero()).scalar() == 0);
  auto cg = make_certificate(RingMatrix(RG, 1, 1, {x}), RingMatrix(RG, 1, 1, {x}));
  REQUIRE(verify_certificate(cg).ok());
  CHECK(verify_certificate(hom_certificate(cg, aug)).ok());

  auto bad = make_certificate(matrix(Z, 1, 1, {"2"}), matrix(Z, 1, 1, {"1"}));
  CHECK_THROWS_AS(hom_certificate(bad, reduction_hom(5)), Error);
}

TEST_CASE("certificate JSON round trip") {
  auto c    = extend_certificate(leavitt2(), 3);
  auto text = certificate_to_json(c);
  auto back = certificate_from_json(text);
  CHECK(back.ring == c.ring);
  CHECK(mat_equal(back.A, c.A));
  CHECK(mat_equal(back.B, c.B));
  CHECK_THROWS_AS(certificate_from_json("{\"ring\": \"Z\"}"), ParseError);
  CHECK_THROWS_AS(certificate_from_json("not json"), ParseError);
}
