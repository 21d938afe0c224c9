// One line per acceptance criterion. Each criterion runs the named
// end-to-end check from the repro catalogue, plus independent re-checks
// where the catalogue's own verification would otherwise be the only judge.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "repro.hpp"

#include "ugn/amenability.hpp"
#include "ugn/algebras.hpp"
#include "ugn/translation.hpp"

using namespace ugn;

namespace {

  bool run_repro(std::string const& name) {
    auto const* e = cli::find_repro(name);
    return e != nullptr && e->run(cli::ReproParams{}).pass;
  }

  // Certificates for n = 2..5, re-checked by multiplying out AB and BA.
  bool leavitt_products() {
    for (std::size_t n = 2; n <= 5; ++n) {
      auto c  = algebras::leavitt_rank_certificate(n).certificate;
      auto ab = rings::mat_mul(c.A, c.B);
      auto ba = rings::mat_mul(c.B, c.A);
      if (!ab.is_identity() || !ba.is_identity() || c.n != 1 || c.m != n) {
        return false;
      }
    }
    return true;
  }

  // The collapse identities recomputed by plain matrix products.
  bool collapse_products() {
    auto F = groups::Group::free(2);
    auto w = amenability::find_two_to_one_injection(F, groups::ball(F, 2), groups::ball(F, 3),
                                                    groups::ball(F, 1));
    if (!w.witness) {
      return false;
    }
    auto r  = translation::collapse_matrices(F, *w.witness, rings::integers());
    auto Mt = r.M.transpose();
    auto Nt = r.N.transpose();
    auto P  = rings::mat_add(rings::mat_mul(Mt, r.M), rings::mat_mul(Nt, r.N));
    std::size_t rank = 0;
    for (std::size_t i = 0; i < P.rows(); ++i) {
      for (std::size_t j = 0; j < P.cols(); ++j) {
        auto const& x = P.at(i, j).scalar();
        if ((i != j && x != 0) || (i == j && x != 0 && x != 1)) {
          return false;
        }
        rank += (i == j && x == 1) ? 1 : 0;
      }
    }
    return rings::mat_mul(r.M, Mt).is_identity() && rings::mat_mul(r.N, Nt).is_identity()
           && rings::mat_mul(r.M, Nt).is_zero() && rings::mat_mul(r.N, Mt).is_zero()
           && rank == 2 * w.witness->V.size();
  }

  struct Criterion {
    int                         number;
    std::string                 title;
    std::vector<std::string>    repro;
    std::function<bool()>       extra;
  };

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Leavitt rank certificates n = 2..5", {"leavitt-certificate"}, leavitt_products},
      {2, "matrix-unit towers", {"matrix-units"}, nullptr},
      {3, "certificate compression", {"compression"}, nullptr},
      {4, "rank collapse identities", {"rank-collapse"}, collapse_products},
      {5, "Folner dichotomy", {"folner-dichotomy"}, nullptr},
      {6, "matching dichotomy", {"matching-dichotomy"}, nullptr},
      {7, "skew group ring isomorphism", {"skew-group-ring"}, nullptr},
      {8, "cyclic monoid generating numbers", {"cyclic-monoids"}, nullptr},
      {9, "separator homomorphisms", {"separators"}, nullptr},
      {10, "Baumslag-Solitar witnesses", {"bs-example"}, nullptr},
      {11, "generalised Weyl algebra", {"weyl-algebra"}, nullptr},
      {12, "certificate algebra", {"certificate-algebra"}, nullptr},
      {13, "graded endomorphism rings", {"endo-graded"}, nullptr},
  };

  int failed = 0;
  for (auto const& c : criteria) {
    bool        ok = true;
    std::string note;
    try {
      for (auto const& name : c.repro) {
        ok = run_repro(name) && ok;
      }
      if (c.extra) {
        ok = c.extra() && ok;
      }
    } catch (std::exception const& e) {
      ok   = false;
      note = std::string(" (") + e.what() + ")";
    }
    std::printf("criterion %2d %-36s %s%s\n", c.number, c.title.c_str(), ok ? "PASS" : "FAIL",
                note.c_str());
    failed += ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
