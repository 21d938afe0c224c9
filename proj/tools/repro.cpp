#include "repro.hpp"

#include <algorithm>  // for shuffle
#include <random>     // for mt19937_64, uniform_int_distribution

#include "ugn/algebras.hpp"
#include "ugn/amenability.hpp"
#include "ugn/certificates.hpp"
#include "ugn/graded.hpp"
#include "ugn/monoids.hpp"
#include "ugn/ring_text.hpp"

namespace ugn::cli {

  namespace am = amenability;
  namespace al = algebras;
  using rings::Element;
  using rings::Ring;
  using rings::Scalar;

  namespace {

    long pick(std::mt19937_64& rng, long lo, long hi) {
      return std::uniform_int_distribution<long>(lo, hi)(rng);
    }

    bool same_entries(rings::RingMatrix const& a, rings::RingMatrix const& b) {
      if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
      }
      for (std::size_t i = 0; i < a.entries().size(); ++i) {
        if (a.ring().format(a.entries()[i]) != b.ring().format(b.entries()[i])) {
          return false;
        }
      }
      return true;
    }

    Json verdict_row(std::string const& what, rings::RankCertificate const& c, bool ok) {
      return Json{{"step", what},
                  {"ring", c.ring.name()},
                  {"n", c.n},
                  {"m", c.m},
                  {"verdict", rings::verify_certificate(c).to_string()},
                  {"pass", ok}};
    }

    ////////////////////////////////////////////////////////////////////
    // Leavitt algebra
    ////////////////////////////////////////////////////////////////////

    ReproResult leavitt_certificate(ReproParams const& p) {
      long lo = p.n.value_or(2), hi = p.n.value_or(5);
      if (lo < 2) {
        throw ParseError("--n must be at least 2");
      }
      ReproResult r{"leavitt-certificate", true, Json::object()};
      Json        rows = Json::array();
      for (long n = lo; n <= hi; ++n) {
        auto c  = al::leavitt_rank_certificate(static_cast<std::size_t>(n));
        auto v  = rings::verify_certificate(c.certificate);
        bool ok = c.ab_is_identity && c.ba_is_one && v.bgn();
        r.pass  = r.pass && ok;
        rows.push_back(Json{{"n", n},
                            {"AB = I_n", c.ab_is_identity},
                            {"BA", c.certificate.ring.format(c.ba)},
                            {"verdict", v.to_string()},
                            {"pass", ok}});
      }
      r.details["certificates"] = std::move(rows);
      return r;
    }

    ReproResult matrix_units(ReproParams const& p) {
      std::vector<std::pair<long, long>> cases{{2, 1}, {2, 2}, {3, 1}};
      if (p.n || p.l) {
        cases = {{p.n.value_or(2), p.l.value_or(1)}};
      }
      ReproResult r{"matrix-units", true, Json::object()};
      Json        rows = Json::array();
      for (auto [n, l] : cases) {
        if (n < 2 || l < 1) {
          throw ParseError("need n >= 2 and l >= 1");
        }
        auto rep = al::leavitt_matrix_units(static_cast<std::size_t>(n), static_cast<std::size_t>(l));
        r.pass   = r.pass && rep.ok();
        rows.push_back(Json{{"n", n},
                            {"l", l},
                            {"units", rep.size * rep.size},
                            {"product instances", rep.product_instances},
                            {"product failures", rep.product_failures},
                            {"sum is 1", rep.sum_is_one},
                            {"degree 0", rep.degree_zero},
                            {"level span", rep.in_level_span},
                            {"chain containment", rep.chain_containment},
                            {"pass", rep.ok()}});
      }
      r.details["towers"] = std::move(rows);
      return r;
    }

    ////////////////////////////////////////////////////////////////////
    // Translation rings
    ////////////////////////////////////////////////////////////////////

    ReproResult compression(ReproParams const&) {
      ReproResult r{"compression", true, Json::object()};
      auto        c = leavitt_translation_certificate();
      auto const& G = c.A.front().G;
      Json        rows = Json::array();
      struct Case {
        std::string F, K;
        bool        accept;
        std::size_t rows, cols;
      };
      for (auto const& k : {Case{"{0}", "{0}", true, 2, 1}, Case{"{0, 1}", "{0}", true, 4, 2},
                            Case{"{0, 1}", "{-1, 0, 1}", false, 0, 0}}) {
        Json row{{"F", k.F}, {"K", k.K}};
        bool ok = false;
        try {
          auto res = translation::compress_certificate(c, groups::parse_set(G, k.F),
                                                       groups::parse_set(G, k.K));
          ok = k.accept && res.verdict.bgn() && res.certificate.m == k.rows
               && res.certificate.n == k.cols;
          row["U"]       = format_set(G, res.U);
          row["shape"]   = std::to_string(res.certificate.m) + "x" + std::to_string(res.certificate.n);
          row["verdict"] = res.verdict.to_string();
        } catch (Error const& e) {
          ok            = !k.accept;
          row["rejected"] = e.what();
        }
        row["pass"] = ok;
        r.pass      = r.pass && ok;
        rows.push_back(std::move(row));
      }
      r.details["cases"] = std::move(rows);
      return r;
    }

    ReproResult rank_collapse(ReproParams const&) {
      ReproResult r{"rank-collapse", false, Json::object()};
      auto        G   = Group::free(2);
      auto        V   = groups::ball(G, 2);
      auto        W   = groups::ball(G, 3);
      auto        K   = groups::ball(G, 1);
      auto        res = am::find_two_to_one_injection(G, V, W, K);
      if (!res.witness) {
        r.details["error"] = "no injection found";
        return r;
      }
      auto rep = translation::collapse_matrices(G, *res.witness, rings::integers());
      r.details["V"]        = V.size();
      r.details["W"]        = W.size();
      r.details["witness"]  = am::check_injection(G, *res.witness).value_or("sound");
      r.details["MM^t = I"] = rep.mmt_identity;
      r.details["NN^t = I"] = rep.nnt_identity;
      r.details["MN^t = 0"] = rep.mnt_zero;
      r.details["NM^t = 0"] = rep.nmt_zero;
      r.details["M^tM + N^tN = projection"] = rep.projection;
      r.details["uncovered"] = rep.uncovered.size();

      // A witness with two points sharing a target must be caught.
      auto bad     = *res.witness;
      bad.alpha[1] = bad.alpha[0];
      auto brep    = translation::collapse_matrices(G, bad, rings::integers());
      r.details["corrupted witness detected"] = !brep.mmt_identity;
      r.pass = rep.ok() && !am::check_injection(G, *res.witness) && !brep.mmt_identity;
      return r;
    }

    ////////////////////////////////////////////////////////////////////
    // Amenability
    ////////////////////////////////////////////////////////////////////

    ReproResult folner_dichotomy(ReproParams const&) {
      ReproResult r{"folner-dichotomy", true, Json::object()};
      Json        rows = Json::array();
      auto        X    = SubsetPredicate::whole_group();
      for (auto const* name : {"Z", "Z^2"}) {
        auto G = Group::parse(name);
        auto K = groups::ball(G, 1);
        for (auto const* e : {"1", "1/2", "1/10"}) {
          auto eps = parse_rational(e);
          auto res = am::folner_search(G, X, K, eps, 25);
          bool ok  = res.witness && am::verify_folner(G, X, *res.witness);
          r.pass   = r.pass && ok;
          rows.push_back(Json{{"group", name},
                              {"eps", e},
                              {"radius", res.radius ? Json(*res.radius) : Json("none")},
                              {"pass", ok}});
        }
      }
      auto G   = Group::free(2);
      auto K   = groups::ball(G, 1);
      auto res = am::folner_search(G, X, K, Rational(1), 6);
      bool ok  = !res.witness;
      Json ratios = Json::array();
      for (auto const& row : res.rows) {
        ok = ok && row.ratio && *row.ratio > 2;
        ratios.push_back(Json{{"radius", row.radius},
                              {"|KF|", row.kf_in_x},
                              {"|F|", row.f_in_x},
                              {"ratio", row.ratio ? to_string(*row.ratio) : "-"}});
      }
      rows.push_back(Json{{"group", "F2"}, {"eps", "1"}, {"radius", "none"}, {"pass", ok}});
      r.pass                = r.pass && ok;
      r.details["searches"] = std::move(rows);
      r.details["F2 ratios"] = std::move(ratios);
      return r;
    }

    ReproResult matching_dichotomy(ReproParams const& p) {
      ReproResult r{"matching-dichotomy", true, Json::object()};
      long        L_max = p.n.value_or(40);
      auto        Z     = Group::parse("Z");
      auto        K     = groups::parse_set(Z, "{-1, 0, 1}");
      std::size_t infeasible = 0;
      for (long L = 2; L <= L_max; ++L) {
        ElementSet V;
        for (long x = 0; x <= L; ++x) {
          V.push_back(Z.parse_element(std::to_string(x)));
        }
        auto W   = groups::set_product(Z, K, V);
        auto res = am::find_two_to_one_injection(Z, V, W, K);
        auto N   = am::neighbourhood(Z, res.hall_set, W, K);
        bool ok  = !res.witness && !res.hall_set.empty() && N.size() < 2 * res.hall_set.size();
        for (auto const& a : res.hall_set) {
          ok = ok && groups::set_contains(groups::canonical_set(V), a);
        }
        infeasible += ok ? 1 : 0;
        if (!ok) {
          r.pass = false;
          r.details["failure"] = "L = " + std::to_string(L);
        }
      }
      r.details["Z infeasible"] = std::to_string(infeasible) + " of " + std::to_string(L_max - 1);
      Json rows = Json::array();
      auto F2   = Group::free(2);
      auto K2   = groups::ball(F2, 1);
      for (std::size_t rad = 0; rad <= 4; ++rad) {
        auto V   = groups::ball(F2, rad);
        auto W   = groups::ball(F2, rad + 1);
        auto res = am::find_two_to_one_injection(F2, V, W, K2);
        bool ok  = res.witness && !am::check_injection(F2, *res.witness);
        r.pass   = r.pass && ok;
        rows.push_back(Json{{"r", rad}, {"|V|", V.size()}, {"|W|", W.size()}, {"pass", ok}});
      }
      r.details["F2 witnesses"] = std::move(rows);
      return r;
    }

    ReproResult bs_example(ReproParams const& p) {
      ReproResult r{"bs-example", true, Json::object()};
      Json        rows = Json::array();
      std::vector<long> ks{2, 3};
      if (p.k) {
        ks = {*p.k};
      }
      for (long k : ks) {
        for (std::size_t rad = 0; rad <= 5; ++rad) {
          auto c = am::bs_example_check(k, rad);
          r.pass = r.pass && c.ok();
          rows.push_back(Json{{"k", k},
                              {"r", rad},
                              {"|B_r|", c.ball_size},
                              {"|X n B_r|", c.x_count},
                              {"|X_0 n B_r|", c.x0_count},
                              {"pass", c.ok()}});
        }
      }
      r.details["balls"] = std::move(rows);

      std::mt19937_64 rng(p.seed);
      std::size_t     verified = 0;
      for (int trial = 0; trial < 50; ++trial) {
        long k  = ks[static_cast<std::size_t>(trial) % ks.size()];
        auto G  = Group::baumslag_solitar(k);
        auto el = [&] {
          long      e = pick(rng, 0, 2);
          mpz_class den;
          mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(e));
          Rational t(mpz_class(pick(rng, -20, 20)), den);
          t.canonicalize();
          return G.bs_element(t, pick(rng, -3, 3));
        };
        auto usize = static_cast<std::size_t>(pick(rng, 0, 5));
        auto vsize = static_cast<std::size_t>(pick(rng, static_cast<long>(usize) + 1, 6));
        std::vector<groups::GroupElement> u, v;
        for (std::size_t i = 0; i < usize; ++i) {
          u.push_back(el());
        }
        for (std::size_t i = 0; i < vsize; ++i) {
          v.push_back(el());
        }
        auto res = am::rosenblatt_find(G, u, v);
        auto X   = SubsetPredicate::bs_x();
        auto cu  = am::tuple_count(G, res.g, X, u);
        auto cv  = am::tuple_count(G, res.g, X, v);
        if (cu < cv && cu == res.u_count && cv == res.v_count) {
          ++verified;
        }
      }
      r.details["seed"]             = p.seed;
      r.details["tuple pairs"]      = 50;
      r.details["verified cosets"]  = verified;
      r.pass                        = r.pass && verified == 50;
      return r;
    }

    ////////////////////////////////////////////////////////////////////
    // Finite groups and graded rings
    ////////////////////////////////////////////////////////////////////

    ReproResult skew_group_ring(ReproParams const&) {
      ReproResult r{"skew-group-ring", true, Json::object()};
      Json        rows = Json::array();
      std::vector<std::string> names{"C(1)", "C(2)", "C(3)", "C(4)", "C(5)", "C(6)",
                                     "C(7)", "C(8)", "C(2)xC(2)", "C(2)xC(3)", "C(2)xC(4)",
                                     "C(2)xC(2)xC(2)"};
      for (auto const& name : names) {
        auto G = Group::parse(name);
        for (auto const* rname : {"Z", "Z/5"}) {
          auto rep = translation::finite_group_iso(G, rings::parse_ring(rname));
          r.pass   = r.pass && rep.ok();
          rows.push_back(Json{{"group", name},
                              {"ring", rname},
                              {"order", rep.order},
                              {"pairs", rep.pairs},
                              {"pass", rep.ok()}});
        }
      }
      r.details["groups"] = std::move(rows);
      return r;
    }

    ReproResult endo_graded(ReproParams const&) {
      ReproResult r{"endo-graded", true, Json::object()};
      Json        rows = Json::array();
      struct Case {
        char const* G;
        long        n, l;
        char const* S;
      };
      for (auto const& c : {Case{"C(2)", 2, 1, "Z/5"}, Case{"C(3)", 2, 2, "Z"}}) {
        auto [T, rep] = graded::endo_graded_construction(rings::parse_ring(c.S), Group::parse(c.G),
                                                         c.n, c.l);
        r.pass        = r.pass && rep.ok();
        rows.push_back(Json{{"group", c.G},
                            {"n", c.n},
                            {"l", c.l},
                            {"S", c.S},
                            {"p", rep.p},
                            {"size", T.size},
                            {"matrix units", rep.matrix_units},
                            {"grading closure", rep.grading_closure},
                            {"strong", rep.strong.ok()},
                            {"base decomposition", rep.base_decomposition},
                            {"pass", rep.ok()}});
      }
      r.details["constructions"] = std::move(rows);
      return r;
    }

    ////////////////////////////////////////////////////////////////////
    // Monoids
    ////////////////////////////////////////////////////////////////////

    // lambda a <= mu a in C(n,k) by exploring the classes reachable from
    // lambda a by adding a, reducing with (n+k)a -> na one step at a time.
    bool cnk_leq_by_closure(long n, long k, long lambda, long mu) {
      auto reduce = [&](long x) {
        while (x >= n + k) {
          x -= k;
        }
        return x;
      };
      long              target = reduce(mu);
      std::vector<bool> seen(static_cast<std::size_t>(n + k), false);
      for (long x = reduce(lambda); !seen[static_cast<std::size_t>(x)]; x = reduce(x + 1)) {
        if (x == target) {
          return true;
        }
        seen[static_cast<std::size_t>(x)] = true;
      }
      return false;
    }

    ReproResult cyclic_monoids(ReproParams const&) {
      ReproResult r{"cyclic-monoids", true, Json::object()};
      std::size_t gn_checked = 0, leq_checked = 0, mismatches = 0;
      for (long n = 1; n <= 20; ++n) {
        for (long k = 1; k <= 20; ++k) {
          monoids::Cnk c{n, k};
          ++gn_checked;
          if (monoids::cnk_generating_number(c) != n) {
            ++mismatches;
          }
          for (long lambda = 0; lambda <= 100; ++lambda) {
            for (long mu = 0; mu <= 100; ++mu) {
              ++leq_checked;
              if (monoids::cnk_leq(c, lambda, mu) != cnk_leq_by_closure(n, k, lambda, mu)) {
                ++mismatches;
              }
            }
          }
        }
      }
      r.details["generating numbers checked"] = gn_checked;
      r.details["comparisons checked"]        = leq_checked;
      r.details["mismatches"]                 = mismatches;
      r.pass                                  = mismatches == 0;
      return r;
    }

    ReproResult separators(ReproParams const&) {
      ReproResult r{"separators", true, Json::object()};
      std::size_t refuted = 0, cases = 0, relation_steps = 0, invariant_failures = 0;
      for (long n = 1; n <= 5; ++n) {
        for (long k = 1; k <= 5; ++k) {
          for (long l = 1; l <= 3; ++l) {
            monoids::Mnkl m{n, k, l};
            for (long j = 1; j <= l; ++j) {
              for (long mu = 0; mu <= 6; ++mu) {
                for (long lambda = mu + 1; lambda <= 12; ++lambda) {
                  auto s = monoids::mnkl_zero(m);
                  auto t = monoids::mnkl_zero(m);
                  s.x[static_cast<std::size_t>(j - 1)] = lambda;
                  t.x[static_cast<std::size_t>(j - 1)] = mu;
                  ++cases;
                  auto res = monoids::mnkl_leq(m, s, t);
                  if (res.verdict == monoids::LeqResult::Verdict::no && res.separator
                      && monoids::separator_refutes(m, s, t, *res.separator)) {
                    ++refuted;
                  }
                }
              }
            }
            // phi and psi_j are constant along single relation steps, on
            // 0/1 vectors shifted by 0, n and n + k copies of s.
            long dim = 1 + 2 * l;
            for (long shift : {0L, n, n + k}) {
              for (long mask = 0; mask < (1L << dim); ++mask) {
                auto e = monoids::mnkl_zero(m);
                e.u    = shift + (mask & 1);
                for (long i = 0; i < l; ++i) {
                  e.x[static_cast<std::size_t>(i)] = shift + ((mask >> (1 + i)) & 1);
                  e.y[static_cast<std::size_t>(i)] = ((mask >> (1 + l + i)) & 1);
                }
                for (auto const& nb : monoids::mnkl_neighbours(m, e)) {
                  ++relation_steps;
                  bool same = monoids::mnkl_phi(m, e) == monoids::mnkl_phi(m, nb);
                  for (long jj = 1; jj <= l; ++jj) {
                    same = same && monoids::mnkl_psi(m, e, jj) == monoids::mnkl_psi(m, nb, jj);
                  }
                  invariant_failures += same ? 0 : 1;
                }
              }
            }
          }
        }
      }
      r.details["comparisons"]        = cases;
      r.details["refuted"]            = refuted;
      r.details["relation steps"]     = relation_steps;
      r.details["invariant failures"] = invariant_failures;
      r.pass = refuted == cases && invariant_failures == 0 && relation_steps > 0;
      return r;
    }

    ////////////////////////////////////////////////////////////////////
    // Weyl algebras
    ////////////////////////////////////////////////////////////////////

    std::vector<Element> weyl_generators(Ring const& W) {
      std::vector<Element> gens;
      for (std::size_t i = 1; i <= al::weyl_parameters(W).n; ++i) {
        gens.push_back(al::weyl_x(W, i));
      }
      gens.push_back(al::weyl_y(W));
      return gens;
    }

    Element product(Ring const& W, std::vector<Element> const& gens,
                    std::vector<std::size_t> const& word, std::size_t lo, std::size_t hi) {
      auto x = W.one();
      for (std::size_t i = lo; i < hi; ++i) {
        x = W.mul(x, gens[word[i]]);
      }
      return x;
    }

    ReproResult weyl_algebra(ReproParams const& p) {
      ReproResult          r{"weyl-algebra", true, Json::object()};
      std::mt19937_64      rng(p.seed);
      std::vector<Ring>    algebras{
          al::weyl_algebra({1, {Scalar(1)}, {Scalar(1)}, rings::ScalarDomain::integers()}),
          al::weyl_algebra({2, {Scalar(2), Scalar(1, 3)}, {Scalar(1), Scalar(-1)},
                            rings::ScalarDomain::rationals()})};

      // Confluence: every bracketing of a word gives the same normal form,
      // and formatting then parsing is the identity.
      std::size_t words = 0, confluence_failures = 0;
      for (int t = 0; t < 500; ++t) {
        auto const& W    = algebras[static_cast<std::size_t>(t) % algebras.size()];
        auto        gens = weyl_generators(W);
        std::vector<std::size_t> word(static_cast<std::size_t>(pick(rng, 1, 8)));
        long                     degree = 0;
        for (auto& g : word) {
          g = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(gens.size()) - 1));
          degree += g + 1 == gens.size() ? -1 : 1;
        }
        auto split = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(word.size())));
        auto whole = product(W, gens, word, 0, word.size());
        auto right = W.one();
        for (std::size_t i = word.size(); i-- > 0;) {
          right = W.mul(gens[word[i]], right);
        }
        auto halves =
            W.mul(product(W, gens, word, 0, split), product(W, gens, word, split, word.size()));
        bool ok = W.equal(whole, right) && W.equal(whole, halves)
                  && W.equal(W.parse(W.format(whole)), whole);
        for (long d : al::weyl_degrees(whole)) {
          ok = ok && d == degree;
        }
        ++words;
        confluence_failures += ok ? 0 : 1;
      }

      // phi_0 on random degree-0 elements.
      std::size_t phi_failures = 0;
      for (auto const& W : algebras) {
        auto gens  = weyl_generators(W);
        auto nx    = static_cast<long>(gens.size()) - 1;
        auto deg0  = [&] {
          auto x = W.zero();
          for (long term = pick(rng, 1, 3); term > 0; --term) {
            long                     k = pick(rng, 0, 3);
            std::vector<std::size_t> word;
            for (long i = 0; i < k; ++i) {
              word.push_back(static_cast<std::size_t>(pick(rng, 0, nx - 1)));
              word.push_back(static_cast<std::size_t>(nx));
            }
            std::shuffle(word.begin(), word.end(), rng);
            x = W.add(x, W.mul(W.from_int(pick(rng, -3, 3)), product(W, gens, word, 0, word.size())));
          }
          return x;
        };
        std::vector<std::pair<Element, Element>> pairs;
        for (int i = 0; i < 100; ++i) {
          auto a = deg0();
          pairs.emplace_back(a, deg0());
        }
        auto rep = al::weyl_phi0_check(W, pairs);
        phi_failures += rep.ok() ? 0 : 1;
      }

      // Component bases for |m| <= 4 and reconstruction from right
      // coordinates.
      std::size_t basis_failures = 0;
      auto const& W2             = algebras[1];
      auto        gens           = weyl_generators(W2);
      for (long m = -4; m <= 4; ++m) {
        auto b  = al::weyl_component_basis(W2, m);
        bool ok = true;
        if (m > 0) {
          ok = b.finite && b.elements.size() == (std::size_t{1} << m);
          for (auto const& e : b.elements) {
            ok = ok && e.y == 0 && e.x.size() == static_cast<std::size_t>(m);
          }
        } else if (m < 0) {
          ok = b.finite && b.elements.size() == 1 && b.elements[0].x.empty()
               && b.elements[0].y == -m;
        } else {
          ok = !b.finite && !b.elements.empty() && b.elements[0].x.empty() && b.elements[0].y == 0;
          for (auto const& e : b.elements) {
            ok = ok && static_cast<long>(e.x.size()) == e.y;
          }
        }
        if (m != 0 && ok) {
          // A random homogeneous element of degree m.
          std::vector<std::size_t> word;
          long                     k = pick(rng, 0, 2);
          for (long i = 0; i < k + std::max(m, 0L); ++i) {
            word.push_back(static_cast<std::size_t>(pick(rng, 0, 1)));
          }
          for (long i = 0; i < k + std::max(-m, 0L); ++i) {
            word.push_back(2);
          }
          std::shuffle(word.begin(), word.end(), rng);
          auto x     = W2.add(product(W2, gens, word, 0, word.size()), W2.zero());
          auto coeff = al::weyl_right_coordinates(W2, x, m);
          auto sum   = W2.zero();
          for (std::size_t i = 0; i < coeff.size(); ++i) {
            for (long d : al::weyl_degrees(coeff[i])) {
              ok = ok && d == 0;
            }
            sum = W2.add(sum, W2.mul(al::weyl_monomial(W2, b.elements[i].x, b.elements[i].y),
                                     coeff[i]));
          }
          ok = ok && coeff.size() == b.elements.size() && W2.equal(sum, x);
        }
        basis_failures += ok ? 0 : 1;
      }

      r.details["seed"]                   = p.seed;
      r.details["words"]                  = words;
      r.details["confluence failures"]    = confluence_failures;
      r.details["phi_0 pairs"]            = 200;
      r.details["phi_0 failures"]         = phi_failures;
      r.details["component basis failures"] = basis_failures;
      r.pass = confluence_failures == 0 && phi_failures == 0 && basis_failures == 0;
      return r;
    }

    ////////////////////////////////////////////////////////////////////
    // Certificate algebra
    ////////////////////////////////////////////////////////////////////

    ReproResult certificate_algebra(ReproParams const&) {
      ReproResult r{"certificate-algebra", true, Json::object()};
      Json        rows = Json::array();
      auto        step = [&](std::string const& what, rings::RankCertificate const& c, bool extra) {
        bool ok = rings::verify_certificate(c).ok() && extra;
        r.pass  = r.pass && ok;
        rows.push_back(verdict_row(what, c, ok));
      };

      auto c2 = al::leavitt_rank_certificate(2).certificate;
      step("leavitt n=2", c2, true);
      auto ext = rings::extend_certificate(c2, 4);
      step("extend to 4", ext, ext.n == 1 && ext.m == 4);

      auto op   = rings::opposite_certificate(c2);
      auto opop = rings::opposite_certificate(op);
      step("opposite", op, true);
      step("opposite twice", opop,
           opop.ring == c2.ring && same_entries(opop.A, c2.A) && same_entries(opop.B, c2.B));

      // diag(c2, c2) : R^2 -> R^4 groups into 2 x 2 blocks.
      auto const&       L = c2.ring;
      rings::RingMatrix DA(L, 4, 2), DB(L, 2, 4);
      for (std::size_t b = 0; b < 2; ++b) {
        for (std::size_t i = 0; i < 2; ++i) {
          DA.set(2 * b + i, b, c2.A.at(i, 0));
          DB.set(b, 2 * b + i, c2.B.at(0, i));
        }
      }
      auto diag = rings::make_certificate(DA, DB);
      auto up   = rings::block_up_certificate(diag, 2);
      auto down = rings::block_down_certificate(up);
      step("direct sum", diag, true);
      step("block up", up, up.n == 1 && up.m == 2);
      step("block round trip", down, same_entries(down.A, DA) && same_entries(down.B, DB));

      // L(1,3) certificate cut down to R -> R^2.
      auto c3  = al::leavitt_rank_certificate(3).certificate;
      auto R3  = c3.ring;
      rings::RingMatrix A3(R3, 2, 1), B3(R3, 1, 2);
      for (std::size_t i = 0; i < 2; ++i) {
        A3.set(i, 0, c3.A.at(i, 0));
        B3.set(0, i, c3.B.at(0, i));
      }
      auto c3cut = rings::make_certificate(A3, B3);
      auto c5    = al::leavitt_rank_certificate(2, rings::ScalarDomain::integers_mod(5)).certificate;
      auto prod  = rings::product_certificate({c2, c3cut, c5});
      step("product", prod, true);
      for (std::size_t i = 0; i < 3; ++i) {
        auto proj = rings::hom_certificate(prod, rings::projection_hom(prod.ring, i));
        step("project to factor " + std::to_string(i + 1), proj, true);
      }

      auto              RG = graded::group_ring(Group::cyclic(2), c2.ring);
      auto              e  = Group::cyclic(2).identity();
      rings::RingMatrix A(RG, 2, 1), B(RG, 1, 2);
      for (std::size_t i = 0; i < 2; ++i) {
        A.set(i, 0, graded::crossed_term(RG, e, c2.A.at(i, 0)));
        B.set(0, i, graded::crossed_term(RG, e, c2.B.at(0, i)));
      }
      auto cg = rings::make_certificate(A, B);
      step("group ring", cg, true);
      auto aug = rings::hom_certificate(cg, graded::augmentation(RG));
      step("augmentation", aug, aug.ring == c2.ring);

      r.details["steps"] = std::move(rows);
      return r;
    }

  }  // namespace

  translation::TranslationCertificate leavitt_translation_certificate() {
    auto G = Group::parse("Z");
    auto X = SubsetPredicate::whole_group();
    auto L = rings::parse_ring("leavitt:n=2");
    auto d = [&](char const* text) {
      return translation::tr_term(G, X, L, G.identity(),
                                  translation::CoefficientFunction::constant_value(L.parse(text)));
    };
    return translation::TranslationCertificate{1, 2, {d("e1'"), d("e2'")}, {d("e1"), d("e2")}};
  }

  std::vector<ReproEntry> const& repro_catalogue() {
    static std::vector<ReproEntry> const catalogue{
        {"leavitt-certificate", "R -> R^n certificates over L(1,n) for n = 2..5 (--n)",
         leavitt_certificate},
        {"matrix-units", "matrix units sigma(i) sigma(j)* of L(1,n) at level l (--n, --l)",
         matrix_units},
        {"compression", "Følner compression of a translation-ring certificate over L(1,2)",
         compression},
        {"rank-collapse", "M, N matrices from a 2-to-1 injection B2 -> B3 in F2", rank_collapse},
        {"folner-dichotomy", "Følner witnesses in Z, Z^2 and ratios above 2 in F2",
         folner_dichotomy},
        {"matching-dichotomy", "Hall obstructions in Z (L up to --n) and injections in F2",
         matching_dichotomy},
        {"skew-group-ring", "(prod_G R) * G = M_|G|(R) for groups of order <= 8",
         skew_group_ring},
        {"cyclic-monoids", "generating numbers and order in C(n,k) against a closure oracle",
         cyclic_monoids},
        {"separators", "homomorphisms separating lambda x_j from mu x_j in M(n,k,l)", separators},
        {"bs-example", "subsets of BS(1,k) and coset counting for tuples (--k, --seed)",
         bs_example},
        {"weyl-algebra", "Weyl normal forms, phi_0 and component bases (--seed)", weyl_algebra},
        {"certificate-algebra", "extension, opposite, blocks, products and homomorphic images",
         certificate_algebra},
        {"endo-graded", "strongly graded block endomorphism rings", endo_graded},
    };
    return catalogue;
  }

  ReproEntry const* find_repro(std::string const& name) {
    for (auto const& e : repro_catalogue()) {
      if (e.name == name) {
        return &e;
      }
    }
    return nullptr;
  }

}  // namespace ugn::cli
