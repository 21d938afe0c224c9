#include "cli.hpp"

#include <algorithm>  // for reverse
#include <istream>    // for istream, getline
#include <map>        // for map
#include <memory>     // for make_shared
#include <optional>   // for optional
#include <random>     // for mt19937_64
#include <sstream>    // for istringstream

#include "CLI11.hpp"

#include "cli_io.hpp"
#include "repro.hpp"
#include "ugn/algebras.hpp"
#include "ugn/amenability.hpp"
#include "ugn/certificates.hpp"
#include "ugn/graded.hpp"
#include "ugn/monoids.hpp"
#include "ugn/ring_text.hpp"
#include "ugn/translation.hpp"

namespace ugn::cli {

  namespace am = amenability;
  using groups::GroupElement;
  using rings::Element;
  using rings::RankCertificate;
  using rings::Ring;

  namespace {

    Json header(char const* command, Options const& opt) {
      Json j;
      j["command"] = command;
      j["seed"]    = opt.seed;
      return j;
    }

    int finish(Json& report, bool pass, Options const& opt, std::ostream& out) {
      report["verdict"] = pass ? "pass" : "fail";
      emit(report, opt, out);
      return pass ? exit_pass : exit_negative;
    }

    std::pair<long, long> parse_range(std::string const& text) {
      auto colon = text.find(':', 1);
      if (colon == std::string::npos) {
        throw ParseError("expected a range lo:hi, found \"" + text + "\"");
      }
      try {
        long lo = std::stol(text.substr(0, colon));
        long hi = std::stol(text.substr(colon + 1));
        if (lo > hi) {
          throw ParseError("empty range \"" + text + "\"");
        }
        return {lo, hi};
      } catch (std::logic_error const&) {
        throw ParseError("expected a range lo:hi, found \"" + text + "\"");
      }
    }

    // Splits on ';' and drops empty pieces.
    std::vector<std::string> split_list(std::string const& text) {
      std::vector<std::string> out;
      std::string              cur;
      std::istringstream       s(text);
      while (std::getline(s, cur, ';')) {
        auto b = cur.find_first_not_of(" \t");
        if (b != std::string::npos) {
          out.push_back(cur.substr(b, cur.find_last_not_of(" \t") - b + 1));
        }
      }
      return out;
    }

    Json matrix_json(rings::RingMatrix const& m) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
          row.push_back(m.ring().format(m.at(i, j)));
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

    RankCertificate load_certificate(std::string const& path) {
      return rings::certificate_from_json(read_file(path));
    }

    ////////////////////////////////////////////////////////////////////
    // folner, paradox, collapse
    ////////////////////////////////////////////////////////////////////

    struct FolnerArgs {
      std::string              group, subset = "G", K = "B1", eps, witness;
      std::size_t              rmax = 0;
      std::vector<std::string> F;
    };

    int cmd_folner(FolnerArgs const& a, Options const& opt, std::ostream& out) {
      auto G   = Group::parse(a.group);
      auto X   = parse_subset(G, a.subset);
      auto K   = groups::parse_set(G, a.K);
      auto eps = parse_rational(a.eps);
      if (eps <= 0) {
        throw ParseError("--eps must be positive");
      }
      am::FolnerResult res;
      auto             rep = header("folner", opt);
      rep["group"]         = G.name();
      rep["subset"]        = X.describe();
      rep["K"]             = set_to_json(G, K);
      rep["eps"]           = to_string(eps);
      if (a.F.empty()) {
        rep["r_max"] = a.rmax;
        res          = am::folner_search(G, X, K, eps, a.rmax);
      } else {
        std::vector<ElementSet> cands;
        for (auto const& f : a.F) {
          cands.push_back(groups::parse_set(G, f));
        }
        res = am::folner_search(G, X, K, eps, cands);
      }
      Json rows = Json::array();
      for (auto const& r : res.rows) {
        rows.push_back(Json{{a.F.empty() ? "radius" : "candidate", r.radius},
                            {"|KF n X|", r.kf_in_x},
                            {"|F n X|", r.f_in_x},
                            {"ratio", r.ratio ? to_string(*r.ratio) : "-"}});
      }
      rep["rows"]       = std::move(rows);
      rep["best ratio"] = res.best_ratio ? to_string(*res.best_ratio) : "-";
      bool found        = res.witness && am::verify_folner(G, X, *res.witness);
      if (found) {
        rep["F"] = set_to_json(G, res.witness->F);
        if (!a.witness.empty()) {
          write_file(a.witness, folner_witness_to_json(G, a.subset, *res.witness).dump(2) + "\n");
        }
      }
      return finish(rep, found, opt, out);
    }

    struct InjectionArgs {
      std::string group, V = "B2", W = "B3", K = "B1", witness, witness_in, ring = "Z";
    };

    int cmd_paradox(InjectionArgs const& a, Options const& opt, std::ostream& out) {
      auto G   = Group::parse(a.group);
      auto V   = groups::parse_set(G, a.V);
      auto W   = groups::parse_set(G, a.W);
      auto K   = groups::parse_set(G, a.K);
      auto res = am::find_two_to_one_injection(G, V, W, K);
      auto rep = header("paradox", opt);
      rep["group"] = G.name();
      rep["|V|"]   = groups::canonical_set(V).size();
      rep["|W|"]   = groups::canonical_set(W).size();
      rep["K"]     = set_to_json(G, K);
      rep["flow"]  = res.flow;
      bool found   = false;
      if (res.witness) {
        auto problem = am::check_injection(G, *res.witness);
        found        = !problem;
        rep["witness"] = problem.value_or("verified");
        Json rows      = Json::array();
        for (std::size_t i = 0; i < res.witness->V.size(); ++i) {
          rows.push_back(Json{{"x", G.format(res.witness->V[i])},
                              {"alpha", G.format(res.witness->alpha[i])},
                              {"beta", G.format(res.witness->beta[i])}});
        }
        rep["targets"] = std::move(rows);
        if (!a.witness.empty()) {
          write_file(a.witness, injection_witness_to_json(G, *res.witness).dump(2) + "\n");
        }
      } else {
        auto N = am::neighbourhood(G, res.hall_set, W, K);
        rep["Hall set"]       = set_to_json(G, res.hall_set);
        rep["neighbourhood"]  = set_to_json(G, N);
        rep["obstruction"]    = "|N(A)| = " + std::to_string(N.size()) + " < 2|A| = "
                             + std::to_string(2 * res.hall_set.size());
        rep["obstruction verified"] = !res.hall_set.empty() && N.size() < 2 * res.hall_set.size();
      }
      return finish(rep, found, opt, out);
    }

    int cmd_collapse(InjectionArgs const& a, Options const& opt, std::ostream& out) {
      auto                                         R = rings::parse_ring(a.ring);
      std::optional<Group>                         G;
      std::optional<am::InjectionWitness>          w;
      if (!a.witness_in.empty()) {
        auto j = read_json(a.witness_in);
        G      = Group::parse(member(j, "group").get<std::string>());
        w      = injection_witness_from_json(*G, j);
      } else {
        if (a.group.empty()) {
          throw ParseError("collapse needs --group or --witness-in");
        }
        G        = Group::parse(a.group);
        auto res = am::find_two_to_one_injection(*G, groups::parse_set(*G, a.V),
                                                 groups::parse_set(*G, a.W),
                                                 groups::parse_set(*G, a.K));
        w        = res.witness;
      }
      auto rep     = header("collapse", opt);
      rep["group"] = G->name();
      rep["ring"]  = R.name();
      if (!w) {
        rep["witness"] = "no 2-to-1 injection exists for this truncation";
        return finish(rep, false, opt, out);
      }
      auto c                = translation::collapse_matrices(*G, *w, R);
      rep["|V|"]            = w->V.size();
      rep["|W|"]            = w->W.size();
      rep["witness"]        = c.witness_problem.value_or("verified");
      rep["MM^t = I"]       = c.mmt_identity;
      rep["NN^t = I"]       = c.nnt_identity;
      rep["MN^t = 0"]       = c.mnt_zero;
      rep["NM^t = 0"]       = c.nmt_zero;
      rep["M^tM + N^tN = projection"] = c.projection;
      rep["uncovered"]      = set_to_json(*G, c.uncovered);
      return finish(rep, c.ok() && !c.witness_problem, opt, out);
    }

    ////////////////////////////////////////////////////////////////////
    // compress, cert
    ////////////////////////////////////////////////////////////////////

    struct CompressArgs {
      std::string in, F, K, out;
    };

    int cmd_compress(CompressArgs const& a, Options const& opt, std::ostream& out) {
      auto j   = read_json(a.in);
      auto c   = translation_certificate_from_json(j);
      auto G   = c.A.front().G;
      auto F   = groups::parse_set(G, a.F);
      auto K   = groups::parse_set(G, a.K);
      auto rep = header("compress", opt);
      rep["input"] = a.in;
      rep["ring"]  = c.A.front().R.name();
      rep["shape"] = std::to_string(c.m) + "x" + std::to_string(c.n);
      rep["F"]     = set_to_json(G, F);
      rep["K"]     = set_to_json(G, K);
      std::optional<translation::CompressionResult> res;
      try {
        res = translation::compress_certificate(c, F, K);
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        rep["rejected"] = e.what();
        return finish(rep, false, opt, out);
      }
      rep["F n X"]          = set_to_json(G, res->F_X);
      rep["KF n X"]         = set_to_json(G, res->U);
      rep["window entries"] = res->window_entries;
      rep["count"]          = std::to_string(c.n) + "*" + std::to_string(res->U.size()) + " < "
                     + std::to_string(c.m) + "*" + std::to_string(res->F_X.size());
      rep["A*"]             = matrix_json(res->certificate.A);
      rep["B*"]             = matrix_json(res->certificate.B);
      rep["A*B*"]           = res->verdict.to_string();
      if (!a.out.empty()) {
        write_file(a.out, rings::certificate_to_json(res->certificate) + "\n");
        rep["output"] = a.out;
      }
      return finish(rep, res->verdict.bgn(), opt, out);
    }

    struct CertArgs {
      std::vector<std::string> in;
      std::string              out, map, scalars = "Z";
      std::size_t              target = 0, up = 0, n = 2;
      bool                     down   = false;
    };

    int report_certificate(char const*            step,
                           RankCertificate const& c,
                           CertArgs const&        a,
                           Options const&         opt,
                           std::ostream&          out) {
      auto v       = rings::verify_certificate(c);
      auto rep     = header("cert", opt);
      rep["step"]  = step;
      rep["ring"]  = c.ring.name();
      rep["n"]     = c.n;
      rep["m"]     = c.m;
      rep["check"] = v.to_string();
      if (!a.out.empty()) {
        write_file(a.out, rings::certificate_to_json(c) + "\n");
        rep["output"] = a.out;
      } else if (std::string(step) != "verify") {
        rep["A"] = matrix_json(c.A);
        rep["B"] = matrix_json(c.B);
      }
      return finish(rep, v.ok(), opt, out);
    }

    RankCertificate single_input(CertArgs const& a) {
      if (a.in.size() != 1) {
        throw ParseError("expected exactly one --in file");
      }
      return load_certificate(a.in.front());
    }

    rings::RingHom parse_hom(std::string const& text, Ring const& source) {
      auto colon = text.find(':');
      auto kind  = text.substr(0, colon);
      auto arg   = colon == std::string::npos ? std::string() : text.substr(colon + 1);
      try {
        if (kind == "reduce") {
          return rings::reduction_hom(std::stol(arg));
        }
        if (kind == "project") {
          long i = std::stol(arg);
          if (i < 1) {
            throw ParseError("factors are numbered from 1");
          }
          return rings::projection_hom(source, static_cast<std::size_t>(i - 1));
        }
      } catch (std::logic_error const&) {
        throw ParseError("invalid homomorphism \"" + text + "\"");
      }
      if (kind == "augmentation") {
        return graded::augmentation(source);
      }
      if (kind == "id") {
        return rings::identity_hom(source);
      }
      throw ParseError("unknown homomorphism \"" + text
                       + "\" (expected id, reduce:M, project:I or augmentation)");
    }

    ////////////////////////////////////////////////////////////////////
    // monoid
    ////////////////////////////////////////////////////////////////////

    int cmd_monoid(std::string const& query, std::size_t depth, Options const& opt,
                   std::ostream& out) {
      auto q   = monoids::parse_query(query);
      auto rep = header("monoid", opt);
      rep["query"] = query;
      if (q.is_cnk) {
        rep["monoid"] = "C(" + std::to_string(q.cnk.n) + "," + std::to_string(q.cnk.k) + ")";
        rep["lhs"]    = std::to_string(monoids::cnk_normalize(q.cnk, q.lhs_cnk)) + "a";
        rep["rhs"]    = std::to_string(monoids::cnk_normalize(q.cnk, q.rhs_cnk)) + "a";
        rep["generating number"] = monoids::cnk_generating_number(q.cnk);
        bool yes      = monoids::cnk_leq(q.cnk, q.lhs_cnk, q.rhs_cnk);
        rep["answer"] = yes ? "yes" : "no";
        return finish(rep, yes, opt, out);
      }
      auto const& m = q.mnkl;
      rep["monoid"] = "M(" + std::to_string(m.n) + "," + std::to_string(m.k) + ","
                      + std::to_string(m.l) + ")";
      rep["closure depth"] = depth;
      auto r               = monoids::mnkl_leq(m, q.lhs, q.rhs, depth);
      rep["explored"]      = r.explored;
      switch (r.verdict) {
        case monoids::LeqResult::Verdict::yes: {
          rep["answer"] = "yes";
          rep["z"]      = monoids::format(*r.z);
          Json chain    = Json::array();
          for (auto const& e : r.chain) {
            chain.push_back(monoids::format(e));
          }
          rep["chain"]    = std::move(chain);
          rep["verified"] = monoids::witness_holds(m, q.lhs, q.rhs, r);
          return finish(rep, rep["verified"].get<bool>(), opt, out);
        }
        case monoids::LeqResult::Verdict::no:
          rep["answer"]    = "no";
          rep["separator"] = r.separator->explanation;
          rep["verified"]  = monoids::separator_refutes(m, q.lhs, q.rhs, *r.separator);
          return finish(rep, false, opt, out);
        case monoids::LeqResult::Verdict::unknown:
          rep["answer"] = "unknown: no separator applies and the closure search is exhausted";
          return finish(rep, false, opt, out);
      }
      return exit_input;
    }

    ////////////////////////////////////////////////////////////////////
    // crossed, endo-graded, psi, normalize
    ////////////////////////////////////////////////////////////////////

    int cmd_crossed(std::string const& path, Options const& opt, std::ostream& out) {
      auto j    = read_json(path);
      auto G    = Group::parse(member(j, "group").get<std::string>());
      auto R    = rings::parse_ring(member(j, "ring").get<std::string>());
      auto kind = j.value("kind", std::string("group-ring"));
      std::vector<Element> samples{R.one(), R.from_int(2), R.from_int(-1)};
      for (auto const& s : j.value("samples", Json::array())) {
        samples.push_back(R.parse(s.get<std::string>()));
      }

      std::optional<graded::CrossedSystem> cs;
      if (kind == "group-ring") {
        cs = graded::group_ring_system(G, R, samples);
      } else if (kind == "twisted") {
        auto table = std::make_shared<std::map<std::pair<GroupElement, GroupElement>, Element>>();
        for (auto const& e : j.value("omega", Json::array())) {
          (*table)[{G.parse_element(member(e, "g").get<std::string>()),
                    G.parse_element(member(e, "h").get<std::string>())}] =
              R.parse(member(e, "value").get<std::string>());
        }
        auto one = R.one();
        cs       = graded::twisted_system(
            G, R,
            [table, one](GroupElement const& g, GroupElement const& h) {
              auto it = table->find({g, h});
              return it == table->end() ? one : it->second;
            },
            samples, "twisted");
      } else if (kind == "skew-permutation") {
        // R^G with (g.f)(x) = f(g^-1 x).
        auto els = groups::elements(G);
        auto P   = rings::product(std::vector<Ring>(els.size(), R));
        auto act = [G, els](GroupElement const& g, Element const& f) {
          auto           gi = G.inverse(g);
          Element::Parts v;
          for (auto const& x : els) {
            auto y = G.mul(gi, x);
            v.push_back(f.parts()[static_cast<std::size_t>(
                std::find(els.begin(), els.end(), y) - els.begin())]);
          }
          return Element(std::move(v));
        };
        std::vector<Element> ps{P.one()};
        for (std::size_t i = 0; i < els.size(); ++i) {
          Element::Parts v(els.size(), R.zero());
          v[i] = R.one();
          ps.emplace_back(std::move(v));
        }
        cs = graded::skew_system(
            G, P, act, [G, act](GroupElement const& g, Element const& f) { return act(G.inverse(g), f); },
            ps, "permutation");
        R = P;
      } else {
        throw ParseError("unknown kind \"" + kind
                         + "\" (expected group-ring, twisted or skew-permutation)");
      }

      auto rep      = header("crossed", opt);
      rep["group"]  = G.name();
      rep["ring"]   = R.name();
      rep["kind"]   = kind;
      auto check    = graded::verify_crossed_system(*cs);
      rep["checks"] = check.checks;
      rep["failures"] = check.failures;
      if (!check.ok()) {
        return finish(rep, false, opt, out);
      }
      auto CP  = graded::crossed_product(*cs);
      Json prods = Json::array();
      for (auto const& p : j.value("products", Json::array())) {
        if (!p.is_array() || p.size() != 2) {
          throw ParseError("products must be pairs of elements");
        }
        auto x = CP.parse(p[0].get<std::string>());
        auto y = CP.parse(p[1].get<std::string>());
        prods.push_back(Json{{"left", CP.format(x)}, {"right", CP.format(y)},
                             {"product", CP.format(CP.mul(x, y))}});
      }
      rep["products"] = std::move(prods);
      auto els        = groups::elements(G);
      graded::SpanningData data{G, CP, [CP, one = R.one()](GroupElement const& g) {
                                  return std::vector<Element>{graded::crossed_term(CP, g, one)};
                                }};
      auto strong = graded::strong_grading_check(data, els);
      rep["strongly graded"] = strong.ok();
      return finish(rep, strong.ok(), opt, out);
    }

    int cmd_endo(std::string const& group, long n, long l, std::string const& scalars,
                 Options const& opt, std::ostream& out) {
      auto [T, r] = graded::endo_graded_construction(rings::parse_ring(scalars), Group::parse(group),
                                                     n, l);
      auto rep    = header("endo-graded", opt);
      rep["group"]              = T.G.name();
      rep["S"]                  = T.S.name();
      rep["n"]                  = n;
      rep["l"]                  = l;
      rep["p"]                  = r.p;
      rep["ring"]               = T.T.name();
      Json ranks                = Json::array();
      for (std::size_t i = 0; i < T.elements.size(); ++i) {
        ranks.push_back(Json{{"g", T.G.format(T.elements[i])}, {"rank", T.ranks[i]}});
      }
      rep["blocks"]             = std::move(ranks);
      rep["matrix units"]       = r.matrix_units;
      rep["grading closure"]    = r.grading_closure;
      rep["strongly graded"]    = r.strong.ok();
      rep["base decomposition"] = r.base_decomposition;
      rep["failures"]           = r.failures;
      return finish(rep, r.ok(), opt, out);
    }

    struct PsiArgs {
      std::string algebra, samples, degrees = "-3:3", indices = "-8:8";
    };

    int cmd_psi(PsiArgs const& a, Options const& opt, std::ostream& out) {
      auto W = rings::parse_ring(a.algebra);
      if (!algebras::is_weyl(W)) {
        throw ParseError("psi needs a Weyl algebra descriptor");
      }
      std::vector<Element> samples;
      if (a.samples.empty()) {
        for (std::size_t i = 1; i <= algebras::weyl_parameters(W).n; ++i) {
          samples.push_back(algebras::weyl_x(W, i));
        }
        samples.push_back(algebras::weyl_y(W));
      } else {
        for (auto const& s : split_list(a.samples)) {
          samples.push_back(W.parse(s));
        }
      }
      auto FZ  = algebras::weyl_free_grading(W);
      auto r   = graded::psi_embedding_check(FZ, samples, parse_range(a.degrees),
                                             parse_range(a.indices));
      auto rep = header("psi", opt);
      rep["algebra"] = W.name();
      Json ss        = Json::array();
      for (auto const& s : samples) {
        ss.push_back(W.format(s));
      }
      rep["samples"]         = std::move(ss);
      rep["degrees"]         = a.degrees;
      rep["indices"]         = a.indices;
      rep["entries checked"] = r.entries_checked;
      rep["unital"]          = r.unital;
      rep["additive"]        = r.additive;
      rep["multiplicative"]  = r.multiplicative;
      rep["failures"]        = r.failures;
      return finish(rep, r.ok(), opt, out);
    }

    int cmd_normalize(std::string const& algebra, Options const& opt, std::istream& in,
                      std::ostream& out, std::ostream& err) {
      auto        R = rings::parse_ring(algebra);
      std::string line;
      Json        rows = Json::array();
      std::size_t no   = 0;
      while (std::getline(in, line)) {
        ++no;
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') {
          continue;
        }
        try {
          auto x = R.format(R.parse(line));
          if (opt.format == "json") {
            rows.push_back(Json{{"input", line.substr(b)}, {"normal form", x}});
          } else {
            out << x << "\n";
          }
        } catch (Error const& e) {
          err << "line " << no << ": " << e.what() << "\n";
          return exit_input;
        }
      }
      if (opt.format == "json") {
        out << rows.dump(2) << "\n";
      }
      return exit_pass;
    }

    ////////////////////////////////////////////////////////////////////
    // bs-check, rosenblatt
    ////////////////////////////////////////////////////////////////////

    int cmd_bs(long k, std::size_t r, Options const& opt, std::ostream& out) {
      auto c   = am::bs_example_check(k, r);
      auto rep = header("bs-check", opt);
      rep["group"]        = "BS(1," + std::to_string(k) + ")";
      rep["r"]            = r;
      rep["|B_r|"]        = c.ball_size;
      rep["|X n B_r|"]    = c.x_count;
      rep["|X_0 n B_r|"]  = c.x0_count;
      rep["X_0 and aX_0 inside X"] = c.contained;
      rep["X_0 n aX_0 empty"]      = c.disjoint;
      rep["bX = X_0"]              = c.b_maps;
      rep["b-preimages seen"]      = c.b_preimages;
      rep["failures"]              = c.failures;
      return finish(rep, c.ok(), opt, out);
    }

    struct RosenblattArgs {
      long        k = 2;
      std::string u, v, witness;
    };

    Json rosenblatt_witness(Group const& G, std::vector<GroupElement> const& u,
                            std::vector<GroupElement> const& v, GroupElement const& g) {
      return Json{{"kind", "rosenblatt"},
                  {"group", G.name()},
                  {"u", set_to_json(G, u)},
                  {"v", set_to_json(G, v)},
                  {"g", G.format(g)}};
    }

    int cmd_rosenblatt(RosenblattArgs const& a, Options const& opt, std::ostream& out) {
      auto G   = Group::baumslag_solitar(a.k);
      auto u   = groups::parse_set(G, a.u);
      auto v   = groups::parse_set(G, a.v);
      auto res = am::rosenblatt_find(G, u, v);
      auto X   = SubsetPredicate::bs_x();
      auto cu  = am::tuple_count(G, res.g, X, u);
      auto cv  = am::tuple_count(G, res.g, X, v);
      auto rep = header("rosenblatt", opt);
      rep["group"]     = G.name();
      rep["|u|"]       = u.size();
      rep["|v|"]       = v.size();
      rep["g"]         = G.format(res.g);
      rep["coset"]     = "t = " + to_string(res.frac) + " mod 1";
      rep["||gX n u||"] = cu;
      rep["||gX n v||"] = cv;
      bool ok          = cu < cv && cu == res.u_count && cv == res.v_count;
      if (ok && !a.witness.empty()) {
        write_file(a.witness, rosenblatt_witness(G, u, v, res.g).dump(2) + "\n");
      }
      return finish(rep, ok, opt, out);
    }

    ////////////////////////////////////////////////////////////////////
    // verify
    ////////////////////////////////////////////////////////////////////

    int cmd_verify(std::string const& path, Options const& opt, std::ostream& out) {
      auto j    = read_json(path);
      auto kind = j.value("kind", std::string(j.contains("ring") ? "certificate" : ""));
      auto rep  = header("verify", opt);
      rep["input"] = path;
      rep["kind"]  = kind;
      if (kind == "certificate" || kind == "rank-certificate") {
        auto c      = rings::certificate_from_json(j.dump());
        auto v      = rings::verify_certificate(c);
        rep["ring"] = c.ring.name();
        rep["check"] = v.to_string();
        return finish(rep, v.ok(), opt, out);
      }
      auto G       = Group::parse(member(j, "group").get<std::string>());
      rep["group"] = G.name();
      if (kind == "folner") {
        auto subset = j.value("subset", std::string("G"));
        auto X      = parse_subset(G, subset);
        am::FolnerWitness w{set_from_json(G, member(j, "K")),
                            parse_rational(member(j, "eps").get<std::string>()),
                            set_from_json(G, member(j, "F")), 0, 0};
        auto F         = groups::canonical_set(w.F);
        auto kf        = am::intersect(G, groups::set_product(G, w.K, F), X).size();
        auto fx        = am::intersect(G, F, X).size();
        // Recorded counts are optional but must match when present.
        w.kf_in_x      = j.value("|KF n X|", kf);
        w.f_in_x       = j.value("|F n X|", fx);
        rep["|KF n X|"] = kf;
        rep["|F n X|"]  = fx;
        return finish(rep, am::verify_folner(G, X, w), opt, out);
      }
      if (kind == "injection") {
        auto problem   = am::check_injection(G, injection_witness_from_json(G, j));
        rep["problem"] = problem.value_or("none");
        return finish(rep, !problem, opt, out);
      }
      if (kind == "rosenblatt") {
        auto u  = set_from_json(G, member(j, "u"));
        auto v  = set_from_json(G, member(j, "v"));
        auto g  = G.parse_element(member(j, "g").get<std::string>());
        auto X  = SubsetPredicate::bs_x();
        auto cu = am::tuple_count(G, g, X, u);
        auto cv = am::tuple_count(G, g, X, v);
        rep["||gX n u||"] = cu;
        rep["||gX n v||"] = cv;
        return finish(rep, cu < cv, opt, out);
      }
      if (kind == "equidecomposition") {
        am::EquidecompositionWitness w;
        for (auto const& p : member(j, "pieces")) {
          w.pieces.push_back(set_from_json(G, p));
        }
        w.translators = set_from_json(G, member(j, "translators"));
        bool ok = am::verify_equidecomposition(G, w, set_from_json(G, member(j, "A")),
                                               set_from_json(G, member(j, "B")));
        return finish(rep, ok, opt, out);
      }
      throw ParseError("unknown witness kind \"" + kind + "\"");
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Exact generating-number computations for group-graded rings", "ugn"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "Seed for randomized corpora (recorded in reports)");

    std::function<int()> action;
    auto                 on = [&](CLI::App* sub, std::function<int()> f) {
      sub->callback([&action, f] { action = f; });
    };

    std::size_t default_radius = 8, default_depth = monoids::default_closure_depth;

    // folner
    FolnerArgs fa;
    auto*      folner = app.add_subcommand("folner", "Search for Følner sets F = B_r n X");
    folner->add_option("--group", fa.group, "Group, e.g. Z^2, F2, BS(1,2)")->required();
    folner->add_option("--subset", fa.subset, "G, X, X0, {..} or inv(..)");
    folner->add_option("--K", fa.K, "Finite set K");
    folner->add_option("--eps", fa.eps, "Positive rational")->required();
    folner->add_option("--rmax", fa.rmax, "Largest ball radius (default UGN_MAX_RADIUS or 8)");
    folner->add_option("--F", fa.F, "Candidate sets to try instead of balls");
    folner->add_option("--witness", fa.witness, "Write the witness JSON here");
    on(folner, [&] {
      if (fa.rmax == 0) {
        fa.rmax = env_bound("UGN_MAX_RADIUS", default_radius);
      }
      return cmd_folner(fa, opt, out);
    });

    // paradox, collapse
    InjectionArgs ia;
    auto*         paradox = app.add_subcommand("paradox", "Search for a 2-to-1 translating injection V -> W");
    paradox->add_option("--group", ia.group)->required();
    paradox->add_option("--V", ia.V);
    paradox->add_option("--W", ia.W);
    paradox->add_option("--K", ia.K);
    paradox->add_option("--witness", ia.witness, "Write the witness JSON here");
    on(paradox, [&] { return cmd_paradox(ia, opt, out); });

    auto* collapse = app.add_subcommand("collapse", "Check the M, N identities of an injection witness");
    collapse->add_option("--group", ia.group);
    collapse->add_option("--V", ia.V);
    collapse->add_option("--W", ia.W);
    collapse->add_option("--K", ia.K);
    collapse->add_option("--ring", ia.ring);
    collapse->add_option("--witness-in", ia.witness_in, "Injection witness JSON");
    on(collapse, [&] { return cmd_collapse(ia, opt, out); });

    // compress
    CompressArgs ca;
    auto*        compress = app.add_subcommand("compress", "Compress a translation-ring certificate");
    compress->add_option("--in", ca.in, "Translation certificate JSON")->required();
    compress->add_option("--F", ca.F)->required();
    compress->add_option("--K", ca.K)->required();
    compress->add_option("--out", ca.out, "Write the compressed certificate here");
    on(compress, [&] { return cmd_compress(ca, opt, out); });

    // cert
    CertArgs ce;
    auto*    cert = app.add_subcommand("cert", "Rank certificates");
    cert->require_subcommand(1);
    auto* cverify = cert->add_subcommand("verify", "Check AB = I");
    cverify->add_option("--in", ce.in)->required();
    on(cverify, [&] { return report_certificate("verify", single_input(ce), ce, opt, out); });
    auto* cext = cert->add_subcommand("extend", "R^n -> R^(n+1) to R^n -> R^target");
    cext->add_option("--in", ce.in)->required();
    cext->add_option("--target", ce.target)->required();
    cext->add_option("--out", ce.out);
    on(cext, [&] {
      return report_certificate("extend", rings::extend_certificate(single_input(ce), ce.target),
                                ce, opt, out);
    });
    auto* cop = cert->add_subcommand("opposite", "(B^t, A^t) over the opposite ring");
    cop->add_option("--in", ce.in)->required();
    cop->add_option("--out", ce.out);
    on(cop, [&] {
      return report_certificate("opposite", rings::opposite_certificate(single_input(ce)), ce, opt,
                                out);
    });
    auto* cblock = cert->add_subcommand("block", "Move between R and M_s(R)");
    cblock->add_option("--in", ce.in)->required();
    auto* down = cblock->add_flag("--down", ce.down, "Flatten M_s(R) to R");
    auto* up   = cblock->add_option("--up", ce.up, "Group into s x s blocks");
    down->excludes(up);
    cblock->add_option("--out", ce.out);
    on(cblock, [&] {
      if (ce.down == (ce.up != 0)) {
        throw ParseError("block needs exactly one of --down and --up S");
      }
      auto c = single_input(ce);
      return report_certificate("block",
                                ce.down ? rings::block_down_certificate(c)
                                        : rings::block_up_certificate(c, ce.up),
                                ce, opt, out);
    });
    auto* cprod = cert->add_subcommand("product", "Certificate over the product ring");
    cprod->add_option("--in", ce.in, "Certificate files, one per factor")->required();
    cprod->add_option("--out", ce.out);
    on(cprod, [&] {
      std::vector<RankCertificate> cs;
      for (auto const& f : ce.in) {
        cs.push_back(load_certificate(f));
      }
      return report_certificate("product", rings::product_certificate(cs), ce, opt, out);
    });
    auto* chom = cert->add_subcommand("hom", "Image under a ring homomorphism");
    chom->add_option("--in", ce.in)->required();
    chom->add_option("--map", ce.map, "id, reduce:M, project:I or augmentation")->required();
    chom->add_option("--out", ce.out);
    on(chom, [&] {
      auto c = single_input(ce);
      return report_certificate("hom", rings::hom_certificate(c, parse_hom(ce.map, c.ring)), ce,
                                opt, out);
    });
    auto* cleav = cert->add_subcommand("leavitt", "The R -> R^n certificate over L(1,n)");
    cleav->add_option("--n", ce.n)->check(CLI::Range(2, 64));
    cleav->add_option("--scalars", ce.scalars, "Z, Q or Z/m");
    cleav->add_option("--out", ce.out);
    on(cleav, [&] {
      auto S = rings::scalar_domain(rings::parse_ring(ce.scalars));
      if (!S) {
        throw ParseError("--scalars must be Z, Q or Z/m");
      }
      return report_certificate("leavitt", algebras::leavitt_rank_certificate(ce.n, *S).certificate,
                                ce, opt, out);
    });

    // monoid
    std::string query;
    std::size_t depth = 0;
    auto*       monoid = app.add_subcommand("monoid", "Decide s <= t in C(n,k) or M(n,k,l)");
    monoid->add_option("query", query, "e.g. \"3*x1 <= 2*x1 in M(2,1,1)\"")->required();
    monoid->add_option("--depth", depth, "Closure depth (default UGN_CLOSURE_DEPTH or 10)");
    on(monoid, [&] {
      if (depth == 0) {
        depth = env_bound("UGN_CLOSURE_DEPTH", default_depth);
      }
      return cmd_monoid(query, depth, opt, out);
    });

    // crossed
    std::string config;
    auto*       crossed = app.add_subcommand("crossed", "Check a crossed system and its product");
    crossed->add_option("--config", config, "Crossed system JSON")->required();
    on(crossed, [&] { return cmd_crossed(config, opt, out); });

    // endo-graded
    std::string eg_group, eg_scalars = "Z";
    long        eg_n = 0, eg_l = 0;
    auto*       endo = app.add_subcommand("endo-graded", "Graded block endomorphism ring");
    endo->add_option("--group", eg_group, "Finite group")->required();
    endo->add_option("--n", eg_n)->required();
    endo->add_option("--l", eg_l)->required();
    endo->add_option("--scalars", eg_scalars);
    on(endo, [&] { return cmd_endo(eg_group, eg_n, eg_l, eg_scalars, opt, out); });

    // psi
    PsiArgs pa;
    auto*   psi = app.add_subcommand("psi", "Block embedding of a Weyl algebra");
    psi->add_option("--algebra", pa.algebra, "weyl:... descriptor")->required();
    psi->add_option("--samples", pa.samples, "Elements separated by ';'");
    psi->add_option("--degrees", pa.degrees, "lo:hi");
    psi->add_option("--indices", pa.indices, "lo:hi");
    on(psi, [&] { return cmd_psi(pa, opt, out); });

    // normalize
    std::string algebra;
    auto*       normalize = app.add_subcommand("normalize", "Normal forms of expressions read from stdin");
    normalize->add_option("--algebra", algebra, "Ring descriptor, e.g. leavitt:n=2")->required();
    on(normalize, [&] { return cmd_normalize(algebra, opt, in, out, err); });

    // bs-check, rosenblatt
    long        bs_k = 2;
    std::size_t bs_r = 5;
    auto*       bs   = app.add_subcommand("bs-check", "Check X, X_0 in BS(1,k) on a ball");
    bs->add_option("--k", bs_k)->check(CLI::Range(2, 1000));
    bs->add_option("--r", bs_r);
    on(bs, [&] { return cmd_bs(bs_k, bs_r, opt, out); });

    RosenblattArgs ra;
    auto*          ros = app.add_subcommand("rosenblatt", "Find g with ||gX n u|| < ||gX n v||");
    ros->add_option("--k", ra.k)->check(CLI::Range(2, 1000));
    ros->add_option("--u", ra.u, "Tuple {..}")->required();
    ros->add_option("--v", ra.v, "Tuple {..}, longer than u")->required();
    ros->add_option("--witness", ra.witness, "Write the witness JSON here");
    on(ros, [&] { return cmd_rosenblatt(ra, opt, out); });

    // repro
    std::string name;
    ReproParams rp;
    long        rn = 0, rl = 0, rk = 0;
    auto*       repro = app.add_subcommand("repro", "Run a named construction end to end");
    repro->add_option("name", name, "Construction name, \"list\" or \"all\"")->required();
    repro->add_option("--n", rn);
    repro->add_option("--l", rl);
    repro->add_option("--k", rk);
    on(repro, [&] {
      if (name == "list") {
        for (auto const& e : repro_catalogue()) {
          out << e.name << "  " << e.summary << "\n";
        }
        return int(exit_pass);
      }
      rp.seed = opt.seed;
      if (rn != 0) {
        rp.n = rn;
      }
      if (rl != 0) {
        rp.l = rl;
      }
      if (rk != 0) {
        rp.k = rk;
      }
      std::vector<ReproEntry const*> todo;
      if (name == "all") {
        for (auto const& e : repro_catalogue()) {
          todo.push_back(&e);
        }
      } else if (auto const* e = find_repro(name)) {
        todo.push_back(e);
      } else {
        throw ParseError("unknown construction \"" + name + "\"; try \"repro list\"");
      }
      bool pass = true;
      auto rep  = header("repro", opt);
      for (auto const* e : todo) {
        auto r              = e->run(rp);
        pass                = pass && r.pass;
        r.details["verdict"] = r.pass ? "pass" : "fail";
        rep[r.name]         = std::move(r.details);
      }
      return finish(rep, pass, opt, out);
    });

    // verify
    std::string witness;
    auto*       verify = app.add_subcommand("verify", "Re-check a witness or certificate file");
    verify->add_option("--in", witness)->required();
    on(verify, [&] { return cmd_verify(witness, opt, out); });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? exit_pass : exit_input;
    }
    try {
      return action ? action() : exit_input;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
    } catch (nlohmann::json::exception const& e) {
      err << "error: malformed JSON: " << e.what() << "\n";
    }
    return exit_input;
  }

}  // namespace ugn::cli
