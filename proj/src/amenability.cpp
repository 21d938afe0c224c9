#include <algorithm>      // for sort
#include <set>            // for set
#include <unordered_map>  // for unordered_map

#include "flow.hpp"
#include "ugn/amenability.hpp"

namespace ugn::amenability {

  using groups::GroupKind;

  SubsetPredicate SubsetPredicate::whole_group() {
    return {};
  }

  SubsetPredicate SubsetPredicate::bs_x() {
    SubsetPredicate p;
    p.rule = Rule::bs_x;
    return p;
  }

  SubsetPredicate SubsetPredicate::bs_x0() {
    SubsetPredicate p;
    p.rule = Rule::bs_x0;
    return p;
  }

  SubsetPredicate SubsetPredicate::explicit_set(ElementSet s) {
    SubsetPredicate p;
    p.rule    = Rule::explicit_set;
    p.members = groups::canonical_set(std::move(s));
    return p;
  }

  SubsetPredicate SubsetPredicate::user_table(std::map<GroupElement, bool> t) {
    SubsetPredicate p;
    p.rule  = Rule::user_table;
    p.table = std::move(t);
    return p;
  }

  SubsetPredicate SubsetPredicate::inverse() const {
    auto p     = *this;
    p.inverted = !inverted;
    return p;
  }

  bool SubsetPredicate::contains(Group const& G, GroupElement const& y) const {
    auto const& x = inverted ? G.inverse(y) : y;
    switch (rule) {
      case Rule::whole_group:
        return true;
      case Rule::bs_x:
      case Rule::bs_x0: {
        if (G.kind() != GroupKind::baumslag_solitar) {
          throw Error("the subsets X and X_0 live in BS(1,k), not " + G.name());
        }
        auto t = G.bs_t(x);
        if (t.get_den() != 1) {
          return false;
        }
        return rule == Rule::bs_x || mpz_class(t.get_num() % G.parameter()) == 0;
      }
      case Rule::explicit_set:
        return groups::set_contains(members, x);
      case Rule::user_table: {
        auto it = table.find(x);
        if (it == table.end()) {
          throw Error("membership of " + G.format(x) + " is not in the table");
        }
        return it->second;
      }
    }
    return false;
  }

  std::string SubsetPredicate::describe() const {
    if (inverted) {
      auto p     = *this;
      p.inverted = false;
      return "inverse of " + p.describe();
    }
    switch (rule) {
      case Rule::whole_group:
        return "G";
      case Rule::bs_x:
        return "X = {(t, m) : t in Z}";
      case Rule::bs_x0:
        return "X_0 = {(t, m) : t in kZ}";
      case Rule::explicit_set:
        return "explicit set of " + std::to_string(members.size()) + " elements";
      case Rule::user_table:
        return "table of " + std::to_string(table.size()) + " elements";
    }
    return "?";
  }

  ElementSet intersect(Group const& G, ElementSet const& s, SubsetPredicate const& X) {
    ElementSet out;
    for (auto const& x : s) {
      if (X.contains(G, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Følner sets
  ////////////////////////////////////////////////////////////////////////

  namespace {

    FolnerRow count(Group const&           G,
                    SubsetPredicate const& X,
                    ElementSet const&      K,
                    ElementSet const&      F,
                    std::size_t            radius) {
      auto      fx  = intersect(G, groups::canonical_set(F), X);
      auto      kfx = intersect(G, groups::set_product(G, K, groups::canonical_set(F)), X);
      FolnerRow row{radius, kfx.size(), fx.size(), std::nullopt};
      if (!fx.empty()) {
        row.ratio = Rational(static_cast<long>(kfx.size()), static_cast<long>(fx.size()));
        row.ratio->canonicalize();
      }
      return row;
    }

    bool passes(FolnerRow const& row, Rational const& eps) {
      return row.f_in_x > 0
             && Rational(static_cast<long>(row.kf_in_x))
                    < (1 + eps) * Rational(static_cast<long>(row.f_in_x));
    }

    void check_inputs(ElementSet const& K, Rational const& eps) {
      if (K.empty()) {
        throw Error("K must be nonempty");
      }
      if (eps <= 0) {
        throw Error("epsilon must be positive");
      }
    }

    template <typename Candidates>
    FolnerResult search(Group const&           G,
                        SubsetPredicate const& X,
                        ElementSet const&      K,
                        Rational const&        eps,
                        Candidates&&           next) {
      check_inputs(K, eps);
      FolnerResult res;
      ElementSet   F;
      std::size_t  r = 0;
      while (next(F, r)) {
        auto row = count(G, X, K, F, r);
        if (row.ratio && (!res.best_ratio || *row.ratio < *res.best_ratio)) {
          res.best_ratio = row.ratio;
        }
        res.rows.push_back(row);
        if (passes(row, eps)) {
          res.witness
              = FolnerWitness{groups::canonical_set(K), eps, F, row.kf_in_x, row.f_in_x};
          res.radius = r;
          break;
        }
        ++r;
      }
      return res;
    }

  }  // namespace

  bool verify_folner(Group const& G, SubsetPredicate const& X, FolnerWitness const& w) {
    // recount from scratch without the set helpers
    std::set<GroupElement> fx, kfx;
    for (auto const& f : w.F) {
      if (X.contains(G, f)) {
        fx.insert(f);
      }
      for (auto const& k : w.K) {
        auto y = G.mul(k, f);
        if (X.contains(G, y)) {
          kfx.insert(y);
        }
      }
    }
    return !fx.empty() && fx.size() == w.f_in_x && kfx.size() == w.kf_in_x
           && Rational(static_cast<long>(kfx.size()))
                  < (1 + w.eps) * Rational(static_cast<long>(fx.size()));
  }

  FolnerResult folner_search(Group const&           G,
                             SubsetPredicate const& X,
                             ElementSet const&      K,
                             Rational const&        eps,
                             std::size_t            r_max) {
    auto spheres = groups::spheres(G, r_max, r_max);
    auto res     = search(G, X, K, eps, [&](ElementSet& F, std::size_t r) {
      if (r > r_max) {
        return false;
      }
      ElementSet ball;
      for (std::size_t i = 0; i <= r; ++i) {
        ball.insert(ball.end(), spheres[i].begin(), spheres[i].end());
      }
      F = intersect(G, ball, X);
      return true;
    });
    return res;
  }

  FolnerResult folner_search(Group const&                   G,
                             SubsetPredicate const&         X,
                             ElementSet const&              K,
                             Rational const&                eps,
                             std::vector<ElementSet> const& candidates) {
    return search(G, X, K, eps, [&](ElementSet& F, std::size_t i) {
      if (i >= candidates.size()) {
        return false;
      }
      F = candidates[i];
      return true;
    });
  }

  std::vector<FolnerRow> expansion_profile(Group const&           G,
                                           SubsetPredicate const& X,
                                           ElementSet const&      K,
                                           std::size_t            r_max) {
    std::vector<FolnerRow> out;
    auto                   spheres = groups::spheres(G, r_max, r_max);
    ElementSet             ball;
    for (std::size_t r = 0; r <= r_max; ++r) {
      ball.insert(ball.end(), spheres[r].begin(), spheres[r].end());
      out.push_back(count(G, X, K, ball, r));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Translating injections
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::string> check_injection(Group const& G, InjectionWitness const& w) {
    if (w.alpha.size() != w.V.size() || w.beta.size() != w.V.size()) {
      return "alpha and beta must have one value per element of V";
    }
    auto Ws = groups::canonical_set(w.W);
    auto Ks = groups::canonical_set(w.K);
    std::set<GroupElement> used;
    for (std::size_t i = 0; i < w.V.size(); ++i) {
      auto const& x = w.V[i];
      for (auto const* y : {&w.alpha[i], &w.beta[i]}) {
        if (!groups::set_contains(Ws, *y)) {
          return G.format(*y) + " is not in W";
        }
        if (!groups::set_contains(Ks, G.mul(*y, G.inverse(x)))) {
          return "the translator from " + G.format(x) + " to " + G.format(*y)
                 + " is not in K";
        }
        if (!used.insert(*y).second) {
          return G.format(*y) + " is hit twice";
        }
      }
    }
    return std::nullopt;
  }

  ElementSet neighbourhood(Group const&      G,
                           ElementSet const& A,
                           ElementSet const& W,
                           ElementSet const& K) {
    auto       Ws = groups::canonical_set(W);
    ElementSet out;
    for (auto const& a : A) {
      for (auto const& k : K) {
        auto y = G.mul(k, a);
        if (groups::set_contains(Ws, y)) {
          out.push_back(y);
        }
      }
    }
    return groups::canonical_set(std::move(out));
  }

  InjectionResult find_two_to_one_injection(Group const&      G,
                                            ElementSet const& V,
                                            ElementSet const& W,
                                            ElementSet const& K) {
    std::unordered_map<GroupElement, std::size_t, groups::GroupElementHash> w_index;
    for (std::size_t j = 0; j < W.size(); ++j) {
      w_index.emplace(W[j], j);
    }
    std::size_t      nv = V.size(), nw = W.size();
    std::size_t      s = nv + nw, t = s + 1;
    detail::MaxFlow  flow(nv + nw + 2);
    std::vector<std::vector<std::pair<std::size_t, detail::MaxFlow::EdgeId>>> middle(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      flow.add_edge(s, i, 2);
      std::vector<std::size_t> targets;
      for (auto const& k : K) {
        auto it = w_index.find(G.mul(k, V[i]));
        if (it != w_index.end()) {
          targets.push_back(it->second);
        }
      }
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      for (auto j : targets) {
        // capacity 2 keeps middle edges out of every minimum cut
        middle[i].emplace_back(j, flow.add_edge(i, nv + j, 2));
      }
    }
    for (std::size_t j = 0; j < nw; ++j) {
      flow.add_edge(nv + j, t, 1);
    }

    InjectionResult res;
    res.flow = static_cast<std::size_t>(flow.run(s, t));
    if (res.flow == 2 * nv) {
      InjectionWitness w{V, W, K, {}, {}};
      for (std::size_t i = 0; i < nv; ++i) {
        std::vector<std::size_t> hit;
        for (auto [j, e] : middle[i]) {
          if (flow.residual(e) < 2) {
            hit.push_back(j);
          }
        }
        w.alpha.push_back(W[hit.at(0)]);
        w.beta.push_back(W[hit.at(1)]);
      }
      res.witness = std::move(w);
      return res;
    }
    auto seen = flow.reachable(s);
    for (std::size_t i = 0; i < nv; ++i) {
      if (seen[i]) {
        res.hall_set.push_back(V[i]);
      }
    }
    res.hall_neighbours = neighbourhood(G, res.hall_set, W, K);
    return res;
  }

  ////////////////////////////////////////////////////////////////////////
  // Equidecompositions
  ////////////////////////////////////////////////////////////////////////

  bool verify_equidecomposition(Group const&                    G,
                                EquidecompositionWitness const& w,
                                ElementSet const&               A,
                                ElementSet const&               B) {
    if (w.pieces.size() != w.translators.size()) {
      return false;
    }
    std::set<GroupElement> src, dst;
    std::size_t            total = 0;
    for (std::size_t i = 0; i < w.pieces.size(); ++i) {
      for (auto const& a : w.pieces[i]) {
        ++total;
        if (!src.insert(a).second || !dst.insert(G.mul(w.translators[i], a)).second) {
          return false;
        }
      }
    }
    std::set<GroupElement> As(A.begin(), A.end()), Bs(B.begin(), B.end());
    return src == As && dst == Bs && total == As.size();
  }

  ////////////////////////////////////////////////////////////////////////
  // BS(1,k)
  ////////////////////////////////////////////////////////////////////////

  BsCheck bs_example_check(long k, std::size_t r) {
    auto G    = Group::baumslag_solitar(k);
    auto ball = groups::ball(G, r, std::max<std::size_t>(r, groups::default_max_radius));
    auto X    = SubsetPredicate::bs_x();
    auto X0   = SubsetPredicate::bs_x0();
    auto a    = G.generators().at(0);
    auto b    = G.generators().at(1);
    auto in   = groups::canonical_set(ball);

    BsCheck rep;
    rep.k         = k;
    rep.r         = r;
    rep.ball_size = ball.size();
    rep.contained = rep.disjoint = rep.b_maps = true;
    auto note = [&](std::string msg) {
      if (rep.failures.size() < 20) {
        rep.failures.push_back(std::move(msg));
      }
    };
    for (auto const& x : ball) {
      bool inx  = X.contains(G, x);
      bool inx0 = X0.contains(G, x);
      rep.x_count += inx;
      rep.x0_count += inx0;
      if (inx0) {
        if (!inx || !X.contains(G, G.mul(a, x))) {
          rep.contained = false;
          note(G.format(x) + " or a times it lies outside X");
        }
        if (X0.contains(G, G.mul(a, x)) || X0.contains(G, G.mul(G.inverse(a), x))) {
          rep.disjoint = false;
          note(G.format(x) + " is in X_0 n a X_0 or a^-1 times it is");
        }
        auto pre = G.mul(G.inverse(b), x);
        if (groups::set_contains(in, pre)) {
          ++rep.b_preimages;
          if (!X.contains(G, pre)) {
            rep.b_maps = false;
            note("b^-1 " + G.format(x) + " is not in X");
          }
        }
      }
      if (inx && !X0.contains(G, G.mul(b, x))) {
        rep.b_maps = false;
        note("b " + G.format(x) + " is not in X_0");
      }
    }
    return rep;
  }

  std::size_t tuple_count(Group const&                     G,
                          GroupElement const&              g,
                          SubsetPredicate const&           X,
                          std::vector<GroupElement> const& tuple) {
    auto        gi = G.inverse(g);
    std::size_t c  = 0;
    for (auto const& u : tuple) {
      c += X.contains(G, G.mul(gi, u));
    }
    return c;
  }

  RosenblattResult rosenblatt_find(Group const&                     G,
                                   std::vector<GroupElement> const& u,
                                   std::vector<GroupElement> const& v) {
    if (G.kind() != GroupKind::baumslag_solitar) {
      throw Error("coset classification needs BS(1,k), not " + G.name());
    }
    if (u.size() >= v.size()) {
      throw Error("need |u| < |v|");
    }
    auto frac = [&](GroupElement const& x) {
      auto    t = G.bs_t(x);
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
      Rational f = t - Rational(q);
      f.canonicalize();
      return f;
    };
    std::map<Rational, std::pair<std::size_t, std::size_t>> counts;
    for (auto const& x : u) {
      ++counts[frac(x)].first;
    }
    for (auto const& x : v) {
      ++counts[frac(x)].second;
    }
    for (auto const& [f, c] : counts) {
      if (c.first < c.second) {
        auto g = G.bs_element(f, 0);
        return RosenblattResult{g, f, c.first, c.second};
      }
    }
    throw Error("no coset separates the tuples");  // impossible when |u| < |v|
  }

}  // namespace ugn::amenability
