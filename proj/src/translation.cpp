#include <algorithm>  // for sort, find
#include <map>        // for map
#include <set>        // for set

#include "ugn/graded.hpp"
#include "ugn/translation.hpp"

namespace ugn::translation {

  using amenability::intersect;

  CoefficientFunction CoefficientFunction::constant_value(Element c) {
    return CoefficientFunction{std::move(c), {}, {}};
  }

  CoefficientFunction CoefficientFunction::finite(
      Ring const&                                   R,
      std::vector<std::pair<GroupElement, Element>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](auto const& a, auto const& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
      if (entries[i].first == entries[i - 1].first) {
        throw Error("coefficient table lists a point twice");
      }
    }
    return CoefficientFunction{R.zero(), {}, std::move(entries)};
  }

  Element const& CoefficientFunction::raw(GroupElement const& x) const {
    auto it = std::lower_bound(table.begin(), table.end(), x,
                               [](auto const& e, GroupElement const& p) { return e.first < p; });
    if (it != table.end() && it->first == x) {
      return it->second;
    }
    return constant;
  }

  namespace {

    bool same_subset(SubsetPredicate const& a, SubsetPredicate const& b) {
      return a.rule == b.rule && a.inverted == b.inverted && a.members == b.members
             && a.table == b.table;
    }

    void check_compatible(TranslationElement const& M, TranslationElement const& N) {
      if (M.G != N.G || M.R != N.R || M.side != N.side || !same_subset(M.X, N.X)) {
        throw Error("translation elements live in different rings");
      }
    }

    bool guards_hold(TranslationElement const& M,
                     CoefficientFunction const& f,
                     GroupElement const&        x) {
      for (auto const& h : f.guards) {
        auto y = M.side == Side::left ? M.G.mul(M.G.inverse(h), x) : M.G.mul(x, h);
        if (!M.X.contains(M.G, y)) {
          return false;
        }
      }
      return true;
    }

    bool is_zero(Ring const& R, CoefficientFunction const& f) {
      if (!R.is_zero(f.constant)) {
        return false;
      }
      for (auto const& [p, v] : f.table) {
        if (!R.is_zero(v)) {
          return false;
        }
      }
      return true;
    }

    // Pointwise combination of two functions with the same guards.
    template <typename Op>
    CoefficientFunction combine(Ring const&                R,
                                CoefficientFunction const& f,
                                CoefficientFunction const& h,
                                std::vector<GroupElement>  guards,
                                Op                         op) {
      CoefficientFunction out{op(f.constant, h.constant), std::move(guards), {}};
      std::set<GroupElement> points;
      for (auto const& [p, v] : f.table) {
        points.insert(p);
      }
      for (auto const& [p, v] : h.table) {
        points.insert(p);
      }
      for (auto const& p : points) {
        auto v = op(f.raw(p), h.raw(p));
        if (!R.equal(v, out.constant)) {
          out.table.emplace_back(p, v);
        }
      }
      return out;
    }

    std::vector<GroupElement> clean_guards(TranslationElement const& M,
                                           std::vector<GroupElement> g) {
      if (M.X.rule == SubsetPredicate::Rule::whole_group) {
        return {};
      }
      auto e = M.G.identity();
      g.erase(std::remove(g.begin(), g.end(), e), g.end());
      return groups::canonical_set(std::move(g));
    }

    // Sorts by (shift, guards), merges equal keys and drops zero terms.
    void normalize(TranslationElement& M) {
      auto key_less = [](TranslationTerm const& a, TranslationTerm const& b) {
        if (a.shift != b.shift) {
          return a.shift < b.shift;
        }
        return a.f.guards < b.f.guards;
      };
      std::stable_sort(M.terms.begin(), M.terms.end(), key_less);
      std::vector<TranslationTerm> out;
      for (auto& t : M.terms) {
        t.f.guards = clean_guards(M, t.f.guards);
        if (!out.empty() && out.back().shift == t.shift && out.back().f.guards == t.f.guards) {
          out.back().f = combine(M.R, out.back().f, t.f, t.f.guards,
                                 [&](Element const& a, Element const& b) { return M.R.add(a, b); });
        } else {
          out.push_back(std::move(t));
        }
      }
      std::erase_if(out, [&](TranslationTerm const& t) { return is_zero(M.R, t.f); });
      M.terms = std::move(out);
    }

    // Same terms read on the other side over X^-1: shifts and guards are
    // kept and table points inverted.
    TranslationElement mirror(TranslationElement const& M, Side to) {
      TranslationElement out{M.G, M.X.inverse(), M.R, to, {}};
      for (auto const& t : M.terms) {
        CoefficientFunction f{t.f.constant, t.f.guards, {}};
        for (auto const& [p, v] : t.f.table) {
          f.table.emplace_back(M.G.inverse(p), v);
        }
        std::sort(f.table.begin(), f.table.end(),
                  [](auto const& a, auto const& b) { return a.first < b.first; });
        out.terms.push_back({t.shift, std::move(f)});
      }
      normalize(out);
      return out;
    }

    TranslationElement left_mul(TranslationElement const& M, TranslationElement const& N) {
      auto const&        G = M.G;
      auto const&        R = M.R;
      TranslationElement out{M.G, M.X, M.R, Side::left, {}};
      // (D_f A_g)(D_h A_k) = D_{f . (g.h) . [g^-1 x in X]} A_gk
      for (auto const& s : M.terms) {
        for (auto const& t : N.terms) {
          auto const&               g = s.shift;
          std::vector<GroupElement> guards = s.f.guards;
          guards.push_back(g);
          for (auto const& h : t.f.guards) {
            guards.push_back(G.mul(g, h));
          }
          CoefficientFunction f{R.mul(s.f.constant, t.f.constant), clean_guards(M, guards), {}};
          std::set<GroupElement> points;
          for (auto const& [p, v] : s.f.table) {
            points.insert(p);
          }
          for (auto const& [p, v] : t.f.table) {
            points.insert(G.mul(g, p));
          }
          auto gi = G.inverse(g);
          for (auto const& p : points) {
            auto v = R.mul(s.f.raw(p), t.f.raw(G.mul(gi, p)));
            if (!R.equal(v, f.constant)) {
              f.table.emplace_back(p, v);
            }
          }
          out.terms.push_back({G.mul(g, t.shift), std::move(f)});
        }
      }
      normalize(out);
      return out;
    }

    TranslationElement left_transpose(TranslationElement const& M) {
      auto const&        G = M.G;
      TranslationElement out{M.G, M.X, M.R, Side::left, {}};
      // (D_f A_g)^t = D_{x -> f(gx) [gx in X]} A_{g^-1}
      for (auto const& t : M.terms) {
        auto                      gi = G.inverse(t.shift);
        std::vector<GroupElement> guards{gi};
        for (auto const& h : t.f.guards) {
          guards.push_back(G.mul(gi, h));
        }
        CoefficientFunction f{t.f.constant, clean_guards(M, guards), {}};
        for (auto const& [p, v] : t.f.table) {
          f.table.emplace_back(G.mul(gi, p), v);
        }
        std::sort(f.table.begin(), f.table.end(),
                  [](auto const& a, auto const& b) { return a.first < b.first; });
        out.terms.push_back({gi, std::move(f)});
      }
      normalize(out);
      return out;
    }

  }  // namespace

  TranslationElement tr_zero(Group const& G, SubsetPredicate const& X, Ring const& R, Side side) {
    return TranslationElement{G, X, R, side, {}};
  }

  TranslationElement tr_identity(Group const&           G,
                                 SubsetPredicate const& X,
                                 Ring const&            R,
                                 Side                   side) {
    return tr_term(G, X, R, G.identity(), CoefficientFunction::constant_value(R.one()), side);
  }

  TranslationElement tr_term(Group const&           G,
                             SubsetPredicate const& X,
                             Ring const&            R,
                             GroupElement const&    g,
                             CoefficientFunction    f,
                             Side                   side) {
    G.check(g);
    TranslationElement M{G, X, R, side, {{g, std::move(f)}}};
    normalize(M);
    return M;
  }

  Element tr_entry(TranslationElement const& M, GroupElement const& x, GroupElement const& y) {
    auto const& G = M.G;
    if (!M.X.contains(G, x) || !M.X.contains(G, y)) {
      throw Error("entry (" + G.format(x) + ", " + G.format(y) + ") is outside X x X");
    }
    auto g   = M.side == Side::left ? G.mul(x, G.inverse(y)) : G.mul(G.inverse(x), y);
    auto sum = M.R.zero();
    for (auto const& t : M.terms) {
      if (t.shift == g && guards_hold(M, t.f, x)) {
        sum = M.R.add(sum, t.f.raw(x));
      }
    }
    return sum;
  }

  TranslationElement tr_add(TranslationElement const& M, TranslationElement const& N) {
    check_compatible(M, N);
    auto out = M;
    out.terms.insert(out.terms.end(), N.terms.begin(), N.terms.end());
    normalize(out);
    return out;
  }

  TranslationElement tr_neg(TranslationElement const& M) {
    auto out = M;
    for (auto& t : out.terms) {
      t.f.constant = M.R.neg(t.f.constant);
      for (auto& [p, v] : t.f.table) {
        v = M.R.neg(v);
      }
    }
    return out;
  }

  TranslationElement tr_mul(TranslationElement const& M, TranslationElement const& N) {
    check_compatible(M, N);
    if (M.side == Side::left) {
      return left_mul(M, N);
    }
    return mirror(left_mul(mirror(M, Side::left), mirror(N, Side::left)), Side::right);
  }

  TranslationElement tr_transpose(TranslationElement const& M) {
    if (M.side == Side::left) {
      return left_transpose(M);
    }
    return mirror(left_transpose(mirror(M, Side::left)), Side::right);
  }

  ElementSet tr_support(TranslationElement const& M) {
    ElementSet out;
    for (auto const& t : M.terms) {
      out.push_back(t.shift);
    }
    return groups::canonical_set(std::move(out));
  }

  TranslationElement right_translation_iso(TranslationElement const& M) {
    if (M.side != Side::right) {
      throw Error("expected an element of a right translation ring");
    }
    return mirror(M, Side::left);
  }

  TranslationElement right_translation_iso_inverse(TranslationElement const& M) {
    if (M.side != Side::left) {
      throw Error("expected an element of a left translation ring");
    }
    return mirror(M, Side::right);
  }

  ////////////////////////////////////////////////////////////////////////
  // Skew group rings of finite groups
  ////////////////////////////////////////////////////////////////////////

  FiniteGroupIsoReport finite_group_iso(Group const& G, Ring const& R, std::size_t bound) {
    auto order = G.order();
    if (!order) {
      throw Error(G.name() + " is infinite");
    }
    if (*order > bound) {
      throw Error("|G| = " + std::to_string(*order) + " exceeds the bound "
                  + std::to_string(bound));
    }
    auto        els = groups::elements(G);
    std::size_t k   = els.size();
    std::map<GroupElement, std::size_t> index;
    for (std::size_t i = 0; i < k; ++i) {
      index.emplace(els[i], i);
    }
    auto P = rings::product(std::vector<Ring>(k, R));
    auto T = rings::matrix_ring(R, k);

    // (g.f)(x) = f(g^-1 x)
    auto act = [G, els, index, k](GroupElement const& g, Element const& f) {
      auto const&    v  = f.parts();
      auto           gi = G.inverse(g);
      Element::Parts out;
      for (std::size_t i = 0; i < k; ++i) {
        out.push_back(v[index.at(G.mul(gi, els[i]))]);
      }
      return Element(std::move(out));
    };
    auto act_inverse = [G, act](GroupElement const& g, Element const& f) {
      return act(G.inverse(g), f);
    };

    std::vector<Element> deltas;
    for (std::size_t i = 0; i < k; ++i) {
      Element::Parts p(k, R.zero());
      p[i] = R.one();
      deltas.emplace_back(std::move(p));
    }
    auto samples = deltas;
    samples.push_back(P.one());
    {
      Element::Parts p;
      for (std::size_t i = 0; i < k; ++i) {
        p.push_back(R.from_int(static_cast<long>(i) + 2));
      }
      samples.emplace_back(std::move(p));
    }
    auto CP = graded::crossed_product(
        graded::skew_system(G, P, act, act_inverse, samples, "translation"));

    auto D = [&](Element const& f) {
      Element::Parts m(k * k, R.zero());
      for (std::size_t i = 0; i < k; ++i) {
        m[i * k + i] = f.parts()[i];
      }
      return Element(std::move(m));
    };
    auto A = [&](GroupElement const& g) {
      Element::Parts m(k * k, R.zero());
      auto           gi = G.inverse(g);
      for (std::size_t i = 0; i < k; ++i) {
        m[i * k + index.at(G.mul(gi, els[i]))] = R.one();
      }
      return Element(std::move(m));
    };
    auto phi = [&](Element const& x) {
      auto s = T.zero();
      for (auto const& [g, f] : graded::crossed_terms(x)) {
        s = T.add(s, T.mul(D(f), A(g)));
      }
      return s;
    };

    FiniteGroupIsoReport rep;
    rep.order = k;
    auto note = [&](std::string msg) {
      if (rep.failures.size() < 20) {
        rep.failures.push_back(std::move(msg));
      }
    };

    std::vector<Element> gens;
    for (auto const& g : els) {
      for (auto const& d : deltas) {
        gens.push_back(graded::crossed_term(CP, g, d));
      }
    }
    std::vector<Element> images;
    for (auto const& u : gens) {
      images.push_back(phi(u));
    }
    rep.additive = rep.multiplicative = true;
    for (std::size_t a = 0; a < gens.size(); ++a) {
      auto const& u  = gens[a];
      auto const& pu = images[a];
      for (std::size_t b = 0; b < gens.size(); ++b) {
        ++rep.pairs;
        auto const& v  = gens[b];
        auto const& pv = images[b];
        if (!T.equal(phi(CP.add(u, v)), T.add(pu, pv))) {
          rep.additive = false;
          note("phi(u + v) != phi(u) + phi(v) for u = " + CP.format(u) + ", v = " + CP.format(v));
        }
        if (!T.equal(phi(CP.mul(u, v)), T.mul(pu, pv))) {
          rep.multiplicative = false;
          note("phi(uv) != phi(u)phi(v) for u = " + CP.format(u) + ", v = " + CP.format(v));
        }
      }
    }
    rep.unital = T.is_one(phi(CP.one()));
    if (!rep.unital) {
      note("phi(1) is not the identity");
    }

    // The R-basis {delta_x g} must go to distinct matrix units covering all k^2.
    std::set<std::pair<std::size_t, std::size_t>> hit;
    bool                                          units = true;
    for (auto const& u : gens) {
      auto        pu  = phi(u);
      auto const& m   = pu.parts();
      std::size_t nnz = 0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!R.is_zero(m[i])) {
          ++nnz;
          units = units && R.is_one(m[i]);
          hit.emplace(i / k, i % k);
        }
      }
      units = units && nnz == 1;
    }
    rep.bijective = units && hit.size() == k * k && gens.size() == k * k;
    if (!rep.bijective) {
      note("phi does not map the basis onto the matrix units");
    }

    rep.action_law = true;
    for (auto const& g : els) {
      auto Ag  = A(g);
      auto Agi = A(G.inverse(g));
      for (auto const& f : samples) {
        if (!T.equal(T.mul(T.mul(Ag, D(f)), Agi), D(act(g, f)))) {
          rep.action_law = false;
          note("A_g D_f A_g^-1 != D_(g.f) for g = " + G.format(g));
        }
      }
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rank collapse
  ////////////////////////////////////////////////////////////////////////

  CollapseReport collapse_matrices(Group const&                         G,
                                   amenability::InjectionWitness const& w,
                                   Ring const&                          R) {
    std::size_t nv = w.V.size(), nw = w.W.size();
    if (w.alpha.size() != nv || w.beta.size() != nv) {
      throw Error("alpha and beta must have one value per element of V");
    }
    std::map<GroupElement, std::size_t> col;
    for (std::size_t j = 0; j < nw; ++j) {
      col.emplace(w.W[j], j);
    }
    CollapseReport rep{rings::RingMatrix(R, nv, nw), rings::RingMatrix(R, nv, nw), false, false,
                       false,                       false, false, {}, std::nullopt};
    rep.witness_problem = amenability::check_injection(G, w);
    std::vector<bool> covered(nw, false);
    for (std::size_t i = 0; i < nv; ++i) {
      auto a = col.find(w.alpha[i]);
      auto b = col.find(w.beta[i]);
      if (a == col.end() || b == col.end()) {
        throw Error("the witness maps " + G.format(w.V[i]) + " outside W");
      }
      rep.M.set(i, a->second, R.one());
      rep.N.set(i, b->second, R.one());
      covered[a->second] = covered[b->second] = true;
    }
    auto Mt = rep.M.transpose();
    auto Nt = rep.N.transpose();
    if (nv == 0) {
      rep.mmt_identity = rep.nnt_identity = rep.mnt_zero = rep.nmt_zero = true;
    } else {
      rep.mmt_identity = rings::mat_mul(rep.M, Mt).is_identity();
      rep.nnt_identity = rings::mat_mul(rep.N, Nt).is_identity();
      rep.mnt_zero     = rings::mat_mul(rep.M, Nt).is_zero();
      rep.nmt_zero     = rings::mat_mul(rep.N, Mt).is_zero();
    }
    rings::RingMatrix proj(R, nw, nw);
    for (std::size_t j = 0; j < nw; ++j) {
      if (covered[j]) {
        proj.set(j, j, R.one());
      } else {
        rep.uncovered.push_back(w.W[j]);
      }
    }
    rep.projection = nw == 0
                     || (nv == 0 ? proj.is_zero()
                                 : rings::mat_equal(rings::mat_add(rings::mat_mul(Mt, rep.M),
                                                                   rings::mat_mul(Nt, rep.N)),
                                                    proj));
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificate compression
  ////////////////////////////////////////////////////////////////////////

  CompressionResult compress_certificate(TranslationCertificate const& c,
                                         ElementSet const&             F,
                                         ElementSet const&             K) {
    if (c.n < 1 || c.m < 1 || c.A.size() != c.m * c.n || c.B.size() != c.n * c.m) {
      throw Error("certificate matrices do not have shapes m x n and n x m");
    }
    auto const& first = c.A.front();
    for (auto const* list : {&c.A, &c.B}) {
      for (auto const& e : *list) {
        check_compatible(first, e);
      }
    }
    if (first.side != Side::left) {
      throw Error("compression works over left translation rings");
    }
    auto const& G  = first.G;
    auto const& X  = first.X;
    auto const& R  = first.R;
    auto        Ks = groups::canonical_set(K);
    if (!groups::set_contains(Ks, G.identity())) {
      throw Error("K must contain the identity");
    }
    for (auto const& k : Ks) {
      if (!groups::set_contains(Ks, G.inverse(k))) {
        throw Error("K must be symmetric; " + G.format(k) + " has no inverse in K");
      }
    }
    for (auto const* list : {&c.A, &c.B}) {
      for (auto const& e : *list) {
        for (auto const& g : tr_support(e)) {
          if (!groups::set_contains(Ks, g)) {
            throw Error("K does not dominate the entries: shift " + G.format(g) + " is missing");
          }
        }
      }
    }

    auto        Fs  = groups::canonical_set(F);
    auto        F_X = intersect(G, Fs, X);
    auto        U   = intersect(G, groups::set_product(G, Ks, Fs), X);
    std::size_t window_entries = 0;
    std::size_t lhs = c.n * U.size(), rhs = c.m * F_X.size();
    if (!(lhs < rhs)) {
      throw Error("Følner inequality fails: n|KF n X| = " + std::to_string(lhs)
                  + " is not below m|F n X| = " + std::to_string(rhs));
    }

    // AB = I on the window (F u KF) n X, which is U because 1 is in K.
    for (std::size_t i = 0; i < c.m; ++i) {
      for (std::size_t k = 0; k < c.m; ++k) {
        auto s = tr_zero(G, X, R);
        for (std::size_t j = 0; j < c.n; ++j) {
          s = tr_add(s, tr_mul(c.A[i * c.n + j], c.B[j * c.m + k]));
        }
        for (auto const& x : U) {
          for (auto const& y : U) {
            ++window_entries;
            auto want = (i == k && x == y) ? R.one() : R.zero();
            if (!R.equal(tr_entry(s, x, y), want)) {
              throw Error("AB != I over the translation ring at block (" + std::to_string(i + 1)
                          + "," + std::to_string(k + 1) + "), entry (" + G.format(x) + ", "
                          + G.format(y) + ")");
            }
          }
        }
      }
    }

    std::size_t       nf = F_X.size(), nu = U.size();
    rings::RingMatrix As(R, c.m * nf, c.n * nu), Bs(R, c.n * nu, c.m * nf);
    for (std::size_t a = 0; a < nf; ++a) {
      for (std::size_t i = 0; i < c.m; ++i) {
        for (std::size_t b = 0; b < nu; ++b) {
          for (std::size_t j = 0; j < c.n; ++j) {
            As.set(a * c.m + i, b * c.n + j, tr_entry(c.A[i * c.n + j], F_X[a], U[b]));
            Bs.set(b * c.n + j, a * c.m + i, tr_entry(c.B[j * c.m + i], U[b], F_X[a]));
          }
        }
      }
    }
    auto cert    = rings::make_certificate(As, Bs);
    auto verdict = rings::verify_certificate(cert);
    if (!verdict.bgn()) {
      throw Error("compressed certificate fails: " + verdict.to_string());
    }
    return CompressionResult{std::move(cert), std::move(verdict), std::move(F_X), std::move(U),
                             window_entries};
  }

}  // namespace ugn::translation
