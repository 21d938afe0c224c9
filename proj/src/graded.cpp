#include <map>      // for map
#include <memory>   // for make_shared
#include <sstream>  // for ostringstream
#include <utility>  // for move

#include "text_util.hpp"
#include "ugn/graded.hpp"

namespace ugn::graded {

  namespace {

    constexpr std::size_t max_reported_failures = 50;

    void fail(CrossedSystemReport& rep, std::string msg) {
      if (rep.failures.size() < max_reported_failures) {
        rep.failures.push_back(std::move(msg));
      }
    }

    struct CrossedValue : rings::PresentedValue {
      explicit CrossedValue(CrossedTerms t) : terms(std::move(t)) {}
      CrossedTerms terms;
    };

    class CrossedProductImpl : public rings::RingImpl {
     public:
      explicit CrossedProductImpl(CrossedSystem cs)
          : _cs(std::move(cs)), _elements(groups::elements(_cs.G)) {
        for (std::size_t i = 0; i < _elements.size(); ++i) {
          _index.emplace(_elements[i], i);
        }
      }

      CrossedSystem const& system() const {
        return _cs;
      }

      bool is_group_ring() const {
        return _cs.trivial_action && _cs.trivial_omega;
      }

      std::size_t index(GroupElement const& g) const {
        auto it = _index.find(g);
        if (it == _index.end()) {
          throw Error("element not in " + _cs.G.name());
        }
        return it->second;
      }

      Element make(std::map<std::size_t, Element> const& raw) const {
        CrossedTerms t;
        for (auto const& [i, r] : raw) {
          if (!_cs.R.is_zero(r)) {
            t.emplace_back(_elements[i], r);
          }
        }
        return Element(std::make_shared<CrossedValue const>(std::move(t)));
      }

      static CrossedTerms const& terms(Element const& x) {
        return x.as<CrossedValue>().terms;
      }

      void add_to(std::map<std::size_t, Element>& m, std::size_t i, Element const& r) const {
        auto [it, fresh] = m.try_emplace(i, r);
        if (!fresh) {
          it->second = _cs.R.add(it->second, r);
        }
      }

      rings::RingKind kind() const override {
        return rings::RingKind::presented;
      }
      std::string name() const override {
        if (is_group_ring()) {
          return "RG(" + _cs.G.name() + ";" + _cs.R.name() + ")";
        }
        return "cp(" + _cs.G.name() + ";" + _cs.R.name() + ";" + _cs.name + ")";
      }
      Element zero() const override {
        return make({});
      }
      Element one() const override {
        return make({{0, _cs.R.one()}});
      }
      Element from_integer(mpz_class const& k) const override {
        return make({{0, _cs.R.impl().from_integer(k)}});
      }
      Element add(Element const& x, Element const& y) const override {
        std::map<std::size_t, Element> m;
        for (auto const& [g, r] : terms(x)) {
          add_to(m, index(g), r);
        }
        for (auto const& [g, r] : terms(y)) {
          add_to(m, index(g), r);
        }
        return make(m);
      }
      Element neg(Element const& x) const override {
        std::map<std::size_t, Element> m;
        for (auto const& [g, r] : terms(x)) {
          m.emplace(index(g), _cs.R.neg(r));
        }
        return make(m);
      }
      // (r g)(s h) = r (g.s) omega(g,h) (gh)
      Element mul(Element const& x, Element const& y) const override {
        auto const&                    R = _cs.R;
        std::map<std::size_t, Element> m;
        for (auto const& [g, r] : terms(x)) {
          for (auto const& [h, s] : terms(y)) {
            auto c = R.mul(r, _cs.trivial_action ? s : _cs.act(g, s));
            if (!_cs.trivial_omega) {
              c = R.mul(c, _cs.omega(g, h));
            }
            add_to(m, index(_cs.G.mul(g, h)), c);
          }
        }
        return make(m);
      }
      bool equal(Element const& x, Element const& y) const override {
        auto const& a = terms(x);
        auto const& b = terms(y);
        if (a.size() != b.size()) {
          return false;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i].first != b[i].first || !_cs.R.equal(a[i].second, b[i].second)) {
            return false;
          }
        }
        return true;
      }
      std::optional<rings::Coordinates> coordinates(Element const& x) const override {
        rings::Coordinates out;
        for (auto const& [g, r] : terms(x)) {
          auto c = _cs.R.coordinates(r);
          if (!c) {
            return std::nullopt;
          }
          for (auto const& [k, v] : *c) {
            out.emplace(_cs.G.format(g) + ":" + k, v);
          }
        }
        return out;
      }
      bool is_commutative() const override {
        return false;
      }

      std::string format(Element const& x) const override {
        auto const& t = terms(x);
        if (t.empty()) {
          return "0";
        }
        std::string out;
        for (std::size_t i = 0; i < t.size(); ++i) {
          out += (i ? " + (" : "(") + _cs.R.format(t[i].second) + ")["
                 + _cs.G.format(t[i].first) + "]";
        }
        return out;
      }

      Element parse(std::string_view text) const override {
        std::map<std::size_t, Element> m;
        auto                           s = detail::trim(text);
        if (s == "0") {
          return zero();
        }
        for (auto const& piece : detail::split_top_level(s, '+')) {
          std::string_view p = piece;
          Element          r = _cs.R.one();
          if (!p.empty() && p.front() == '(') {
            int         depth = 0;
            std::size_t k     = 0;
            for (; k < p.size(); ++k) {
              if (detail::is_open(p[k])) {
                ++depth;
              } else if (detail::is_close(p[k]) && --depth == 0) {
                break;
              }
            }
            r = _cs.R.parse(p.substr(1, k - 1));
            p = detail::trim(p.substr(k + 1));
          }
          GroupElement g = _cs.G.identity();
          if (!p.empty()) {
            if (!detail::strip_enclosing(p, '[', ']')) {
              throw ParseError("expected \"(r)[g]\", found \"" + piece + "\"");
            }
            g = _cs.G.parse_element(p);
          }
          add_to(m, index(g), r);
        }
        return make(m);
      }

     private:
      CrossedSystem                          _cs;
      groups::ElementSet                     _elements;
      std::map<GroupElement, std::size_t>    _index;
    };

    CrossedProductImpl const& impl_of(Ring const& ring) {
      auto const* p = dynamic_cast<CrossedProductImpl const*>(&ring.impl());
      if (p == nullptr) {
        throw Error("not a crossed product: " + ring.name());
      }
      return *p;
    }

  }  // namespace

  CrossedSystem skew_system(
      Group const&                                                 G,
      Ring const&                                                  R,
      std::function<Element(GroupElement const&, Element const&)> act,
      std::function<Element(GroupElement const&, Element const&)> act_inverse,
      std::vector<Element>                                         samples,
      std::string                                                  name) {
    auto one = R.one();
    return CrossedSystem{G,
                         R,
                         std::move(act),
                         std::move(act_inverse),
                         [one](GroupElement const&, GroupElement const&) { return one; },
                         std::move(samples),
                         std::move(name),
                         false,
                         true};
  }

  CrossedSystem twisted_system(
      Group const&                                                     G,
      Ring const&                                                      R,
      std::function<Element(GroupElement const&, GroupElement const&)> omega,
      std::vector<Element>                                             samples,
      std::string                                                      name) {
    auto id = [](GroupElement const&, Element const& r) { return r; };
    return CrossedSystem{
        G, R, id, id, std::move(omega), std::move(samples), std::move(name), true, false};
  }

  CrossedSystem group_ring_system(Group const& G, Ring const& R, std::vector<Element> samples) {
    if (samples.empty()) {
      samples = {R.one(), R.from_int(2), R.from_int(-1)};
    }
    auto cs           = twisted_system(G, R, {}, std::move(samples), "group ring");
    auto one          = R.one();
    cs.omega          = [one](GroupElement const&, GroupElement const&) { return one; };
    cs.trivial_omega  = true;
    return cs;
  }

  CrossedSystemReport verify_crossed_system(CrossedSystem const& cs) {
    CrossedSystemReport rep;
    auto const&         G   = cs.G;
    auto const&         R   = cs.R;
    auto                els = groups::elements(G);
    auto                e   = G.identity();
    auto                fg  = [&](GroupElement const& g) { return G.format(g); };

    // (iii) and units
    for (auto const& g : els) {
      rep.checks += 2;
      if (!R.is_one(cs.omega(g, e))) {
        fail(rep, "(iii) omega(" + fg(g) + ", 1) = " + R.format(cs.omega(g, e)));
      }
      if (!R.is_one(cs.omega(e, g))) {
        fail(rep, "(iii) omega(1, " + fg(g) + ") = " + R.format(cs.omega(e, g)));
      }
    }
    if (!cs.trivial_omega) {
      for (auto const& g : els) {
        for (auto const& h : els) {
          ++rep.checks;
          auto w = cs.omega(g, h);
          if (!R.inverse(w)) {
            fail(rep, "omega(" + fg(g) + ", " + fg(h) + ") = " + R.format(w)
                          + " is not a unit");
          }
          if (cs.trivial_action) {
            for (auto const& r : cs.samples) {
              ++rep.checks;
              if (!R.equal(R.mul(w, r), R.mul(r, w))) {
                fail(rep, "omega(" + fg(g) + ", " + fg(h) + ") does not commute with "
                              + R.format(r));
              }
            }
          }
        }
      }
    }

    // action by ring automorphisms
    if (!cs.trivial_action) {
      for (auto const& g : els) {
        ++rep.checks;
        if (!R.is_one(cs.act(g, R.one()))) {
          fail(rep, fg(g) + " . 1 != 1");
        }
        for (auto const& r : cs.samples) {
          rep.checks += 2;
          if (!R.equal(cs.act_inverse(g, cs.act(g, r)), r)
              || !R.equal(cs.act(g, cs.act_inverse(g, r)), r)) {
            fail(rep, "the inverse action of " + fg(g) + " does not undo it on "
                          + R.format(r));
          }
          for (auto const& s : cs.samples) {
            rep.checks += 2;
            if (!R.equal(cs.act(g, R.add(r, s)), R.add(cs.act(g, r), cs.act(g, s)))) {
              fail(rep, fg(g) + " . (r + s) != g.r + g.s for r = " + R.format(r)
                            + ", s = " + R.format(s));
            }
            if (!R.equal(cs.act(g, R.mul(r, s)), R.mul(cs.act(g, r), cs.act(g, s)))) {
              fail(rep, fg(g) + " . (rs) != (g.r)(g.s) for r = " + R.format(r)
                            + ", s = " + R.format(s));
            }
          }
        }
      }
    }

    // (i)
    for (auto const& g : els) {
      for (auto const& h : els) {
        auto w  = cs.omega(g, h);
        auto gh = G.mul(g, h);
        for (auto const& r : cs.samples) {
          ++rep.checks;
          auto lhs = R.mul(cs.act(g, cs.act(h, r)), w);
          auto rhs = R.mul(w, cs.act(gh, r));
          if (!R.equal(lhs, rhs)) {
            fail(rep, "(i) fails for g = " + fg(g) + ", h = " + fg(h) + ", r = " + R.format(r));
          }
        }
      }
    }

    // (ii)
    if (!cs.trivial_omega) {
      for (auto const& g : els) {
        for (auto const& h : els) {
          for (auto const& k : els) {
            ++rep.checks;
            auto lhs = R.mul(cs.omega(g, h), cs.omega(G.mul(g, h), k));
            auto rhs = R.mul(cs.act(g, cs.omega(h, k)), cs.omega(g, G.mul(h, k)));
            if (!R.equal(lhs, rhs)) {
              fail(rep, "(ii) fails for g = " + fg(g) + ", h = " + fg(h) + ", k = " + fg(k));
            }
          }
        }
      }
    }
    return rep;
  }

  Ring crossed_product(CrossedSystem const& cs) {
    auto rep = verify_crossed_system(cs);
    if (!rep.ok()) {
      throw Error("crossed system \"" + cs.name + "\" fails: " + rep.failures.front());
    }
    return Ring(std::make_shared<CrossedProductImpl const>(cs));
  }

  Ring group_ring(Group const& G, Ring const& R) {
    return crossed_product(group_ring_system(G, R));
  }

  bool is_crossed_product(Ring const& ring) {
    return dynamic_cast<CrossedProductImpl const*>(&ring.impl()) != nullptr;
  }

  CrossedSystem const& crossed_system(Ring const& ring) {
    return impl_of(ring).system();
  }

  Element crossed_term(Ring const& cp, GroupElement const& g, Element const& r) {
    auto const& I = impl_of(cp);
    return I.make({{I.index(g), r}});
  }

  CrossedTerms const& crossed_terms(Element const& x) {
    return x.as<CrossedValue>().terms;
  }

  rings::RingHom augmentation(Ring const& RG) {
    auto const& I = impl_of(RG);
    if (!I.is_group_ring()) {
      throw Error("augmentation needs a group ring, not " + RG.name());
    }
    auto R = I.system().R;
    return rings::RingHom{RG, R,
                          [R](Element const& x) {
                            auto s = R.zero();
                            for (auto const& [g, r] : crossed_terms(x)) {
                              s = R.add(s, r);
                            }
                            return s;
                          },
                          "augmentation"};
  }

  ////////////////////////////////////////////////////////////////////////
  // Strong gradings
  ////////////////////////////////////////////////////////////////////////

  bool StrongGradingReport::ok() const {
    for (auto const& e : entries) {
      if (!e.found) {
        return false;
      }
    }
    return true;
  }

  namespace {

    // One solution of M c = t over Q (free variables 0), if consistent.
    std::optional<std::vector<Scalar>> solve(std::vector<std::vector<Scalar>> M,
                                             std::vector<Scalar>              t) {
      std::size_t rows = M.size();
      std::size_t cols = rows ? M[0].size() : 0;
      std::vector<std::size_t> pivots;
      std::size_t              r = 0;
      for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && M[p][c] == 0) {
          ++p;
        }
        if (p == rows) {
          continue;
        }
        std::swap(M[p], M[r]);
        std::swap(t[p], t[r]);
        Scalar inv = 1 / M[r][c];
        for (auto& v : M[r]) {
          v *= inv;
        }
        t[r] *= inv;
        for (std::size_t q = 0; q < rows; ++q) {
          if (q != r && M[q][c] != 0) {
            Scalar f = M[q][c];
            for (std::size_t k = c; k < cols; ++k) {
              M[q][k] -= f * M[r][k];
            }
            t[q] -= f * t[r];
          }
        }
        pivots.push_back(c);
        ++r;
      }
      for (std::size_t q = r; q < rows; ++q) {
        if (t[q] != 0) {
          return std::nullopt;
        }
      }
      std::vector<Scalar> x(cols, 0);
      for (std::size_t q = 0; q < r; ++q) {
        x[pivots[q]] = t[q];
      }
      return x;
    }

    bool sums_to_one(Ring const&                 R,
                     std::vector<Element> const& products,
                     std::vector<long> const&    c) {
      auto s = R.zero();
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0) {
          s = R.add(s, R.mul(R.from_int(c[i]), products[i]));
        }
      }
      return R.is_one(s);
    }

  }  // namespace

  StrongGradingReport strong_grading_check(SpanningData const&              data,
                                           std::vector<GroupElement> const& gs,
                                           long                             bound) {
    StrongGradingReport rep;
    auto const&         R = data.ring;
    for (auto const& g : gs) {
      StrongGradingEntry entry{g, false, {}, "none"};
      auto               left  = data.spanning(g);
      auto               right = data.spanning(data.G.inverse(g));
      std::vector<Element>                    products;
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t a = 0; a < left.size(); ++a) {
        for (std::size_t b = 0; b < right.size(); ++b) {
          products.push_back(R.mul(left[a], right[b]));
          pairs.emplace_back(a, b);
        }
      }
      std::optional<std::vector<long>> found;

      // linear solve on coordinates
      std::vector<std::optional<rings::Coordinates>> coords;
      bool have = true;
      for (auto const& p : products) {
        coords.push_back(R.coordinates(p));
        have = have && coords.back().has_value();
      }
      auto one = R.coordinates(R.one());
      if (have && one && !products.empty()) {
        std::map<std::string, std::size_t> keys;
        for (auto const& c : coords) {
          for (auto const& [k, v] : *c) {
            keys.emplace(k, 0);
          }
        }
        for (auto const& [k, v] : *one) {
          keys.emplace(k, 0);
        }
        std::size_t i = 0;
        for (auto& [k, v] : keys) {
          v = i++;
        }
        std::vector<std::vector<Scalar>> M(keys.size(), std::vector<Scalar>(products.size(), 0));
        std::vector<Scalar>              t(keys.size(), 0);
        for (std::size_t j = 0; j < coords.size(); ++j) {
          for (auto const& [k, v] : *coords[j]) {
            M[keys[k]][j] = v;
          }
        }
        for (auto const& [k, v] : *one) {
          t[keys[k]] = v;
        }
        if (auto x = solve(std::move(M), std::move(t))) {
          std::vector<long> c;
          bool              ok = true;
          for (auto const& v : *x) {
            if (v.get_den() != 1 || abs(v) > bound) {
              ok = false;
              break;
            }
            c.push_back(v.get_num().get_si());
          }
          if (ok && sums_to_one(R, products, c)) {
            found        = c;
            entry.method = "linear solve";
          }
        }
      }

      // exhaustive search
      if (!found && !products.empty() && products.size() <= 6) {
        std::vector<long> c(products.size(), -bound);
        for (;;) {
          if (sums_to_one(R, products, c)) {
            found        = c;
            entry.method = "exhaustive search";
            break;
          }
          std::size_t k = 0;
          while (k < c.size() && c[k] == bound) {
            c[k++] = -bound;
          }
          if (k == c.size()) {
            break;
          }
          ++c[k];
        }
      }

      if (found) {
        entry.found = true;
        for (std::size_t j = 0; j < found->size(); ++j) {
          if ((*found)[j] != 0) {
            entry.witness.push_back(
                {(*found)[j], left[pairs[j].first], right[pairs[j].second]});
          }
        }
      }
      rep.entries.push_back(std::move(entry));
    }
    return rep;
  }

}  // namespace ugn::graded
