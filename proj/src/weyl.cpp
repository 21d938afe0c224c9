#include <algorithm>  // for find
#include <map>        // for map
#include <memory>     // for make_shared
#include <mutex>      // for mutex
#include <sstream>    // for ostringstream
#include <utility>    // for move

#include "expr.hpp"
#include "poly_text.hpp"
#include "ugn/algebras.hpp"

namespace ugn::algebras {

  bool operator<(WeylMonomial const& p, WeylMonomial const& q) {
    if (p.x.size() != q.x.size()) {
      return p.x.size() < q.x.size();
    }
    if (p.x != q.x) {
      return p.x < q.x;
    }
    return p.y < q.y;
  }

  bool operator==(WeylMonomial const& p, WeylMonomial const& q) {
    return p.x == q.x && p.y == q.y;
  }

  namespace {

    struct WeylValue : rings::PresentedValue {
      explicit WeylValue(WeylTerms t) : terms(std::move(t)) {}
      WeylTerms terms;
    };

    std::string scalar_list(std::vector<Scalar> const& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + ScalarDomain::format(v[i]);
      }
      return s;
    }

    class WeylImpl : public rings::RingImpl {
     public:
      explicit WeylImpl(WeylParameters p) : _p(std::move(p)) {
        if (_p.n < 1 || _p.a.size() != _p.n || _p.b.size() != _p.n) {
          throw Error("Weyl parameters need n >= 1 and n values each of a and b");
        }
        for (std::size_t i = 0; i < _p.n; ++i) {
          _p.a[i] = _p.S.canonical(_p.a[i]);
          _p.b[i] = _p.S.canonical(_p.b[i]);
          auto inv = _p.S.inverse(_p.a[i]);
          if (!inv) {
            throw Error("a_" + std::to_string(i + 1) + " = " + ScalarDomain::format(_p.a[i])
                        + " is not a unit of " + _p.S.name());
          }
          _a_inv.push_back(*inv);
        }
      }

      WeylParameters const& params() const {
        return _p;
      }

      rings::RingKind kind() const override {
        return rings::RingKind::presented;
      }
      std::string name() const override {
        std::string s = "weyl:n=" + std::to_string(_p.n) + ":a=" + scalar_list(_p.a)
                        + ":b=" + scalar_list(_p.b);
        if (!(_p.S == ScalarDomain::integers())) {
          s += ":S=" + _p.S.name();
        }
        return s;
      }

      void add_to(WeylTerms& t, WeylMonomial const& m, Scalar const& c) const {
        auto v = _p.S.canonical(c);
        if (v == 0) {
          return;
        }
        auto [it, fresh] = t.try_emplace(m, v);
        if (!fresh) {
          it->second = _p.S.add(it->second, v);
          if (it->second == 0) {
            t.erase(it);
          }
        }
      }

      Element make(WeylTerms raw) const {
        WeylTerms out;
        for (auto const& [m, c] : raw) {
          if (m.y < 0) {
            throw Error("negative power of y");
          }
          for (auto i : m.x) {
            if (i >= _p.n) {
              throw Error("generator index out of range for " + name());
            }
          }
          add_to(out, m, c);
        }
        return Element(std::make_shared<WeylValue const>(std::move(out)));
      }

      static WeylTerms const& terms(Element const& x) {
        return x.as<WeylValue>().terms;
      }

      // y v in the basis A: y x_i v' = a_i x_i (y v') + b_i v'.
      WeylTerms const& y_times(Word const& v) const {
        std::lock_guard lock(_cache_mutex);
        return y_times_locked(v);
      }

      WeylTerms const& y_times_locked(Word const& v) const {
        if (auto it = _y_cache.find(v); it != _y_cache.end()) {
          return it->second;
        }
        WeylTerms out;
        if (v.empty()) {
          out.emplace(WeylMonomial{{}, 1}, Scalar(1));
        } else {
          auto i = v.front();
          Word rest(v.begin() + 1, v.end());
          for (auto const& [m, c] : y_times_locked(rest)) {
            Word w{i};
            w.insert(w.end(), m.x.begin(), m.x.end());
            add_to(out, WeylMonomial{w, m.y}, _p.S.mul(_p.a[i], c));
          }
          add_to(out, WeylMonomial{rest, 0}, _p.b[i]);
        }
        return _y_cache.emplace(v, std::move(out)).first->second;
      }

      // y^p v
      WeylTerms y_power_times(long p, Word const& v) const {
        WeylTerms cur{{WeylMonomial{v, 0}, Scalar(1)}};
        for (long k = 0; k < p; ++k) {
          WeylTerms next;
          for (auto const& [m, c] : cur) {
            for (auto const& [m2, c2] : y_times(m.x)) {
              add_to(next, WeylMonomial{m2.x, m2.y + m.y}, _p.S.mul(c, c2));
            }
          }
          cur = std::move(next);
        }
        return cur;
      }

      Element zero() const override {
        return make({});
      }
      Element one() const override {
        return make({{WeylMonomial{}, Scalar(1)}});
      }
      Element add(Element const& x, Element const& y) const override {
        WeylTerms t = terms(x);
        for (auto const& [m, c] : terms(y)) {
          add_to(t, m, c);
        }
        return make(std::move(t));
      }
      Element neg(Element const& x) const override {
        WeylTerms t;
        for (auto const& [m, c] : terms(x)) {
          add_to(t, m, -c);
        }
        return make(std::move(t));
      }
      Element mul(Element const& x, Element const& y) const override {
        WeylTerms t;
        for (auto const& [m1, c1] : terms(x)) {
          for (auto const& [m2, c2] : terms(y)) {
            auto c = _p.S.mul(c1, c2);
            for (auto const& [m, d] : y_power_times(m1.y, m2.x)) {
              Word w = m1.x;
              w.insert(w.end(), m.x.begin(), m.x.end());
              add_to(t, WeylMonomial{w, m.y + m2.y}, _p.S.mul(c, d));
            }
          }
        }
        return make(std::move(t));
      }
      bool equal(Element const& x, Element const& y) const override {
        return terms(x) == terms(y);
      }
      Element from_integer(mpz_class const& k) const override {
        return make({{WeylMonomial{}, Scalar(k)}});
      }
      // Only nonzero scalars of S with an inverse in S are inverted here.
      std::optional<Element> inverse(Element const& x) const override {
        auto const& t = terms(x);
        if (t.size() != 1 || !(t.begin()->first == WeylMonomial{})) {
          return std::nullopt;
        }
        if (auto inv = _p.S.inverse(t.begin()->second)) {
          return make({{WeylMonomial{}, *inv}});
        }
        return std::nullopt;
      }
      std::optional<rings::Coordinates> coordinates(Element const& x) const override {
        rings::Coordinates out;
        for (auto const& [m, c] : terms(x)) {
          out.emplace(format_monomial(m, _p.n), c);
        }
        return out;
      }
      std::string format(Element const& x) const override {
        std::vector<std::pair<Scalar, std::string>> parts;
        for (auto const& [m, c] : terms(x)) {
          auto s = format_monomial(m, _p.n);
          parts.emplace_back(c, s == "1" ? std::string() : s);
        }
        return detail::format_linear(parts);
      }
      Element parse(std::string_view text) const override;

      // Terms y^l w (y's on the left), keyed as WeylMonomial{w, l}, using
      // x_i y = a_i^-1 y x_i - a_i^-1 b_i.
      WeylTerms left_form(Element const& x) const {
        // letters: 0..n-1 for x_i, n for y
        using Letters = std::vector<std::size_t>;
        std::map<Letters, Scalar> todo;
        for (auto const& [m, c] : terms(x)) {
          Letters w(m.x.begin(), m.x.end());
          w.insert(w.end(), static_cast<std::size_t>(m.y), _p.n);
          todo[w] += c;
        }
        WeylTerms done;
        while (!todo.empty()) {
          std::map<Letters, Scalar> next;
          for (auto const& [w, c] : todo) {
            if (_p.S.canonical(c) == 0) {
              continue;
            }
            std::size_t k = 0;
            while (k + 1 < w.size() && !(w[k] < _p.n && w[k + 1] == _p.n)) {
              ++k;
            }
            if (k + 1 >= w.size()) {
              long l = static_cast<long>(std::count(w.begin(), w.end(), _p.n));
              add_to(done, WeylMonomial{Word(w.begin() + l, w.end()), l}, c);
              continue;
            }
            auto    i = w[k];
            Letters swapped(w), dropped;
            swapped[k]     = _p.n;
            swapped[k + 1] = i;
            dropped.insert(dropped.end(), w.begin(), w.begin() + k);
            dropped.insert(dropped.end(), w.begin() + k + 2, w.end());
            next[swapped] = _p.S.add(next[swapped], _p.S.mul(_a_inv[i], c));
            next[dropped] = _p.S.add(next[dropped],
                                     _p.S.neg(_p.S.mul(_p.S.mul(_a_inv[i], _p.b[i]), c)));
          }
          todo = std::move(next);
        }
        return done;
      }

     private:
      WeylParameters                   _p;
      std::vector<Scalar>              _a_inv;
      mutable std::mutex               _cache_mutex;
      mutable std::map<Word, WeylTerms> _y_cache;
    };

    WeylImpl const& impl_of(Ring const& W) {
      auto const* p = dynamic_cast<WeylImpl const*>(&W.impl());
      if (p == nullptr) {
        throw Error("not a Weyl algebra: " + W.name());
      }
      return *p;
    }

    Element WeylImpl::parse(std::string_view text) const {
      Ring self(std::shared_ptr<rings::RingImpl const>(this, [](auto*) {}));
      detail::ExpressionParser p(self, [this](std::string_view id) -> std::optional<Element> {
        if (id == "y") {
          return make({{WeylMonomial{{}, 1}, Scalar(1)}});
        }
        if (id == "x" && _p.n == 1) {
          return make({{WeylMonomial{{0}, 0}, Scalar(1)}});
        }
        if (id.size() >= 2 && id[0] == 'x') {
          std::size_t i = 0;
          for (char c : id.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
              return std::nullopt;
            }
            i = i * 10 + static_cast<std::size_t>(c - '0');
          }
          if (i >= 1 && i <= _p.n) {
            return make({{WeylMonomial{{i - 1}, 0}, Scalar(1)}});
          }
        }
        return std::nullopt;
      });
      return p.parse(text);
    }

    std::vector<Word> words_of_length(std::size_t n, std::size_t l) {
      std::vector<Word> out{Word{}};
      for (std::size_t k = 0; k < l; ++k) {
        std::vector<Word> next;
        for (auto const& w : out) {
          for (std::size_t i = 0; i < n; ++i) {
            next.push_back(w);
            next.back().push_back(i);
          }
        }
        out = std::move(next);
      }
      return out;
    }

  }  // namespace

  Ring weyl_algebra(WeylParameters const& p) {
    return Ring(std::make_shared<WeylImpl const>(p));
  }

  bool is_weyl(Ring const& ring) {
    return dynamic_cast<WeylImpl const*>(&ring.impl()) != nullptr;
  }

  WeylParameters const& weyl_parameters(Ring const& W) {
    return impl_of(W).params();
  }

  Element weyl_x(Ring const& W, std::size_t i) {
    auto const& I = impl_of(W);
    if (i < 1 || i > I.params().n) {
      throw Error("generator index out of range for " + W.name());
    }
    return I.make({{WeylMonomial{{i - 1}, 0}, Scalar(1)}});
  }

  Element weyl_y(Ring const& W) {
    return impl_of(W).make({{WeylMonomial{{}, 1}, Scalar(1)}});
  }

  Element weyl_monomial(Ring const& W, Word const& x, long y, Scalar const& c) {
    return impl_of(W).make({{WeylMonomial{x, y}, c}});
  }

  Element weyl_element(Ring const& W, WeylTerms const& terms) {
    return impl_of(W).make(terms);
  }

  WeylTerms const& weyl_terms(Element const& x) {
    return x.as<WeylValue>().terms;
  }

  long weyl_degree(WeylMonomial const& m) {
    return static_cast<long>(m.x.size()) - m.y;
  }

  std::set<long> weyl_degrees(Element const& x) {
    std::set<long> out;
    for (auto const& [m, c] : weyl_terms(x)) {
      out.insert(weyl_degree(m));
    }
    return out;
  }

  std::string format_monomial(WeylMonomial const& m, std::size_t n) {
    if (m.x.empty() && m.y == 0) {
      return "1";
    }
    std::ostringstream os;
    for (std::size_t k = 0; k < m.x.size();) {
      std::size_t run = 1;
      while (k + run < m.x.size() && m.x[k + run] == m.x[k]) {
        ++run;
      }
      os << (k ? " " : "") << "x";
      if (n > 1) {
        os << m.x[k] + 1;
      }
      if (run > 1) {
        os << "^" << run;
      }
      k += run;
    }
    if (m.y > 0) {
      os << (m.x.empty() ? "" : " ") << "y";
      if (m.y > 1) {
        os << "^" << m.y;
      }
    }
    return os.str();
  }

  std::map<long, Element> weyl_components(Ring const& W, Element const& x) {
    std::map<long, WeylTerms> parts;
    for (auto const& [m, c] : weyl_terms(x)) {
      parts[weyl_degree(m)].emplace(m, c);
    }
    std::map<long, Element> out;
    for (auto& [d, t] : parts) {
      out.emplace(d, weyl_element(W, t));
    }
    return out;
  }

  Scalar weyl_phi0(Ring const& W, Element const& x) {
    impl_of(W);
    auto d = weyl_degrees(x);
    if (!d.empty() && d != std::set<long>{0}) {
      throw Error("phi is only defined on degree-0 elements, got " + W.format(x));
    }
    auto const& t  = weyl_terms(x);
    auto        it = t.find(WeylMonomial{});
    return it == t.end() ? Scalar(0) : it->second;
  }

  Phi0Report weyl_phi0_check(Ring const&                                     W,
                             std::vector<std::pair<Element, Element>> const& pairs) {
    auto const& S = weyl_parameters(W).S;
    Phi0Report  rep;
    rep.unital = weyl_phi0(W, W.one()) == 1;
    for (auto const& [r, s] : pairs) {
      ++rep.pairs;
      auto lhs = weyl_phi0(W, W.mul(r, s));
      auto rhs = S.mul(weyl_phi0(W, r), weyl_phi0(W, s));
      if (lhs != rhs) {
        ++rep.failures;
        if (rep.failed.size() < 20) {
          rep.failed.push_back("phi((" + W.format(r) + ")(" + W.format(s)
                               + ")) = " + ScalarDomain::format(lhs) + " but phi(r)phi(s) = "
                               + ScalarDomain::format(rhs));
        }
      }
    }
    return rep;
  }

  ComponentBasis weyl_component_basis(Ring const& W, long m, std::size_t cap) {
    auto           n = weyl_parameters(W).n;
    ComponentBasis out{m, true, {}, {}};
    if (m > 0) {
      for (auto const& w : words_of_length(n, static_cast<std::size_t>(m))) {
        out.elements.push_back(WeylMonomial{w, 0});
      }
      out.rule = "the " + std::to_string(out.elements.size()) + " x-words of length "
                 + std::to_string(m);
    } else if (m < 0) {
      out.elements.push_back(WeylMonomial{{}, -m});
      out.rule = "y^" + std::to_string(-m);
    } else {
      out.finite = false;
      out.elements.push_back(WeylMonomial{});
      for (std::size_t k = 1; k <= cap; ++k) {
        for (auto const& w : words_of_length(n, k)) {
          out.elements.push_back(WeylMonomial{w, static_cast<long>(k)});
        }
      }
      out.rule = "1 and x-words of length k times y^k, k >= 1";
    }
    return out;
  }

  std::vector<Element> weyl_right_coordinates(Ring const& W, Element const& r, long m) {
    auto const& I = impl_of(W);
    auto        n = I.params().n;
    auto        d = weyl_degrees(r);
    if (!d.empty() && d != std::set<long>{m}) {
      throw Error(W.format(r) + " is not homogeneous of degree " + std::to_string(m));
    }
    std::vector<Element> out;
    if (m >= 0) {
      auto basis = words_of_length(n, static_cast<std::size_t>(m));
      std::vector<WeylTerms> c(basis.size());
      for (auto const& [t, coef] : weyl_terms(r)) {
        Word prefix(t.x.begin(), t.x.begin() + m);
        auto i = static_cast<std::size_t>(
            std::find(basis.begin(), basis.end(), prefix) - basis.begin());
        c[i].emplace(WeylMonomial{Word(t.x.begin() + m, t.x.end()), t.y}, coef);
      }
      for (auto& t : c) {
        out.push_back(weyl_element(W, t));
      }
    } else {
      auto sum = W.zero();
      for (auto const& [t, coef] : I.left_form(r)) {
        // y^l w = y^|m| (y^(l - |m|) w)
        auto rest = W.mul(weyl_monomial(W, {}, t.y + m), weyl_monomial(W, t.x, 0, coef));
        sum       = W.add(sum, rest);
      }
      out.push_back(sum);
    }
    return out;
  }

  graded::FreeZGrading weyl_free_grading(Ring const& W) {
    auto n = weyl_parameters(W).n;
    graded::FreeZGrading g{W, {}, {}, {}, {}};
    g.rank = [n](long m) -> std::size_t {
      if (m < 0) {
        return 1;
      }
      std::size_t r = 1;
      for (long k = 0; k < m; ++k) {
        r *= n;
      }
      return r;
    };
    g.basis = [W, n](long m, std::size_t i) -> Element {
      if (m < 0) {
        return weyl_monomial(W, {}, -m);
      }
      Word w(static_cast<std::size_t>(m));
      for (long k = m; k-- > 0;) {
        w[static_cast<std::size_t>(k)] = i % n;
        i /= n;
      }
      return weyl_monomial(W, w, 0);
    };
    g.components  = [W](Element const& x) { return weyl_components(W, x); };
    g.coordinates = [W](Element const& x, long m) {
      return weyl_right_coordinates(W, x, m);
    };
    return g;
  }

}  // namespace ugn::algebras
