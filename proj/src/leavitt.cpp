#include <algorithm>  // for all_of
#include <memory>     // for make_shared
#include <set>        // for set
#include <sstream>    // for ostringstream
#include <utility>    // for move

#include "expr.hpp"
#include "poly_text.hpp"
#include "ugn/algebras.hpp"

namespace ugn::algebras {

  bool operator<(LeavittMonomial const& x, LeavittMonomial const& y) {
    auto lx = x.alpha.size() + x.beta.size();
    auto ly = y.alpha.size() + y.beta.size();
    if (lx != ly) {
      return lx < ly;
    }
    if (x.alpha != y.alpha) {
      return x.alpha < y.alpha;
    }
    return x.beta < y.beta;
  }

  bool operator==(LeavittMonomial const& x, LeavittMonomial const& y) {
    return x.alpha == y.alpha && x.beta == y.beta;
  }

  namespace {

    struct LeavittValue : rings::PresentedValue {
      LeavittValue(std::size_t r, LeavittTerms t) : rank(r), terms(std::move(t)) {}
      std::size_t  rank;
      LeavittTerms terms;
    };

    bool has_prefix(Word const& w, Word const& p) {
      return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
    }

    Word concat(Word a, Word const& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }

    class LeavittImpl : public rings::RingImpl {
     public:
      LeavittImpl(std::size_t n, ScalarDomain S) : _n(n), _S(std::move(S)) {}

      std::size_t rank() const {
        return _n;
      }
      ScalarDomain const& scalars() const {
        return _S;
      }

      rings::RingKind kind() const override {
        return rings::RingKind::presented;
      }
      std::string name() const override {
        std::string s = "leavitt:n=" + std::to_string(_n);
        if (!(_S == ScalarDomain::integers())) {
          s += ":S=" + _S.name();
        }
        return s;
      }

      // Rewrites alpha' e_n (beta' e_n)* -> alpha' beta'* - sum_{i<n} alpha' e_i (beta' e_i)*
      // until no monomial has alpha and beta both ending in e_n.
      Element make(LeavittTerms raw) const {
        LeavittTerms out;
        std::size_t  last = _n - 1;
        while (!raw.empty()) {
          auto node = raw.extract(raw.begin());
          auto c    = _S.canonical(node.mapped());
          if (c == 0) {
            continue;
          }
          auto const& m = node.key();
          for (auto i : m.alpha) {
            if (i >= _n) {
              throw Error("generator index out of range for " + name());
            }
          }
          for (auto i : m.beta) {
            if (i >= _n) {
              throw Error("generator index out of range for " + name());
            }
          }
          if (!m.alpha.empty() && !m.beta.empty() && m.alpha.back() == last
              && m.beta.back() == last) {
            Word a(m.alpha.begin(), m.alpha.end() - 1);
            Word b(m.beta.begin(), m.beta.end() - 1);
            add_to(raw, LeavittMonomial{a, b}, c);
            for (std::size_t i = 0; i < last; ++i) {
              Word ai = a, bi = b;
              ai.push_back(i);
              bi.push_back(i);
              add_to(raw, LeavittMonomial{ai, bi}, -c);
            }
          } else {
            add_to(out, m, c);
          }
        }
        return Element(std::make_shared<LeavittValue const>(_n, std::move(out)));
      }

      void add_to(LeavittTerms& t, LeavittMonomial const& m, Scalar const& c) const {
        auto [it, fresh] = t.try_emplace(m, c);
        if (!fresh) {
          it->second = _S.add(it->second, c);
          if (it->second == 0) {
            t.erase(it);
          }
        }
      }

      static LeavittTerms const& terms(Element const& x) {
        return x.as<LeavittValue>().terms;
      }

      Element zero() const override {
        return make({});
      }
      Element one() const override {
        return make({{LeavittMonomial{}, Scalar(1)}});
      }
      Element add(Element const& x, Element const& y) const override {
        LeavittTerms t = terms(x);
        for (auto const& [m, c] : terms(y)) {
          add_to(t, m, c);
        }
        return make(std::move(t));
      }
      Element neg(Element const& x) const override {
        LeavittTerms t;
        for (auto const& [m, c] : terms(x)) {
          t.emplace(m, _S.neg(c));
        }
        return make(std::move(t));
      }
      Element mul(Element const& x, Element const& y) const override {
        LeavittTerms t;
        for (auto const& [m1, c1] : terms(x)) {
          for (auto const& [m2, c2] : terms(y)) {
            // beta* gamma
            auto const& beta  = m1.beta;
            auto const& gamma = m2.alpha;
            LeavittMonomial r;
            if (has_prefix(gamma, beta)) {
              r.alpha = concat(m1.alpha, Word(gamma.begin() + beta.size(), gamma.end()));
              r.beta  = m2.beta;
            } else if (has_prefix(beta, gamma)) {
              r.alpha = m1.alpha;
              r.beta  = concat(m2.beta, Word(beta.begin() + gamma.size(), beta.end()));
            } else {
              continue;
            }
            add_to(t, r, _S.mul(c1, c2));
          }
        }
        return make(std::move(t));
      }
      bool equal(Element const& x, Element const& y) const override {
        return terms(x) == terms(y);
      }
      Element from_integer(mpz_class const& k) const override {
        return make({{LeavittMonomial{}, Scalar(k)}});
      }
      // Only nonzero scalars of S with an inverse in S are inverted here.
      std::optional<Element> inverse(Element const& x) const override {
        auto const& t = terms(x);
        if (t.size() != 1 || !(t.begin()->first == LeavittMonomial{})) {
          return std::nullopt;
        }
        if (auto inv = _S.inverse(t.begin()->second)) {
          return make({{LeavittMonomial{}, *inv}});
        }
        return std::nullopt;
      }
      std::optional<rings::Coordinates> coordinates(Element const& x) const override {
        rings::Coordinates out;
        for (auto const& [m, c] : terms(x)) {
          out.emplace(format_monomial(m), c);
        }
        return out;
      }

      std::string format(Element const& x) const override {
        std::vector<std::pair<Scalar, std::string>> parts;
        for (auto const& [m, c] : terms(x)) {
          auto s = format_monomial(m);
          parts.emplace_back(c, s == "1" ? std::string() : s);
        }
        return detail::format_linear(parts);
      }

      Element parse(std::string_view text) const override;

     private:
      std::size_t  _n;
      ScalarDomain _S;
    };

    LeavittImpl const& impl_of(Ring const& L) {
      auto const* p = dynamic_cast<LeavittImpl const*>(&L.impl());
      if (p == nullptr) {
        throw Error("not a Leavitt algebra: " + L.name());
      }
      return *p;
    }

    Element LeavittImpl::parse(std::string_view text) const {
      Ring self(std::shared_ptr<rings::RingImpl const>(this, [](auto*) {}));
      detail::ExpressionParser p(
          self, [this](std::string_view id) -> std::optional<Element> {
            if (id.size() < 2 || id[0] != 'e') {
              return std::nullopt;
            }
            std::size_t j = 1;
            while (j < id.size() && std::isdigit(static_cast<unsigned char>(id[j]))) {
              ++j;
            }
            if (j == 1) {
              return std::nullopt;
            }
            auto i    = std::stoul(std::string(id.substr(1, j - 1)));
            auto tail = id.substr(j);
            if (i < 1 || i > _n || (tail != "" && tail != "'")) {
              return std::nullopt;
            }
            LeavittMonomial m;
            (tail.empty() ? m.alpha : m.beta).push_back(i - 1);
            return make({{m, Scalar(1)}});
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

    std::string format_word(Word const& w) {
      std::ostringstream os;
      for (std::size_t i = 0; i < w.size(); ++i) {
        os << (i ? " " : "") << "e" << w[i] + 1;
      }
      return os.str();
    }

  }  // namespace

  Ring leavitt_algebra(std::size_t n, ScalarDomain S) {
    if (n < 2) {
      throw Error("L(1,n) requires n >= 2");
    }
    return Ring(std::make_shared<LeavittImpl const>(n, std::move(S)));
  }

  bool is_leavitt(Ring const& ring) {
    return dynamic_cast<LeavittImpl const*>(&ring.impl()) != nullptr;
  }

  std::size_t leavitt_rank(Ring const& L) {
    return impl_of(L).rank();
  }

  ScalarDomain leavitt_scalars(Ring const& L) {
    return impl_of(L).scalars();
  }

  Element leavitt_generator(Ring const& L, std::size_t i, bool star) {
    auto const& I = impl_of(L);
    if (i < 1 || i > I.rank()) {
      throw Error("generator index out of range for " + L.name());
    }
    LeavittMonomial m;
    (star ? m.beta : m.alpha).push_back(i - 1);
    return I.make({{m, Scalar(1)}});
  }

  Element leavitt_monomial(Ring const&   L,
                           Word const&   alpha,
                           Word const&   beta,
                           Scalar const& c) {
    return impl_of(L).make({{LeavittMonomial{alpha, beta}, c}});
  }

  Element leavitt_element(Ring const& L, LeavittTerms const& raw) {
    return impl_of(L).make(raw);
  }

  LeavittTerms const& leavitt_terms(Element const& x) {
    return x.as<LeavittValue>().terms;
  }

  long leavitt_degree(LeavittMonomial const& m) {
    return static_cast<long>(m.alpha.size()) - static_cast<long>(m.beta.size());
  }

  std::set<long> leavitt_degrees(Element const& x) {
    std::set<long> out;
    for (auto const& [m, c] : leavitt_terms(x)) {
      out.insert(leavitt_degree(m));
    }
    return out;
  }

  std::string format_monomial(LeavittMonomial const& m) {
    if (m.alpha.empty() && m.beta.empty()) {
      return "1";
    }
    std::ostringstream os;
    os << format_word(m.alpha);
    for (std::size_t k = m.beta.size(); k-- > 0;) {
      if (os.tellp() > 0) {
        os << " ";
      }
      os << "e" << m.beta[k] + 1 << "'";
    }
    return os.str();
  }

  LeavittCertificate leavitt_rank_certificate(std::size_t n, ScalarDomain S) {
    auto             L = leavitt_algebra(n, S);
    rings::RingMatrix A(L, n, 1), B(L, 1, n);
    for (std::size_t i = 0; i < n; ++i) {
      A.set(i, 0, leavitt_generator(L, i + 1, true));
      B.set(0, i, leavitt_generator(L, i + 1, false));
    }
    auto ab = rings::mat_mul(A, B);
    auto ba = rings::mat_mul(B, A);
    auto c  = rings::make_certificate(A, B);
    auto v  = rings::verify_certificate(c);
    return LeavittCertificate{c, v, ba.at(0, 0), ab.is_identity(), L.is_one(ba.at(0, 0))};
  }

  LeavittTerms leavitt_expand_to_level(Element const& x, std::size_t level) {
    auto const&  v = x.as<LeavittValue>();
    LeavittTerms out;
    for (auto const& [m, c] : v.terms) {
      if (m.alpha.size() != m.beta.size() || m.alpha.size() > level) {
        throw Error("monomial " + format_monomial(m) + " is not in level "
                    + std::to_string(level));
      }
      for (auto const& g : words_of_length(v.rank, level - m.alpha.size())) {
        LeavittMonomial e{concat(m.alpha, g), concat(m.beta, g)};
        out[e] += c;
      }
    }
    std::erase_if(out, [](auto const& mc) { return mc.second == 0; });
    return out;
  }

  MatrixUnitReport leavitt_matrix_units(std::size_t       n,
                                        std::size_t       l,
                                        std::vector<Word> sigma,
                                        ScalarDomain      S,
                                        std::size_t       bound) {
    if (l < 1) {
      throw Error("matrix units need level l >= 1");
    }
    std::size_t size = 1;
    for (std::size_t k = 0; k < l; ++k) {
      size *= n;
      if (size > bound) {
        throw Error("n^l = " + std::to_string(n) + "^" + std::to_string(l)
                    + " exceeds the bound " + std::to_string(bound));
      }
    }
    auto words = words_of_length(n, l);
    if (sigma.empty()) {
      sigma = words;
    } else {
      auto sorted = sigma;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != words) {
        throw Error("sigma is not a bijection onto the words of length "
                    + std::to_string(l));
      }
    }
    auto L = leavitt_algebra(n, S);

    MatrixUnitReport rep;
    rep.n     = n;
    rep.l     = l;
    rep.size  = size;
    rep.sigma = sigma;
    std::vector<Element> eps(size * size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        eps[i * size + j] = leavitt_monomial(L, sigma[i], sigma[j]);
      }
    }
    auto unit_name = [&](std::size_t i, std::size_t j) {
      return "eps(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    };

    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        for (std::size_t k = 0; k < size; ++k) {
          for (std::size_t m = 0; m < size; ++m) {
            ++rep.product_instances;
            auto lhs = L.mul(eps[i * size + j], eps[k * size + m]);
            auto rhs = j == k ? eps[i * size + m] : L.zero();
            if (!L.equal(lhs, rhs)) {
              ++rep.product_failures;
              if (rep.failures.size() < 20) {
                rep.failures.push_back(unit_name(i, j) + " " + unit_name(k, m) + " = "
                                       + L.format(lhs));
              }
            }
          }
        }
      }
    }

    auto sum = L.zero();
    for (std::size_t i = 0; i < size; ++i) {
      sum = L.add(sum, eps[i * size + i]);
    }
    rep.sum_is_one = L.is_one(sum);
    if (!rep.sum_is_one) {
      rep.failures.push_back("sum of diagonal units = " + L.format(sum));
    }

    rep.degree_zero = rep.in_level_span = rep.unit_coefficient
        = rep.chain_containment             = true;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        auto const& e = eps[i * size + j];
        auto        d = leavitt_degrees(e);
        if (d != std::set<long>{0}) {
          rep.degree_zero = false;
          rep.failures.push_back(unit_name(i, j) + " is not of degree 0");
        }
        bool span = true;
        for (auto const& [m, c] : leavitt_terms(e)) {
          span = span && m.alpha.size() == m.beta.size() && m.alpha.size() <= l;
        }
        if (span) {
          auto expanded = leavitt_expand_to_level(e, l);
          for (auto const& [m, c] : expanded) {
            span = span && m.alpha.size() == l && m.beta.size() == l;
          }
          span = span && L.equal(leavitt_element(L, expanded), e);
        }
        if (!span) {
          rep.in_level_span = false;
          rep.failures.push_back(unit_name(i, j) + " is not in the level-"
                                 + std::to_string(l) + " span");
        }
        auto const& t = leavitt_terms(e);
        if (!std::any_of(t.begin(), t.end(),
                         [&](auto const& mc) { return S.is_unit(mc.second); })) {
          rep.unit_coefficient = false;
          rep.failures.push_back(unit_name(i, j) + " has no unit coefficient");
        }
        auto next = L.zero();
        for (std::size_t k = 0; k < n; ++k) {
          auto a = sigma[i], b = sigma[j];
          a.push_back(k);
          b.push_back(k);
          next = L.add(next, leavitt_monomial(L, a, b));
        }
        if (!L.equal(next, e)) {
          rep.chain_containment = false;
          rep.failures.push_back(unit_name(i, j) + " differs from its level-"
                                 + std::to_string(l + 1) + " expansion");
        }
      }
    }
    return rep;
  }

  graded::SpanningData leavitt_spanning_data(Ring const& L) {
    auto n = leavitt_rank(L);
    return graded::SpanningData{
        groups::Group::free_abelian(1), L,
        [L, n](groups::GroupElement const& g) {
          long d = g.v.at(0);
          std::vector<Element> out;
          std::size_t len = static_cast<std::size_t>(d < 0 ? -d : d);
          for (auto const& w : words_of_length(n, len)) {
            out.push_back(d >= 0 ? leavitt_monomial(L, w, {}) : leavitt_monomial(L, {}, w));
          }
          return out;
        }};
  }

}  // namespace ugn::algebras
