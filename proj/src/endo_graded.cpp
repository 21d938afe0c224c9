#include <algorithm>  // for find
#include <set>        // for set

#include "ugn/graded.hpp"

namespace ugn::graded {

  namespace {

    Element unit(EndoGradedRing const& E, std::size_t r, std::size_t c) {
      Element::Parts p(E.size * E.size, E.S.zero());
      p[r * E.size + c] = E.S.one();
      return Element(std::move(p));
    }

    std::size_t block_of(EndoGradedRing const& E, std::size_t row) {
      std::size_t b = 0;
      while (b + 1 < E.offsets.size() && E.offsets[b + 1] <= row) {
        ++b;
      }
      return b;
    }

  }  // namespace

  std::size_t EndoGradedRing::index_of(GroupElement const& g) const {
    auto it = std::find(elements.begin(), elements.end(), g);
    if (it == elements.end()) {
      throw Error("element not in " + G.name());
    }
    return static_cast<std::size_t>(it - elements.begin());
  }

  std::vector<Element> EndoGradedRing::component_basis(GroupElement const& g) const {
    std::vector<Element> out;
    auto                 gi = G.inverse(g);
    for (std::size_t x = 0; x < elements.size(); ++x) {
      auto y = index_of(G.mul(gi, elements[x]));
      for (std::size_t a = 0; a < ranks[x]; ++a) {
        for (std::size_t b = 0; b < ranks[y]; ++b) {
          out.push_back(unit(*this, offsets[x] + a, offsets[y] + b));
        }
      }
    }
    return out;
  }

  std::optional<GroupElement> EndoGradedRing::degree(Element const& x) const {
    auto const&                 p = x.parts();
    std::optional<GroupElement> d;
    for (std::size_t r = 0; r < size; ++r) {
      for (std::size_t c = 0; c < size; ++c) {
        if (S.is_zero(p[r * size + c])) {
          continue;
        }
        auto g = G.mul(elements[block_of(*this, r)], G.inverse(elements[block_of(*this, c)]));
        if (d && *d != g) {
          return std::nullopt;
        }
        d = g;
      }
    }
    return d;
  }

  std::pair<EndoGradedRing, EndoGradedReport>
  endo_graded_construction(Ring const& S, Group const& G, long n, long l) {
    auto order = G.order();
    if (!order) {
      throw Error("the grading group must be finite");
    }
    auto k = static_cast<long>(*order);
    if (k < 2) {
      throw Error("the grading group must have at least two elements");
    }
    if (n < 1 || l < 1) {
      throw Error("n and l must be positive");
    }
    long p = n * l - k + 1;
    if (p < 1) {
      throw Error("nl = " + std::to_string(n * l) + " must exceed |G| - 1 = "
                  + std::to_string(k - 1));
    }

    auto           size = static_cast<std::size_t>(n * l);
    EndoGradedRing E{S, G, groups::elements(G), {}, {}, size, rings::matrix_ring(S, size)};
    std::size_t    off = 0;
    for (std::size_t i = 0; i < E.elements.size(); ++i) {
      E.ranks.push_back(i == 0 ? static_cast<std::size_t>(p) : 1);
      E.offsets.push_back(off);
      off += E.ranks.back();
    }

    EndoGradedReport rep;
    rep.k         = static_cast<std::size_t>(k);
    rep.p         = p;
    auto const& T = E.T;

    // matrix units of M_size(S)
    rep.matrix_units = true;
    auto sum         = T.zero();
    for (std::size_t a = 0; a < size; ++a) {
      sum = T.add(sum, unit(E, a, a));
      for (std::size_t b = 0; b < size; ++b) {
        for (std::size_t c = 0; c < size; ++c) {
          for (std::size_t d = 0; d < size; ++d) {
            auto lhs = T.mul(unit(E, a, b), unit(E, c, d));
            auto rhs = b == c ? unit(E, a, d) : T.zero();
            if (!T.equal(lhs, rhs)) {
              rep.matrix_units = false;
            }
          }
        }
      }
    }
    if (!T.is_one(sum)) {
      rep.matrix_units = false;
    }
    std::size_t total = 0;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto const& g : E.elements) {
      for (auto const& u : E.component_basis(g)) {
        ++total;
        auto const& parts = u.parts();
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (!S.is_zero(parts[i])) {
            seen.emplace(i / size, i % size);
          }
        }
      }
    }
    if (total != size * size || seen.size() != size * size) {
      rep.matrix_units = false;
      rep.failures.push_back("the components T_g do not partition the matrix units");
    }
    if (!rep.matrix_units && rep.failures.empty()) {
      rep.failures.push_back("matrix unit relations fail in M_" + std::to_string(size));
    }

    // T_g T_h in T_gh
    rep.grading_closure = true;
    for (auto const& g : E.elements) {
      auto bg = E.component_basis(g);
      for (auto const& h : E.elements) {
        auto gh = G.mul(g, h);
        for (auto const& u : bg) {
          for (auto const& v : E.component_basis(h)) {
            auto w = T.mul(u, v);
            if (T.is_zero(w)) {
              continue;
            }
            auto d = E.degree(w);
            if (!d || *d != gh) {
              rep.grading_closure = false;
              rep.failures.push_back("T_" + G.format(g) + " T_" + G.format(h)
                                     + " leaves T_" + G.format(gh));
            }
          }
        }
      }
    }

    SpanningData data{G, T, [&E](GroupElement const& g) { return E.component_basis(g); }};
    rep.strong = strong_grading_check(data, E.elements);
    for (auto const& e : rep.strong.entries) {
      if (!e.found) {
        rep.failures.push_back("no strong-grading witness for " + G.format(e.g));
      }
    }

    // T_1 -> M_p(S) x S^(k-1) by diagonal blocks
    std::vector<Ring> factors{rings::matrix_ring(S, static_cast<std::size_t>(p))};
    for (long i = 1; i < k; ++i) {
      factors.push_back(S);
    }
    auto P   = rings::product(factors);
    auto phi = [&](Element const& x) {
      auto const&    a = x.parts();
      Element::Parts out;
      Element::Parts top;
      auto           ps = static_cast<std::size_t>(p);
      for (std::size_t i = 0; i < ps; ++i) {
        for (std::size_t j = 0; j < ps; ++j) {
          top.push_back(a[i * size + j]);
        }
      }
      out.emplace_back(std::move(top));
      for (std::size_t b = 1; b < E.elements.size(); ++b) {
        auto r = E.offsets[b];
        out.push_back(a[r * size + r]);
      }
      return Element(std::move(out));
    };
    auto basis1             = E.component_basis(G.identity());
    rep.base_decomposition  = basis1.size() == static_cast<std::size_t>(p * p + k - 1);
    rep.base_decomposition  = rep.base_decomposition && P.is_one(phi(T.one()));
    for (std::size_t i = 0; i < basis1.size() && rep.base_decomposition; ++i) {
      for (std::size_t j = 0; j < basis1.size(); ++j) {
        auto fi = phi(basis1[i]);
        auto fj = phi(basis1[j]);
        if (i != j && P.equal(fi, fj)) {
          rep.base_decomposition = false;
        }
        if (!P.equal(phi(T.mul(basis1[i], basis1[j])), P.mul(fi, fj))) {
          rep.base_decomposition = false;
        }
      }
    }
    if (!rep.base_decomposition) {
      rep.failures.push_back("T_1 is not the block product M_" + std::to_string(p)
                             + "(S) x S^" + std::to_string(k - 1));
    }
    return {std::move(E), std::move(rep)};
  }

}  // namespace ugn::graded
