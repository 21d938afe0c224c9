#include <map>     // for map
#include <tuple>   // for tuple

#include "ugn/graded.hpp"

namespace ugn::graded {

  long rho(long n, long k) {
    return ((k - 1) % n + n) % n + 1;
  }

  namespace {

    long floor_div(long a, long b) {
      long q = a / b;
      return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
    }

    // Matrices of left multiplication R_y -> R_x, cached per element.
    class PsiEvaluator {
     public:
      explicit PsiEvaluator(FreeZGrading const& R) : _R(R) {
        _zero = _R.ring.zero();
      }

      long rank(long x) {
        auto it = _ranks.find(x);
        if (it == _ranks.end()) {
          it = _ranks.emplace(x, static_cast<long>(_R.rank(x))).first;
        }
        return it->second;
      }

      std::map<long, Element> const& components(std::size_t id, Element const& r) {
        auto it = _components.find(id);
        if (it == _components.end()) {
          it = _components.emplace(id, _R.components(r)).first;
        }
        return it->second;
      }

      // M(a, b) = a-th coordinate of r_{x-y} basis(y, b) in R_x; empty when
      // r has no component of degree x - y.
      std::vector<std::vector<Element>> const& block(std::size_t    id,
                                                     Element const& r,
                                                     long           x,
                                                     long           y) {
        auto key = std::make_tuple(id, x, y);
        auto it  = _blocks.find(key);
        if (it != _blocks.end()) {
          return it->second;
        }
        std::vector<std::vector<Element>> M;
        auto const&                       comps = components(id, r);
        auto                              c     = comps.find(x - y);
        if (c != comps.end()) {
          long nx = rank(x), ny = rank(y);
          M.assign(static_cast<std::size_t>(nx), std::vector<Element>(static_cast<std::size_t>(ny)));
          for (long b = 0; b < ny; ++b) {
            auto v = _R.ring.mul(c->second, _R.basis(y, static_cast<std::size_t>(b)));
            auto coords = _R.ring.is_zero(v) ? std::vector<Element>() : _R.coordinates(v, x);
            for (long a = 0; a < nx; ++a) {
              M[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                  = coords.empty() ? _zero : coords.at(static_cast<std::size_t>(a));
            }
          }
        }
        return _blocks.emplace(key, std::move(M)).first->second;
      }

      Element entry(std::size_t id, Element const& r, long x, long y, long i, long j) {
        auto const& M = block(id, r, x, y);
        if (M.empty()) {
          return _zero;
        }
        long nx = rank(x), ny = rank(y);
        long k  = floor_div(i - 1, nx);
        if (j < k * ny + 1 || j > (k + 1) * ny) {
          return _zero;
        }
        return M[static_cast<std::size_t>(rho(nx, i) - 1)][static_cast<std::size_t>(rho(ny, j) - 1)];
      }

      // (Psi(r) Psi(s))(x, y)(i, j), summing over all z and t that can
      // contribute.
      Element product_entry(std::size_t    ir,
                            Element const& r,
                            std::size_t    is,
                            Element const& s,
                            long           x,
                            long           y,
                            long           i,
                            long           j) {
        auto const& ring = _R.ring;
        auto        sum  = _zero;
        long        nx   = rank(x);
        long        k    = floor_div(i - 1, nx);
        for (auto const& [d, comp] : components(ir, r)) {
          long z  = x - d;
          long nz = rank(z);
          for (long t = k * nz + 1; t <= (k + 1) * nz; ++t) {
            auto a = entry(ir, r, x, z, i, t);
            if (ring.is_zero(a)) {
              continue;
            }
            auto b = entry(is, s, z, y, t, j);
            if (ring.is_zero(b)) {
              continue;
            }
            sum = ring.add(sum, ring.mul(a, b));
          }
        }
        return sum;
      }

     private:
      FreeZGrading const&                                          _R;
      Element                                                      _zero;
      std::map<long, long>                                         _ranks;
      std::map<std::size_t, std::map<long, Element>>               _components;
      std::map<std::tuple<std::size_t, long, long>, std::vector<std::vector<Element>>> _blocks;
    };

  }  // namespace

  Element psi_entry(FreeZGrading const& R, Element const& r, long x, long y, long i, long j) {
    PsiEvaluator ev(R);
    return ev.entry(0, r, x, y, i, j);
  }

  PsiReport psi_embedding_check(FreeZGrading const&         R,
                                std::vector<Element> const& samples,
                                std::pair<long, long>       degrees,
                                std::pair<long, long>       indices) {
    PsiReport rep;
    rep.degrees = degrees;
    rep.indices = indices;
    auto const& ring = R.ring;
    PsiEvaluator ev(R);

    // ids: 0 = one, 1..s = samples, then sums and products
    std::vector<Element> els{ring.one()};
    els.insert(els.end(), samples.begin(), samples.end());
    auto s = samples.size();
    std::vector<std::size_t> sum_id(s * s), prod_id(s * s);
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = 0; b < s; ++b) {
        sum_id[a * s + b] = els.size();
        els.push_back(ring.add(samples[a], samples[b]));
        prod_id[a * s + b] = els.size();
        els.push_back(ring.mul(samples[a], samples[b]));
      }
    }

    auto note = [&](std::string what, long x, long y, long i, long j) {
      if (rep.failures.size() < 20) {
        rep.failures.push_back(what + " at (" + std::to_string(x) + "," + std::to_string(y)
                               + ")(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    };

    rep.unital = rep.additive = rep.multiplicative = true;
    for (long x = degrees.first; x <= degrees.second; ++x) {
      for (long y = degrees.first; y <= degrees.second; ++y) {
        for (long i = indices.first; i <= indices.second; ++i) {
          for (long j = indices.first; j <= indices.second; ++j) {
            ++rep.entries_checked;
            auto one = ev.entry(0, els[0], x, y, i, j);
            bool id  = x == y && i == j;
            if (!ring.equal(one, id ? ring.one() : ring.zero())) {
              rep.unital = false;
              note("Psi(theta(1)) is not the identity", x, y, i, j);
            }
            for (std::size_t a = 0; a < s; ++a) {
              for (std::size_t b = 0; b < s; ++b) {
                auto ea = ev.entry(a + 1, els[a + 1], x, y, i, j);
                auto eb = ev.entry(b + 1, els[b + 1], x, y, i, j);
                auto es = ev.entry(sum_id[a * s + b], els[sum_id[a * s + b]], x, y, i, j);
                if (!ring.equal(es, ring.add(ea, eb))) {
                  rep.additive = false;
                  note("additivity fails for samples " + std::to_string(a + 1) + ", "
                           + std::to_string(b + 1),
                       x, y, i, j);
                }
                auto lhs = ev.product_entry(a + 1, els[a + 1], b + 1, els[b + 1], x, y, i, j);
                auto rhs = ev.entry(prod_id[a * s + b], els[prod_id[a * s + b]], x, y, i, j);
                if (!ring.equal(lhs, rhs)) {
                  rep.multiplicative = false;
                  note("multiplicativity fails for samples " + std::to_string(a + 1) + ", "
                           + std::to_string(b + 1),
                       x, y, i, j);
                }
              }
            }
          }
        }
      }
    }
    return rep;
  }

}  // namespace ugn::graded
