#include "ugn/certificates.hpp"

#include <algorithm>  // for max_element

namespace ugn::rings {

  namespace {

    void require_valid(RankCertificate const& c, char const* what) {
      auto v = verify_certificate(c);
      if (!v.ok()) {
        throw Error(std::string(what) + ": input certificate is invalid ("
                    + v.to_string() + ")");
      }
    }

    // diag(M, I_k)
    RingMatrix pad_identity(RingMatrix const& m, std::size_t k) {
      RingMatrix out(m.ring(), m.rows() + k, m.cols() + k);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          out.set(i, j, m.at(i, j));
        }
      }
      for (std::size_t i = 0; i < k; ++i) {
        out.set(m.rows() + i, m.cols() + i, m.ring().one());
      }
      return out;
    }

    RingMatrix resize(RingMatrix const& m, std::size_t rows, std::size_t cols) {
      RingMatrix out(m.ring(), rows, cols);
      for (std::size_t i = 0; i < std::min(rows, m.rows()); ++i) {
        for (std::size_t j = 0; j < std::min(cols, m.cols()); ++j) {
          out.set(i, j, m.at(i, j));
        }
      }
      return out;
    }

  }  // namespace

  RankCertificate make_certificate(RingMatrix A, RingMatrix B) {
    if (A.ring() != B.ring()) {
      throw Error("certificate matrices live over different rings");
    }
    if (A.rows() != B.cols() || A.cols() != B.rows()) {
      throw Error("certificate shapes do not match: A is "
                  + std::to_string(A.rows()) + "x" + std::to_string(A.cols())
                  + ", B is " + std::to_string(B.rows()) + "x"
                  + std::to_string(B.cols()));
    }
    if (A.rows() == 0 || A.cols() == 0) {
      throw Error("certificate matrices must be nonempty");
    }
    Ring        r = A.ring();
    std::size_t n = A.cols();
    std::size_t m = A.rows();
    return RankCertificate{r, n, m, std::move(A), std::move(B)};
  }

  std::string CertificateVerdict::to_string() const {
    switch (kind) {
      case Kind::valid:
        return "Valid";
      case Kind::valid_bgn:
        return "ValidBGN";
      case Kind::invalid:
        return "Invalid at (" + std::to_string(row) + "," + std::to_string(col)
               + ")";
    }
    return "?";
  }

  CertificateVerdict verify_certificate(RankCertificate const& c) {
    if (c.A.rows() != c.m || c.A.cols() != c.n || c.B.rows() != c.n
        || c.B.cols() != c.m) {
      throw Error("certificate matrices do not have shapes m x n and n x m");
    }
    auto const& r  = c.ring;
    auto        AB = mat_mul(c.A.reinterpret(r), c.B.reinterpret(r));
    for (std::size_t i = 0; i < c.m; ++i) {
      for (std::size_t j = 0; j < c.m; ++j) {
        bool ok = i == j ? r.is_one(AB.at(i, j)) : r.is_zero(AB.at(i, j));
        if (!ok) {
          return {CertificateVerdict::Kind::invalid, i + 1, j + 1};
        }
      }
    }
    return {c.n < c.m ? CertificateVerdict::Kind::valid_bgn
                      : CertificateVerdict::Kind::valid};
  }

  RankCertificate extend_certificate(RankCertificate const& c,
                                     std::size_t            target) {
    auto v = verify_certificate(c);
    if (!v.bgn() || c.m != c.n + 1) {
      throw Error("extension needs a BGN certificate with m = n + 1");
    }
    if (target <= c.n) {
      throw Error("target rank must exceed n = " + std::to_string(c.n));
    }
    RingMatrix A = c.A;
    RingMatrix B = c.B;
    // A, B currently witness R^n -> R^(n+k-1).
    for (std::size_t k = 2; c.n + k <= target; ++k) {
      A = mat_mul(pad_identity(c.A, k - 1), A);
      B = mat_mul(B, pad_identity(c.B, k - 1));
    }
    auto out = make_certificate(std::move(A), std::move(B));
    if (!verify_certificate(out).ok()) {
      throw Error("extended certificate failed verification");
    }
    return out;
  }

  RankCertificate opposite_certificate(RankCertificate const& c) {
    require_valid(c, "opposite");
    Ring op  = opposite(c.ring);
    auto out = make_certificate(c.B.transpose().reinterpret(op),
                                c.A.transpose().reinterpret(op));
    if (!verify_certificate(out).ok()) {
      throw Error("opposite certificate failed verification");
    }
    return out;
  }

  namespace {

    RingMatrix flatten(RingMatrix const& m, Ring const& base, std::size_t s) {
      RingMatrix out(base, m.rows() * s, m.cols() * s);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          auto const& blk = m.at(i, j).parts();
          for (std::size_t a = 0; a < s; ++a) {
            for (std::size_t b = 0; b < s; ++b) {
              out.set(i * s + a, j * s + b, blk[a * s + b]);
            }
          }
        }
      }
      return out;
    }

    RingMatrix gather(RingMatrix const& m, Ring const& mat, std::size_t s) {
      RingMatrix out(mat, m.rows() / s, m.cols() / s);
      for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < out.cols(); ++j) {
          Element::Parts blk;
          blk.reserve(s * s);
          for (std::size_t a = 0; a < s; ++a) {
            for (std::size_t b = 0; b < s; ++b) {
              blk.push_back(m.at(i * s + a, j * s + b));
            }
          }
          out.set(i, j, Element(std::move(blk)));
        }
      }
      return out;
    }

  }  // namespace

  RankCertificate block_down_certificate(RankCertificate const& c) {
    auto parts = matrix_parts(c.ring);
    if (!parts) {
      throw Error(c.ring.name() + " is not a matrix ring");
    }
    require_valid(c, "block-down");
    auto out = make_certificate(flatten(c.A, parts->base, parts->size),
                                flatten(c.B, parts->base, parts->size));
    if (!verify_certificate(out).ok()) {
      throw Error("flattened certificate failed verification");
    }
    return out;
  }

  RankCertificate block_up_certificate(RankCertificate const& c,
                                       std::size_t            s) {
    if (s == 0) {
      throw Error("block size must be positive");
    }
    if (c.n % s != 0 || c.m % s != 0) {
      throw Error("certificate dimensions " + std::to_string(c.m) + "x"
                  + std::to_string(c.n) + " are not divisible by "
                  + std::to_string(s));
    }
    require_valid(c, "block-up");
    if (s == 1) {
      return c;
    }
    Ring mat = matrix_ring(c.ring, s);
    auto out = make_certificate(gather(c.A, mat, s), gather(c.B, mat, s));
    if (!verify_certificate(out).ok()) {
      throw Error("blocked certificate failed verification");
    }
    return out;
  }

  RankCertificate product_certificate(std::vector<RankCertificate> const& certs) {
    if (certs.empty()) {
      throw Error("product of no certificates");
    }
    for (std::size_t i = 0; i < certs.size(); ++i) {
      auto v = verify_certificate(certs[i]);
      if (!v.bgn() || certs[i].m != certs[i].n + 1) {
        throw Error("factor " + std::to_string(i + 1) + " over "
                    + certs[i].ring.name()
                    + " is not a BGN certificate with m = n + 1");
      }
    }
    if (certs.size() == 1) {
      return certs.front();
    }
    std::size_t b = std::max_element(certs.begin(),
                                     certs.end(),
                                     [](auto const& x, auto const& y) {
                                       return x.n < y.n;
                                     })
                        ->n;
    std::vector<Ring>       rings;
    std::vector<RingMatrix> As, Bs;
    for (auto const& c : certs) {
      auto e = c.m == b + 1 ? c : extend_certificate(c, b + 1);
      rings.push_back(c.ring);
      As.push_back(resize(e.A, b + 1, b));
      Bs.push_back(resize(e.B, b, b + 1));
    }
    Ring       prod = product(rings);
    RingMatrix A(prod, b + 1, b);
    RingMatrix B(prod, b, b + 1);
    for (std::size_t i = 0; i < b + 1; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        Element::Parts pa, pb;
        for (std::size_t t = 0; t < certs.size(); ++t) {
          pa.push_back(As[t].at(i, j));
          pb.push_back(Bs[t].at(j, i));
        }
        A.set(i, j, Element(std::move(pa)));
        B.set(j, i, Element(std::move(pb)));
      }
    }
    auto out = make_certificate(std::move(A), std::move(B));
    if (!verify_certificate(out).bgn()) {
      throw Error("product certificate failed verification");
    }
    return out;
  }

  RankCertificate hom_certificate(RankCertificate const& c, RingHom const& phi) {
    if (phi.source != c.ring) {
      throw Error("homomorphism source " + phi.source.name()
                  + " does not match certificate ring " + c.ring.name());
    }
    if (!phi.target.is_one(phi(c.ring.one()))) {
      throw Error("homomorphism " + phi.name + " is not unital");
    }
    require_valid(c, "hom");
    auto image = [&](RingMatrix const& m) {
      std::vector<Element> e;
      e.reserve(m.entries().size());
      for (auto const& x : m.entries()) {
        e.push_back(phi(x));
      }
      return RingMatrix(phi.target, m.rows(), m.cols(), std::move(e));
    };
    auto out = make_certificate(image(c.A), image(c.B));
    if (!verify_certificate(out).ok()) {
      throw Error("image certificate failed verification");
    }
    return out;
  }

}  // namespace ugn::rings
