#ifndef UGN_CERTIFICATES_HPP_
#define UGN_CERTIFICATES_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "ugn/rings.hpp"

// Rank certificates: an m x n matrix A and an n x m matrix B with AB = I_m,
// i.e. a module epimorphism R^n -> R^m. A certificate with n < m shows that
// the ring has bounded generating number.

namespace ugn::rings {

  struct RankCertificate {
    Ring        ring;
    std::size_t n;
    std::size_t m;
    RingMatrix  A;  // m x n
    RingMatrix  B;  // n x m
  };

  // Reads n and m off the shapes; throws if the shapes do not fit together
  // or the matrices live over different rings.
  RankCertificate make_certificate(RingMatrix A, RingMatrix B);

  struct CertificateVerdict {
    enum class Kind { valid, valid_bgn, invalid };

    Kind kind;
    // 1-based position of the first entry of AB that differs from I_m.
    std::size_t row = 0;
    std::size_t col = 0;

    bool ok() const noexcept {
      return kind != Kind::invalid;
    }
    bool bgn() const noexcept {
      return kind == Kind::valid_bgn;
    }
    std::string to_string() const;
  };

  CertificateVerdict verify_certificate(RankCertificate const& c);

  // c must be a BGN certificate with m = n + 1; returns a certificate
  // R^n -> R^target by iterating (A_psi, B_psi) -> (diag(A, I) A_psi,
  // B_psi diag(B, I)).
  RankCertificate extend_certificate(RankCertificate const& c,
                                     std::size_t            target);

  // (B^t, A^t) over the opposite ring.
  RankCertificate opposite_certificate(RankCertificate const& c);

  // Certificate over M_s(R) flattened to one over R, and back.
  RankCertificate block_down_certificate(RankCertificate const& c);
  RankCertificate block_up_certificate(RankCertificate const& c,
                                       std::size_t            s);

  // Every input must be a BGN certificate with m = n + 1. With b the largest
  // n, each factor is extended to (n_i, b + 1) and padded with zero columns
  // of A (rows of B) to (b, b + 1).
  RankCertificate product_certificate(std::vector<RankCertificate> const& certs);

  // Entrywise image under a unital homomorphism; throws if phi(1) != 1 or
  // the input does not verify.
  RankCertificate hom_certificate(RankCertificate const& c, RingHom const& phi);

}  // namespace ugn::rings

#endif  // UGN_CERTIFICATES_HPP_
