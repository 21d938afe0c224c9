#ifndef UGN_TRANSLATION_HPP_
#define UGN_TRANSLATION_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "ugn/amenability.hpp"
#include "ugn/certificates.hpp"
#include "ugn/groups.hpp"
#include "ugn/rings.hpp"

// Translation rings T_G(X, R): X x X matrices over R with finite propagation.
// An element is a finite sum of terms D_f A_g, where A_g is the shift
// A_g(x, y) = [y = g^-1 x] and D_f the diagonal of a coefficient function f.
// Right translation rings use the mirrored rule A_g(x, y) = [y = x g].

namespace ugn::translation {

  using amenability::SubsetPredicate;
  using groups::ElementSet;
  using groups::Group;
  using groups::GroupElement;
  using rings::Element;
  using rings::Ring;

  // f(x) = 0 unless every guard h has h^-1 x in X (x h in X on the right
  // side); otherwise the table value at x, or the constant off the table.
  struct CoefficientFunction {
    Element                                       constant;
    std::vector<GroupElement>                     guards;  // sorted
    std::vector<std::pair<GroupElement, Element>> table;   // sorted by point

    static CoefficientFunction constant_value(Element c);
    static CoefficientFunction finite(Ring const&                                          R,
                                      std::vector<std::pair<GroupElement, Element>> entries);

    // Ignores the guards.
    Element const& raw(GroupElement const& x) const;
  };

  struct TranslationTerm {
    GroupElement        shift;
    CoefficientFunction f;
  };

  enum class Side { left, right };

  struct TranslationElement {
    Group                        G;
    SubsetPredicate              X;
    Ring                         R;
    Side                         side = Side::left;
    std::vector<TranslationTerm> terms;
  };

  TranslationElement tr_zero(Group const& G, SubsetPredicate const& X, Ring const& R,
                             Side side = Side::left);
  TranslationElement tr_identity(Group const& G, SubsetPredicate const& X, Ring const& R,
                                 Side side = Side::left);
  // D_f A_g
  TranslationElement tr_term(Group const&           G,
                             SubsetPredicate const& X,
                             Ring const&            R,
                             GroupElement const&    g,
                             CoefficientFunction    f,
                             Side                   side = Side::left);

  // Throws unless x, y are in X.
  Element tr_entry(TranslationElement const& M, GroupElement const& x, GroupElement const& y);

  TranslationElement tr_add(TranslationElement const& M, TranslationElement const& N);
  TranslationElement tr_neg(TranslationElement const& M);
  TranslationElement tr_mul(TranslationElement const& M, TranslationElement const& N);
  TranslationElement tr_transpose(TranslationElement const& M);

  // The shifts of M's terms: M(x, y) = 0 unless y = g^-1 x for one of them.
  ElementSet tr_support(TranslationElement const& M);

  // Right element over X to left element over X^-1 with M*(x^-1, y^-1) =
  // M(x, y), and back.
  TranslationElement right_translation_iso(TranslationElement const& M);
  TranslationElement right_translation_iso_inverse(TranslationElement const& M);

  ////////////////////////////////////////////////////////////////////////
  // Skew group rings of finite groups
  ////////////////////////////////////////////////////////////////////////

  constexpr std::size_t default_finite_group_bound = 12;

  struct FiniteGroupIsoReport {
    std::size_t              order = 0;
    std::size_t              pairs = 0;
    bool                     additive       = false;
    bool                     multiplicative = false;
    bool                     unital         = false;
    bool                     bijective      = false;
    bool                     action_law     = false;
    std::vector<std::string> failures;

    bool ok() const {
      return additive && multiplicative && unital && bijective && action_law;
    }
  };

  // phi : (prod_G R) * G -> M_|G|(R), f g -> D_f A_g, with (g.f)(x) = f(g^-1 x).
  FiniteGroupIsoReport finite_group_iso(Group const& G,
                                        Ring const&  R,
                                        std::size_t  bound = default_finite_group_bound);

  ////////////////////////////////////////////////////////////////////////
  // Rank collapse
  ////////////////////////////////////////////////////////////////////////

  struct CollapseReport {
    rings::RingMatrix M;  // V x W, M(x, y) = [y = alpha(x)]
    rings::RingMatrix N;  // V x W, N(x, y) = [y = beta(x)]
    bool              mmt_identity = false;
    bool              nnt_identity = false;
    bool              mnt_zero     = false;
    bool              nmt_zero     = false;
    bool              projection   = false;  // M^t M + N^t N = [y in Im alpha u Im beta]
    ElementSet        uncovered;             // W outside Im alpha u Im beta
    std::optional<std::string> witness_problem;

    bool ok() const {
      return mmt_identity && nnt_identity && mnt_zero && nmt_zero && projection;
    }
  };

  // Evaluates the identities even for unsound witnesses, so that failures
  // show up in the report; throws if alpha or beta leave W.
  CollapseReport collapse_matrices(Group const&                         G,
                                   amenability::InjectionWitness const& w,
                                   Ring const&                          R);

  ////////////////////////////////////////////////////////////////////////
  // Certificate compression
  ////////////////////////////////////////////////////////////////////////

  // A (m x n) and B (n x m) row-major over T_G(X, R).
  struct TranslationCertificate {
    std::size_t                     n;
    std::size_t                     m;
    std::vector<TranslationElement> A;
    std::vector<TranslationElement> B;
  };

  struct CompressionResult {
    rings::RankCertificate    certificate;
    rings::CertificateVerdict verdict;
    ElementSet                F_X;  // F n X
    ElementSet                U;    // KF n X
    std::size_t               window_entries = 0;
  };

  // Rows of A* are indexed (f, i) for f in F n X, columns (u, j) for u in
  // KF n X, with A*((f,i),(u,j)) = A_ij(f, u) and B*((u,j),(f,i)) = B_ji(u, f).
  // Throws when K is not symmetric or lacks 1, when a term shift lies outside
  // K, when AB = I fails on (F u KF) n X, or when n|KF n X| >= m|F n X|.
  CompressionResult compress_certificate(TranslationCertificate const& c,
                                         ElementSet const&             F,
                                         ElementSet const&             K);

}  // namespace ugn::translation

#endif  // UGN_TRANSLATION_HPP_
