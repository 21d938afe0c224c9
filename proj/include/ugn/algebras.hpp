#ifndef UGN_ALGEBRAS_HPP_
#define UGN_ALGEBRAS_HPP_

#include <cstddef>      // for size_t
#include <map>          // for map
#include <set>          // for set
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "ugn/certificates.hpp"
#include "ugn/graded.hpp"
#include "ugn/rings.hpp"

// Rewriting engines for two presented S-algebras, S one of Z, Z/m, Q:
//
//   L(1,n):  generators e_i, e_i* with e_i* e_j = delta_ij and
//            sum_i e_i e_i* = 1, Z-graded by deg e_i = 1, deg e_i* = -1;
//   Weyl:    generators x_1..x_n, y with y x_i = a_i x_i y + b_i (a_i units
//            of S), Z-graded by deg x_i = 1, deg y = -1.
//
// Elements are rings::Element handles of the rings returned by
// leavitt_algebra and weyl_algebra, always kept in normal form.

namespace ugn::algebras {

  using rings::Element;
  using rings::Ring;
  using rings::Scalar;
  using rings::ScalarDomain;

  // 0-based generator indices.
  using Word = std::vector<std::size_t>;

  ////////////////////////////////////////////////////////////////////////
  // Leavitt algebra L(1,n)
  ////////////////////////////////////////////////////////////////////////

  // alpha beta*, where beta* = e_{b_m}* ... e_{b_1}* for beta = e_{b_1}...e_{b_m}.
  // Normal forms never contain a monomial whose alpha and beta both end in e_n.
  struct LeavittMonomial {
    Word alpha;
    Word beta;
  };

  // Total length first, then alpha, then beta.
  bool operator<(LeavittMonomial const& x, LeavittMonomial const& y);
  bool operator==(LeavittMonomial const& x, LeavittMonomial const& y);

  using LeavittTerms = std::map<LeavittMonomial, Scalar>;

  Ring leavitt_algebra(std::size_t n, ScalarDomain S = ScalarDomain::integers());

  bool         is_leavitt(Ring const& ring);
  std::size_t  leavitt_rank(Ring const& L);
  ScalarDomain leavitt_scalars(Ring const& L);

  // i is 1-based; star selects e_i*.
  Element leavitt_generator(Ring const& L, std::size_t i, bool star);
  Element leavitt_monomial(Ring const& L,
                           Word const& alpha,
                           Word const& beta,
                           Scalar const& c = 1);
  // Normalises an arbitrary linear combination of monomials.
  Element leavitt_element(Ring const& L, LeavittTerms const& raw);

  LeavittTerms const& leavitt_terms(Element const& x);
  long                leavitt_degree(LeavittMonomial const& m);
  // Degrees of the monomials occurring in x.
  std::set<long> leavitt_degrees(Element const& x);

  std::string format_monomial(LeavittMonomial const& m);

  struct LeavittCertificate {
    rings::RankCertificate    certificate;  // A = (e_1*, ..., e_n*)^t, B = (e_1 ... e_n)
    rings::CertificateVerdict verdict;
    Element                   ba;
    bool                      ab_is_identity;
    bool                      ba_is_one;
  };

  LeavittCertificate leavitt_rank_certificate(
      std::size_t  n,
      ScalarDomain S = ScalarDomain::integers());

  constexpr std::size_t default_matrix_unit_bound = 64;

  struct MatrixUnitReport {
    std::size_t       n;
    std::size_t       l;
    std::size_t       size;  // n^l
    std::vector<Word> sigma;
    std::size_t       product_instances = 0;
    std::size_t       product_failures  = 0;
    bool              sum_is_one        = false;
    bool              degree_zero       = false;
    bool              in_level_span     = false;  // each eps_ij in span{ab* : |a| = |b| = l}
    bool              unit_coefficient  = false;  // Ann_S(eps_ij) = 0
    bool              chain_containment = false;  // eps_ij expands into level l + 1
    std::vector<std::string> failures;

    bool ok() const {
      return product_failures == 0 && sum_is_one && degree_zero && in_level_span
             && unit_coefficient && chain_containment;
    }
  };

  // eps_ij = sigma(i) sigma(j)*; sigma defaults to the words of length l in
  // lexicographic order. Throws if n^l exceeds the bound or sigma is not a
  // bijection onto the words of length l.
  MatrixUnitReport leavitt_matrix_units(
      std::size_t       n,
      std::size_t       l,
      std::vector<Word> sigma = {},
      ScalarDomain      S     = ScalarDomain::integers(),
      std::size_t       bound = default_matrix_unit_bound);

  // sum over words g of length (level - (|a| = |b|)) of (a g)(b g)*, left
  // unnormalised; requires every monomial of x to have |alpha| = |beta| <= level.
  LeavittTerms leavitt_expand_to_level(Element const& x, std::size_t level);

  // Homogeneous components of L as a graded ring: spanning sets of L_1 and
  // L_-1 used by the strong-grading check.
  graded::SpanningData leavitt_spanning_data(Ring const& L);

  ////////////////////////////////////////////////////////////////////////
  // Generalised Weyl algebra
  ////////////////////////////////////////////////////////////////////////

  // x_{i_1} ... x_{i_k} y^l
  struct WeylMonomial {
    Word x;
    long y = 0;
  };

  bool operator<(WeylMonomial const& p, WeylMonomial const& q);
  bool operator==(WeylMonomial const& p, WeylMonomial const& q);

  using WeylTerms = std::map<WeylMonomial, Scalar>;

  struct WeylParameters {
    std::size_t         n;
    std::vector<Scalar> a;
    std::vector<Scalar> b;
    ScalarDomain        S = ScalarDomain::integers();
  };

  // Throws if some a_i is not a unit of S.
  Ring weyl_algebra(WeylParameters const& p);

  bool                  is_weyl(Ring const& ring);
  WeylParameters const& weyl_parameters(Ring const& W);

  Element weyl_x(Ring const& W, std::size_t i);  // 1-based
  Element weyl_y(Ring const& W);
  Element weyl_monomial(Ring const&   W,
                        Word const&   x,
                        long          y,
                        Scalar const& c = 1);
  Element weyl_element(Ring const& W, WeylTerms const& terms);

  WeylTerms const& weyl_terms(Element const& x);
  long             weyl_degree(WeylMonomial const& m);
  std::set<long>   weyl_degrees(Element const& x);
  std::string      format_monomial(WeylMonomial const& m, std::size_t n);

  // Homogeneous components, keyed by degree (zero components omitted).
  std::map<long, Element> weyl_components(Ring const& W, Element const& x);

  // Coefficient of 1 in the expansion of a degree-0 element; throws if x is
  // not homogeneous of degree 0.
  Scalar weyl_phi0(Ring const& W, Element const& x);

  struct Phi0Report {
    bool        unital = false;
    std::size_t pairs  = 0;
    std::size_t failures = 0;
    std::vector<std::string> failed;

    bool ok() const {
      return unital && failures == 0;
    }
  };

  Phi0Report weyl_phi0_check(Ring const&                                  W,
                             std::vector<std::pair<Element, Element>> const& pairs);

  struct ComponentBasis {
    long                      m;
    bool                      finite;
    std::vector<WeylMonomial> elements;  // for m = 0: the elements with k <= cap
    std::string               rule;
  };

  // Free basis of R_m as a right R_0-module (m != 0), or the S-basis
  // {x-word of length k times y^k : k > 0} u {1} of R_0 (m = 0).
  ComponentBasis weyl_component_basis(Ring const& W, long m, std::size_t cap = 2);

  // For r homogeneous of degree m: the c_i in R_0 with r = sum_i b_i c_i over
  // the basis b_i of R_m (x-words of length m in lexicographic order for
  // m >= 0, y^|m| for m < 0).
  std::vector<Element> weyl_right_coordinates(Ring const& W, Element const& r, long m);

  // The free right R_0-module structure consumed by graded::psi_embedding_check.
  graded::FreeZGrading weyl_free_grading(Ring const& W);

}  // namespace ugn::algebras

#endif  // UGN_ALGEBRAS_HPP_
