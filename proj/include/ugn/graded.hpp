#ifndef UGN_GRADED_HPP_
#define UGN_GRADED_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <map>         // for map
#include <optional>    // for optional
#include <string>      // for string
#include <utility>     // for pair
#include <vector>      // for vector

#include "ugn/groups.hpp"
#include "ugn/rings.hpp"

// Group-graded rings: crossed systems and crossed products over finite
// groups, group rings and their augmentation, strong-grading witnesses, the
// G x G block endomorphism ring graded by block support, and the block
// embedding of a freely Z-graded ring into translation matrices.

namespace ugn::graded {

  using groups::Group;
  using groups::GroupElement;
  using rings::Element;
  using rings::Ring;
  using rings::Scalar;

  ////////////////////////////////////////////////////////////////////////
  // Crossed systems
  ////////////////////////////////////////////////////////////////////////

  // g . r = act(g, r); act_inverse(g, .) undoes act(g, .). The conditions
  // involving ring elements are checked on `samples`.
  struct CrossedSystem {
    Group                                                         G;
    Ring                                                          R;
    std::function<Element(GroupElement const&, Element const&)>      act;
    std::function<Element(GroupElement const&, Element const&)>      act_inverse;
    std::function<Element(GroupElement const&, GroupElement const&)> omega;
    std::vector<Element>                                          samples;
    std::string                                                   name;
    bool trivial_action = false;
    bool trivial_omega  = false;
  };

  // omega = 1
  CrossedSystem skew_system(
      Group const&                                                 G,
      Ring const&                                                  R,
      std::function<Element(GroupElement const&, Element const&)> act,
      std::function<Element(GroupElement const&, Element const&)> act_inverse,
      std::vector<Element>                                         samples,
      std::string                                                  name);
  // trivial action
  CrossedSystem twisted_system(
      Group const&                                                     G,
      Ring const&                                                      R,
      std::function<Element(GroupElement const&, GroupElement const&)> omega,
      std::vector<Element>                                             samples,
      std::string                                                      name);
  CrossedSystem group_ring_system(Group const&         G,
                                  Ring const&          R,
                                  std::vector<Element> samples = {});

  struct CrossedSystemReport {
    std::size_t              checks = 0;
    std::vector<std::string> failures;

    bool ok() const {
      return failures.empty();
    }
  };

  // (i) g.(h.r) omega(g,h) = omega(g,h) ((gh).r) for sampled r;
  // (ii) omega(g,h) omega(gh,k) = (g.omega(h,k)) omega(g,hk) for all triples;
  // (iii) omega(g,1) = omega(1,g) = 1; omega values are units; act(g, .) is
  // an additive, multiplicative bijection on samples; for a trivial action,
  // omega values commute with the samples.
  CrossedSystemReport verify_crossed_system(CrossedSystem const& cs);

  // Formal sums r_g g, sorted by the ball order of g, zero terms dropped.
  using CrossedTerms = std::vector<std::pair<GroupElement, Element>>;

  // Throws unless verify_crossed_system passes. Text form "(r)[g] + (s)[h]".
  Ring crossed_product(CrossedSystem const& cs);
  Ring group_ring(Group const& G, Ring const& R);

  bool                 is_crossed_product(Ring const& ring);
  CrossedSystem const& crossed_system(Ring const& ring);
  Element             crossed_term(Ring const& cp, GroupElement const& g, Element const& r);
  CrossedTerms const& crossed_terms(Element const& x);

  // sum_g r_g; throws unless the ring is a group ring.
  rings::RingHom augmentation(Ring const& group_ring);

  ////////////////////////////////////////////////////////////////////////
  // Strong gradings
  ////////////////////////////////////////////////////////////////////////

  // A G-graded ring with a finite spanning set (over its scalars) for each
  // homogeneous component that is to be tested.
  struct SpanningData {
    Group                                                   G;
    Ring                                                    ring;
    std::function<std::vector<Element>(GroupElement const&)> spanning;
  };

  struct StrongGradingWitness {
    long    coefficient;
    Element left;   // in R_g
    Element right;  // in R_{g^-1}
  };

  struct StrongGradingEntry {
    GroupElement                      g;
    bool                              found = false;
    std::vector<StrongGradingWitness> witness;
    std::string                       method;
  };

  struct StrongGradingReport {
    std::vector<StrongGradingEntry> entries;

    bool ok() const;
  };

  constexpr long default_coefficient_bound = 3;

  // For each g, looks for 1 = sum c a b with a, b from the spanning sets of
  // R_g and R_{g^-1} and integers |c| <= bound: first by solving the linear
  // system on ring coordinates over Q, then by exhaustive search when there
  // are at most six products. Every witness is re-checked in the ring.
  StrongGradingReport strong_grading_check(SpanningData const&              data,
                                           std::vector<GroupElement> const& gs,
                                           long bound = default_coefficient_bound);

  ////////////////////////////////////////////////////////////////////////
  // End_S(A) for A = sum_g A_g, graded by block support
  ////////////////////////////////////////////////////////////////////////

  struct EndoGradedRing {
    Ring                      S;
    Group                     G;
    std::vector<GroupElement> elements;  // ball order, identity first
    std::vector<std::size_t>  ranks;     // rank A_g, in the order of elements
    std::vector<std::size_t>  offsets;   // first row of block g
    std::size_t               size;      // sum of ranks
    Ring                      T;         // M_size(S)

    std::size_t index_of(GroupElement const& g) const;
    // Matrix units E_{(x,a),(g^-1 x, b)} spanning T_g.
    std::vector<Element> component_basis(GroupElement const& g) const;
    // The g with x in T_g, if x is homogeneous and nonzero.
    std::optional<GroupElement> degree(Element const& x) const;
  };

  struct EndoGradedReport {
    std::size_t              k = 0;
    long                     p = 0;
    bool                     matrix_units       = false;
    bool                     grading_closure    = false;
    bool                     base_decomposition = false;
    StrongGradingReport      strong;
    std::vector<std::string> failures;

    bool ok() const {
      return matrix_units && grading_closure && base_decomposition && strong.ok();
    }
  };

  // k = |G| >= 2, p = nl - k + 1 >= 1, rank A_1 = p and rank A_g = 1
  // otherwise. Checks that the matrix units of T = M_{nl}(S) multiply
  // correctly and sum to 1, that T_g T_h lies in T_gh, that T is strongly
  // graded, and that taking diagonal blocks is a ring isomorphism
  // T_1 -> M_p(S) x S x ... x S.
  std::pair<EndoGradedRing, EndoGradedReport>
  endo_graded_construction(Ring const& S, Group const& G, long n, long l);

  ////////////////////////////////////////////////////////////////////////
  // Block embedding of a freely Z-graded ring
  ////////////////////////////////////////////////////////////////////////

  // R = sum_m R_m with each R_m a free right R_0-module of finite rank.
  struct FreeZGrading {
    Ring                                            ring;
    std::function<std::size_t(long)>                rank;
    std::function<Element(long, std::size_t)>       basis;  // 0-based index
    std::function<std::map<long, Element>(Element const&)> components;
    // c_0..c_{rank-1} in R_0 with r = sum_i basis(m, i) c_i, r in R_m.
    std::function<std::vector<Element>(Element const&, long)> coordinates;
  };

  // 1 <= rho_n(k) <= n, rho_n(k) = k mod n.
  long rho(long n, long k);

  // Entry (i, j) of Psi(theta(r))(x, y): the block-diagonal spreading of the
  // matrix of left multiplication by the degree x - y part of r, R_y -> R_x.
  Element psi_entry(FreeZGrading const& R,
                    Element const&      r,
                    long                x,
                    long                y,
                    long                i,
                    long                j);

  struct PsiReport {
    std::pair<long, long>    degrees;
    std::pair<long, long>    indices;
    std::size_t              entries_checked = 0;
    bool                     unital          = false;
    bool                     additive        = false;
    bool                     multiplicative  = false;
    std::vector<std::string> failures;

    bool ok() const {
      return unital && additive && multiplicative;
    }
  };

  // Compares Psi(theta(1)) with the identity, Psi(theta(r + s)) with the sum
  // and Psi(theta(r)) Psi(theta(s)) with Psi(theta(rs)) for all sample pairs,
  // on degrees x, y and indices i, j in the given windows. Inner sums over
  // degrees and indices are exact.
  PsiReport psi_embedding_check(FreeZGrading const&         R,
                                std::vector<Element> const& samples,
                                std::pair<long, long>       degrees = {-3, 3},
                                std::pair<long, long>       indices = {-8, 8});

}  // namespace ugn::graded

#endif  // UGN_GRADED_HPP_
