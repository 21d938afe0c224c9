#ifndef UGN_AMENABILITY_HPP_
#define UGN_AMENABILITY_HPP_

#include <gmpxx.h>

#include <cstddef>   // for size_t
#include <map>       // for map
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "ugn/groups.hpp"

// Finite-stage amenability tools: Følner sets relative to a subset X, the
// 2-to-1 translating injections behind paradoxical decompositions, finite
// equidecompositions, and the Baumslag-Solitar subset X = {(t, m) : t in Z}
// that is right but not left amenable.

namespace ugn::amenability {

  using groups::ElementSet;
  using groups::Group;
  using groups::GroupElement;
  using Rational = mpq_class;

  struct SubsetPredicate {
    enum class Rule {
      whole_group,
      bs_x,         // BS(1,k): t in Z
      bs_x0,        // BS(1,k): t in kZ
      explicit_set, // the finite set `members`
      user_table    // `table` decides membership; unlisted elements throw
    };

    Rule                          rule = Rule::whole_group;
    ElementSet                    members;  // sorted
    std::map<GroupElement, bool>  table;
    bool                          inverted = false;  // the set X^-1 instead

    static SubsetPredicate whole_group();
    static SubsetPredicate bs_x();
    static SubsetPredicate bs_x0();
    static SubsetPredicate explicit_set(ElementSet s);
    static SubsetPredicate user_table(std::map<GroupElement, bool> t);

    bool        contains(Group const& G, GroupElement const& x) const;
    SubsetPredicate inverse() const;
    std::string describe() const;
  };

  ElementSet intersect(Group const& G, ElementSet const& s, SubsetPredicate const& X);

  ////////////////////////////////////////////////////////////////////////
  // Følner sets
  ////////////////////////////////////////////////////////////////////////

  struct FolnerWitness {
    ElementSet  K;
    Rational    eps;
    ElementSet  F;
    std::size_t kf_in_x = 0;  // |KF n X|
    std::size_t f_in_x  = 0;  // |F n X|
  };

  // |KF n X| < (1 + eps) |F n X| with F n X nonempty.
  bool verify_folner(Group const& G, SubsetPredicate const& X, FolnerWitness const& w);

  struct FolnerRow {
    std::size_t             radius;
    std::size_t             kf_in_x;
    std::size_t             f_in_x;
    std::optional<Rational> ratio;  // absent when F n X is empty
  };

  struct FolnerResult {
    std::optional<FolnerWitness> witness;
    std::optional<std::size_t>   radius;  // of the witnessing ball
    std::vector<FolnerRow>       rows;    // every radius tried
    std::optional<Rational>      best_ratio;
  };

  // Tries F = B_r n X for r = 0..r_max and stops at the first witness.
  FolnerResult folner_search(Group const&           G,
                             SubsetPredicate const& X,
                             ElementSet const&      K,
                             Rational const&        eps,
                             std::size_t            r_max);

  // Tries each supplied F in order.
  FolnerResult folner_search(Group const&                   G,
                             SubsetPredicate const&         X,
                             ElementSet const&              K,
                             Rational const&                eps,
                             std::vector<ElementSet> const& candidates);

  // |K B_r n X| / |B_r n X| for r = 0..r_max.
  std::vector<FolnerRow> expansion_profile(Group const&           G,
                                           SubsetPredicate const& X,
                                           ElementSet const&      K,
                                           std::size_t            r_max);

  ////////////////////////////////////////////////////////////////////////
  // Translating injections
  ////////////////////////////////////////////////////////////////////////

  // alpha(x) = alpha[i] for x = V[i]; likewise beta.
  struct InjectionWitness {
    ElementSet V;
    ElementSet W;
    ElementSet K;
    ElementSet alpha;
    ElementSet beta;
  };

  // Empty when the witness is sound; otherwise the first problem found.
  std::optional<std::string> check_injection(Group const& G, InjectionWitness const& w);

  struct InjectionResult {
    std::optional<InjectionWitness> witness;
    // Infeasible: a subset A of V whose neighbourhood N(A) in W is smaller
    // than 2|A|.
    ElementSet  hall_set;
    ElementSet  hall_neighbours;
    std::size_t flow = 0;
  };

  // Every x in V gets two distinct targets w in W with w x^-1 in K, each w
  // used at most once. Solved as a maximum flow; ties go to ball order.
  InjectionResult find_two_to_one_injection(Group const&      G,
                                            ElementSet const& V,
                                            ElementSet const& W,
                                            ElementSet const& K);

  // N(A) = {w in W : w a^-1 in K for some a in A}.
  ElementSet neighbourhood(Group const&      G,
                           ElementSet const& A,
                           ElementSet const& W,
                           ElementSet const& K);

  ////////////////////////////////////////////////////////////////////////
  // Equidecompositions
  ////////////////////////////////////////////////////////////////////////

  struct EquidecompositionWitness {
    std::vector<ElementSet>   pieces;
    std::vector<GroupElement> translators;
  };

  // The pieces partition A and the translated pieces g_i A_i partition B.
  bool verify_equidecomposition(Group const&                    G,
                                EquidecompositionWitness const& w,
                                ElementSet const&               A,
                                ElementSet const&               B);

  ////////////////////////////////////////////////////////////////////////
  // BS(1,k)
  ////////////////////////////////////////////////////////////////////////

  struct BsCheck {
    long        k;
    std::size_t r;
    std::size_t ball_size  = 0;
    std::size_t x_count    = 0;  // |X n B_r|
    std::size_t x0_count   = 0;  // |X_0 n B_r|
    bool        contained  = false;  // X_0 and a X_0 inside X
    bool        disjoint   = false;  // X_0 n a X_0 empty
    bool        b_maps     = false;  // b X = X_0 as seen in the ball
    std::size_t b_preimages = 0;    // X_0 elements whose b-preimage is in the ball
    std::vector<std::string> failures;

    bool ok() const {
      return contained && disjoint && b_maps;
    }
  };

  BsCheck bs_example_check(long k, std::size_t r);

  struct RosenblattResult {
    GroupElement g;  // (frac, 0), a coset representative of A in its normal closure
    Rational     frac;
    std::size_t  u_count;  // ||gX n u||
    std::size_t  v_count;  // ||gX n v||
  };

  // ||gX n (u_1..u_m)|| = #{i : u_i in gX}.
  std::size_t tuple_count(Group const&                     G,
                          GroupElement const&              g,
                          SubsetPredicate const&           X,
                          std::vector<GroupElement> const& tuple);

  // Throws unless |u| < |v|.
  RosenblattResult rosenblatt_find(Group const&                     G,
                                   std::vector<GroupElement> const& u,
                                   std::vector<GroupElement> const& v);

}  // namespace ugn::amenability

#endif  // UGN_AMENABILITY_HPP_
