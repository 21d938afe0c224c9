#ifndef UGN_GROUPS_HPP_
#define UGN_GROUPS_HPP_

#include <gmpxx.h>

#include <cstddef>      // for size_t
#include <functional>   // for hash
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "ugn/error.hpp"

// Normal forms for the concrete groups used throughout the library:
//
//   F_k       free group, elements are freely reduced words,
//   Z^d       free abelian group, integer vectors,
//   BS(1,k)   <a, b : b a b^-1 = a^k>, realised as pairs (t, m) with t in
//             Z[1/k], m in Z and (t, m)(s, n) = (t + k^m s, m + n),
//   C(m)      cyclic group of order m,
//
// and finite direct products of these.

namespace ugn::groups {

  // The meaning of `v` depends on the group:
  //   free:    letter indices, 2i for the i-th generator and 2i + 1 for its
  //            inverse, no adjacent inverse pairs;
  //   Z^d:     the coordinates;
  //   BS(1,k): {num, exp, m} with t = num / k^exp in lowest terms
  //            (exp == 0 or k does not divide num);
  //   C(m):    {residue};
  //   product: empty, with one entry of `parts` per factor.
  struct GroupElement {
    std::vector<long>         v;
    std::vector<GroupElement> parts;
  };

  bool operator==(GroupElement const& x, GroupElement const& y);
  bool operator<(GroupElement const& x, GroupElement const& y);
  inline bool operator!=(GroupElement const& x, GroupElement const& y) {
    return !(x == y);
  }

  struct GroupElementHash {
    std::size_t operator()(GroupElement const& x) const noexcept;
  };

  enum class GroupKind {
    free,
    free_abelian,
    baumslag_solitar,
    cyclic,
    direct_product
  };

  class Group {
   public:
    static Group free(std::size_t rank);
    static Group free_abelian(std::size_t rank);
    static Group baumslag_solitar(long k);
    static Group cyclic(long order);
    static Group direct_product(std::vector<Group> factors);

    // "F2", "Z", "Z^3", "BS(1,2)", "C(4)" (also "C4"), products joined by "x".
    static Group parse(std::string_view name);

    GroupKind kind() const noexcept;
    // Rank for free groups and Z^d, k for BS(1,k), the order for C(m).
    long                      parameter() const noexcept;
    std::vector<Group> const& factors() const noexcept;
    std::string               name() const;

    GroupElement identity() const;
    GroupElement mul(GroupElement const& x, GroupElement const& y) const;
    GroupElement inverse(GroupElement const& x) const;
    bool         is_identity(GroupElement const& x) const {
      return x == identity();
    }
    GroupElement pow(GroupElement const& x, long e) const;

    // The canonical generating set (free: a_1..a_k, Z^d: standard basis,
    // BS: a, b, C(m): 1, products: factor generators in factor order).
    std::vector<GroupElement> generators() const;
    // Generators interleaved with their inverses, duplicates and the
    // identity removed.
    std::vector<GroupElement> symmetric_generators() const;

    // nullopt for infinite groups.
    std::optional<std::size_t> order() const;

    // Throws unless x is a canonical element of this group.
    void check(GroupElement const& x) const;

    std::string  format(GroupElement const& x) const;
    GroupElement parse_element(std::string_view text) const;

    bool operator==(Group const& that) const {
      return name() == that.name();
    }
    bool operator!=(Group const& that) const {
      return !(*this == that);
    }

    // Specific to BS(1,k).
    mpq_class    bs_t(GroupElement const& x) const;
    long         bs_m(GroupElement const& x) const;
    GroupElement bs_element(mpq_class const& t, long m) const;

   private:
    struct Data;
    explicit Group(std::shared_ptr<Data const> d) : _d(std::move(d)) {}
    std::shared_ptr<Data const> _d;
  };

  using ElementSet = std::vector<GroupElement>;

  // Sorted, duplicate-free copy.
  ElementSet canonical_set(ElementSet s);
  bool       set_contains(ElementSet const& sorted, GroupElement const& x);

  // {g a : a in A}, {k a : k in K, a in A}; results are canonical sets.
  ElementSet translate_set(Group const&        G,
                           GroupElement const& g,
                           ElementSet const&   A);
  ElementSet set_product(Group const& G, ElementSet const& K, ElementSet const& A);

  // "{x, y, ...}" with elements in the group's text form, or "B<r>" for the
  // ball of radius r.
  ElementSet  parse_set(Group const& G, std::string_view text);
  std::string format_set(Group const& G, ElementSet const& s);

  constexpr std::size_t default_max_radius = 8;

  // Elements of word length <= r over the symmetric generators, in order of
  // length and then discovery (breadth-first with generators in their fixed
  // order, which is lexicographic on generator indices). Throws if
  // r > max_radius or the ball would exceed max_elements.
  ElementSet ball(Group const& G,
                  std::size_t  r,
                  std::size_t  max_radius   = default_max_radius,
                  std::size_t  max_elements = 5'000'000);

  // Spheres 0..r (same order as `ball`).
  std::vector<ElementSet> spheres(Group const& G,
                                  std::size_t  r,
                                  std::size_t  max_radius   = default_max_radius,
                                  std::size_t  max_elements = 5'000'000);

  // All elements of a finite group in ball order; throws for infinite groups.
  ElementSet elements(Group const& G);

}  // namespace ugn::groups

#endif  // UGN_GROUPS_HPP_
