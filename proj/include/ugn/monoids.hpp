#ifndef UGN_MONOIDS_HPP_
#define UGN_MONOIDS_HPP_

#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "ugn/error.hpp"

// The cyclic monoids C(n,k) = <a : (n+k)a = na> and the abelian monoids
//
//   M(n,k,l) = <u, x_1..x_l, y_1..y_l : (n+k)s = ns, x_i + y_i = u>,
//
// with s = u + x_1 + ... + x_l.

namespace ugn::monoids {

  ////////////////////////////////////////////////////////////////////////
  // C(n,k)
  ////////////////////////////////////////////////////////////////////////

  struct Cnk {
    long n;
    long k;
  };

  void check(Cnk const& c);

  // Canonical coefficient: lambda if lambda < n + k, else n + (lambda - n) mod k.
  long cnk_normalize(Cnk const& c, long lambda);
  // Whether lambda a + z = mu a for some z.
  bool cnk_leq(Cnk const& c, long lambda, long mu);
  // Least p >= 1 with (p+1) a <= p a.
  long cnk_generating_number(Cnk const& c);

  ////////////////////////////////////////////////////////////////////////
  // M(n,k,l)
  ////////////////////////////////////////////////////////////////////////

  struct Mnkl {
    long n;
    long k;
    long l;
  };

  void check(Mnkl const& m);

  // Coefficients of u, x_1..x_l, y_1..y_l as written (no canonical form).
  struct MnklElement {
    long              u = 0;
    std::vector<long> x;
    std::vector<long> y;

    bool operator==(MnklElement const&) const = default;
    auto operator<=>(MnklElement const&) const = default;
  };

  MnklElement mnkl_zero(Mnkl const& m);
  MnklElement mnkl_add(MnklElement const& a, MnklElement const& b);
  std::string format(MnklElement const& e);

  // phi : M(n,k,l) -> C(n,k), u, y_i -> a, x_i -> 0; returns the canonical
  // coefficient.
  long mnkl_phi(Mnkl const& m, MnklElement const& e);
  // psi_j : M(n,k,l) -> Z, u -> -1, x_i -> [i = j], y_i -> -1 - [i = j];
  // j is 1-based.
  long mnkl_psi(Mnkl const& m, MnklElement const& e, long j);

  // One application of a defining relation, in either direction.
  std::vector<MnklElement> mnkl_neighbours(Mnkl const& m, MnklElement const& e);

  struct Separator {
    enum class Kind { phi, psi };
    Kind        kind;
    long        j = 0;  // for psi
    std::string explanation;
  };

  struct LeqResult {
    enum class Verdict { yes, no, unknown };

    Verdict verdict;
    // yes: s + z = t via the chain t = chain.front(), ..., chain.back() = s + z,
    // consecutive entries differing by one relation.
    std::optional<MnklElement> z;
    std::vector<MnklElement>   chain;
    // no
    std::optional<Separator> separator;
    // number of states examined by the closure search
    std::size_t explored = 0;
  };

  constexpr std::size_t default_closure_depth = 10;

  LeqResult mnkl_leq(Mnkl const&        m,
                     MnklElement const& s,
                     MnklElement const& t,
                     std::size_t        depth = default_closure_depth);

  // Re-checks that the separator's homomorphism rules out s + z = t.
  bool separator_refutes(Mnkl const&        m,
                         MnklElement const& s,
                         MnklElement const& t,
                         Separator const&   sep);

  // Re-checks a yes-answer: each step of the chain is a single relation and
  // the final entry equals s + z.
  bool witness_holds(Mnkl const&        m,
                     MnklElement const& s,
                     MnklElement const& t,
                     LeqResult const&   r);

  ////////////////////////////////////////////////////////////////////////
  // Text queries
  ////////////////////////////////////////////////////////////////////////

  // "3*x1 + u <= 2*x1 in M(2,1,1)" or "4 <= 3 in C(3,2)" (also "4a <= 3a").
  struct Query {
    bool        is_cnk;
    Cnk         cnk{1, 1};
    Mnkl        mnkl{1, 1, 1};
    long        lhs_cnk = 0;
    long        rhs_cnk = 0;
    MnklElement lhs;
    MnklElement rhs;
  };

  Query parse_query(std::string_view text);
  MnklElement parse_mnkl_element(Mnkl const& m, std::string_view text);

}  // namespace ugn::monoids

#endif  // UGN_MONOIDS_HPP_
