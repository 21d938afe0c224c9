#ifndef UGN_RING_TEXT_HPP_
#define UGN_RING_TEXT_HPP_

#include <string>       // for string
#include <string_view>  // for string_view

#include "ugn/certificates.hpp"
#include "ugn/rings.hpp"

// Text descriptors for every ring the library can build, and the JSON
// certificate format {ring, n, m, A, B} with entries in each ring's own
// element syntax, rows in order.
//
//   Z, Q, Z/m                     scalar rings
//   M<s>(R)                       s x s matrices over R
//   prod(R1;R2;...)               finite products
//   op(R)                         opposite ring
//   leavitt:n=2[:S=Z/5]           L(1,n) over S
//   weyl:n=2:a=1,1:b=1,0[:S=Q]    generalised Weyl algebra
//   RG(G;R)                       group ring of a finite group

namespace ugn::rings {

  Ring parse_ring(std::string_view text);

  std::string     certificate_to_json(RankCertificate const& c, int indent = 2);
  RankCertificate certificate_from_json(std::string_view text);

}  // namespace ugn::rings

#endif  // UGN_RING_TEXT_HPP_
