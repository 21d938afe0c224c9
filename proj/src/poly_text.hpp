#ifndef UGN_SRC_POLY_TEXT_HPP_
#define UGN_SRC_POLY_TEXT_HPP_

#include <string>
#include <utility>
#include <vector>

#include "ugn/rings.hpp"

namespace ugn::detail {

  // "2*m1 - m2 + 3" from (coefficient, monomial) pairs; the empty monomial
  // text stands for 1.
  inline std::string format_linear(
      std::vector<std::pair<rings::Scalar, std::string>> const& terms) {
    if (terms.empty()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [c, m] : terms) {
      rings::Scalar a = abs(c);
      if (first) {
        if (c < 0) {
          out += "-";
        }
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      if (m.empty()) {
        out += rings::ScalarDomain::format(a);
      } else if (a == 1) {
        out += m;
      } else {
        out += rings::ScalarDomain::format(a) + "*" + m;
      }
    }
    return out;
  }

}  // namespace ugn::detail

#endif  // UGN_SRC_POLY_TEXT_HPP_
