#ifndef UGN_TESTS_SUPPORT_HPP_
#define UGN_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "ugn/rings.hpp"

namespace ugn::test {

  // Row-major matrix from entry texts in the ring's own syntax.
  inline rings::RingMatrix matrix(rings::Ring const&              R,
                                  std::size_t                     rows,
                                  std::size_t                     cols,
                                  std::vector<std::string> const& cells) {
    std::vector<rings::Element> e;
    for (auto const& c : cells) {
      e.push_back(R.parse(c));
    }
    return rings::RingMatrix(R, rows, cols, std::move(e));
  }

  inline bool same(rings::Ring const& R, rings::Element const& x, std::string const& text) {
    return R.equal(x, R.parse(text));
  }

}  // namespace ugn::test

#endif  // UGN_TESTS_SUPPORT_HPP_
