#ifndef UGN_TOOLS_CLI_HPP_
#define UGN_TOOLS_CLI_HPP_

#include <iosfwd>  // for istream, ostream
#include <string>  // for string
#include <vector>  // for vector

namespace ugn::cli {

  // args excludes the program name. Exit codes: 0 pass or found, 1 verified
  // negative, 2 input error.
  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace ugn::cli

#endif  // UGN_TOOLS_CLI_HPP_
