#ifndef UGN_TOOLS_REPRO_HPP_
#define UGN_TOOLS_REPRO_HPP_

#include <functional>  // for function
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "cli_io.hpp"

// Named end-to-end runs of the library's constructions at desk scale. Each
// returns a verdict and a deterministic report; the acceptance binary runs
// the same functions.

namespace ugn::cli {

  struct ReproParams {
    std::optional<long> n;
    std::optional<long> l;
    std::optional<long> k;
    unsigned long       seed = 0;
  };

  struct ReproResult {
    std::string name;
    bool        pass = false;
    Json        details;
  };

  struct ReproEntry {
    std::string                                    name;
    std::string                                    summary;
    std::function<ReproResult(ReproParams const&)> run;
  };

  std::vector<ReproEntry> const& repro_catalogue();
  ReproEntry const*              find_repro(std::string const& name);

  // The Z-graded translation certificate over L(1,2): A = (e1*, e2*)^t and
  // B = (e1, e2) as constant diagonals.
  translation::TranslationCertificate leavitt_translation_certificate();

}  // namespace ugn::cli

#endif  // UGN_TOOLS_REPRO_HPP_
