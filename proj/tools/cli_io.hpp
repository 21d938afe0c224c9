#ifndef UGN_TOOLS_CLI_IO_HPP_
#define UGN_TOOLS_CLI_IO_HPP_

#include <cstddef>  // for size_t
#include <ostream>  // for ostream
#include <string>   // for string

#include "json.hpp"

#include "ugn/amenability.hpp"
#include "ugn/groups.hpp"
#include "ugn/rings.hpp"
#include "ugn/translation.hpp"

// File formats and report rendering shared by the subcommands.

namespace ugn::cli {

  using Json = nlohmann::ordered_json;
  using amenability::Rational;
  using amenability::SubsetPredicate;
  using groups::ElementSet;
  using groups::Group;

  enum ExitCode : int { exit_pass = 0, exit_negative = 1, exit_input = 2 };

  struct Options {
    std::string   format = "text";
    unsigned long seed   = 0;
  };

  // Positive integer from the environment, or the fallback.
  std::size_t env_bound(char const* name, std::size_t fallback);

  // json: pretty-printed; text: one "key: value" line per field, arrays of
  // objects as indented rows.
  void emit(Json const& report, Options const& opt, std::ostream& out);

  std::string read_file(std::string const& path);
  Json        read_json(std::string const& path);
  void        write_file(std::string const& path, std::string const& text);

  Rational    parse_rational(std::string const& text);
  std::string to_string(Rational const& q);

  Json       set_to_json(Group const& G, ElementSet const& s);
  ElementSet set_from_json(Group const& G, Json const& j);

  // "G", "X" or "X0" (BS(1,k) only), "{...}", or "inv(<subset>)".
  SubsetPredicate parse_subset(Group const& G, std::string const& text);

  Json folner_witness_to_json(Group const&                      G,
                              std::string const&                subset,
                              amenability::FolnerWitness const& w);
  Json injection_witness_to_json(Group const& G, amenability::InjectionWitness const& w);
  amenability::InjectionWitness injection_witness_from_json(Group const& G, Json const& j);

  // {"kind": "translation-certificate", "group", "subset", "ring", "n", "m",
  //  "A": m rows of n entries, "B": n rows of m entries}; an entry is a list
  // of terms {"shift", "constant", "table": [[point, value], ...], "guards"}.
  translation::TranslationCertificate translation_certificate_from_json(Json const& j);
  Json translation_certificate_to_json(std::string const&                         group,
                                       std::string const&                         subset,
                                       std::string const&                         ring,
                                       translation::TranslationCertificate const& c);

  // Fetches a required member, throwing ParseError when it is missing.
  Json const& member(Json const& j, char const* key);

}  // namespace ugn::cli

#endif  // UGN_TOOLS_CLI_IO_HPP_
