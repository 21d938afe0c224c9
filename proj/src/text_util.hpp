#ifndef UGN_SRC_TEXT_UTIL_HPP_
#define UGN_SRC_TEXT_UTIL_HPP_

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ugn/error.hpp"

namespace ugn::detail {

  inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return s;
  }

  inline bool is_open(char c) {
    return c == '(' || c == '[' || c == '{' || c == '<';
  }

  inline bool is_close(char c) {
    return c == ')' || c == ']' || c == '}' || c == '>';
  }

  // Splits on `sep` at bracket depth zero. An empty (all-whitespace) input
  // yields no pieces.
  inline std::vector<std::string> split_top_level(std::string_view s, char sep) {
    std::vector<std::string> out;
    if (trim(s).empty()) {
      return out;
    }
    int         depth = 0;
    std::string cur;
    for (char c : s) {
      if (is_open(c)) {
        ++depth;
      } else if (is_close(c)) {
        if (--depth < 0) {
          throw ParseError("unbalanced brackets in \"" + std::string(s) + "\"");
        }
      }
      if (c == sep && depth == 0) {
        out.emplace_back(trim(cur));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (depth != 0) {
      throw ParseError("unbalanced brackets in \"" + std::string(s) + "\"");
    }
    out.emplace_back(trim(cur));
    return out;
  }

  // If s is "<open> ... <close>" with the outer brackets matching each other,
  // returns the inside.
  inline bool strip_enclosing(std::string_view& s, char open, char close) {
    s = trim(s);
    if (s.size() < 2 || s.front() != open || s.back() != close) {
      return false;
    }
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (is_open(s[i])) {
        ++depth;
      } else if (is_close(s[i])) {
        --depth;
        if (depth == 0 && i + 1 != s.size()) {
          return false;
        }
      }
    }
    s = trim(s.substr(1, s.size() - 2));
    return true;
  }

  inline long parse_long(std::string_view s) {
    s = trim(s);
    std::size_t pos = 0;
    long        v   = 0;
    try {
      v = std::stol(std::string(s), &pos);
    } catch (std::exception const&) {
      throw ParseError("expected an integer, found \"" + std::string(s) + "\"");
    }
    if (pos != s.size()) {
      throw ParseError("expected an integer, found \"" + std::string(s) + "\"");
    }
    return v;
  }

}  // namespace ugn::detail

#endif  // UGN_SRC_TEXT_UTIL_HPP_
