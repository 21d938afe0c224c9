#ifndef UGN_SRC_EXPR_HPP_
#define UGN_SRC_EXPR_HPP_

#include <cctype>       // for isalnum, isdigit, isspace
#include <functional>   // for function
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view

#include "ugn/rings.hpp"

namespace ugn::detail {

  // Noncommutative polynomial expressions over a ring:
  //
  //   sum     := ['-'] product (('+' | '-') product)*
  //   product := power (['*'] power)*
  //   power   := atom ['^' integer]
  //   atom    := integer ['/' integer] | ident | '(' sum ')'
  //
  // where identifiers are a letter followed by digits or '_', optionally
  // followed by primes ("e1'"), so "e1e2'" and "xy" split into two symbols.
  // Integers map to from_int; each identifier is resolved by `lookup`, which
  // returns nullopt for unknown names.
  class ExpressionParser {
   public:
    using Lookup
        = std::function<std::optional<rings::Element>(std::string_view)>;

    ExpressionParser(rings::Ring ring, Lookup lookup)
        : _ring(std::move(ring)), _lookup(std::move(lookup)) {}

    rings::Element parse(std::string_view text) {
      _s = text;
      _i = 0;
      skip();
      if (_i == _s.size()) {
        fail("empty expression");
      }
      auto r = sum();
      skip();
      if (_i != _s.size()) {
        fail("unexpected \"" + std::string(_s.substr(_i)) + "\"");
      }
      return r;
    }

   private:
    void skip() {
      while (_i < _s.size() && std::isspace(static_cast<unsigned char>(_s[_i]))) {
        ++_i;
      }
    }

    bool peek(char c) {
      skip();
      return _i < _s.size() && _s[_i] == c;
    }

    [[noreturn]] void fail(std::string const& what) const {
      throw ParseError(what + " in \"" + std::string(_s) + "\"");
    }

    bool starts_atom() {
      skip();
      if (_i >= _s.size()) {
        return false;
      }
      char c = _s[_i];
      return c == '(' || std::isalpha(static_cast<unsigned char>(c))
             || std::isdigit(static_cast<unsigned char>(c));
    }

    rings::Element sum() {
      bool negate = false;
      if (peek('-')) {
        ++_i;
        negate = true;
      } else if (peek('+')) {
        ++_i;
      }
      auto r = product();
      if (negate) {
        r = _ring.neg(r);
      }
      for (;;) {
        if (peek('+')) {
          ++_i;
          r = _ring.add(r, product());
        } else if (peek('-')) {
          ++_i;
          r = _ring.sub(r, product());
        } else {
          return r;
        }
      }
    }

    rings::Element product() {
      auto r = power();
      for (;;) {
        if (peek('*')) {
          ++_i;
          r = _ring.mul(r, power());
        } else if (starts_atom()) {
          r = _ring.mul(r, power());
        } else {
          return r;
        }
      }
    }

    long integer() {
      skip();
      std::size_t j = _i;
      while (j < _s.size() && std::isdigit(static_cast<unsigned char>(_s[j]))) {
        ++j;
      }
      if (j == _i) {
        fail("expected an integer");
      }
      if (j - _i > 18) {
        fail("integer too large");
      }
      long v = std::stol(std::string(_s.substr(_i, j - _i)));
      _i     = j;
      return v;
    }

    rings::Element power() {
      auto base = atom();
      if (peek('^')) {
        ++_i;
        long e = integer();
        auto r = _ring.one();
        for (long k = 0; k < e; ++k) {
          r = _ring.mul(r, base);
        }
        return r;
      }
      return base;
    }

    rings::Element atom() {
      skip();
      if (_i >= _s.size()) {
        fail("unexpected end of expression");
      }
      char c = _s[_i];
      if (c == '(') {
        ++_i;
        auto r = sum();
        if (!peek(')')) {
          fail("missing \")\"");
        }
        ++_i;
        return r;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        auto v = _ring.from_int(integer());
        if (_i + 1 < _s.size() && _s[_i] == '/'
            && std::isdigit(static_cast<unsigned char>(_s[_i + 1]))) {
          ++_i;
          auto inv = _ring.inverse(_ring.from_int(integer()));
          if (!inv) {
            fail("denominator is not invertible");
          }
          v = _ring.mul(v, *inv);
        }
        return v;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t j = _i;
        while (j < _s.size()
               && (std::isdigit(static_cast<unsigned char>(_s[j])) || _s[j] == '_'
                   || j == _i)) {
          ++j;
        }
        while (j < _s.size() && _s[j] == '\'') {
          ++j;
        }
        auto name = _s.substr(_i, j - _i);
        auto v    = _lookup(name);
        if (!v) {
          fail("unknown symbol \"" + std::string(name) + "\"");
        }
        _i = j;
        return *v;
      }
      fail("unexpected \"" + std::string(1, c) + "\"");
    }

    rings::Ring      _ring;
    Lookup           _lookup;
    std::string_view _s;
    std::size_t      _i = 0;
  };

}  // namespace ugn::detail

#endif  // UGN_SRC_EXPR_HPP_
