#include <json.hpp>

#include "text_util.hpp"
#include "ugn/algebras.hpp"
#include "ugn/graded.hpp"
#include "ugn/ring_text.hpp"

namespace ugn::rings {

  namespace {

    ScalarDomain parse_domain(std::string_view s) {
      s = detail::trim(s);
      if (s == "Z") {
        return ScalarDomain::integers();
      }
      if (s == "Q") {
        return ScalarDomain::rationals();
      }
      if (s.substr(0, 2) == "Z/") {
        return ScalarDomain::integers_mod(detail::parse_long(s.substr(2)));
      }
      throw ParseError("unknown scalar ring \"" + std::string(s) + "\"");
    }

    std::vector<Scalar> parse_scalars(ScalarDomain const& S, std::string_view s) {
      std::vector<Scalar> out;
      for (auto const& piece : detail::split_top_level(s, ',')) {
        out.push_back(S.parse(piece));
      }
      return out;
    }

    // "name:k=v:k=v" -> {k: v}
    std::map<std::string, std::string> options(std::string_view s) {
      std::map<std::string, std::string> out;
      for (auto const& piece : detail::split_top_level(s, ':')) {
        auto eq = piece.find('=');
        if (eq == std::string::npos) {
          throw ParseError("expected key=value, found \"" + piece + "\"");
        }
        out[std::string(detail::trim(std::string_view(piece).substr(0, eq)))]
            = std::string(detail::trim(std::string_view(piece).substr(eq + 1)));
      }
      return out;
    }

    std::string take(std::map<std::string, std::string>& opts,
                      std::string const&                  key,
                      std::string const&                  fallback = {}) {
      auto it = opts.find(key);
      if (it == opts.end()) {
        if (fallback.empty()) {
          throw ParseError("missing \"" + key + "=\"");
        }
        return fallback;
      }
      auto v = it->second;
      opts.erase(it);
      return v;
    }

    void no_more(std::map<std::string, std::string> const& opts) {
      if (!opts.empty()) {
        throw ParseError("unknown option \"" + opts.begin()->first + "\"");
      }
    }

    bool call(std::string_view s, std::string_view head, std::string_view& inside) {
      if (s.substr(0, head.size()) != head) {
        return false;
      }
      auto rest = s.substr(head.size() - 1);
      if (!detail::strip_enclosing(rest, '(', ')')) {
        return false;
      }
      inside = rest;
      return true;
    }

  }  // namespace

  Ring parse_ring(std::string_view text) {
    auto             s = detail::trim(text);
    std::string_view inside;
    if (s == "Z" || s == "Q" || s.substr(0, 2) == "Z/") {
      return scalar_ring(parse_domain(s));
    }
    if (call(s, "op(", inside)) {
      return opposite(parse_ring(inside));
    }
    if (call(s, "prod(", inside)) {
      std::vector<Ring> factors;
      for (auto const& piece : detail::split_top_level(inside, ';')) {
        factors.push_back(parse_ring(piece));
      }
      if (factors.empty()) {
        throw ParseError("empty product");
      }
      return product(factors);
    }
    if (call(s, "RG(", inside)) {
      auto parts = detail::split_top_level(inside, ';');
      if (parts.size() != 2) {
        throw ParseError("expected RG(G;R), found \"" + std::string(s) + "\"");
      }
      return graded::group_ring(groups::Group::parse(parts[0]), parse_ring(parts[1]));
    }
    if (s.size() > 1 && s[0] == 'M' && std::isdigit(static_cast<unsigned char>(s[1]))) {
      auto open = s.find('(');
      if (open != std::string_view::npos) {
        auto size = detail::parse_long(s.substr(1, open - 1));
        auto rest = s.substr(open);
        if (size >= 1 && detail::strip_enclosing(rest, '(', ')')) {
          return matrix_ring(parse_ring(rest), static_cast<std::size_t>(size));
        }
      }
    }
    if (s.substr(0, 8) == "leavitt:") {
      auto opts = options(s.substr(8));
      auto n    = detail::parse_long(take(opts, "n"));
      auto S    = parse_domain(take(opts, "S", "Z"));
      no_more(opts);
      if (n < 2) {
        throw ParseError("L(1,n) needs n >= 2");
      }
      return algebras::leavitt_algebra(static_cast<std::size_t>(n), S);
    }
    if (s.substr(0, 5) == "weyl:") {
      auto opts = options(s.substr(5));
      auto n    = detail::parse_long(take(opts, "n"));
      auto S    = parse_domain(take(opts, "S", "Z"));
      if (n < 1) {
        throw ParseError("the Weyl algebra needs n >= 1");
      }
      algebras::WeylParameters p{static_cast<std::size_t>(n),
                                 parse_scalars(S, take(opts, "a")),
                                 parse_scalars(S, take(opts, "b")),
                                 S};
      no_more(opts);
      if (p.a.size() != p.n || p.b.size() != p.n) {
        throw ParseError("a and b need n entries each");
      }
      try {
        return algebras::weyl_algebra(p);
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(e.what());
      }
    }
    throw ParseError("unknown ring \"" + std::string(s) + "\"");
  }

  std::string certificate_to_json(RankCertificate const& c, int indent) {
    auto rows = [&](RingMatrix const& M) {
      nlohmann::json out = nlohmann::json::array();
      for (std::size_t i = 0; i < M.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) {
          row.push_back(c.ring.format(M.at(i, j)));
        }
        out.push_back(row);
      }
      return out;
    };
    nlohmann::ordered_json j;
    j["ring"] = c.ring.name();
    j["n"]    = c.n;
    j["m"]    = c.m;
    j["A"]    = rows(c.A);
    j["B"]    = rows(c.B);
    return j.dump(indent);
  }

  RankCertificate certificate_from_json(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
      auto ring = parse_ring(j.at("ring").get<std::string>());
      auto n    = j.at("n").get<std::size_t>();
      auto m    = j.at("m").get<std::size_t>();
      auto read = [&](nlohmann::json const& a, std::size_t rows, std::size_t cols) {
        if (!a.is_array() || a.size() != rows) {
          throw ParseError("expected " + std::to_string(rows) + " rows");
        }
        RingMatrix M(ring, rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
          if (!a[i].is_array() || a[i].size() != cols) {
            throw ParseError("expected " + std::to_string(cols) + " columns in row "
                             + std::to_string(i + 1));
          }
          for (std::size_t k = 0; k < cols; ++k) {
            auto const& e = a[i][k];
            M.set(i, k, ring.parse(e.is_string() ? e.get<std::string>() : e.dump()));
          }
        }
        return M;
      };
      if (n < 1 || m < 1) {
        throw ParseError("n and m must be positive");
      }
      return make_certificate(read(j.at("A"), m, n), read(j.at("B"), n, m));
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed certificate: ") + e.what());
    }
  }

}  // namespace ugn::rings
