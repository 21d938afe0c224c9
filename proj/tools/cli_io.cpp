#include "cli_io.hpp"

#include <cstdlib>   // for getenv, strtoul
#include <fstream>   // for ifstream, ofstream
#include <sstream>   // for ostringstream

#include "ugn/ring_text.hpp"

namespace ugn::cli {

  using rings::Ring;
  using translation::CoefficientFunction;
  using translation::TranslationElement;
  using translation::TranslationTerm;

  std::size_t env_bound(char const* name, std::size_t fallback) {
    char const* v = std::getenv(name);
    if (v == nullptr || *v == '\0') {
      return fallback;
    }
    char*         end = nullptr;
    unsigned long n   = std::strtoul(v, &end, 10);
    if (*end != '\0' || n == 0) {
      throw ParseError(std::string(name) + " must be a positive integer, found \"" + v + "\"");
    }
    return n;
  }

  namespace {

    std::string scalar_text(Json const& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    }

    bool is_scalar_array(Json const& v) {
      for (auto const& e : v) {
        if (e.is_structured()) {
          return false;
        }
      }
      return true;
    }

    void render(Json const& obj, std::string const& pad, std::ostream& out) {
      for (auto const& [key, v] : obj.items()) {
        if (v.is_object()) {
          out << pad << key << ":\n";
          render(v, pad + "  ", out);
        } else if (v.is_array() && is_scalar_array(v)) {
          out << pad << key << ":";
          std::string sep = " ";
          for (auto const& e : v) {
            out << sep << scalar_text(e);
            sep = ", ";
          }
          out << "\n";
        } else if (v.is_array()) {
          out << pad << key << ":\n";
          for (auto const& row : v) {
            if (row.is_object()) {
              out << pad << " ";
              for (auto const& [k, e] : row.items()) {
                out << " " << k << "=" << (e.is_structured() ? e.dump() : scalar_text(e));
              }
              out << "\n";
            } else {
              out << pad << "  " << row.dump() << "\n";
            }
          }
        } else {
          out << pad << key << ": " << scalar_text(v) << "\n";
        }
      }
    }

    CoefficientFunction coefficient_from_json(Group const& G, Ring const& R, Json const& t) {
      CoefficientFunction f{R.zero(), {}, {}};
      if (t.contains("constant")) {
        f.constant = R.parse(member(t, "constant").get<std::string>());
      }
      if (t.contains("table")) {
        std::vector<std::pair<groups::GroupElement, rings::Element>> entries;
        for (auto const& e : t["table"]) {
          if (!e.is_array() || e.size() != 2) {
            throw ParseError("table entries must be [point, value] pairs");
          }
          entries.emplace_back(G.parse_element(e[0].get<std::string>()),
                               R.parse(e[1].get<std::string>()));
        }
        auto tab   = CoefficientFunction::finite(R, std::move(entries)).table;
        f.table    = std::move(tab);
      }
      if (t.contains("guards")) {
        f.guards = groups::canonical_set(set_from_json(G, t["guards"]));
      }
      return f;
    }

    TranslationElement entry_from_json(Group const&           G,
                                       SubsetPredicate const& X,
                                       Ring const&            R,
                                       Json const&            e) {
      auto M = translation::tr_zero(G, X, R);
      if (!e.is_array()) {
        throw ParseError("a translation entry must be a list of terms");
      }
      for (auto const& t : e) {
        auto g = G.parse_element(member(t, "shift").get<std::string>());
        M      = translation::tr_add(
            M, translation::tr_term(G, X, R, g, coefficient_from_json(G, R, t)));
      }
      return M;
    }

    Json entry_to_json(TranslationElement const& M) {
      Json terms = Json::array();
      for (auto const& t : M.terms) {
        Json j;
        j["shift"]    = M.G.format(t.shift);
        j["constant"] = M.R.format(t.f.constant);
        if (!t.f.table.empty()) {
          Json tab = Json::array();
          for (auto const& [p, v] : t.f.table) {
            tab.push_back(Json::array({M.G.format(p), M.R.format(v)}));
          }
          j["table"] = std::move(tab);
        }
        if (!t.f.guards.empty()) {
          j["guards"] = set_to_json(M.G, t.f.guards);
        }
        terms.push_back(std::move(j));
      }
      return terms;
    }

  }  // namespace

  void emit(Json const& report, Options const& opt, std::ostream& out) {
    if (opt.format == "json") {
      out << report.dump(2) << "\n";
    } else {
      render(report, "", out);
    }
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot read " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  Json read_json(std::string const& path) {
    try {
      return Json::parse(read_file(path));
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(path + ": " + e.what());
    }
  }

  void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out) {
      throw ParseError("cannot write " + path);
    }
    out << text;
  }

  Rational parse_rational(std::string const& text) {
    Rational q;
    try {
      q = Rational(text);
    } catch (std::exception const&) {
      throw ParseError("invalid rational \"" + text + "\"");
    }
    if (q.get_den() == 0) {
      throw ParseError("invalid rational \"" + text + "\"");
    }
    q.canonicalize();
    return q;
  }

  std::string to_string(Rational const& q) {
    return q.get_str();
  }

  Json set_to_json(Group const& G, ElementSet const& s) {
    Json out = Json::array();
    for (auto const& x : s) {
      out.push_back(G.format(x));
    }
    return out;
  }

  ElementSet set_from_json(Group const& G, Json const& j) {
    if (j.is_string()) {
      return groups::parse_set(G, j.get<std::string>());
    }
    if (!j.is_array()) {
      throw ParseError("expected a list of group elements");
    }
    ElementSet out;
    for (auto const& e : j) {
      if (!e.is_string()) {
        throw ParseError("group elements must be strings");
      }
      out.push_back(G.parse_element(e.get<std::string>()));
    }
    return out;
  }

  SubsetPredicate parse_subset(Group const& G, std::string const& text) {
    if (text == "G") {
      return SubsetPredicate::whole_group();
    }
    if (text == "X" || text == "X0") {
      if (G.kind() != groups::GroupKind::baumslag_solitar) {
        throw ParseError("subset " + text + " is defined for BS(1,k) only");
      }
      return text == "X" ? SubsetPredicate::bs_x() : SubsetPredicate::bs_x0();
    }
    if (text.size() > 5 && text.rfind("inv(", 0) == 0 && text.back() == ')') {
      return parse_subset(G, text.substr(4, text.size() - 5)).inverse();
    }
    return SubsetPredicate::explicit_set(groups::parse_set(G, text));
  }

  Json const& member(Json const& j, char const* key) {
    if (!j.is_object() || !j.contains(key)) {
      throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return j[key];
  }

  Json folner_witness_to_json(Group const&                      G,
                              std::string const&                subset,
                              amenability::FolnerWitness const& w) {
    Json j;
    j["kind"]   = "folner";
    j["group"]  = G.name();
    j["subset"] = subset;
    j["K"]      = set_to_json(G, w.K);
    j["eps"]    = to_string(w.eps);
    j["F"]      = set_to_json(G, w.F);
    j["|KF n X|"] = w.kf_in_x;
    j["|F n X|"]  = w.f_in_x;
    return j;
  }

  Json injection_witness_to_json(Group const& G, amenability::InjectionWitness const& w) {
    Json j;
    j["kind"]  = "injection";
    j["group"] = G.name();
    j["V"]     = set_to_json(G, w.V);
    j["W"]     = set_to_json(G, w.W);
    j["K"]     = set_to_json(G, w.K);
    j["alpha"] = set_to_json(G, w.alpha);
    j["beta"]  = set_to_json(G, w.beta);
    return j;
  }

  amenability::InjectionWitness injection_witness_from_json(Group const& G, Json const& j) {
    return amenability::InjectionWitness{
        set_from_json(G, member(j, "V")),     set_from_json(G, member(j, "W")),
        set_from_json(G, member(j, "K")),     set_from_json(G, member(j, "alpha")),
        set_from_json(G, member(j, "beta"))};
  }

  translation::TranslationCertificate translation_certificate_from_json(Json const& j) {
    try {
      auto G = Group::parse(member(j, "group").get<std::string>());
      auto X = parse_subset(G, j.value("subset", std::string("G")));
      auto R = rings::parse_ring(member(j, "ring").get<std::string>());
      auto n = member(j, "n").get<std::size_t>();
      auto m = member(j, "m").get<std::size_t>();
      translation::TranslationCertificate c{n, m, {}, {}};
      auto read = [&](char const* key, std::size_t rows, std::size_t cols,
                      std::vector<TranslationElement>& dst) {
        auto const& mat = member(j, key);
        if (!mat.is_array() || mat.size() != rows) {
          throw ParseError(std::string(key) + " must have " + std::to_string(rows) + " rows");
        }
        for (auto const& row : mat) {
          if (!row.is_array() || row.size() != cols) {
            throw ParseError(std::string(key) + " rows must have " + std::to_string(cols)
                             + " entries");
          }
          for (auto const& e : row) {
            dst.push_back(entry_from_json(G, X, R, e));
          }
        }
      };
      read("A", m, n, c.A);
      read("B", n, m, c.B);
      return c;
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed translation certificate: ") + e.what());
    }
  }

  Json translation_certificate_to_json(std::string const&                         group,
                                       std::string const&                         subset,
                                       std::string const&                         ring,
                                       translation::TranslationCertificate const& c) {
    Json j;
    j["kind"]   = "translation-certificate";
    j["group"]  = group;
    j["subset"] = subset;
    j["ring"]   = ring;
    j["n"]      = c.n;
    j["m"]      = c.m;
    auto write  = [](std::vector<TranslationElement> const& v, std::size_t rows,
                    std::size_t cols) {
      Json mat = Json::array();
      for (std::size_t i = 0; i < rows; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < cols; ++k) {
          row.push_back(entry_to_json(v[i * cols + k]));
        }
        mat.push_back(std::move(row));
      }
      return mat;
    };
    j["A"] = write(c.A, c.m, c.n);
    j["B"] = write(c.B, c.n, c.m);
    return j;
  }

}  // namespace ugn::cli
