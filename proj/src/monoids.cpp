#include "ugn/monoids.hpp"

#include <algorithm>  // for find, reverse
#include <cctype>     // for isdigit, isspace
#include <deque>   // for deque
#include <map>     // for map

#include "text_util.hpp"

namespace ugn::monoids {

  ////////////////////////////////////////////////////////////////////////
  // C(n,k)
  ////////////////////////////////////////////////////////////////////////

  void check(Cnk const& c) {
    if (c.n < 1 || c.k < 1) {
      throw Error("C(n,k) requires n, k >= 1");
    }
  }

  long cnk_normalize(Cnk const& c, long lambda) {
    check(c);
    if (lambda < 0) {
      throw Error("negative coefficient " + std::to_string(lambda));
    }
    if (lambda < c.n + c.k) {
      return lambda;
    }
    return c.n + (lambda - c.n) % c.k;
  }

  bool cnk_leq(Cnk const& c, long lambda, long mu) {
    check(c);
    if (lambda < 0 || mu < 0) {
      throw Error("negative coefficient");
    }
    // Below n every element is only equal to itself; from n on the
    // multiples of a cycle with period k, and every residue is reachable.
    return mu >= lambda || mu >= c.n;
  }

  long cnk_generating_number(Cnk const& c) {
    check(c);
    for (long p = 1;; ++p) {
      if (cnk_leq(c, p + 1, p)) {
        return p;
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // M(n,k,l)
  ////////////////////////////////////////////////////////////////////////

  void check(Mnkl const& m) {
    if (m.n < 1 || m.k < 1 || m.l < 1) {
      throw Error("M(n,k,l) requires n, k, l >= 1");
    }
  }

  namespace {

    void check(Mnkl const& m, MnklElement const& e) {
      if (e.x.size() != static_cast<std::size_t>(m.l)
          || e.y.size() != static_cast<std::size_t>(m.l)) {
        throw Error("element has the wrong number of generators for M("
                    + std::to_string(m.n) + "," + std::to_string(m.k) + ","
                    + std::to_string(m.l) + ")");
      }
      if (e.u < 0) {
        throw Error("negative coefficient");
      }
      for (std::size_t i = 0; i < e.x.size(); ++i) {
        if (e.x[i] < 0 || e.y[i] < 0) {
          throw Error("negative coefficient");
        }
      }
    }

    bool dominates(MnklElement const& a, MnklElement const& b) {
      if (a.u < b.u) {
        return false;
      }
      for (std::size_t i = 0; i < a.x.size(); ++i) {
        if (a.x[i] < b.x[i] || a.y[i] < b.y[i]) {
          return false;
        }
      }
      return true;
    }

    MnklElement difference(MnklElement const& a, MnklElement const& b) {
      MnklElement d = a;
      d.u -= b.u;
      for (std::size_t i = 0; i < d.x.size(); ++i) {
        d.x[i] -= b.x[i];
        d.y[i] -= b.y[i];
      }
      return d;
    }

  }  // namespace

  MnklElement mnkl_zero(Mnkl const& m) {
    check(m);
    return MnklElement{0, std::vector<long>(m.l, 0), std::vector<long>(m.l, 0)};
  }

  MnklElement mnkl_add(MnklElement const& a, MnklElement const& b) {
    if (a.x.size() != b.x.size()) {
      throw Error("parameter mismatch");
    }
    MnklElement r = a;
    r.u += b.u;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
      r.x[i] += b.x[i];
      r.y[i] += b.y[i];
    }
    return r;
  }

  std::string format(MnklElement const& e) {
    std::string s;
    auto        term = [&](long c, std::string const& g) {
      if (c == 0) {
        return;
      }
      if (!s.empty()) {
        s += " + ";
      }
      s += c == 1 ? g : std::to_string(c) + "*" + g;
    };
    term(e.u, "u");
    for (std::size_t i = 0; i < e.x.size(); ++i) {
      term(e.x[i], "x" + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < e.y.size(); ++i) {
      term(e.y[i], "y" + std::to_string(i + 1));
    }
    return s.empty() ? "0" : s;
  }

  long mnkl_phi(Mnkl const& m, MnklElement const& e) {
    check(m);
    check(m, e);
    long lambda = e.u;
    for (long c : e.y) {
      lambda += c;
    }
    return cnk_normalize(Cnk{m.n, m.k}, lambda);
  }

  long mnkl_psi(Mnkl const& m, MnklElement const& e, long j) {
    check(m);
    check(m, e);
    if (j < 1 || j > m.l) {
      throw Error("psi index " + std::to_string(j) + " out of range 1.."
                  + std::to_string(m.l));
    }
    long v = -e.u;
    for (long i = 1; i <= m.l; ++i) {
      v += e.x[i - 1] * (i == j ? 1 : 0);
      v += e.y[i - 1] * (i == j ? -2 : -1);
    }
    return v;
  }

  std::vector<MnklElement> mnkl_neighbours(Mnkl const& m, MnklElement const& e) {
    std::vector<MnklElement> out;
    // (n+k)s <-> ns
    bool all_big  = e.u >= m.n + m.k;
    bool all_n    = e.u >= m.n;
    for (long c : e.x) {
      all_big = all_big && c >= m.n + m.k;
      all_n   = all_n && c >= m.n;
    }
    if (all_big) {
      MnklElement f = e;
      f.u -= m.k;
      for (auto& c : f.x) {
        c -= m.k;
      }
      out.push_back(std::move(f));
    }
    if (all_n) {
      MnklElement f = e;
      f.u += m.k;
      for (auto& c : f.x) {
        c += m.k;
      }
      out.push_back(std::move(f));
    }
    // x_i + y_i <-> u
    for (std::size_t i = 0; i < e.x.size(); ++i) {
      if (e.x[i] > 0 && e.y[i] > 0) {
        MnklElement f = e;
        --f.x[i];
        --f.y[i];
        ++f.u;
        out.push_back(std::move(f));
      }
      if (e.u > 0) {
        MnklElement f = e;
        --f.u;
        ++f.x[i];
        ++f.y[i];
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  namespace {

    std::optional<Separator> find_separator(Mnkl const&        m,
                                            MnklElement const& s,
                                            MnklElement const& t) {
      Cnk  c{m.n, m.k};
      long ps = mnkl_phi(m, s);
      long pt = mnkl_phi(m, t);
      if (!cnk_leq(c, ps, pt)) {
        return Separator{Separator::Kind::phi,
                         0,
                         "phi(s) = " + std::to_string(ps) + "a is not <= phi(t) = "
                             + std::to_string(pt) + "a in C("
                             + std::to_string(m.n) + "," + std::to_string(m.k)
                             + ")"};
      }
      if (ps == pt && ps < m.n) {
        // phi(z) = 0 forces z to have no u or y_i terms, so psi_j(z) is the
        // x_j coefficient of z and must be >= 0.
        for (long j = 1; j <= m.l; ++j) {
          long d = mnkl_psi(m, t, j) - mnkl_psi(m, s, j);
          if (d < 0) {
            return Separator{
                Separator::Kind::psi,
                j,
                "phi(s) = phi(t) = " + std::to_string(ps)
                    + "a forces z in span(x_i), but psi_" + std::to_string(j)
                    + "(t) - psi_" + std::to_string(j)
                    + "(s) = " + std::to_string(d) + " < 0"};
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  LeqResult mnkl_leq(Mnkl const&        m,
                     MnklElement const& s,
                     MnklElement const& t,
                     std::size_t        depth) {
    check(m);
    check(m, s);
    check(m, t);
    LeqResult r{LeqResult::Verdict::unknown, std::nullopt, {}, std::nullopt, 0};
    if (s == t) {
      r.verdict = LeqResult::Verdict::yes;
      r.z       = mnkl_zero(m);
      r.chain   = {t};
      return r;
    }
    if (auto sep = find_separator(m, s, t)) {
      r.verdict   = LeqResult::Verdict::no;
      r.separator = std::move(sep);
      return r;
    }
    // Breadth-first search through the congruence class of t for a
    // representative dominating s.
    std::map<MnklElement, MnklElement> parent;
    std::deque<std::pair<MnklElement, std::size_t>> queue;
    parent.emplace(t, t);
    queue.emplace_back(t, 0);
    while (!queue.empty()) {
      auto [cur, d] = queue.front();
      queue.pop_front();
      ++r.explored;
      if (dominates(cur, s)) {
        r.verdict = LeqResult::Verdict::yes;
        r.z       = difference(cur, s);
        for (auto x = cur;; x = parent.at(x)) {
          r.chain.push_back(x);
          if (x == t) {
            break;
          }
        }
        std::reverse(r.chain.begin(), r.chain.end());
        return r;
      }
      if (d == depth) {
        continue;
      }
      for (auto& nb : mnkl_neighbours(m, cur)) {
        if (parent.emplace(nb, cur).second) {
          queue.emplace_back(std::move(nb), d + 1);
        }
      }
    }
    return r;
  }

  bool separator_refutes(Mnkl const&        m,
                         MnklElement const& s,
                         MnklElement const& t,
                         Separator const&   sep) {
    Cnk  c{m.n, m.k};
    long ps = mnkl_phi(m, s);
    long pt = mnkl_phi(m, t);
    if (sep.kind == Separator::Kind::phi) {
      return !cnk_leq(c, ps, pt);
    }
    if (sep.j < 1 || sep.j > m.l) {
      return false;
    }
    return ps == pt && ps < m.n
           && mnkl_psi(m, t, sep.j) < mnkl_psi(m, s, sep.j);
  }

  bool witness_holds(Mnkl const&        m,
                     MnklElement const& s,
                     MnklElement const& t,
                     LeqResult const&   r) {
    if (r.verdict != LeqResult::Verdict::yes || !r.z || r.chain.empty()) {
      return false;
    }
    if (r.chain.front() != t || r.chain.back() != mnkl_add(s, *r.z)) {
      return false;
    }
    for (std::size_t i = 1; i < r.chain.size(); ++i) {
      auto nb = mnkl_neighbours(m, r.chain[i - 1]);
      if (std::find(nb.begin(), nb.end(), r.chain[i]) == nb.end()) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text queries
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Linear combinations of named generators:
    //   sum  := term ('+' term)*
    //   term := [int ['*']] (name | '(' sum ')') | int
    class LinearParser {
     public:
      using Vec = std::map<std::string, long>;

      explicit LinearParser(std::string_view s) : _s(s) {}

      Vec parse() {
        Vec v = sum();
        skip();
        if (_i != _s.size()) {
          fail("unexpected \"" + std::string(_s.substr(_i)) + "\"");
        }
        return v;
      }

     private:
      void skip() {
        while (_i < _s.size() && std::isspace(static_cast<unsigned char>(_s[_i]))) {
          ++_i;
        }
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what + " in \"" + std::string(_s) + "\"");
      }

      Vec sum() {
        Vec v = term();
        for (;;) {
          skip();
          if (_i < _s.size() && _s[_i] == '+') {
            ++_i;
            for (auto const& [g, c] : term()) {
              v[g] += c;
            }
          } else {
            return v;
          }
        }
      }

      Vec term() {
        skip();
        long coeff     = 1;
        bool has_coeff = false;
        if (_i < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_i]))) {
          std::size_t j = _i;
          while (j < _s.size() && std::isdigit(static_cast<unsigned char>(_s[j]))) {
            ++j;
          }
          coeff     = detail::parse_long(_s.substr(_i, j - _i));
          has_coeff = true;
          _i        = j;
          skip();
          if (_i < _s.size() && _s[_i] == '*') {
            ++_i;
            skip();
          }
        }
        Vec v;
        if (_i < _s.size() && _s[_i] == '(') {
          ++_i;
          v = sum();
          skip();
          if (_i >= _s.size() || _s[_i] != ')') {
            fail("missing \")\"");
          }
          ++_i;
        } else if (_i < _s.size() && std::isalpha(static_cast<unsigned char>(_s[_i]))) {
          std::size_t j = _i;
          while (j < _s.size() && std::isalnum(static_cast<unsigned char>(_s[j]))) {
            ++j;
          }
          v[std::string(_s.substr(_i, j - _i))] = 1;
          _i                                    = j;
        } else if (has_coeff) {
          v[""] = 1;
        } else {
          fail("expected a term");
        }
        for (auto& [g, c] : v) {
          c *= coeff;
        }
        return v;
      }

      std::string_view _s;
      std::size_t      _i = 0;
    };

    std::vector<long> parse_params(std::string_view s, std::size_t count) {
      std::string_view inner = s;
      if (!detail::strip_enclosing(inner, '(', ')')) {
        throw ParseError("expected parameters in parentheses");
      }
      auto pieces = detail::split_top_level(inner, ',');
      if (pieces.size() != count) {
        throw ParseError("expected " + std::to_string(count) + " parameters");
      }
      std::vector<long> out;
      for (auto const& p : pieces) {
        out.push_back(detail::parse_long(p));
      }
      return out;
    }

    long parse_cnk_side(std::string_view s) {
      long total = 0;
      for (auto const& [g, c] : LinearParser(s).parse()) {
        if (!g.empty() && g != "a") {
          throw ParseError("unknown generator \"" + g + "\" in C(n,k)");
        }
        total += c;
      }
      return total;
    }

  }  // namespace

  MnklElement parse_mnkl_element(Mnkl const& m, std::string_view text) {
    MnklElement e = mnkl_zero(m);
    if (detail::trim(text) == "0") {
      return e;
    }
    for (auto const& [g, c] : LinearParser(text).parse()) {
      if (g == "u") {
        e.u += c;
        continue;
      }
      if ((g.size() >= 1) && (g[0] == 'x' || g[0] == 'y')) {
        long i = g.size() == 1 && m.l == 1 ? 1 : -1;
        if (g.size() > 1) {
          i = detail::parse_long(g.substr(1));
        }
        if (i < 1 || i > m.l) {
          throw ParseError("generator \"" + g + "\" out of range");
        }
        (g[0] == 'x' ? e.x : e.y)[i - 1] += c;
        continue;
      }
      throw ParseError("unknown generator \"" + g + "\" in M(n,k,l)");
    }
    return e;
  }

  Query parse_query(std::string_view text) {
    auto        s   = std::string(detail::trim(text));
    std::size_t pos = s.rfind(" in ");
    if (pos == std::string::npos) {
      throw ParseError("expected \"<lhs> <= <rhs> in <monoid>\"");
    }
    std::string_view rel = std::string_view(s).substr(0, pos);
    std::string_view mon = detail::trim(std::string_view(s).substr(pos + 4));
    std::size_t      le  = rel.find("<=");
    if (le == std::string_view::npos) {
      throw ParseError("expected \"<=\"");
    }
    auto  lhs = rel.substr(0, le);
    auto  rhs = rel.substr(le + 2);
    Query q{};
    if (!mon.empty() && mon[0] == 'C') {
      auto p  = parse_params(mon.substr(1), 2);
      q.is_cnk = true;
      q.cnk    = Cnk{p[0], p[1]};
      check(q.cnk);
      q.lhs_cnk = parse_cnk_side(lhs);
      q.rhs_cnk = parse_cnk_side(rhs);
      return q;
    }
    if (!mon.empty() && mon[0] == 'M') {
      auto p  = parse_params(mon.substr(1), 3);
      q.is_cnk = false;
      q.mnkl   = Mnkl{p[0], p[1], p[2]};
      check(q.mnkl);
      q.lhs = parse_mnkl_element(q.mnkl, lhs);
      q.rhs = parse_mnkl_element(q.mnkl, rhs);
      return q;
    }
    throw ParseError("unknown monoid \"" + std::string(mon) + "\"");
  }

}  // namespace ugn::monoids
