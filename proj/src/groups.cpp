#include "ugn/groups.hpp"

#include <algorithm>      // for sort, unique, lower_bound
#include <cctype>         // for isalpha, isdigit
#include <unordered_set>  // for unordered_set

#include "text_util.hpp"

namespace ugn::groups {

  ////////////////////////////////////////////////////////////////////////
  // GroupElement
  ////////////////////////////////////////////////////////////////////////

  bool operator==(GroupElement const& x, GroupElement const& y) {
    return x.v == y.v && x.parts == y.parts;
  }

  bool operator<(GroupElement const& x, GroupElement const& y) {
    if (x.v != y.v) {
      return x.v < y.v;
    }
    return std::lexicographical_compare(
        x.parts.begin(), x.parts.end(), y.parts.begin(), y.parts.end());
  }

  std::size_t GroupElementHash::operator()(GroupElement const& x) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ x.v.size();
    for (long c : x.v) {
      h ^= std::hash<long>()(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    for (auto const& p : x.parts) {
      h ^= (*this)(p) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group
  ////////////////////////////////////////////////////////////////////////

  struct Group::Data {
    GroupKind          kind;
    long               param;
    std::vector<Group> factors;
  };

  Group Group::free(std::size_t rank) {
    if (rank < 1 || rank > 26) {
      throw Error("free group rank must be between 1 and 26");
    }
    return Group(std::make_shared<Data const>(
        Data{GroupKind::free, static_cast<long>(rank), {}}));
  }

  Group Group::free_abelian(std::size_t rank) {
    if (rank < 1) {
      throw Error("free abelian rank must be positive");
    }
    return Group(std::make_shared<Data const>(
        Data{GroupKind::free_abelian, static_cast<long>(rank), {}}));
  }

  Group Group::baumslag_solitar(long k) {
    if (k < 2) {
      throw Error("BS(1,k) requires k >= 2");
    }
    return Group(
        std::make_shared<Data const>(Data{GroupKind::baumslag_solitar, k, {}}));
  }

  Group Group::cyclic(long order) {
    if (order < 1) {
      throw Error("cyclic group order must be positive");
    }
    return Group(std::make_shared<Data const>(Data{GroupKind::cyclic, order, {}}));
  }

  Group Group::direct_product(std::vector<Group> factors) {
    if (factors.empty()) {
      throw Error("direct product of no groups");
    }
    if (factors.size() == 1) {
      return factors.front();
    }
    std::vector<Group> flat;
    for (auto& f : factors) {
      if (f.kind() == GroupKind::direct_product) {
        flat.insert(flat.end(), f.factors().begin(), f.factors().end());
      } else {
        flat.push_back(f);
      }
    }
    return Group(std::make_shared<Data const>(
        Data{GroupKind::direct_product, 0, std::move(flat)}));
  }

  namespace {

    Group parse_factor(std::string_view s) {
      s = detail::trim(s);
      auto starts = [&](std::string_view p) { return s.substr(0, p.size()) == p; };
      try {
        if (s == "Z") {
          return Group::free_abelian(1);
        }
        if (starts("Z^")) {
          return Group::free_abelian(detail::parse_long(s.substr(2)));
        }
        if (starts("F") && s.size() > 1) {
          return Group::free(detail::parse_long(s.substr(1)));
        }
        if (starts("BS(1,") && s.back() == ')') {
          return Group::baumslag_solitar(
              detail::parse_long(s.substr(5, s.size() - 6)));
        }
        if (starts("C(") && s.back() == ')') {
          return Group::cyclic(detail::parse_long(s.substr(2, s.size() - 3)));
        }
        if (starts("C") && s.size() > 1) {
          return Group::cyclic(detail::parse_long(s.substr(1)));
        }
      } catch (ParseError const&) {
        // fall through to the generic message
      }
      throw ParseError("unknown group \"" + std::string(s) + "\"");
    }

  }  // namespace

  Group Group::parse(std::string_view name) {
    std::vector<Group> fs;
    std::string        cur;
    int                depth = 0;
    for (char c : name) {
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        --depth;
      }
      if (c == 'x' && depth == 0) {
        fs.push_back(parse_factor(cur));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    fs.push_back(parse_factor(cur));
    return direct_product(std::move(fs));
  }

  GroupKind Group::kind() const noexcept {
    return _d->kind;
  }

  long Group::parameter() const noexcept {
    return _d->param;
  }

  std::vector<Group> const& Group::factors() const noexcept {
    return _d->factors;
  }

  std::string Group::name() const {
    switch (kind()) {
      case GroupKind::free:
        return "F" + std::to_string(parameter());
      case GroupKind::free_abelian:
        return parameter() == 1 ? "Z" : "Z^" + std::to_string(parameter());
      case GroupKind::baumslag_solitar:
        return "BS(1," + std::to_string(parameter()) + ")";
      case GroupKind::cyclic:
        return "C(" + std::to_string(parameter()) + ")";
      case GroupKind::direct_product: {
        std::string s;
        for (auto const& f : factors()) {
          s += (s.empty() ? "" : "x") + f.name();
        }
        return s;
      }
    }
    return "?";
  }

  GroupElement Group::identity() const {
    switch (kind()) {
      case GroupKind::free:
        return {};
      case GroupKind::free_abelian:
        return {std::vector<long>(parameter(), 0), {}};
      case GroupKind::baumslag_solitar:
        return {{0, 0, 0}, {}};
      case GroupKind::cyclic:
        return {{0}, {}};
      case GroupKind::direct_product: {
        GroupElement e;
        for (auto const& f : factors()) {
          e.parts.push_back(f.identity());
        }
        return e;
      }
    }
    return {};
  }

  namespace {

    mpz_class power(long k, long e) {
      mpz_class r;
      mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(k), e);
      return r;
    }

    long to_long(mpz_class const& z) {
      if (!z.fits_slong_p()) {
        throw Error("group element coordinate overflow");
      }
      return z.get_si();
    }

  }  // namespace

  mpq_class Group::bs_t(GroupElement const& x) const {
    if (kind() != GroupKind::baumslag_solitar) {
      throw Error(name() + " is not a Baumslag-Solitar group");
    }
    mpq_class t(mpz_class(x.v.at(0)), power(parameter(), x.v.at(1)));
    t.canonicalize();
    return t;
  }

  long Group::bs_m(GroupElement const& x) const {
    if (kind() != GroupKind::baumslag_solitar) {
      throw Error(name() + " is not a Baumslag-Solitar group");
    }
    return x.v.at(2);
  }

  GroupElement Group::bs_element(mpq_class const& t, long m) const {
    if (kind() != GroupKind::baumslag_solitar) {
      throw Error(name() + " is not a Baumslag-Solitar group");
    }
    mpq_class u(t);
    u.canonicalize();
    for (long e = 0; e <= 64; ++e) {
      mpq_class scaled = u * mpq_class(power(parameter(), e));
      scaled.canonicalize();
      if (scaled.get_den() == 1) {
        return {{to_long(scaled.get_num()), e, m}, {}};
      }
    }
    throw Error(u.get_str() + " is not in Z[1/" + std::to_string(parameter())
                + "]");
  }

  GroupElement Group::mul(GroupElement const& x, GroupElement const& y) const {
    switch (kind()) {
      case GroupKind::free: {
        GroupElement r = x;
        for (long c : y.v) {
          if (!r.v.empty() && r.v.back() == (c ^ 1)) {
            r.v.pop_back();
          } else {
            r.v.push_back(c);
          }
        }
        return r;
      }
      case GroupKind::free_abelian: {
        if (x.v.size() != y.v.size()) {
          throw Error("element does not belong to " + name());
        }
        GroupElement r = x;
        for (std::size_t i = 0; i < r.v.size(); ++i) {
          r.v[i] += y.v[i];
        }
        return r;
      }
      case GroupKind::baumslag_solitar: {
        long      m = bs_m(x);
        mpq_class s = bs_t(y);
        if (m >= 0) {
          s *= mpq_class(power(parameter(), m));
        } else {
          s /= mpq_class(power(parameter(), -m));
        }
        return bs_element(bs_t(x) + s, m + bs_m(y));
      }
      case GroupKind::cyclic: {
        long r = (x.v.at(0) + y.v.at(0)) % parameter();
        return {{r}, {}};
      }
      case GroupKind::direct_product: {
        if (x.parts.size() != factors().size()
            || y.parts.size() != factors().size()) {
          throw Error("element does not belong to " + name());
        }
        GroupElement r;
        for (std::size_t i = 0; i < factors().size(); ++i) {
          r.parts.push_back(factors()[i].mul(x.parts[i], y.parts[i]));
        }
        return r;
      }
    }
    return {};
  }

  GroupElement Group::inverse(GroupElement const& x) const {
    switch (kind()) {
      case GroupKind::free: {
        GroupElement r;
        for (auto it = x.v.rbegin(); it != x.v.rend(); ++it) {
          r.v.push_back(*it ^ 1);
        }
        return r;
      }
      case GroupKind::free_abelian: {
        GroupElement r = x;
        for (auto& c : r.v) {
          c = -c;
        }
        return r;
      }
      case GroupKind::baumslag_solitar: {
        // (t, m)^-1 = (-k^-m t, -m)
        long      m = bs_m(x);
        mpq_class t = -bs_t(x);
        if (m >= 0) {
          t /= mpq_class(power(parameter(), m));
        } else {
          t *= mpq_class(power(parameter(), -m));
        }
        return bs_element(t, -m);
      }
      case GroupKind::cyclic:
        return {{(parameter() - x.v.at(0)) % parameter()}, {}};
      case GroupKind::direct_product: {
        GroupElement r;
        for (std::size_t i = 0; i < factors().size(); ++i) {
          r.parts.push_back(factors()[i].inverse(x.parts.at(i)));
        }
        return r;
      }
    }
    return {};
  }

  GroupElement Group::pow(GroupElement const& x, long e) const {
    GroupElement base = e < 0 ? inverse(x) : x;
    GroupElement r    = identity();
    for (long i = 0; i < (e < 0 ? -e : e); ++i) {
      r = mul(r, base);
    }
    return r;
  }

  std::vector<GroupElement> Group::generators() const {
    std::vector<GroupElement> gens;
    switch (kind()) {
      case GroupKind::free:
        for (long i = 0; i < parameter(); ++i) {
          gens.push_back({{2 * i}, {}});
        }
        break;
      case GroupKind::free_abelian:
        for (long i = 0; i < parameter(); ++i) {
          GroupElement e = identity();
          e.v[i]         = 1;
          gens.push_back(e);
        }
        break;
      case GroupKind::baumslag_solitar:
        gens.push_back({{1, 0, 0}, {}});
        gens.push_back({{0, 0, 1}, {}});
        break;
      case GroupKind::cyclic:
        gens.push_back({{1 % parameter()}, {}});
        break;
      case GroupKind::direct_product:
        for (std::size_t i = 0; i < factors().size(); ++i) {
          for (auto const& g : factors()[i].generators()) {
            GroupElement e = identity();
            e.parts[i]     = g;
            gens.push_back(e);
          }
        }
        break;
    }
    return gens;
  }

  std::vector<GroupElement> Group::symmetric_generators() const {
    std::vector<GroupElement> out;
    auto                      id  = identity();
    auto                      add = [&](GroupElement const& g) {
      if (g != id && std::find(out.begin(), out.end(), g) == out.end()) {
        out.push_back(g);
      }
    };
    for (auto const& g : generators()) {
      add(g);
      add(inverse(g));
    }
    return out;
  }

  std::optional<std::size_t> Group::order() const {
    switch (kind()) {
      case GroupKind::cyclic:
        return static_cast<std::size_t>(parameter());
      case GroupKind::direct_product: {
        std::size_t n = 1;
        for (auto const& f : factors()) {
          auto o = f.order();
          if (!o) {
            return std::nullopt;
          }
          n *= *o;
        }
        return n;
      }
      default:
        return std::nullopt;
    }
  }

  void Group::check(GroupElement const& x) const {
    auto fail = [&] { throw Error("element does not belong to " + name()); };
    switch (kind()) {
      case GroupKind::free:
        if (!x.parts.empty()) {
          fail();
        }
        for (std::size_t i = 0; i < x.v.size(); ++i) {
          if (x.v[i] < 0 || x.v[i] >= 2 * parameter()) {
            fail();
          }
          if (i > 0 && x.v[i] == (x.v[i - 1] ^ 1)) {
            fail();
          }
        }
        return;
      case GroupKind::free_abelian:
        if (!x.parts.empty() || x.v.size() != static_cast<std::size_t>(parameter())) {
          fail();
        }
        return;
      case GroupKind::baumslag_solitar:
        if (!x.parts.empty() || x.v.size() != 3 || x.v[1] < 0
            || (x.v[1] > 0 && x.v[0] % parameter() == 0)) {
          fail();
        }
        return;
      case GroupKind::cyclic:
        if (!x.parts.empty() || x.v.size() != 1 || x.v[0] < 0
            || x.v[0] >= parameter()) {
          fail();
        }
        return;
      case GroupKind::direct_product:
        if (!x.v.empty() || x.parts.size() != factors().size()) {
          fail();
        }
        for (std::size_t i = 0; i < factors().size(); ++i) {
          factors()[i].check(x.parts[i]);
        }
        return;
    }
  }

  std::string Group::format(GroupElement const& x) const {
    switch (kind()) {
      case GroupKind::free: {
        if (x.v.empty()) {
          return "1";
        }
        std::string s;
        for (long c : x.v) {
          char letter = static_cast<char>('a' + c / 2);
          if (c % 2 == 1) {
            letter = static_cast<char>(std::toupper(letter));
          }
          if (!s.empty()) {
            s += ' ';
          }
          s += letter;
        }
        return s;
      }
      case GroupKind::free_abelian: {
        if (x.v.size() == 1) {
          return std::to_string(x.v[0]);
        }
        std::string s = "(";
        for (std::size_t i = 0; i < x.v.size(); ++i) {
          s += (i == 0 ? "" : ", ") + std::to_string(x.v[i]);
        }
        return s + ")";
      }
      case GroupKind::baumslag_solitar:
        return "(" + bs_t(x).get_str() + ", " + std::to_string(bs_m(x)) + ")";
      case GroupKind::cyclic:
        return std::to_string(x.v.at(0));
      case GroupKind::direct_product: {
        std::string s = "[";
        for (std::size_t i = 0; i < factors().size(); ++i) {
          s += (i == 0 ? "" : "; ") + factors()[i].format(x.parts.at(i));
        }
        return s + "]";
      }
    }
    return "?";
  }

  namespace {

    // Words over single letters, capital = inverse, with optional integer
    // exponents: "a b A", "ab^2", "1".
    GroupElement parse_word(Group const&       G,
                            std::string_view   text,
                            std::vector<GroupElement> const& letters) {
      auto s = detail::trim(text);
      if (s.empty() || s == "1" || s == "e") {
        return G.identity();
      }
      GroupElement r = G.identity();
      std::size_t  i = 0;
      while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
          ++i;
          continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) {
          throw ParseError("unexpected \"" + std::string(1, c) + "\" in word \""
                           + std::string(s) + "\"");
        }
        bool        inv = std::isupper(static_cast<unsigned char>(c));
        std::size_t idx = static_cast<std::size_t>(std::tolower(c) - 'a');
        if (idx >= letters.size()) {
          throw ParseError("unknown generator \"" + std::string(1, c) + "\" in "
                           + G.name());
        }
        GroupElement g = inv ? G.inverse(letters[idx]) : letters[idx];
        ++i;
        long e = 1;
        if (i < s.size() && s[i] == '^') {
          std::size_t j = ++i;
          if (j < s.size() && (s[j] == '-' || s[j] == '+')) {
            ++j;
          }
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
            ++j;
          }
          e = detail::parse_long(s.substr(i, j - i));
          i = j;
        }
        r = G.mul(r, G.pow(g, e));
      }
      return r;
    }

    std::vector<long> parse_longs(std::string_view s, std::size_t count) {
      std::string_view inner = s;
      if (!detail::strip_enclosing(inner, '(', ')')) {
        if (count == 1) {
          return {detail::parse_long(s)};
        }
        throw ParseError("expected a tuple, found \"" + std::string(s) + "\"");
      }
      auto pieces = detail::split_top_level(inner, ',');
      if (pieces.size() != count) {
        throw ParseError("expected " + std::to_string(count) + " coordinates in \""
                         + std::string(s) + "\"");
      }
      std::vector<long> out;
      for (auto const& p : pieces) {
        out.push_back(detail::parse_long(p));
      }
      return out;
    }

  }  // namespace

  GroupElement Group::parse_element(std::string_view text) const {
    auto s = detail::trim(text);
    switch (kind()) {
      case GroupKind::free:
        return parse_word(*this, s, generators());
      case GroupKind::free_abelian:
        return {parse_longs(s, parameter()), {}};
      case GroupKind::baumslag_solitar: {
        std::string_view inner = s;
        if (detail::strip_enclosing(inner, '(', ')')) {
          auto pieces = detail::split_top_level(inner, ',');
          if (pieces.size() != 2) {
            throw ParseError("expected (t, m) for " + name());
          }
          mpq_class t;
          try {
            t = mpq_class(std::string(detail::trim(pieces[0])));
          } catch (std::exception const&) {
            throw ParseError("invalid rational \"" + pieces[0] + "\"");
          }
          if (t.get_den() == 0) {
            throw ParseError("invalid rational \"" + pieces[0] + "\"");
          }
          try {
            return bs_element(t, detail::parse_long(pieces[1]));
          } catch (ParseError const&) {
            throw;
          } catch (Error const& e) {
            throw ParseError(e.what());
          }
        }
        return parse_word(*this, s, generators());
      }
      case GroupKind::cyclic: {
        long r = detail::parse_long(s) % parameter();
        return {{r < 0 ? r + parameter() : r}, {}};
      }
      case GroupKind::direct_product: {
        std::string_view inner = s;
        if (!detail::strip_enclosing(inner, '[', ']')) {
          throw ParseError("expected [g1; g2; ...] for " + name());
        }
        auto pieces = detail::split_top_level(inner, ';');
        if (pieces.size() != factors().size()) {
          throw ParseError("wrong number of components for " + name());
        }
        GroupElement e;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
          e.parts.push_back(factors()[i].parse_element(pieces[i]));
        }
        return e;
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Sets and balls
  ////////////////////////////////////////////////////////////////////////

  ElementSet canonical_set(ElementSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  bool set_contains(ElementSet const& sorted, GroupElement const& x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
  }

  ElementSet translate_set(Group const&        G,
                           GroupElement const& g,
                           ElementSet const&   A) {
    ElementSet out;
    out.reserve(A.size());
    for (auto const& a : A) {
      out.push_back(G.mul(g, a));
    }
    return canonical_set(std::move(out));
  }

  ElementSet set_product(Group const& G, ElementSet const& K, ElementSet const& A) {
    ElementSet out;
    out.reserve(K.size() * A.size());
    for (auto const& k : K) {
      for (auto const& a : A) {
        out.push_back(G.mul(k, a));
      }
    }
    return canonical_set(std::move(out));
  }

  ElementSet parse_set(Group const& G, std::string_view text) {
    auto s = detail::trim(text);
    if (!s.empty() && s.front() == 'B') {
      long r = detail::parse_long(s.substr(1));
      if (r < 0) {
        throw ParseError("negative radius");
      }
      return ball(G, static_cast<std::size_t>(r), std::max<std::size_t>(r, default_max_radius));
    }
    std::string_view inner = s;
    if (!detail::strip_enclosing(inner, '{', '}')) {
      throw ParseError("expected {x, y, ...} or B<r>, found \"" + std::string(s)
                       + "\"");
    }
    ElementSet out;
    for (auto const& piece : detail::split_top_level(inner, ',')) {
      out.push_back(G.parse_element(piece));
    }
    return out;
  }

  std::string format_set(Group const& G, ElementSet const& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      out += (i == 0 ? "" : ", ") + G.format(s[i]);
    }
    return out + "}";
  }

  std::vector<ElementSet> spheres(Group const& G,
                                  std::size_t  r,
                                  std::size_t  max_radius,
                                  std::size_t  max_elements) {
    if (r > max_radius) {
      throw Error("radius " + std::to_string(r) + " exceeds the maximum "
                  + std::to_string(max_radius));
    }
    auto                                                 gens = G.symmetric_generators();
    std::unordered_set<GroupElement, GroupElementHash> seen;
    std::vector<ElementSet>                              out;
    out.push_back({G.identity()});
    seen.insert(G.identity());
    std::size_t total = 1;
    for (std::size_t radius = 1; radius <= r; ++radius) {
      ElementSet next;
      for (auto const& x : out.back()) {
        for (auto const& g : gens) {
          auto y = G.mul(x, g);
          if (seen.insert(y).second) {
            next.push_back(std::move(y));
            if (++total > max_elements) {
              throw Error("ball of radius " + std::to_string(r) + " in "
                          + G.name() + " exceeds "
                          + std::to_string(max_elements) + " elements");
            }
          }
        }
      }
      out.push_back(std::move(next));
    }
    return out;
  }

  ElementSet ball(Group const& G,
                  std::size_t  r,
                  std::size_t  max_radius,
                  std::size_t  max_elements) {
    ElementSet out;
    for (auto& s : spheres(G, r, max_radius, max_elements)) {
      out.insert(out.end(), s.begin(), s.end());
    }
    return out;
  }

  ElementSet elements(Group const& G) {
    auto n = G.order();
    if (!n) {
      throw Error(G.name() + " is infinite");
    }
    auto       ss = spheres(G, *n, *n, *n);
    ElementSet out;
    for (auto& s : ss) {
      out.insert(out.end(), s.begin(), s.end());
    }
    return out;
  }

}  // namespace ugn::groups
