#include "ugn/rings.hpp"

#include <numeric>  // for gcd
#include <sstream>  // for ostringstream

#include "text_util.hpp"

namespace ugn::rings {

  ////////////////////////////////////////////////////////////////////////
  // Element
  ////////////////////////////////////////////////////////////////////////

  Scalar const& Element::scalar() const {
    if (auto const* p = std::get_if<Scalar>(&_data)) {
      return *p;
    }
    throw Error("element is not a scalar");
  }

  Element::Parts const& Element::parts() const {
    if (auto const* p = std::get_if<Parts>(&_data)) {
      return *p;
    }
    throw Error("element has no parts");
  }

  Element::Handle const& Element::handle() const {
    if (auto const* p = std::get_if<Handle>(&_data)) {
      return *p;
    }
    throw Error("element is not a presented-ring value");
  }

  ////////////////////////////////////////////////////////////////////////
  // ScalarDomain
  ////////////////////////////////////////////////////////////////////////

  ScalarDomain ScalarDomain::integers_mod(long modulus) {
    if (modulus < 2) {
      throw Error("Z/m requires m >= 2, found " + std::to_string(modulus));
    }
    return ScalarDomain(Kind::integers_mod, modulus);
  }

  Scalar ScalarDomain::canonical(Scalar const& x) const {
    Scalar y(x);
    y.canonicalize();
    switch (_kind) {
      case Kind::rationals:
        return y;
      case Kind::integers:
        if (y.get_den() != 1) {
          throw Error(y.get_str() + " is not an integer");
        }
        return y;
      case Kind::integers_mod: {
        if (y.get_den() != 1) {
          throw Error(y.get_str() + " is not an element of " + name());
        }
        mpz_class r = y.get_num() % _modulus;
        if (r < 0) {
          r += _modulus;
        }
        return Scalar(r);
      }
    }
    return y;
  }

  std::optional<Scalar> ScalarDomain::inverse(Scalar const& x) const {
    Scalar y = canonical(x);
    switch (_kind) {
      case Kind::rationals:
        if (y == 0) {
          return std::nullopt;
        }
        return canonical(1 / y);
      case Kind::integers:
        if (y == 1 || y == -1) {
          return y;
        }
        return std::nullopt;
      case Kind::integers_mod: {
        mpz_class inv;
        mpz_class m(_modulus);
        mpz_class num = y.get_num();
        if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t()) == 0) {
          return std::nullopt;
        }
        return canonical(Scalar(inv));
      }
    }
    return std::nullopt;
  }

  std::string ScalarDomain::name() const {
    switch (_kind) {
      case Kind::integers:
        return "Z";
      case Kind::rationals:
        return "Q";
      case Kind::integers_mod:
        return "Z/" + std::to_string(_modulus);
    }
    return "?";
  }

  Scalar ScalarDomain::parse(std::string_view text) const {
    auto s = detail::trim(text);
    if (s.empty()) {
      throw ParseError("empty scalar");
    }
    std::string clean;
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '/'
          && c != '+') {
        throw ParseError("invalid scalar \"" + std::string(s) + "\"");
      }
      clean.push_back(c);
    }
    if (!clean.empty() && clean.front() == '+') {
      clean.erase(0, 1);
    }
    Scalar v;
    try {
      v = Scalar(clean);
    } catch (std::exception const&) {
      throw ParseError("invalid scalar \"" + std::string(s) + "\"");
    }
    if (v.get_den() == 0) {
      throw ParseError("zero denominator in \"" + std::string(s) + "\"");
    }
    try {
      return canonical(v);
    } catch (Error const& e) {
      throw ParseError(e.what());
    }
  }

  std::string ScalarDomain::format(Scalar const& x) {
    Scalar y(x);
    y.canonicalize();
    return y.get_str();
  }

  ////////////////////////////////////////////////////////////////////////
  // RingImpl defaults
  ////////////////////////////////////////////////////////////////////////

  Element RingImpl::from_integer(mpz_class const& k) const {
    mpz_class n      = abs(k);
    Element   result = zero();
    Element   addend = one();
    while (n > 0) {
      if (mpz_odd_p(n.get_mpz_t())) {
        result = add(result, addend);
      }
      n >>= 1;
      if (n > 0) {
        addend = add(addend, addend);
      }
    }
    return k < 0 ? neg(result) : result;
  }

  std::optional<Element> RingImpl::inverse(Element const&) const {
    return std::nullopt;
  }

  std::optional<Coordinates> RingImpl::coordinates(Element const&) const {
    return std::nullopt;
  }

  Ring::Ring(std::shared_ptr<RingImpl const> impl) : _impl(std::move(impl)) {
    if (_impl == nullptr) {
      throw Error("null ring");
    }
  }

  namespace {

    class ScalarRingImpl final : public RingImpl {
     public:
      explicit ScalarRingImpl(ScalarDomain d) : _d(d) {}

      ScalarDomain const& domain() const {
        return _d;
      }

      RingKind kind() const override {
        return RingKind::scalar;
      }
      std::string name() const override {
        return _d.name();
      }
      Element zero() const override {
        return Element(Scalar(0));
      }
      Element one() const override {
        return Element(_d.canonical(Scalar(1)));
      }
      Element add(Element const& x, Element const& y) const override {
        return Element(_d.add(x.scalar(), y.scalar()));
      }
      Element neg(Element const& x) const override {
        return Element(_d.neg(x.scalar()));
      }
      Element mul(Element const& x, Element const& y) const override {
        return Element(_d.mul(x.scalar(), y.scalar()));
      }
      bool equal(Element const& x, Element const& y) const override {
        return _d.canonical(x.scalar()) == _d.canonical(y.scalar());
      }
      std::string format(Element const& x) const override {
        return ScalarDomain::format(x.scalar());
      }
      Element parse(std::string_view text) const override {
        return Element(_d.parse(text));
      }
      Element from_integer(mpz_class const& k) const override {
        return Element(_d.canonical(Scalar(k)));
      }
      std::optional<Element> inverse(Element const& x) const override {
        if (auto inv = _d.inverse(x.scalar())) {
          return Element(*inv);
        }
        return std::nullopt;
      }
      std::optional<Coordinates> coordinates(Element const& x) const override {
        Coordinates c;
        Scalar      v = _d.canonical(x.scalar());
        if (v != 0) {
          c.emplace("1", v);
        }
        return c;
      }
      bool is_commutative() const override {
        return true;
      }

     private:
      ScalarDomain _d;
    };

    class MatrixRingImpl final : public RingImpl {
     public:
      MatrixRingImpl(Ring base, std::size_t size)
          : _base(std::move(base)), _size(size) {
        if (size == 0) {
          throw Error("matrix ring size must be positive");
        }
      }

      Ring const& base() const {
        return _base;
      }
      std::size_t size() const {
        return _size;
      }

      RingKind kind() const override {
        return RingKind::matrix;
      }
      std::string name() const override {
        return "M" + std::to_string(_size) + "(" + _base.name() + ")";
      }
      Element zero() const override {
        return Element(Element::Parts(_size * _size, _base.zero()));
      }
      Element one() const override {
        Element::Parts p(_size * _size, _base.zero());
        for (std::size_t i = 0; i < _size; ++i) {
          p[i * _size + i] = _base.one();
        }
        return Element(std::move(p));
      }
      Element add(Element const& x, Element const& y) const override {
        auto const&    a = checked(x);
        auto const&    b = checked(y);
        Element::Parts p;
        p.reserve(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
          p.push_back(_base.add(a[i], b[i]));
        }
        return Element(std::move(p));
      }
      Element neg(Element const& x) const override {
        auto const&    a = checked(x);
        Element::Parts p;
        p.reserve(a.size());
        for (auto const& e : a) {
          p.push_back(_base.neg(e));
        }
        return Element(std::move(p));
      }
      Element mul(Element const& x, Element const& y) const override {
        auto const&    a = checked(x);
        auto const&    b = checked(y);
        Element::Parts p(_size * _size, _base.zero());
        for (std::size_t i = 0; i < _size; ++i) {
          for (std::size_t k = 0; k < _size; ++k) {
            auto const& aik = a[i * _size + k];
            if (_base.is_zero(aik)) {
              continue;
            }
            for (std::size_t j = 0; j < _size; ++j) {
              auto const& bkj = b[k * _size + j];
              if (_base.is_zero(bkj)) {
                continue;
              }
              p[i * _size + j] = _base.add(p[i * _size + j], _base.mul(aik, bkj));
            }
          }
        }
        return Element(std::move(p));
      }
      bool equal(Element const& x, Element const& y) const override {
        auto const& a = checked(x);
        auto const& b = checked(y);
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (!_base.equal(a[i], b[i])) {
            return false;
          }
        }
        return true;
      }
      std::string format(Element const& x) const override {
        auto const&        a = checked(x);
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < _size; ++i) {
          os << (i == 0 ? "[" : ", [");
          for (std::size_t j = 0; j < _size; ++j) {
            os << (j == 0 ? "" : ", ") << _base.format(a[i * _size + j]);
          }
          os << "]";
        }
        os << "]";
        return os.str();
      }
      Element parse(std::string_view text) const override {
        auto s = text;
        if (!detail::strip_enclosing(s, '[', ']')) {
          throw ParseError("expected [[...], ...] for " + name());
        }
        auto rows = detail::split_top_level(s, ',');
        if (rows.size() != _size) {
          throw ParseError("expected " + std::to_string(_size) + " rows for "
                           + name());
        }
        Element::Parts p;
        for (auto const& row : rows) {
          std::string_view r = row;
          if (!detail::strip_enclosing(r, '[', ']')) {
            throw ParseError("expected [...] row for " + name());
          }
          auto cells = detail::split_top_level(r, ',');
          if (cells.size() != _size) {
            throw ParseError("expected " + std::to_string(_size)
                             + " entries per row for " + name());
          }
          for (auto const& c : cells) {
            p.push_back(_base.parse(c));
          }
        }
        return Element(std::move(p));
      }
      std::optional<Coordinates> coordinates(Element const& x) const override {
        auto const& a = checked(x);
        Coordinates out;
        for (std::size_t i = 0; i < a.size(); ++i) {
          auto c = _base.coordinates(a[i]);
          if (!c) {
            return std::nullopt;
          }
          std::string prefix = "(" + std::to_string(i / _size + 1) + ","
                               + std::to_string(i % _size + 1) + ")";
          for (auto& [k, v] : *c) {
            out.emplace(prefix + k, v);
          }
        }
        return out;
      }
      bool is_commutative() const override {
        return _size == 1 && _base.is_commutative();
      }

     private:
      Element::Parts const& checked(Element const& x) const {
        auto const& p = x.parts();
        if (p.size() != _size * _size) {
          throw Error("element has the wrong shape for " + name());
        }
        return p;
      }

      Ring        _base;
      std::size_t _size;
    };

    class ProductRingImpl final : public RingImpl {
     public:
      explicit ProductRingImpl(std::vector<Ring> factors)
          : _factors(std::move(factors)) {
        if (_factors.empty()) {
          throw Error("a product ring needs at least one factor");
        }
      }

      std::vector<Ring> const& factors() const {
        return _factors;
      }

      RingKind kind() const override {
        return RingKind::product;
      }
      std::string name() const override {
        std::string s = "prod(";
        for (std::size_t i = 0; i < _factors.size(); ++i) {
          s += (i == 0 ? "" : ";") + _factors[i].name();
        }
        return s + ")";
      }
      Element zero() const override {
        return build([](Ring const& r, std::size_t) { return r.zero(); });
      }
      Element one() const override {
        return build([](Ring const& r, std::size_t) { return r.one(); });
      }
      Element add(Element const& x, Element const& y) const override {
        auto const& a = checked(x);
        auto const& b = checked(y);
        return build(
            [&](Ring const& r, std::size_t i) { return r.add(a[i], b[i]); });
      }
      Element neg(Element const& x) const override {
        auto const& a = checked(x);
        return build([&](Ring const& r, std::size_t i) { return r.neg(a[i]); });
      }
      Element mul(Element const& x, Element const& y) const override {
        auto const& a = checked(x);
        auto const& b = checked(y);
        return build(
            [&](Ring const& r, std::size_t i) { return r.mul(a[i], b[i]); });
      }
      bool equal(Element const& x, Element const& y) const override {
        auto const& a = checked(x);
        auto const& b = checked(y);
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (!_factors[i].equal(a[i], b[i])) {
            return false;
          }
        }
        return true;
      }
      std::string format(Element const& x) const override {
        auto const& a = checked(x);
        std::string s = "(";
        for (std::size_t i = 0; i < a.size(); ++i) {
          s += (i == 0 ? "" : "; ") + _factors[i].format(a[i]);
        }
        return s + ")";
      }
      Element parse(std::string_view text) const override {
        auto s = text;
        if (!detail::strip_enclosing(s, '(', ')')) {
          throw ParseError("expected (x; y; ...) for " + name());
        }
        auto cells = detail::split_top_level(s, ';');
        if (cells.size() != _factors.size()) {
          throw ParseError("wrong number of components for " + name());
        }
        Element::Parts p;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          p.push_back(_factors[i].parse(cells[i]));
        }
        return Element(std::move(p));
      }
      std::optional<Element> inverse(Element const& x) const override {
        auto const&    a = checked(x);
        Element::Parts p;
        for (std::size_t i = 0; i < a.size(); ++i) {
          auto inv = _factors[i].inverse(a[i]);
          if (!inv) {
            return std::nullopt;
          }
          p.push_back(*inv);
        }
        return Element(std::move(p));
      }
      std::optional<Coordinates> coordinates(Element const& x) const override {
        auto const& a = checked(x);
        Coordinates out;
        for (std::size_t i = 0; i < a.size(); ++i) {
          auto c = _factors[i].coordinates(a[i]);
          if (!c) {
            return std::nullopt;
          }
          for (auto& [k, v] : *c) {
            out.emplace(std::to_string(i + 1) + ":" + k, v);
          }
        }
        return out;
      }
      bool is_commutative() const override {
        for (auto const& f : _factors) {
          if (!f.is_commutative()) {
            return false;
          }
        }
        return true;
      }

     private:
      template <typename F>
      Element build(F&& f) const {
        Element::Parts p;
        p.reserve(_factors.size());
        for (std::size_t i = 0; i < _factors.size(); ++i) {
          p.push_back(f(_factors[i], i));
        }
        return Element(std::move(p));
      }

      Element::Parts const& checked(Element const& x) const {
        auto const& p = x.parts();
        if (p.size() != _factors.size()) {
          throw Error("element has the wrong number of components for "
                      + name());
        }
        return p;
      }

      std::vector<Ring> _factors;
    };

    // Same elements, same addition; only the order of multiplication flips.
    class OppositeRingImpl final : public RingImpl {
     public:
      explicit OppositeRingImpl(Ring base) : _base(std::move(base)) {}

      Ring const& base() const {
        return _base;
      }

      RingKind kind() const override {
        return RingKind::opposite;
      }
      std::string name() const override {
        return "op(" + _base.name() + ")";
      }
      Element zero() const override {
        return _base.zero();
      }
      Element one() const override {
        return _base.one();
      }
      Element add(Element const& x, Element const& y) const override {
        return _base.add(x, y);
      }
      Element neg(Element const& x) const override {
        return _base.neg(x);
      }
      Element mul(Element const& x, Element const& y) const override {
        return _base.mul(y, x);
      }
      bool equal(Element const& x, Element const& y) const override {
        return _base.equal(x, y);
      }
      std::string format(Element const& x) const override {
        return _base.format(x);
      }
      Element parse(std::string_view text) const override {
        return _base.parse(text);
      }
      Element from_integer(mpz_class const& k) const override {
        return _base.impl().from_integer(k);
      }
      std::optional<Element> inverse(Element const& x) const override {
        return _base.inverse(x);
      }
      std::optional<Coordinates> coordinates(Element const& x) const override {
        return _base.coordinates(x);
      }
      bool is_commutative() const override {
        return _base.is_commutative();
      }

     private:
      Ring _base;
    };

  }  // namespace

  Ring scalar_ring(ScalarDomain const& domain) {
    return Ring(std::make_shared<ScalarRingImpl>(domain));
  }

  Ring integers() {
    static Ring const z = scalar_ring(ScalarDomain::integers());
    return z;
  }

  Ring integers_mod(long modulus) {
    return scalar_ring(ScalarDomain::integers_mod(modulus));
  }

  Ring rationals() {
    static Ring const q = scalar_ring(ScalarDomain::rationals());
    return q;
  }

  Ring matrix_ring(Ring const& base, std::size_t size) {
    return Ring(std::make_shared<MatrixRingImpl>(base, size));
  }

  Ring product(std::vector<Ring> const& factors) {
    return Ring(std::make_shared<ProductRingImpl>(factors));
  }

  Ring opposite(Ring const& base) {
    if (auto const* op = dynamic_cast<OppositeRingImpl const*>(&base.impl())) {
      return op->base();
    }
    return Ring(std::make_shared<OppositeRingImpl>(base));
  }

  std::optional<ScalarDomain> scalar_domain(Ring const& ring) {
    if (auto const* s = dynamic_cast<ScalarRingImpl const*>(&ring.impl())) {
      return s->domain();
    }
    return std::nullopt;
  }

  std::optional<MatrixRingParts> matrix_parts(Ring const& ring) {
    if (auto const* m = dynamic_cast<MatrixRingImpl const*>(&ring.impl())) {
      return MatrixRingParts{m->base(), m->size()};
    }
    return std::nullopt;
  }

  std::optional<std::vector<Ring>> product_factors(Ring const& ring) {
    if (auto const* p = dynamic_cast<ProductRingImpl const*>(&ring.impl())) {
      return p->factors();
    }
    return std::nullopt;
  }

  std::optional<Ring> opposite_base(Ring const& ring) {
    if (auto const* op = dynamic_cast<OppositeRingImpl const*>(&ring.impl())) {
      return op->base();
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // RingMatrix
  ////////////////////////////////////////////////////////////////////////

  RingMatrix::RingMatrix(Ring ring, std::size_t rows, std::size_t cols)
      : _ring(std::move(ring)),
        _rows(rows),
        _cols(cols),
        _entries(rows * cols, _ring.zero()) {}

  RingMatrix::RingMatrix(Ring                 ring,
                         std::size_t          rows,
                         std::size_t          cols,
                         std::vector<Element> entries)
      : _ring(std::move(ring)),
        _rows(rows),
        _cols(cols),
        _entries(std::move(entries)) {
    if (_entries.size() != rows * cols) {
      throw Error("matrix has " + std::to_string(_entries.size())
                  + " entries, expected " + std::to_string(rows * cols));
    }
  }

  RingMatrix RingMatrix::identity(Ring const& ring, std::size_t size) {
    RingMatrix m(ring, size, size);
    for (std::size_t i = 0; i < size; ++i) {
      m.set(i, i, ring.one());
    }
    return m;
  }

  Element const& RingMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= _rows || j >= _cols) {
      throw Error("matrix index out of range");
    }
    return _entries[i * _cols + j];
  }

  void RingMatrix::set(std::size_t i, std::size_t j, Element value) {
    if (i >= _rows || j >= _cols) {
      throw Error("matrix index out of range");
    }
    _entries[i * _cols + j] = std::move(value);
  }

  RingMatrix RingMatrix::transpose() const {
    RingMatrix t(_ring, _cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        t.set(j, i, at(i, j));
      }
    }
    return t;
  }

  RingMatrix RingMatrix::reinterpret(Ring const& ring) const {
    return RingMatrix(ring, _rows, _cols, _entries);
  }

  bool RingMatrix::is_identity() const {
    if (_rows != _cols) {
      return false;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        bool ok = (i == j) ? _ring.is_one(at(i, j)) : _ring.is_zero(at(i, j));
        if (!ok) {
          return false;
        }
      }
    }
    return true;
  }

  bool RingMatrix::is_zero() const {
    for (auto const& e : _entries) {
      if (!_ring.is_zero(e)) {
        return false;
      }
    }
    return true;
  }

  RingMatrix mat_mul(RingMatrix const& a, RingMatrix const& b) {
    if (a.ring() != b.ring()) {
      throw Error("ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
    }
    if (a.cols() != b.rows()) {
      throw Error("dimension mismatch: " + std::to_string(a.rows()) + "x"
                  + std::to_string(a.cols()) + " times "
                  + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    Ring const& r = a.ring();
    RingMatrix  c(r, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        auto const& aik = a.at(i, k);
        if (r.is_zero(aik)) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          auto const& bkj = b.at(k, j);
          if (r.is_zero(bkj)) {
            continue;
          }
          c.set(i, j, r.add(c.at(i, j), r.mul(aik, bkj)));
        }
      }
    }
    return c;
  }

  RingMatrix mat_add(RingMatrix const& a, RingMatrix const& b) {
    if (a.ring() != b.ring()) {
      throw Error("ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
    }
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw Error("dimension mismatch in matrix addition");
    }
    RingMatrix c(a.ring(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        c.set(i, j, a.ring().add(a.at(i, j), b.at(i, j)));
      }
    }
    return c;
  }

  bool mat_equal(RingMatrix const& a, RingMatrix const& b) {
    if (a.ring() != b.ring() || a.rows() != b.rows() || a.cols() != b.cols()) {
      return false;
    }
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
      if (!a.ring().equal(a.entries()[i], b.entries()[i])) {
        return false;
      }
    }
    return true;
  }

  std::string format_matrix(RingMatrix const& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      os << (i == 0 ? "[" : ", [");
      for (std::size_t j = 0; j < m.cols(); ++j) {
        os << (j == 0 ? "" : ", ") << m.ring().format(m.at(i, j));
      }
      os << "]";
    }
    os << "]";
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  RingHom identity_hom(Ring const& ring) {
    return RingHom{ring, ring, [](Element const& x) { return x; }, "id"};
  }

  RingHom reduction_hom(long modulus) {
    auto target = integers_mod(modulus);
    auto d      = ScalarDomain::integers_mod(modulus);
    return RingHom{integers(),
                   target,
                   [d](Element const& x) { return Element(d.canonical(x.scalar())); },
                   "mod " + std::to_string(modulus)};
  }

  RingHom projection_hom(Ring const& product_ring, std::size_t index) {
    auto factors = product_factors(product_ring);
    if (!factors) {
      throw Error(product_ring.name() + " is not a product ring");
    }
    if (index >= factors->size()) {
      throw Error("projection index out of range");
    }
    return RingHom{product_ring,
                   (*factors)[index],
                   [index](Element const& x) { return x.parts().at(index); },
                   "proj" + std::to_string(index + 1)};
  }

}  // namespace ugn::rings
