#ifndef UGN_RINGS_HPP_
#define UGN_RINGS_HPP_

#include <gmpxx.h>

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <map>         // for map
#include <memory>      // for shared_ptr
#include <optional>    // for optional
#include <string>      // for string
#include <string_view> // for string_view
#include <variant>     // for variant
#include <vector>      // for vector

#include "ugn/error.hpp"

// Exact coefficient rings and matrices over them.
//
// A Ring is a cheap, immutable handle onto a RingImpl. Elements are plain
// values whose interpretation belongs to the ring they are used with: a
// scalar for Z, Z/m and Q, a list of parts for matrix and product rings, or
// an opaque handle for presented algebras (Leavitt, Weyl, crossed products),
// whose owning modules supply the canonical forms.

namespace ugn::rings {

  using Scalar = mpq_class;

  //! Base of the opaque payloads used by presented rings.
  class PresentedValue {
   public:
    virtual ~PresentedValue() = default;
  };

  class Element {
   public:
    using Parts  = std::vector<Element>;
    using Handle = std::shared_ptr<PresentedValue const>;

    Element() : _data(Scalar(0)) {}
    explicit Element(Scalar s) : _data(std::move(s)) {}
    explicit Element(Parts parts) : _data(std::move(parts)) {}
    explicit Element(Handle h) : _data(std::move(h)) {}

    bool is_scalar() const noexcept {
      return std::holds_alternative<Scalar>(_data);
    }
    bool is_parts() const noexcept {
      return std::holds_alternative<Parts>(_data);
    }
    bool is_handle() const noexcept {
      return std::holds_alternative<Handle>(_data);
    }

    Scalar const& scalar() const;
    Parts const&  parts() const;
    Handle const& handle() const;

    template <typename T>
    T const& as() const {
      auto const* p = dynamic_cast<T const*>(handle().get());
      if (p == nullptr) {
        throw Error("element does not belong to the expected presented ring");
      }
      return *p;
    }

   private:
    std::variant<Scalar, Parts, Handle> _data;
  };

  //! The scalar rings Z, Z/m (m >= 2) and Q.
  class ScalarDomain {
   public:
    enum class Kind { integers, integers_mod, rationals };

    static ScalarDomain integers() {
      return ScalarDomain(Kind::integers, 0);
    }
    static ScalarDomain integers_mod(long modulus);
    static ScalarDomain rationals() {
      return ScalarDomain(Kind::rationals, 0);
    }

    Kind kind() const noexcept {
      return _kind;
    }
    long modulus() const noexcept {
      return _modulus;
    }

    // Reduces to the canonical representative; throws if the value is not
    // an element of the domain (e.g. 1/2 in Z).
    Scalar canonical(Scalar const& x) const;

    Scalar add(Scalar const& x, Scalar const& y) const {
      return canonical(x + y);
    }
    Scalar neg(Scalar const& x) const {
      return canonical(-x);
    }
    Scalar mul(Scalar const& x, Scalar const& y) const {
      return canonical(x * y);
    }
    std::optional<Scalar> inverse(Scalar const& x) const;
    bool is_unit(Scalar const& x) const {
      return inverse(x).has_value();
    }

    std::string name() const;
    Scalar      parse(std::string_view text) const;
    static std::string format(Scalar const& x);

    bool operator==(ScalarDomain const& that) const noexcept {
      return _kind == that._kind && _modulus == that._modulus;
    }

   private:
    ScalarDomain(Kind k, long m) : _kind(k), _modulus(m) {}

    Kind _kind;
    long _modulus;
  };

  //! Coordinates of an element with respect to a scalar basis, keyed by a
  //! basis label. Only available for rings that are free over a scalar
  //! domain with a named basis.
  using Coordinates = std::map<std::string, Scalar>;

  enum class RingKind { scalar, matrix, product, opposite, presented };

  class RingImpl {
   public:
    virtual ~RingImpl() = default;

    virtual RingKind    kind() const = 0;
    virtual std::string name() const = 0;

    virtual Element zero() const = 0;
    virtual Element one() const  = 0;
    virtual Element add(Element const& x, Element const& y) const = 0;
    virtual Element neg(Element const& x) const                   = 0;
    virtual Element mul(Element const& x, Element const& y) const = 0;
    virtual bool    equal(Element const& x, Element const& y) const = 0;

    virtual std::string format(Element const& x) const  = 0;
    virtual Element     parse(std::string_view text) const = 0;

    virtual Element from_integer(mpz_class const& k) const;
    virtual std::optional<Element> inverse(Element const& x) const;
    virtual std::optional<Coordinates> coordinates(Element const& x) const;
    virtual bool is_commutative() const {
      return false;
    }
  };

  class Ring {
   public:
    explicit Ring(std::shared_ptr<RingImpl const> impl);

    RingImpl const& impl() const noexcept {
      return *_impl;
    }
    RingKind kind() const {
      return _impl->kind();
    }
    std::string name() const {
      return _impl->name();
    }

    Element zero() const {
      return _impl->zero();
    }
    Element one() const {
      return _impl->one();
    }
    Element add(Element const& x, Element const& y) const {
      return _impl->add(x, y);
    }
    Element neg(Element const& x) const {
      return _impl->neg(x);
    }
    Element sub(Element const& x, Element const& y) const {
      return _impl->add(x, _impl->neg(y));
    }
    Element mul(Element const& x, Element const& y) const {
      return _impl->mul(x, y);
    }
    bool equal(Element const& x, Element const& y) const {
      return _impl->equal(x, y);
    }
    bool is_zero(Element const& x) const {
      return _impl->equal(x, _impl->zero());
    }
    bool is_one(Element const& x) const {
      return _impl->equal(x, _impl->one());
    }
    std::string format(Element const& x) const {
      return _impl->format(x);
    }
    Element parse(std::string_view text) const {
      return _impl->parse(text);
    }
    Element from_int(long k) const {
      return _impl->from_integer(mpz_class(k));
    }
    std::optional<Element> inverse(Element const& x) const {
      return _impl->inverse(x);
    }
    std::optional<Coordinates> coordinates(Element const& x) const {
      return _impl->coordinates(x);
    }
    bool is_commutative() const {
      return _impl->is_commutative();
    }

    // Rings are identified by their canonical descriptor text.
    bool operator==(Ring const& that) const {
      return _impl == that._impl || name() == that.name();
    }
    bool operator!=(Ring const& that) const {
      return !(*this == that);
    }

   private:
    std::shared_ptr<RingImpl const> _impl;
  };

  Ring integers();
  Ring integers_mod(long modulus);
  Ring rationals();
  Ring scalar_ring(ScalarDomain const& domain);
  Ring matrix_ring(Ring const& base, std::size_t size);
  Ring product(std::vector<Ring> const& factors);
  // opposite(opposite(R)) returns R itself.
  Ring opposite(Ring const& base);

  std::optional<ScalarDomain> scalar_domain(Ring const& ring);

  struct MatrixRingParts {
    Ring        base;
    std::size_t size;
  };
  std::optional<MatrixRingParts>   matrix_parts(Ring const& ring);
  std::optional<std::vector<Ring>> product_factors(Ring const& ring);
  std::optional<Ring>              opposite_base(Ring const& ring);

  ////////////////////////////////////////////////////////////////////////
  // Matrices
  ////////////////////////////////////////////////////////////////////////

  class RingMatrix {
   public:
    // Zero matrix.
    RingMatrix(Ring ring, std::size_t rows, std::size_t cols);
    // Row-major entries; throws unless entries.size() == rows * cols.
    RingMatrix(Ring                 ring,
               std::size_t          rows,
               std::size_t          cols,
               std::vector<Element> entries);

    static RingMatrix identity(Ring const& ring, std::size_t size);

    Ring const& ring() const noexcept {
      return _ring;
    }
    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    std::vector<Element> const& entries() const noexcept {
      return _entries;
    }

    // 0-based indices.
    Element const& at(std::size_t i, std::size_t j) const;
    void           set(std::size_t i, std::size_t j, Element value);

    RingMatrix transpose() const;
    // Same entries read over another ring (used for R -> R^op).
    RingMatrix reinterpret(Ring const& ring) const;

    bool is_identity() const;
    bool is_zero() const;

   private:
    Ring                 _ring;
    std::size_t          _rows;
    std::size_t          _cols;
    std::vector<Element> _entries;
  };

  // Throws on dimension or ring mismatch.
  RingMatrix mat_mul(RingMatrix const& a, RingMatrix const& b);
  RingMatrix mat_add(RingMatrix const& a, RingMatrix const& b);
  bool       mat_equal(RingMatrix const& a, RingMatrix const& b);

  std::string format_matrix(RingMatrix const& m);

  //! A unital ring homomorphism supplied as an evaluable map.
  struct RingHom {
    Ring                                   source;
    Ring                                   target;
    std::function<Element(Element const&)> map;
    std::string                            name;

    Element operator()(Element const& x) const {
      return map(x);
    }
  };

  RingHom identity_hom(Ring const& ring);
  // Z -> Z/m.
  RingHom reduction_hom(long modulus);
  // Product(R_1, ..., R_t) -> R_index.
  RingHom projection_hom(Ring const& product_ring, std::size_t index);

}  // namespace ugn::rings

#endif  // UGN_RINGS_HPP_
