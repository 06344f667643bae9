#pragma once

#include "specprime/element_set.hpp"
#include "specprime/poset.hpp"
#include "specprime/semigroup.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace specprime {

using Element = std::size_t;

inline constexpr std::size_t kDefaultRingSizeCap = 256;
// Tables are stored as 16-bit indices.
inline constexpr std::size_t kHardRingSizeCap = 4096;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// A finite commutative unital ring given by total addition and
/// multiplication tables over the element indices 0..n-1.
///
/// Construction validates every ring axiom exhaustively (O(n^3)), so an
/// existing FiniteRing is always a genuine nonzero commutative ring.
/// Instances are immutable and are shared through RingPtr; two rings are the
/// same ring only if they are the same object.
class FiniteRing {
 public:
  static RingPtr from_tables(std::string label, std::vector<std::string> names,
                             std::vector<std::vector<Element>> add,
                             std::vector<std::vector<Element>> mul, Element zero,
                             Element one, std::size_t size_cap = kDefaultRingSizeCap);

  std::size_t size() const { return n_; }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element e) const { return names_.at(e); }

  Element zero() const { return zero_; }
  Element one() const { return one_; }
  Element add(Element a, Element b) const { return add_[a * n_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * n_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element pow(Element a, std::size_t k) const;
  bool is_unit(Element a) const { return units_.test(a); }
  const ElementSet& units() const { return units_; }

  ElementSet empty_set() const { return ElementSet(n_); }
  ElementSet full_set() const { return make_full_set(n_); }

  /// The multiplicative monoid (R, *) as a commutative semigroup.
  const std::shared_ptr<const Semigroup>& multiplicative() const { return mult_; }

 private:
  FiniteRing() = default;

  std::size_t n_ = 0;
  std::string label_;
  std::vector<std::string> names_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  Element zero_ = 0;
  Element one_ = 0;
  ElementSet units_;
  std::shared_ptr<const Semigroup> mult_;
};

/// Z/nZ, elements named "0".."n-1".
RingPtr build_zmod(std::size_t n, std::size_t size_cap = kDefaultRingSizeCap);

/// Componentwise ring on the cartesian product. Element index is mixed-radix
/// with the first factor most significant.
RingPtr build_product(const std::vector<RingPtr>& factors, std::size_t size_cap = kDefaultRingSizeCap);

/// (Z/p)[x]/(f) for a monic f given low-to-high. Coefficients are reduced
/// mod p and trailing zeros dropped before the monic/degree test. Element
/// index is sum c_i p^i.
RingPtr build_poly_quotient(std::size_t p, const std::vector<long long>& modulus,
                            std::size_t size_cap = kDefaultRingSizeCap);

/// Coordinates of a product element, first factor first.
std::vector<Element> product_coordinates(const std::vector<RingPtr>& factors, Element e);
Element product_index(const std::vector<RingPtr>& factors, const std::vector<Element>& coords);

/// An ideal of a specific ring.
struct Ideal {
  RingPtr ring;
  ElementSet members;

  bool contains(Element e) const { return members.test(e); }
  bool is_unit_ideal() const { return members.all(); }
  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring == b.ring && a.members == b.members;
  }
};

/// Empty string when `s` is an ideal of R, else a description of the first
/// violated law.
std::string ideal_violation(const FiniteRing& r, const ElementSet& s);
bool is_ideal(const FiniteRing& r, const ElementSet& s);
bool is_prime_ideal(const FiniteRing& r, const ElementSet& s);

Ideal ideal_generated(const RingPtr& r, const ElementSet& gens);
Ideal ideal_generated(const RingPtr& r, const std::vector<Element>& gens);
Ideal principal_ideal(const RingPtr& r, Element a);

/// Every ideal of R exactly once, in canonical order.
std::vector<Ideal> enumerate_ideals(const RingPtr& r);

/// {x : x^k in I for some 1 <= k <= |R|}.
Ideal radical(const Ideal& i);

/// Intersection of the primes (from `primes`) containing I; the whole ring
/// when none does. Independent second route to the radical.
Ideal prime_hull_intersection(const Ideal& i, const std::vector<Ideal>& primes);

struct Spectrum {
  std::vector<Ideal> primes;  // canonical order
  FinitePoset order;          // P <= Q iff P subset of Q

  std::size_t size() const { return primes.size(); }
  /// Index of the prime with exactly these members, or npos.
  std::size_t index_of(const ElementSet& members) const;
  /// D(a) = {P : a not in P} as a point set of `order`.
  ElementSet basic_open(Element a) const;
  /// D(J) = {P : J not contained in P}.
  ElementSet open_of(const ElementSet& j) const;
  /// Union of the listed primes, as an element set.
  ElementSet union_of(const ElementSet& points) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Prime ideals and their inclusion order. For a finite ring the order is
/// asserted to be an antichain.
Spectrum spec(const RingPtr& r);

/// A validated unital ring homomorphism.
class RingHom {
 public:
  static RingHom build(RingPtr source, RingPtr target, std::vector<Element> image);
  static RingHom identity(const RingPtr& r);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  Element operator()(Element e) const { return image_[e]; }
  const std::vector<Element>& image() const { return image_; }

  /// f^{-1}(S) for any element set S of the target.
  ElementSet preimage(const ElementSet& s) const;
  ElementSet image_of(const ElementSet& s) const;

 private:
  RingHom(RingPtr s, RingPtr t, std::vector<Element> img)
      : source_(std::move(s)), target_(std::move(t)), image_(std::move(img)) {}
  RingPtr source_;
  RingPtr target_;
  std::vector<Element> image_;
};

RingHom build_hom(RingPtr source, RingPtr target, std::vector<Element> image);

/// g after f. Throws InvalidParameter unless f.target() is g.source().
RingHom compose(const RingHom& g, const RingHom& f);

Ideal preimage_ideal(const RingHom& f, const Ideal& i);

/// f^a : Spec(target) -> Spec(source) as an index map between spectra.
std::vector<std::size_t> spec_map(const RingHom& f, const Spectrum& source_spec,
                                  const Spectrum& target_spec);

}  // namespace specprime
