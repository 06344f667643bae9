#pragma once

#include "specprime/element_set.hpp"
#include "specprime/poset.hpp"
#include "specprime/ring.hpp"
#include "specprime/semigroup.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace specprime {

inline constexpr std::size_t kDefaultBruteforceCap = 16;
// Hard ceiling for the subset scan regardless of configuration (mask width).
inline constexpr std::size_t kMaxBruteforceCap = 30;
inline constexpr std::size_t kMaxSpecForUnions = 20;

/// A semigroup prime: a nonempty proper subset Q absorbing multiplication
/// whose complement is multiplicatively closed.
struct SemigroupPrime {
  std::shared_ptr<const Semigroup> carrier;
  ElementSet members;

  friend bool operator==(const SemigroupPrime& a, const SemigroupPrime& b) {
    return a.carrier == b.carrier && a.members == b.members;
  }
};

/// Empty when `q` satisfies the semigroup-prime definition over `s`
/// (nonempty, proper, absorbing, complement multiplicatively closed and
/// saturated); otherwise the first violated clause.
std::string semigroup_prime_violation(const Semigroup& s, const ElementSet& q);
/// The definition suite plus the ring-specific clauses: contains zero, no unit.
std::string ring_semigroup_prime_violation(const FiniteRing& r, const ElementSet& q);

/// Scans every proper nonempty subset. Throws TooLarge when |S| > cap and
/// InvalidSemigroup for a non-commutative or non-associative table (the
/// table is validated when the Semigroup is built).
std::vector<SemigroupPrime> sprimes_bruteforce(const std::shared_ptr<const Semigroup>& s,
                                               std::size_t cap = kDefaultBruteforceCap);

/// {union of Y : Y a nonempty set of primes}, deduplicated, each validated.
std::vector<SemigroupPrime> sprimes_from_spec(const RingPtr& r, const Spectrum& sp);
std::vector<SemigroupPrime> sprimes_from_spec(const RingPtr& r);

/// The hull-kernel topology on a list of semigroup primes: basis entry x is
/// U(x) = {Q : x not in Q}.
TopologyPresentation hull_kernel_presentation(const Semigroup& s,
                                              const std::vector<SemigroupPrime>& primes);

/// S(R) with its hull-kernel topology and the embedding i of Spec(R).
struct SPrimeSpace {
  RingPtr ring;
  Spectrum spectrum;
  std::vector<SemigroupPrime> primes;  // canonical order
  TopologyPresentation presentation;   // basis[x] = U(x)
  FinitePoset order;                   // inclusion
  std::vector<std::size_t> spec_embedding;  // i: Spec index -> S index
  std::unordered_map<ElementSet, std::size_t> lookup;

  std::size_t size() const { return primes.size(); }
  std::size_t index_of(const ElementSet& q) const;
  const ElementSet& basic_open(Element x) const { return presentation.basis[x]; }
  /// i(Spec(R)) as a point set.
  ElementSet spec_image() const;
};

/// Builds S(R) and asserts: verify_spectral passes, specialization order is
/// inclusion, U(xy) = U(x) n U(y), and i(D(x)) = U(x) n i(Spec(R)).
SPrimeSpace hull_kernel_space(const RingPtr& r);
SPrimeSpace hull_kernel_space(const RingPtr& r, Spectrum sp);

/// S(f): S(R2) -> S(R1), Q -> f^{-1}(Q), as an index map. Asserts every image
/// is a semigroup prime and S(f)^{-1}(U(x)) = U(f(x)).
std::vector<std::size_t> s_map(const RingHom& f, const SPrimeSpace& source_space,
                               const SPrimeSpace& target_space);

SemigroupPrime sup_sprimes(const std::vector<SemigroupPrime>& t);

struct InfimumResult {
  /// C_T = {P in Spec : P subset of every Q in T}, as Spec points.
  ElementSet common_primes;
  /// Union of C_T; absent (NoInfimum) when C_T is empty.
  std::optional<SemigroupPrime> infimum;
  bool no_infimum() const { return !infimum.has_value(); }
};

/// Infimum through C_T. When defined, asserted to be the greatest lower
/// bound against all of S(R).
InfimumResult inf_sprimes(const SPrimeSpace& space, const std::vector<SemigroupPrime>& t);

/// Greatest lower bound found by comparing against every point of S(R);
/// returns the index or nothing. Independent of inf_sprimes.
std::optional<std::size_t> glb_exhaustive(const SPrimeSpace& space, const std::vector<SemigroupPrime>& t);

inline constexpr std::size_t kMaxUfdPrimes = 12;

/// An element of a UFD: zero, or a unit times a product of prime powers.
struct UfdElement {
  bool is_zero = false;
  int unit = 1;
  std::vector<unsigned> exponents;
};

/// Symbolic S(R) for a UFD with n prime classes: Q(B), B a subset of the
/// primes, contains 0 and every element whose support meets B.
class UfdModel {
 public:
  explicit UfdModel(std::size_t n);

  std::size_t prime_count() const { return n_; }
  std::size_t sprime_count() const { return std::size_t{1} << n_; }
  bool contains(std::uint32_t b, const UfdElement& x) const;
  UfdElement multiply(const UfdElement& a, const UfdElement& b) const;

  /// Points are the subsets B (as masks 0..2^n-1). Basis entry S (a support
  /// mask) is U(x) for any x with that support; the last entry is U(0).
  TopologyPresentation hull_kernel_presentation() const;
  /// Finite intersections of the subbasis V(p) = {B : p not in B}: entry S is
  /// V(S) = {B : B n S = empty}.
  TopologyPresentation power_set_presentation() const;

 private:
  std::size_t n_;
};

struct UfdReport {
  std::size_t n = 0;
  std::size_t sprime_count = 0;
  bool bijective = false;        // B -> Q(B) separates points on sample elements
  bool order_is_inclusion = false;
  bool homeomorphic = false;     // both presentations generate the same opens
  bool spectral = false;
  bool minimum_is_zero_ideal = false;
};

/// Throws TooLarge past kMaxUfdPrimes. `exact_open_check` compares the two
/// generated topologies basis-against-basis.
UfdModel ufd_model(std::size_t n);
UfdReport check_ufd_model(const UfdModel& m, bool exact_open_check);

struct DensityReport {
  bool dense = false;
  bool very_dense = false;
  /// Distinct opens with the same trace on Spec(R), when not very dense.
  std::optional<std::pair<ElementSet, ElementSet>> witness;
  std::size_t open_count = 0;
};

DensityReport density_report(const SPrimeSpace& space);

}  // namespace specprime
