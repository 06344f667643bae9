#pragma once

#include "specprime/element_set.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace specprime {

/// A finite partial order, read as a finite spectral space: x <= y iff y lies
/// in the closure of {x}. Opens are the down-sets, closed sets the up-sets.
class FinitePoset {
 public:
  /// Reflexive-transitive closure of `pairs` (each (a, b) meaning a <= b).
  /// Throws NotAPartialOrder on a cycle.
  static FinitePoset from_relation(std::vector<std::string> names,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  static FinitePoset from_relation(std::size_t n,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  /// `leq(a, b)` evaluated for every pair; must already be a partial order.
  template <class Leq>
  static FinitePoset from_predicate(std::vector<std::string> names, Leq&& leq) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < names.size(); ++a)
      for (std::size_t b = 0; b < names.size(); ++b)
        if (a != b && leq(a, b)) pairs.emplace_back(a, b);
    return from_relation(std::move(names), pairs);
  }

  std::size_t size() const { return up_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  /// {y : x <= y}, the closure of {x}.
  const ElementSet& up(std::size_t x) const { return up_[x]; }
  /// {y : y <= x}, the generizations of x.
  const ElementSet& down(std::size_t x) const { return down_[x]; }
  const std::vector<std::string>& names() const { return names_; }

  ElementSet up_closure(const ElementSet& y) const;
  ElementSet down_closure(const ElementSet& y) const;
  bool is_down_set(const ElementSet& y) const;
  bool is_antichain() const;
  /// Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return make_full_set(size()); }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) { return a.up_ == b.up_; }

 private:
  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

/// A nonempty generization-closed subset of a poset (a point of X(X)).
struct DownSet {
  ElementSet members;

  /// Throws InvalidParameter unless `members` is a nonempty down-set of `x`.
  static DownSet make(const FinitePoset& x, ElementSet members);
  friend bool operator==(const DownSet&, const DownSet&) = default;
};

/// A finite point set with a family of subsets declared as basic opens.
struct TopologyPresentation {
  std::vector<std::string> names;
  std::vector<ElementSet> basis;

  std::size_t size() const { return names.size(); }
  /// Closure in the generated topology: x in cl(S) iff every basic open
  /// containing x meets S.
  ElementSet closure(const ElementSet& s) const;
  /// Specialization order x <= y iff y in cl({x}).
  FinitePoset specialization_order() const;
  /// All opens (unions of basic opens). Throws TooLarge past `cap`.
  std::vector<ElementSet> opens(std::size_t cap = 1u << 16) const;
};

enum class ClosureMode { specialization, generization, inverse, constructible };

/// Closure of Y in the requested topology. Inverse and constructible modes
/// are evaluated from their defining intersection formulas over
/// quasi-compact opens and then asserted against their finite-space values
/// (generization closure and Y itself).
ElementSet closure(const FinitePoset& x, const ElementSet& y, ClosureMode mode);

/// Intersection of all quasi-compact opens containing Y.
ElementSet inverse_closure_by_opens(const FinitePoset& x, const ElementSet& y);
/// Intersection of all U u (X \ V), U and V quasi-compact opens, containing Y.
ElementSet constructible_closure_by_opens(const FinitePoset& x, const ElementSet& y);

/// Every down-set (including the empty one), in canonical order.
std::vector<ElementSet> enumerate_down_sets(const FinitePoset& x, std::size_t cap = 1u << 20);

/// Alexandrov topology: basis = every down-set.
TopologyPresentation alexandrov_presentation(const FinitePoset& x);

/// X(X): nonempty down-sets ordered by inclusion, with basic opens U(Omega).
struct XSpace {
  std::vector<ElementSet> points;      // canonical order
  std::vector<ElementSet> base_opens;  // Omega for basis entry k (canonical, includes empty)
  FinitePoset order;                   // inclusion
  TopologyPresentation presentation;   // basis[k] = U(base_opens[k])

  std::size_t index_of(const ElementSet& y) const;
  /// U(Omega) for an arbitrary open Omega of the base space.
  ElementSet basic_open(const ElementSet& omega) const;

  std::unordered_map<ElementSet, std::size_t> lookup;
};

/// Builds X(X) and asserts that inclusion equals the specialization order of
/// the presentation.
XSpace xspace(const FinitePoset& x);

/// phi(x) = {x}^gen.
DownSet phi(const FinitePoset& x, std::size_t point);

/// Asserts that phi is an order embedding into X(X) with
/// phi^{-1}(U(Omega)) = Omega for every open Omega.
void check_phi_embedding(const FinitePoset& x, const XSpace& xs);

/// X(f): C -> (f(C))^gen. Throws NotSpectral when f is not monotone.
class XFunctor {
 public:
  XFunctor(const FinitePoset& source, const FinitePoset& target, std::vector<std::size_t> image);

  ElementSet apply(const ElementSet& c) const;
  DownSet operator()(const DownSet& c) const { return DownSet{apply(c.members)}; }
  const std::vector<std::size_t>& image() const { return image_; }

 private:
  FinitePoset target_;
  std::vector<std::size_t> image_;
};

bool is_monotone(const FinitePoset& a, const FinitePoset& b, const std::vector<std::size_t>& f);
/// Injective, and x <= y iff f(x) <= f(y). For finite spaces this is the
/// topological embedding condition.
bool is_order_embedding(const FinitePoset& a, const FinitePoset& b, const std::vector<std::size_t>& f);

/// Outcome of checking Hochster's axioms on a finite presentation.
struct SpectralReport {
  bool t0 = false;
  bool quasi_compact = false;
  bool basis_intersection_closed = false;
  bool sober = false;

  std::optional<std::pair<std::size_t, std::size_t>> t0_witness;           // indistinguishable pair
  std::optional<std::size_t> uncovered_point;                              // not in any basic open
  std::optional<std::pair<std::size_t, std::size_t>> intersection_witness;  // basis indices
  std::optional<ElementSet> sober_witness;  // irreducible closed set without a unique generic point
  /// Set when the direct irreducibility oracle ran (spaces of <= 12 points).
  bool oracle_ran = false;

  bool passed() const { return t0 && quasi_compact && basis_intersection_closed && sober; }
};

inline constexpr std::size_t kIrreducibilityOracleMaxPoints = 12;

SpectralReport verify_spectral(const TopologyPresentation& t);

/// Hasse diagram in DOT, nodes in index order, edges along covers drawn
/// bottom-to-top (generic points below).
std::string to_dot(const FinitePoset& x, const std::string& graph_name,
                   const std::vector<std::string>& labels = {});

}  // namespace specprime
