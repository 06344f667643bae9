#pragma once

#include "specprime/poset.hpp"
#include "specprime/ring.hpp"
#include "specprime/sprime.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace specprime {

/// Everything derived from one ring that the correspondence maps need:
/// ideals, Spec(R), S(R) and X(R) = X(Spec(R)).
struct RingAnalysis {
  RingPtr ring;
  std::vector<Ideal> ideals;
  SPrimeSpace sprimes;
  XSpace xspace;
  /// j as an index map S(R) -> X(R).
  std::vector<std::size_t> j_index;

  const Spectrum& spectrum() const { return sprimes.spectrum; }
};

/// Builds the analysis and asserts that j is an injective, order-preserving
/// embedding with j(U(x)) = U(D(x)) n j(S(R)) and j o i = phi.
RingAnalysis analyze(const RingPtr& r);

/// j(Q) = {P in Spec(R) : P subset of Q}.
DownSet j_map(const RingAnalysis& a, const SemigroupPrime& q);

/// P(Y) = union of the primes in Y, for any nonempty set of Spec points.
SemigroupPrime p_map(const RingAnalysis& a, const ElementSet& y);
SemigroupPrime p_map(const RingAnalysis& a, const DownSet& y);

/// Checks that p_map o j_map is the identity and that
/// p_map^{-1}(U(x)) = U(D(x)) for every x; throws InvariantViolation.
void check_retraction(const RingAnalysis& a);

/// Intersection of the principal opens D(a) containing Y; asserted equal to
/// j(P(Y)) and to contain Y.
DownSet jp_closure(const RingAnalysis& a, const DownSet& y);

struct SurjectivityReport {
  std::string ring_label;
  std::size_t sprime_count = 0;
  std::size_t xspace_count = 0;

  bool j_surjective = false;        // j(S(R)) = X(R)
  bool radical_principal = false;   // every radical is rad(xR)
  bool union_avoidance = false;     // I in u Y implies I in some Q
  bool basis_condition = false;     // U(D(J)) pinched by some U(D(x))

  bool noetherian_spectrum = true;  // finite spectrum
  bool prime_radical_principal = false;  // every prime is rad(xR)
  bool compactly_packed_ideal = false;
  bool compactly_packed_prime = false;

  // Element-index witnesses, filled only for a false condition.
  std::optional<ElementSet> missing_xspace_point;     // (i): a Y outside j(S(R)) (Spec points)
  std::optional<ElementSet> nonprincipal_radical;     // (ii): ideal I
  std::optional<std::pair<ElementSet, ElementSet>> avoidance_failure;  // (iii): (I, Q)
  std::optional<ElementSet> basis_failure;            // (iv): ideal J
  std::optional<ElementSet> nonprincipal_prime;       // prime P
  std::optional<std::pair<ElementSet, ElementSet>> packed_ideal_failure;  // (I, u Y)
  std::optional<std::pair<ElementSet, ElementSet>> packed_prime_failure;  // (P, u Y)

  bool theorem_consistent() const;
  bool corollary_consistent() const;
  /// The sufficient conditions (with Noetherian spectrum) imply the
  /// surjectivity conditions.
  bool corollary_implies_theorem() const;
  bool consistent() const {
    return theorem_consistent() && corollary_consistent() && corollary_implies_theorem();
  }
};

/// Evaluates every surjectivity and sufficient condition by its own exhaustive
/// procedure.
SurjectivityReport surjectivity_report(const RingAnalysis& a);

struct DiagramReport {
  bool left_square = false;   // S(f) o i2 = i1 o f^a
  bool right_square = false;  // X(f^a) o j2 = j1 o S(f)
  std::vector<std::size_t> left_failures;   // Spec(R2) indices
  std::vector<std::size_t> right_failures;  // S(R2) indices
  bool fa_embedding = false;
  bool fa_homeomorphism = false;
  bool s_embedding = false;
  bool s_homeomorphism = false;

  bool commutes() const { return left_square && right_square; }
  /// f^a embedding (homeomorphism) implies S(f) embedding (homeomorphism).
  bool transfer_holds() const {
    return (!fa_embedding || s_embedding) && (!fa_homeomorphism || s_homeomorphism);
  }
};

/// `source` and `target` must be the analyses of f.source() and f.target().
DiagramReport diagram_check(const RingHom& f, const RingAnalysis& source, const RingAnalysis& target);

struct AvoidanceReport {
  ElementSet lhs;  // j(P1 u ... u Pn), Spec points
  ElementSet rhs;  // j(P1) u ... u j(Pn)
  bool holds() const { return lhs == rhs; }
};

/// Throws InvalidParameter when an input is not a prime ideal of the ring.
AvoidanceReport prime_avoidance_j(const RingAnalysis& a, const std::vector<Ideal>& primes);

struct MonotoneReport {
  bool closure_inclusion = false;  // cl_inv(Y1) subset of cl_inv(Y2)
  bool p_inclusion = false;        // P(Y1) subset of P(Y2)
  bool implication_holds = false;
  bool p_stable_first = false;     // P(Y1) = P(cl_inv(Y1))
  bool p_stable_second = false;
  bool holds() const { return implication_holds && p_stable_first && p_stable_second; }
};

/// Y1, Y2 nonempty point sets of Spec(R); throws InvalidParameter otherwise.
MonotoneReport monotone_p_check(const RingAnalysis& a, const ElementSet& y1, const ElementSet& y2);

/// `count` pairs of nonempty subsets of {0..n-1}, drawn from mt19937_64(seed).
std::vector<std::pair<ElementSet, ElementSet>> random_subset_pairs(std::size_t n, std::size_t count,
                                                                   std::uint64_t seed);

/// Ideal class group of a Dedekind domain: Z^free_rank x (torsion part).
struct ClassGroupProfile {
  unsigned free_rank = 0;
  std::vector<unsigned> torsion_invariants;

  /// Throws InvalidParameter when a torsion invariant is below 2.
  void validate() const;
  bool is_torsion() const { return free_rank == 0; }
  std::string describe() const;
};

enum class DedekindVerdict { Homeomorphism, NotSurjective };

DedekindVerdict dedekind_verdict(const ClassGroupProfile& profile);
const char* to_string(DedekindVerdict v);

}  // namespace specprime
