#pragma once

#include "specprime/io.hpp"
#include "specprime/poset.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace specprime {

FinitePoset chain_poset(std::size_t n);
FinitePoset antichain_poset(std::size_t n);
/// Zigzag 0 < 1 > 2 < 3 > ...
FinitePoset fence_poset(std::size_t n);
/// Bottom, `middle` pairwise incomparable points, top.
FinitePoset diamond_poset(std::size_t middle);
/// Subsets of a k-set under inclusion.
FinitePoset boolean_lattice_poset(std::size_t k);

/// Z/n for n in 2..40 and 60; products of 2 or 3 small factors of total size
/// at most 64; every monic polynomial quotient over F2 and F3 of degree 1..3.
std::vector<Json> corpus_ring_specs();
/// Chains, antichains, fences and diamonds up to 8 points, plus a few
/// larger posets (chain of 12, boolean lattice on 4 atoms, fence of 14).
std::vector<Json> corpus_poset_specs();
/// Quotients, projections, structure maps, field embeddings, Frobenius.
std::vector<Json> corpus_hom_specs();
std::vector<Json> corpus_composable_specs();
/// Free rank 0..3 times torsion parts {0, Z/2, Z/5, Z/2 x Z/4}.
std::vector<Json> corpus_profile_specs();
/// UFD models with 0..10 primes.
std::vector<Json> corpus_ufd_specs();

/// Job over every corpus input with all checks.
Json default_job();

/// The unital map Z/m -> R (k -> k*1). Throws InvalidParameter unless the
/// characteristic of R divides m.
Json hom_from_zmod(std::size_t m, const Json& target);
/// Projection of a product spec onto factor k.
Json hom_projection(const Json& product, std::size_t k);
/// F_p[x]/(f) -> target, x -> t, extended additively from the prime field.
Json hom_poly_eval(const Json& source, const Json& target, Element t);

}  // namespace specprime
