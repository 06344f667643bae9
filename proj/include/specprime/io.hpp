#pragma once

#include "specprime/correspondence.hpp"
#include "specprime/poset.hpp"
#include "specprime/ring.hpp"
#include "specprime/sprime.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace specprime {

using Json = nlohmann::ordered_json;

/// Parses JSON text. Malformed input raises InvalidParameter naming `source`
/// and the byte offset of the error.
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

enum class InputKind { ring, poset, hom, composable, profile, ufd };

const char* to_string(InputKind k);

/// Decides the schema of an input object. Throws InvalidParameter when it
/// matches none.
InputKind classify_input(const Json& j);

/// {"kind":"zmod","n":12} | {"kind":"product","factors":[...]} |
/// {"kind":"polyquot","p":2,"modulus":[1,1,1]}
RingPtr parse_ring(const Json& j, std::size_t size_cap = kDefaultRingSizeCap);

/// {"points":[...],"leq":[[i,j],...]}; "points" may also be a count.
FinitePoset parse_poset(const Json& j);

/// {"source":ring,"target":ring,"map":[...]}
RingHom parse_hom(const Json& j, std::size_t size_cap = kDefaultRingSizeCap);

/// {"kind":"composable","first":hom,"second":hom} with first.target equal to
/// second.source as specs. The shared ring is built once.
struct ComposablePair {
  RingHom first;
  RingHom second;
};
ComposablePair parse_composable(const Json& j, std::size_t size_cap = kDefaultRingSizeCap);

/// {"kind":"class_group","free_rank":1,"torsion":[2,4]}
ClassGroupProfile parse_profile(const Json& j);

/// {"kind":"ufd","n":3}
std::size_t parse_ufd(const Json& j);

Json ring_spec_zmod(std::size_t n);
Json ring_spec_product(const std::vector<Json>& factors);
Json ring_spec_polyquot(std::size_t p, const std::vector<long long>& modulus);
Json hom_spec(const Json& source, const Json& target, const std::vector<Element>& map);
Json poset_spec(const FinitePoset& x, const std::string& name = {});

/// Element-index array.
Json to_json(const ElementSet& s);
Json to_json(const SurjectivityReport& r);
Json to_json(const SpectralReport& r);
Json to_json(const DensityReport& r);
Json to_json(const DiagramReport& r);
Json to_json(const UfdReport& r);

/// Covering pairs of a poset as [[a,b],...].
Json covers_json(const FinitePoset& x);

}  // namespace specprime
