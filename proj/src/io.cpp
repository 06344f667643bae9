#include "specprime/io.hpp"

#include "specprime/errors.hpp"

#include <fstream>
#include <sstream>

namespace specprime {

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidParameter("malformed JSON in " + source + " at byte " + std::to_string(e.byte) + ": " +
                           e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InvalidParameter(std::string(what) + " spec must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidParameter(std::string(what) + " spec is missing \"" + key + "\"");
  return *it;
}

std::size_t as_index(const Json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw InvalidParameter(what + " must be a nonnegative integer, got " + v.dump());
  return v.get<std::size_t>();
}

std::size_t uint_field(const Json& j, const char* key, const char* what) {
  return as_index(field(j, key, what), std::string(what) + "." + key);
}

const Json& array_field(const Json& j, const char* key, const char* what) {
  const Json& v = field(j, key, what);
  if (!v.is_array()) throw InvalidParameter(std::string(what) + "." + key + " must be an array");
  return v;
}

std::string kind_of(const Json& j) {
  if (!j.is_object()) return {};
  auto it = j.find("kind");
  if (it == j.end()) return {};
  if (!it->is_string()) throw InvalidParameter("\"kind\" must be a string");
  return it->get<std::string>();
}

}  // namespace

const char* to_string(InputKind k) {
  switch (k) {
    case InputKind::ring: return "ring";
    case InputKind::poset: return "poset";
    case InputKind::hom: return "hom";
    case InputKind::composable: return "composable";
    case InputKind::profile: return "profile";
    case InputKind::ufd: return "ufd";
  }
  return "?";
}

InputKind classify_input(const Json& j) {
  if (!j.is_object()) throw InvalidParameter("input must be a JSON object, got " + j.dump());
  const std::string kind = kind_of(j);
  if (kind == "zmod" || kind == "product" || kind == "polyquot") return InputKind::ring;
  if (kind == "poset") return InputKind::poset;
  if (kind == "hom") return InputKind::hom;
  if (kind == "composable") return InputKind::composable;
  if (kind == "class_group") return InputKind::profile;
  if (kind == "ufd") return InputKind::ufd;
  if (!kind.empty()) throw InvalidParameter("unknown input kind \"" + kind + "\"");
  if (j.contains("points") && j.contains("leq")) return InputKind::poset;
  if (j.contains("source") && j.contains("target") && j.contains("map")) return InputKind::hom;
  if (j.contains("free_rank")) return InputKind::profile;
  throw InvalidParameter("input matches no known schema: " + j.dump());
}

RingPtr parse_ring(const Json& j, std::size_t size_cap) {
  const std::string kind = kind_of(j);
  if (kind == "zmod") return build_zmod(uint_field(j, "n", "zmod"), size_cap);
  if (kind == "product") {
    const Json& fs = array_field(j, "factors", "product");
    std::vector<RingPtr> factors;
    for (const auto& f : fs) factors.push_back(parse_ring(f, size_cap));
    return build_product(factors, size_cap);
  }
  if (kind == "polyquot") {
    const std::size_t p = uint_field(j, "p", "polyquot");
    std::vector<long long> modulus;
    for (const auto& c : array_field(j, "modulus", "polyquot")) {
      if (!c.is_number_integer()) throw InvalidParameter("polyquot.modulus entries must be integers");
      modulus.push_back(c.get<long long>());
    }
    return build_poly_quotient(p, modulus, size_cap);
  }
  throw InvalidParameter("not a ring spec: " + j.dump());
}

FinitePoset parse_poset(const Json& j) {
  const Json& pts = field(j, "points", "poset");
  std::vector<std::string> names;
  if (pts.is_array()) {
    for (const auto& p : pts) names.push_back(p.is_string() ? p.get<std::string>() : p.dump());
  } else {
    const std::size_t n = as_index(pts, "poset.points");
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  if (names.empty()) throw InvalidParameter("poset must have at least one point");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& e : array_field(j, "leq", "poset")) {
    if (!e.is_array() || e.size() != 2) throw InvalidParameter("poset.leq entries must be [i,j] pairs");
    const auto a = as_index(e[0], "poset.leq index");
    const auto b = as_index(e[1], "poset.leq index");
    if (a >= names.size() || b >= names.size())
      throw InvalidParameter("poset.leq index out of range in " + e.dump());
    pairs.emplace_back(a, b);
  }
  return FinitePoset::from_relation(std::move(names), pairs);
}

namespace {

std::vector<Element> parse_map(const Json& j, const FiniteRing& source, const FiniteRing& target) {
  const Json& m = array_field(j, "map", "hom");
  if (m.size() != source.size())
    throw InvalidParameter("hom.map has " + std::to_string(m.size()) + " entries for a source of size " +
                           std::to_string(source.size()));
  std::vector<Element> image;
  for (const auto& v : m) {
    const auto t = as_index(v, "hom.map entry");
    if (t >= target.size()) throw InvalidParameter("hom.map entry " + std::to_string(t) + " out of range");
    image.push_back(t);
  }
  return image;
}

}  // namespace

RingHom parse_hom(const Json& j, std::size_t size_cap) {
  auto source = parse_ring(field(j, "source", "hom"), size_cap);
  auto target = parse_ring(field(j, "target", "hom"), size_cap);
  auto image = parse_map(j, *source, *target);
  return build_hom(std::move(source), std::move(target), std::move(image));
}

ComposablePair parse_composable(const Json& j, std::size_t size_cap) {
  const Json& first = field(j, "first", "composable");
  const Json& second = field(j, "second", "composable");
  if (field(first, "target", "hom") != field(second, "source", "hom"))
    throw InvalidParameter("composable: first.target and second.source differ");
  auto a = parse_ring(field(first, "source", "hom"), size_cap);
  auto b = parse_ring(field(first, "target", "hom"), size_cap);
  auto c = parse_ring(field(second, "target", "hom"), size_cap);
  auto f = build_hom(a, b, parse_map(first, *a, *b));
  auto g = build_hom(b, c, parse_map(second, *b, *c));
  return ComposablePair{std::move(f), std::move(g)};
}

ClassGroupProfile parse_profile(const Json& j) {
  ClassGroupProfile p;
  const std::size_t rank = uint_field(j, "free_rank", "class_group");
  p.free_rank = static_cast<unsigned>(rank);
  if (j.contains("torsion"))
    for (const auto& t : array_field(j, "torsion", "class_group"))
      p.torsion_invariants.push_back(static_cast<unsigned>(as_index(t, "class_group.torsion entry")));
  p.validate();
  return p;
}

std::size_t parse_ufd(const Json& j) {
  const std::size_t n = uint_field(j, "n", "ufd");
  if (n > kMaxUfdPrimes) throw TooLarge("ufd model supports at most " + std::to_string(kMaxUfdPrimes) + " primes");
  return n;
}

Json ring_spec_zmod(std::size_t n) { return Json{{"kind", "zmod"}, {"n", n}}; }

Json ring_spec_product(const std::vector<Json>& factors) {
  return Json{{"kind", "product"}, {"factors", factors}};
}

Json ring_spec_polyquot(std::size_t p, const std::vector<long long>& modulus) {
  return Json{{"kind", "polyquot"}, {"p", p}, {"modulus", modulus}};
}

Json hom_spec(const Json& source, const Json& target, const std::vector<Element>& map) {
  return Json{{"kind", "hom"}, {"source", source}, {"target", target}, {"map", map}};
}

Json poset_spec(const FinitePoset& x, const std::string& name) {
  Json leq = Json::array();
  for (auto [a, b] : x.covers()) leq.push_back({a, b});
  Json j{{"kind", "poset"}};
  if (!name.empty()) j["name"] = name;
  j["points"] = x.names();
  j["leq"] = std::move(leq);
  return j;
}

Json to_json(const ElementSet& s) { return Json(indices_of(s)); }

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, ElementSet>) {
    return to_json(*v);
  } else {
    return Json::array({to_json(v->first), to_json(v->second)});
  }
}

}  // namespace

Json to_json(const SurjectivityReport& r) {
  Json witnesses = Json::object();
  auto put = [&](const char* key, const Json& w) {
    if (!w.is_null()) witnesses[key] = w;
  };
  put("theorem_i", optional_json(r.missing_xspace_point));
  put("theorem_ii", optional_json(r.nonprincipal_radical));
  put("theorem_iii", optional_json(r.avoidance_failure));
  put("theorem_iv", optional_json(r.basis_failure));
  put("corollary_ii", optional_json(r.nonprincipal_prime));
  put("corollary_iii", optional_json(r.packed_ideal_failure));
  put("corollary_iv", optional_json(r.packed_prime_failure));
  return Json{{"ring", r.ring_label},
              {"sprime_count", r.sprime_count},
              {"xspace_count", r.xspace_count},
              {"theorem_i_j_surjective", r.j_surjective},
              {"theorem_ii_radical_principal", r.radical_principal},
              {"theorem_iii_union_avoidance", r.union_avoidance},
              {"theorem_iv_basis_condition", r.basis_condition},
              {"corollary_i_noetherian_spectrum", r.noetherian_spectrum},
              {"corollary_ii_prime_radical_principal", r.prime_radical_principal},
              {"corollary_iii_compactly_packed_ideal", r.compactly_packed_ideal},
              {"corollary_iv_compactly_packed_prime", r.compactly_packed_prime},
              {"theorem_consistent", r.theorem_consistent()},
              {"corollary_consistent", r.corollary_consistent()},
              {"corollary_implies_theorem", r.corollary_implies_theorem()},
              {"witnesses", std::move(witnesses)}};
}

Json to_json(const SpectralReport& r) {
  Json j{{"t0", r.t0},
         {"quasi_compact", r.quasi_compact},
         {"basis_intersection_closed", r.basis_intersection_closed},
         {"sober", r.sober},
         {"irreducibility_oracle", r.oracle_ran},
         {"passed", r.passed()}};
  if (r.t0_witness) j["t0_witness"] = {r.t0_witness->first, r.t0_witness->second};
  if (r.uncovered_point) j["uncovered_point"] = *r.uncovered_point;
  if (r.intersection_witness)
    j["intersection_witness"] = {r.intersection_witness->first, r.intersection_witness->second};
  if (r.sober_witness) j["sober_witness"] = to_json(*r.sober_witness);
  return j;
}

Json to_json(const DensityReport& r) {
  Json j{{"dense", r.dense}, {"very_dense", r.very_dense}, {"open_count", r.open_count}};
  j["witness"] = optional_json(r.witness);
  return j;
}

Json to_json(const DiagramReport& r) {
  return Json{{"left_square", r.left_square},
              {"right_square", r.right_square},
              {"left_failures", r.left_failures},
              {"right_failures", r.right_failures},
              {"fa_embedding", r.fa_embedding},
              {"fa_homeomorphism", r.fa_homeomorphism},
              {"s_embedding", r.s_embedding},
              {"s_homeomorphism", r.s_homeomorphism},
              {"commutes", r.commutes()},
              {"transfer_holds", r.transfer_holds()}};
}

Json to_json(const UfdReport& r) {
  return Json{{"n", r.n},
              {"sprime_count", r.sprime_count},
              {"bijective", r.bijective},
              {"order_is_inclusion", r.order_is_inclusion},
              {"homeomorphic", r.homeomorphic},
              {"spectral", r.spectral},
              {"minimum_is_zero_ideal", r.minimum_is_zero_ideal}};
}

Json covers_json(const FinitePoset& x) {
  Json out = Json::array();
  for (auto [a, b] : x.covers()) out.push_back({a, b});
  return out;
}

}  // namespace specprime
