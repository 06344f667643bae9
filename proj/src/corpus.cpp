#include "specprime/corpus.hpp"

#include "specprime/errors.hpp"

#include <algorithm>
#include <functional>

namespace specprime {

namespace {

std::vector<std::string> numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

// k*1 in R.
Element multiple_of_one(const FiniteRing& r, std::size_t k) {
  Element acc = r.zero();
  for (std::size_t i = 0; i < k; ++i) acc = r.add(acc, r.one());
  return acc;
}

std::size_t characteristic(const FiniteRing& r) {
  std::size_t k = 1;
  for (Element acc = r.one(); acc != r.zero(); acc = r.add(acc, r.one())) ++k;
  return k;
}

}  // namespace

FinitePoset chain_poset(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return FinitePoset::from_relation(numbered(n, "c"), pairs);
}

FinitePoset antichain_poset(std::size_t n) { return FinitePoset::from_relation(numbered(n, "a"), {}); }

FinitePoset fence_poset(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (i % 2 == 0)
      pairs.emplace_back(i, i + 1);
    else
      pairs.emplace_back(i + 1, i);
  }
  return FinitePoset::from_relation(numbered(n, "f"), pairs);
}

FinitePoset diamond_poset(std::size_t middle) {
  std::vector<std::string> names{"bot"};
  for (std::size_t i = 0; i < middle; ++i) names.push_back("m" + std::to_string(i));
  names.push_back("top");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= middle; ++i) {
    pairs.emplace_back(0, i);
    pairs.emplace_back(i, middle + 1);
  }
  if (middle == 0) pairs.emplace_back(0, 1);
  return FinitePoset::from_relation(std::move(names), pairs);
}

FinitePoset boolean_lattice_poset(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names;
  for (std::size_t m = 0; m < n; ++m) {
    std::string s = "{";
    for (std::size_t b = 0; b < k; ++b)
      if ((m >> b) & 1) s += (s.size() > 1 ? "," : "") + std::to_string(b);
    names.push_back(s + "}");
  }
  return FinitePoset::from_predicate(std::move(names), [](std::size_t a, std::size_t b) { return (a & b) == a; });
}

std::vector<Json> corpus_ring_specs() {
  std::vector<Json> out;
  for (std::size_t n = 2; n <= 40; ++n) out.push_back(ring_spec_zmod(n));
  out.push_back(ring_spec_zmod(60));

  struct Factor {
    Json spec;
    std::size_t size;
  };
  std::vector<Factor> base;
  for (std::size_t n : {2, 3, 4, 5, 6, 7, 8, 9}) base.push_back({ring_spec_zmod(n), n});
  base.push_back({ring_spec_polyquot(2, {1, 1, 1}), 4});
  base.push_back({ring_spec_polyquot(2, {0, 0, 1}), 4});
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = a; b < base.size(); ++b) {
      if (base[a].size * base[b].size <= 64)
        out.push_back(ring_spec_product({base[a].spec, base[b].spec}));
      for (std::size_t c = b; c < base.size(); ++c)
        if (base[a].size * base[b].size * base[c].size <= 64)
          out.push_back(ring_spec_product({base[a].spec, base[b].spec, base[c].spec}));
    }

  for (std::size_t p : {2, 3})
    for (std::size_t deg = 1; deg <= 3; ++deg) {
      std::size_t count = 1;
      for (std::size_t i = 0; i < deg; ++i) count *= p;
      for (std::size_t code = 0; code < count; ++code) {
        std::vector<long long> modulus;
        for (std::size_t i = 0, c = code; i < deg; ++i, c /= p) modulus.push_back(static_cast<long long>(c % p));
        modulus.push_back(1);
        out.push_back(ring_spec_polyquot(p, modulus));
      }
    }
  return out;
}

std::vector<Json> corpus_poset_specs() {
  std::vector<Json> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back(poset_spec(chain_poset(n), "chain" + std::to_string(n)));
  for (std::size_t n = 1; n <= 8; ++n)
    out.push_back(poset_spec(antichain_poset(n), "antichain" + std::to_string(n)));
  for (std::size_t n = 3; n <= 8; ++n) out.push_back(poset_spec(fence_poset(n), "fence" + std::to_string(n)));
  for (std::size_t m = 1; m <= 6; ++m)
    out.push_back(poset_spec(diamond_poset(m), "diamond" + std::to_string(m)));
  out.push_back(poset_spec(boolean_lattice_poset(3), "boolean3"));
  out.push_back(poset_spec(chain_poset(12), "chain12"));
  out.push_back(poset_spec(boolean_lattice_poset(4), "boolean4"));
  out.push_back(poset_spec(fence_poset(14), "fence14"));
  return out;
}

Json hom_from_zmod(std::size_t m, const Json& target) {
  const auto r = parse_ring(target);
  if (m % characteristic(*r) != 0)
    throw InvalidParameter("characteristic of " + r->label() + " does not divide " + std::to_string(m));
  std::vector<Element> map;
  for (std::size_t k = 0; k < m; ++k) map.push_back(multiple_of_one(*r, k));
  return hom_spec(ring_spec_zmod(m), target, map);
}

Json hom_projection(const Json& product, std::size_t k) {
  const auto& fs = product.at("factors");
  std::vector<RingPtr> factors;
  for (const auto& f : fs) factors.push_back(parse_ring(f));
  if (k >= factors.size()) throw InvalidParameter("projection index out of range");
  const auto r = build_product(factors);
  std::vector<Element> map;
  for (Element e = 0; e < r->size(); ++e) map.push_back(product_coordinates(factors, e)[k]);
  return hom_spec(product, fs[k], map);
}

Json hom_poly_eval(const Json& source, const Json& target, Element t) {
  const auto s = parse_ring(source);
  const auto r = parse_ring(target);
  const std::size_t p = source.at("p").get<std::size_t>();
  if (t >= r->size()) throw InvalidParameter("evaluation point out of range");
  std::vector<Element> map;
  for (Element e = 0; e < s->size(); ++e) {
    Element acc = r->zero();
    Element power = r->one();
    for (std::size_t c = e; c > 0; c /= p) {
      acc = r->add(acc, r->mul(multiple_of_one(*r, c % p), power));
      power = r->mul(power, t);
    }
    map.push_back(acc);
  }
  return hom_spec(source, target, map);
}

std::vector<Json> corpus_hom_specs() {
  std::vector<Json> out;
  for (std::size_t m : {4, 6, 8, 9, 12, 18, 24, 30, 36, 60})
    for (std::size_t n = 2; n <= m; ++n)
      if (m % n == 0) out.push_back(hom_from_zmod(m, ring_spec_zmod(n)));

  const Json z2 = ring_spec_zmod(2), z3 = ring_spec_zmod(3), z4 = ring_spec_zmod(4), z5 = ring_spec_zmod(5),
             z6 = ring_spec_zmod(6);
  const Json f4 = ring_spec_polyquot(2, {1, 1, 1});
  const Json f8 = ring_spec_polyquot(2, {1, 1, 0, 1});
  const Json f9 = ring_spec_polyquot(3, {1, 0, 1});
  const Json f27 = ring_spec_polyquot(3, {1, 2, 0, 1});
  const Json dual2 = ring_spec_polyquot(2, {0, 0, 1});
  const Json cube2 = ring_spec_polyquot(2, {0, 0, 0, 1});
  const Json split2 = ring_spec_polyquot(2, {0, 1, 1});
  const Json split3 = ring_spec_polyquot(3, {2, 0, 1});

  // Diagonal (CRT-type) structure maps into products.
  out.push_back(hom_from_zmod(6, ring_spec_product({z2, z3})));
  out.push_back(hom_from_zmod(12, ring_spec_product({z4, z3})));
  out.push_back(hom_from_zmod(30, ring_spec_product({z2, z3, z5})));
  out.push_back(hom_from_zmod(6, ring_spec_product({z6, z2})));
  out.push_back(hom_from_zmod(2, ring_spec_product({z2, z2})));

  for (const Json& prod : {ring_spec_product({z6, z2}), ring_spec_product({z2, z3}), ring_spec_product({z2, z3, z5}),
                           ring_spec_product({z4, f4}), ring_spec_product({z2, z2, z2})})
    for (std::size_t k = 0; k < prod.at("factors").size(); ++k) out.push_back(hom_projection(prod, k));

  // Prime fields into extensions.
  out.push_back(hom_from_zmod(2, f4));
  out.push_back(hom_from_zmod(2, f8));
  out.push_back(hom_from_zmod(3, f9));
  out.push_back(hom_from_zmod(3, f27));
  out.push_back(hom_from_zmod(2, dual2));
  out.push_back(hom_from_zmod(3, split3));

  // Evaluations and Frobenius; x has index p, x+1 index p+1, 2x index 6 over F3.
  out.push_back(hom_poly_eval(f4, f4, 3));
  out.push_back(hom_poly_eval(f9, f9, 6));
  out.push_back(hom_poly_eval(dual2, z2, 0));
  out.push_back(hom_poly_eval(split2, z2, 0));
  out.push_back(hom_poly_eval(split2, z2, 1));
  out.push_back(hom_poly_eval(split3, z3, 1));
  out.push_back(hom_poly_eval(split3, z3, 2));
  out.push_back(hom_poly_eval(cube2, dual2, 2));
  out.push_back(hom_poly_eval(cube2, z2, 0));
  return out;
}

namespace {

Json composable(const Json& f, const Json& g) { return Json{{"kind", "composable"}, {"first", f}, {"second", g}}; }

}  // namespace

std::vector<Json> corpus_composable_specs() {
  const Json z2 = ring_spec_zmod(2), z3 = ring_spec_zmod(3), z5 = ring_spec_zmod(5), z6 = ring_spec_zmod(6),
             z30 = ring_spec_zmod(30);
  const Json f4 = ring_spec_polyquot(2, {1, 1, 1});
  const Json f9 = ring_spec_polyquot(3, {1, 0, 1});
  const Json dual2 = ring_spec_polyquot(2, {0, 0, 1});
  const Json cube2 = ring_spec_polyquot(2, {0, 0, 0, 1});
  const Json z235 = ring_spec_product({z2, z3, z5});
  const Json z23 = ring_spec_product({z2, z3});

  std::vector<Json> out;
  out.push_back(composable(hom_from_zmod(12, z6), hom_from_zmod(6, z2)));
  out.push_back(composable(hom_from_zmod(60, z30), hom_from_zmod(30, z235)));
  out.push_back(composable(hom_from_zmod(30, z235), hom_projection(z235, 1)));
  out.push_back(composable(hom_from_zmod(6, z23), hom_projection(z23, 0)));
  out.push_back(composable(hom_from_zmod(2, f4), hom_poly_eval(f4, f4, 3)));
  out.push_back(composable(hom_poly_eval(f4, f4, 3), hom_poly_eval(f4, f4, 3)));
  out.push_back(composable(hom_from_zmod(3, f9), hom_poly_eval(f9, f9, 6)));
  out.push_back(composable(hom_poly_eval(cube2, dual2, 2), hom_poly_eval(dual2, z2, 0)));
  out.push_back(composable(hom_from_zmod(2, dual2), hom_poly_eval(dual2, z2, 0)));
  return out;
}

std::vector<Json> corpus_profile_specs() {
  const std::vector<std::vector<unsigned>> torsion{{}, {2}, {5}, {2, 4}};
  std::vector<Json> out;
  for (unsigned rank = 0; rank <= 3; ++rank)
    for (const auto& t : torsion)
      out.push_back(Json{{"kind", "class_group"}, {"free_rank", rank}, {"torsion", t}});
  return out;
}

std::vector<Json> corpus_ufd_specs() {
  std::vector<Json> out;
  for (std::size_t n = 0; n <= 10; ++n) out.push_back(Json{{"kind", "ufd"}, {"n", n}});
  return out;
}

Json default_job() {
  Json inputs = Json::array();
  for (auto* gen : {&corpus_ring_specs, &corpus_poset_specs, &corpus_hom_specs, &corpus_composable_specs,
                    &corpus_profile_specs, &corpus_ufd_specs})
    for (auto& j : (*gen)()) inputs.push_back(std::move(j));
  return Json{{"inputs", std::move(inputs)}, {"checks", {"all"}}, {"output", "reports"}, {"formats", {"json"}}};
}

}  // namespace specprime
