#include "specprime/errors.hpp"
#include "specprime/ring.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace specprime;

namespace {

std::size_t divisor_count(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Multiples of d in Z/n.
ElementSet multiples(std::size_t n, std::size_t d) {
  ElementSet s(n);
  for (std::size_t x = 0; x < n; ++x)
    if (x % d == 0) s.set(x);
  return s;
}

}  // namespace

TEST(BuildZmod, SixHasZeroDivisors) {
  auto r = build_zmod(6);
  EXPECT_EQ(r->size(), 6u);
  EXPECT_EQ(r->mul(2, 3), 0u);
  EXPECT_EQ(r->add(4, 5), 3u);
  EXPECT_EQ(r->label(), "Z/6");
}

TEST(BuildZmod, RejectsZeroRing) {
  EXPECT_THROW(build_zmod(1), InvalidParameter);
  EXPECT_THROW(build_zmod(0), InvalidParameter);
}

TEST(BuildZmod, SizeCap) {
  EXPECT_NO_THROW(build_zmod(256));
  EXPECT_THROW(build_zmod(257), InvalidParameter);
  EXPECT_NO_THROW(build_zmod(300, 300));
}

TEST(BuildZmod, TwelveHasSixIdeals) { EXPECT_EQ(enumerate_ideals(build_zmod(12)).size(), 6u); }

TEST(BuildZmod, IdealCountIsDivisorCount) {
  for (std::size_t n = 2; n <= 60; ++n) EXPECT_EQ(enumerate_ideals(build_zmod(n)).size(), divisor_count(n)) << n;
}

TEST(FromTables, RejectsBrokenTables) {
  // Z/2 addition with multiplication that is not distributive.
  std::vector<std::vector<Element>> add{{0, 1}, {1, 0}};
  std::vector<std::vector<Element>> mul{{0, 0}, {0, 1}};
  EXPECT_NO_THROW(FiniteRing::from_tables("F2", {}, add, mul, 0, 1));
  EXPECT_THROW(FiniteRing::from_tables("bad", {}, add, {{1, 0}, {0, 1}}, 0, 1), InvalidParameter);
  EXPECT_THROW(FiniteRing::from_tables("zero=one", {}, add, mul, 0, 0), InvalidParameter);
  EXPECT_THROW(FiniteRing::from_tables("ragged", {}, {{0, 1}, {1}}, mul, 0, 1), InvalidParameter);
}

TEST(BuildProduct, CrtBijectionWithZ6) {
  auto z2 = build_zmod(2), z3 = build_zmod(3), z6 = build_zmod(6);
  auto p = build_product({z2, z3});
  ASSERT_EQ(p->size(), 6u);
  auto crt = [&](Element x) { return product_index({z2, z3}, {x % 2, x % 3}); };
  std::vector<bool> hit(6, false);
  for (Element x = 0; x < 6; ++x) hit[crt(x)] = true;
  EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) {
      EXPECT_EQ(crt(z6->add(x, y)), p->add(crt(x), crt(y)));
      EXPECT_EQ(crt(z6->mul(x, y)), p->mul(crt(x), crt(y)));
    }
  EXPECT_EQ(crt(z6->one()), p->one());
}

TEST(BuildProduct, SingleFactorKeepsTables) {
  auto f2 = build_zmod(2);
  auto p = build_product({f2});
  ASSERT_EQ(p->size(), 2u);
  for (Element x = 0; x < 2; ++x)
    for (Element y = 0; y < 2; ++y) {
      EXPECT_EQ(p->add(x, y), f2->add(x, y));
      EXPECT_EQ(p->mul(x, y), f2->mul(x, y));
    }
}

TEST(BuildProduct, SpectrumSizesAdd) {
  EXPECT_EQ(spec(build_product({build_zmod(4), build_zmod(2)})).size(), 2u);
  const std::vector<std::size_t> ns{2, 4, 6, 9, 10};
  for (auto a : ns)
    for (auto b : ns) {
      auto p = build_product({build_zmod(a), build_zmod(b)});
      EXPECT_EQ(spec(p).size(), prime_factors(a).size() + prime_factors(b).size());
    }
}

TEST(BuildProduct, Errors) {
  EXPECT_THROW(build_product({}), InvalidParameter);
  EXPECT_THROW(build_product({build_zmod(20), build_zmod(20)}), InvalidParameter);
}

TEST(ProductCoordinates, RoundTrip) {
  std::vector<RingPtr> fs{build_zmod(2), build_zmod(3), build_zmod(4)};
  for (Element e = 0; e < 24; ++e) EXPECT_EQ(product_index(fs, product_coordinates(fs, e)), e);
  EXPECT_EQ(product_coordinates(fs, 0), (std::vector<Element>{0, 0, 0}));
}

TEST(BuildPolyQuotient, Gf4IsAField) {
  auto r = build_poly_quotient(2, {1, 1, 1});
  ASSERT_EQ(r->size(), 4u);
  for (Element a = 1; a < 4; ++a) {
    bool inverse = false;
    for (Element b = 1; b < 4; ++b) inverse = inverse || r->mul(a, b) == r->one();
    EXPECT_TRUE(inverse) << a;
  }
  EXPECT_EQ(enumerate_ideals(r).size(), 2u);
}

TEST(BuildPolyQuotient, DualNumbersLocalWithNilpotentX) {
  auto r = build_poly_quotient(2, {0, 0, 1});
  ASSERT_EQ(r->size(), 4u);
  const Element x = 2;  // index of x is p^1
  EXPECT_EQ(r->name(x), "x");
  EXPECT_EQ(r->mul(x, x), r->zero());
  EXPECT_EQ(spec(r).size(), 1u);
}

TEST(BuildPolyQuotient, Errors) {
  EXPECT_THROW(build_poly_quotient(2, {1, 2}), InvalidParameter);     // 2x+1 reduces to degree 0
  EXPECT_THROW(build_poly_quotient(3, {1, 2}), InvalidParameter);     // not monic
  EXPECT_THROW(build_poly_quotient(4, {1, 1}), InvalidParameter);     // composite p
  EXPECT_THROW(build_poly_quotient(2, {1}), InvalidParameter);        // degree 0
  EXPECT_THROW(build_poly_quotient(2, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}), InvalidParameter);  // 512 > cap
  EXPECT_NO_THROW(build_poly_quotient(3, {1, 2, 0, 1}));
  EXPECT_NO_THROW(build_poly_quotient(3, {-1, 0, 1}));
}

TEST(IdealGenerated, Examples) {
  auto r = build_zmod(12);
  EXPECT_EQ(ideal_generated(r, std::vector<Element>{4}).members, set_from_indices(12, {0, 4, 8}));
  EXPECT_EQ(ideal_generated(r, std::vector<Element>{1}).members, r->full_set());
  EXPECT_EQ(ideal_generated(r, std::vector<Element>{4, 6}).members, set_from_indices(12, {0, 2, 4, 6, 8, 10}));
  EXPECT_EQ(ideal_generated(r, std::vector<Element>{}).members, set_from_indices(12, {0}));
}

TEST(IdealGenerated, GcdOracle) {
  for (std::size_t n : {12, 18, 30, 36}) {
    auto r = build_zmod(n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const std::size_t g = std::gcd(std::gcd(a, b), n);
        EXPECT_EQ(ideal_generated(r, std::vector<Element>{a, b}).members, multiples(n, g));
      }
  }
}

TEST(EnumerateIdeals, SmallRings) {
  EXPECT_EQ(enumerate_ideals(build_zmod(2)).size(), 2u);
  auto v = build_product({build_zmod(2), build_zmod(2)});
  const auto ideals = enumerate_ideals(v);
  EXPECT_EQ(ideals.size(), 4u);
  for (const auto& i : ideals) EXPECT_TRUE(is_ideal(*v, i.members));
  EXPECT_EQ(ideals.front().members.count(), 1u);
  EXPECT_TRUE(ideals.back().is_unit_ideal());
}

TEST(IdealViolation, ReportsFirstFailure) {
  auto r = build_zmod(6);
  EXPECT_TRUE(ideal_violation(*r, set_from_indices(6, {0, 2, 4})).empty());
  EXPECT_FALSE(ideal_violation(*r, set_from_indices(6, {2, 4})).empty());
  EXPECT_FALSE(ideal_violation(*r, set_from_indices(6, {0, 1})).empty());
  EXPECT_FALSE(is_prime_ideal(*r, r->full_set()));
  EXPECT_TRUE(is_prime_ideal(*r, set_from_indices(6, {0, 3})));
}

TEST(Radical, Examples) {
  auto z12 = build_zmod(12);
  EXPECT_EQ(radical(principal_ideal(z12, 4)).members, set_from_indices(12, {0, 2, 4, 6, 8, 10}));
  EXPECT_TRUE(radical(principal_ideal(z12, 1)).is_unit_ideal());
  auto z6 = build_zmod(6);
  EXPECT_EQ(radical(principal_ideal(z6, 0)).members, set_from_indices(6, {0}));
}

TEST(Radical, SquarefreeKernelOracle) {
  // For d | n, x^k lies in (d) iff every prime of d divides x.
  for (std::size_t n = 2; n <= 72; ++n) {
    auto r = build_zmod(n);
    const auto sp = spec(r);
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      std::size_t kernel = 1;
      for (auto p : prime_factors(d)) kernel *= p;
      const auto i = principal_ideal(r, d % n);
      EXPECT_EQ(radical(i).members, multiples(n, kernel)) << n << " " << d;
      EXPECT_EQ(radical(i), prime_hull_intersection(i, sp.primes));
    }
  }
}

TEST(Spec, Examples) {
  auto z6 = spec(build_zmod(6));
  ASSERT_EQ(z6.size(), 2u);
  EXPECT_TRUE(z6.order.is_antichain());
  EXPECT_NE(z6.index_of(set_from_indices(6, {0, 2, 4})), Spectrum::npos);
  EXPECT_NE(z6.index_of(set_from_indices(6, {0, 3})), Spectrum::npos);
  EXPECT_EQ(z6.index_of(set_from_indices(6, {0})), Spectrum::npos);

  auto f2 = spec(build_zmod(2));
  ASSERT_EQ(f2.size(), 1u);
  EXPECT_EQ(f2.primes[0].members, set_from_indices(2, {0}));

  auto z4 = spec(build_zmod(4));
  ASSERT_EQ(z4.size(), 1u);
  EXPECT_EQ(z4.primes[0].members, set_from_indices(4, {0, 2}));
}

TEST(Spec, PrimeCountIsDistinctPrimeFactors) {
  for (std::size_t n = 2; n <= 100; ++n) {
    const auto sp = spec(build_zmod(n));
    const auto ps = prime_factors(n);
    ASSERT_EQ(sp.size(), ps.size()) << n;
    for (auto p : ps) EXPECT_NE(sp.index_of(multiples(n, p)), Spectrum::npos);
  }
}

TEST(Spec, BasicOpens) {
  auto r = build_zmod(6);
  const auto sp = spec(r);
  const auto p2 = sp.index_of(set_from_indices(6, {0, 2, 4}));
  const auto p3 = sp.index_of(set_from_indices(6, {0, 3}));
  EXPECT_EQ(indices_of(sp.basic_open(2)), std::vector<std::size_t>{p3});
  EXPECT_EQ(indices_of(sp.basic_open(3)), std::vector<std::size_t>{p2});
  EXPECT_EQ(sp.basic_open(1).count(), 2u);
  EXPECT_EQ(sp.basic_open(0).count(), 0u);
  EXPECT_EQ(sp.union_of(sp.order.full_set()), set_from_indices(6, {0, 2, 3, 4}));
}

TEST(RingHom, QuotientTwelveToSix) {
  auto z12 = build_zmod(12), z6 = build_zmod(6);
  std::vector<Element> img;
  for (Element x = 0; x < 12; ++x) img.push_back(x % 6);
  auto f = build_hom(z12, z6, img);
  const auto pre = preimage_ideal(f, principal_ideal(z6, 2));
  EXPECT_EQ(pre.members, principal_ideal(z12, 2).members);
  EXPECT_TRUE(is_prime_ideal(*z12, pre.members));
}

TEST(RingHom, IdentityPreservesIdeals) {
  auto r = build_product({build_zmod(2), build_zmod(4)});
  auto id = RingHom::identity(r);
  for (const auto& i : enumerate_ideals(r)) EXPECT_EQ(preimage_ideal(id, i), i);
}

TEST(RingHom, Rejections) {
  auto z6 = build_zmod(6), z4 = build_zmod(4);
  std::vector<Element> img;
  for (Element x = 0; x < 6; ++x) img.push_back(x % 4);
  EXPECT_THROW(build_hom(z6, z4, img), NotAHomomorphism);
  EXPECT_THROW(build_hom(z6, z6, {0, 0, 0, 0, 0, 0}), NotAHomomorphism);  // 1 -> 0
  EXPECT_THROW(build_hom(z6, z6, {0, 1, 2}), InvalidParameter);
}

TEST(RingHom, ComposeAndSpecMap) {
  auto z12 = build_zmod(12), z6 = build_zmod(6), z2 = build_zmod(2);
  std::vector<Element> a, b;
  for (Element x = 0; x < 12; ++x) a.push_back(x % 6);
  for (Element x = 0; x < 6; ++x) b.push_back(x % 2);
  auto f = build_hom(z12, z6, a);
  auto g = build_hom(z6, z2, b);
  auto h = compose(g, f);
  for (Element x = 0; x < 12; ++x) EXPECT_EQ(h(x), x % 2);
  EXPECT_THROW(compose(f, g), InvalidParameter);

  const auto s12 = spec(z12), s6 = spec(z6);
  const auto fa = spec_map(f, s12, s6);
  for (std::size_t p = 0; p < s6.size(); ++p)
    EXPECT_EQ(s12.primes[fa[p]].members, preimage_ideal(f, s6.primes[p]).members);
}

TEST(RingHom, PreimageOfPrimeIsPrimeAcrossQuotients) {
  for (std::size_t m : {12, 18, 30, 36, 60})
    for (std::size_t n = 2; n <= m; ++n) {
      if (m % n) continue;
      auto src = build_zmod(m), tgt = build_zmod(n);
      std::vector<Element> img;
      for (Element x = 0; x < m; ++x) img.push_back(x % n);
      auto f = build_hom(src, tgt, img);
      for (const auto& p : spec(tgt).primes) EXPECT_TRUE(is_prime_ideal(*src, preimage_ideal(f, p).members));
    }
}
