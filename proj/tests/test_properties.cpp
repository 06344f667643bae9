// Randomized property checks. Each suite draws kIterations cases from a fixed
// seed; the failing seed and case index are printed on failure.

#include "specprime/correspondence.hpp"
#include "specprime/errors.hpp"
#include "specprime/sprime.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace specprime;

namespace {

constexpr std::size_t kIterations = 40;
constexpr std::uint64_t kSeed = 0x5eed;

using Rng = std::mt19937_64;

std::size_t uniform(Rng& g, std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(g); }

RingPtr random_base_ring(Rng& g, std::size_t max_size) {
  for (;;) {
    switch (uniform(g, 0, 2)) {
      case 0:
        return build_zmod(uniform(g, 2, std::min<std::size_t>(max_size, 60)));
      case 1: {
        const std::size_t p = uniform(g, 0, 1) ? 2 : 3;
        const std::size_t deg = uniform(g, 1, p == 2 ? 3 : 2);
        std::vector<long long> f(deg + 1, 0);
        for (std::size_t i = 0; i < deg; ++i) f[i] = static_cast<long long>(uniform(g, 0, p - 1));
        f[deg] = 1;
        auto r = build_poly_quotient(p, f);
        if (r->size() <= max_size) return r;
        break;
      }
      default: {
        auto a = build_zmod(uniform(g, 2, 8));
        auto b = build_zmod(uniform(g, 2, 8));
        if (a->size() * b->size() <= max_size) return build_product({a, b});
      }
    }
  }
}

ElementSet random_subset(Rng& g, std::size_t n, double p = 0.3) {
  std::bernoulli_distribution coin(p);
  ElementSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(g)) s.set(i);
  return s;
}

ElementSet random_nonempty_subset(Rng& g, std::size_t n) {
  auto s = random_subset(g, n, 0.5);
  if (s.none()) s.set(uniform(g, 0, n - 1));
  return s;
}

FinitePoset random_poset(Rng& g, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(g)) pairs.emplace_back(a, b);
  return FinitePoset::from_relation(n, pairs);
}

// A monotone map built along the index order, which is a linear extension
// of random_poset: each point goes to some target above the images of the
// points below it. Falls back to a constant map when no such target exists.
std::vector<std::size_t> random_monotone_map(Rng& g, const FinitePoset& x, const FinitePoset& y) {
  std::vector<std::size_t> f(x.size());
  for (std::size_t a = 0; a < x.size(); ++a) {
    ElementSet allowed = y.full_set();
    for (std::size_t b = 0; b < a; ++b)
      if (x.leq(b, a)) allowed &= y.up(f[b]);
    if (allowed.none()) return std::vector<std::size_t>(x.size(), uniform(g, 0, y.size() - 1));
    const auto choices = indices_of(allowed);
    f[a] = choices[uniform(g, 0, choices.size() - 1)];
  }
  return f;
}

// Random chain of quotient maps Z/(abc) -> Z/(ab) -> Z/a.
struct QuotientChain {
  RingHom f;
  RingHom g;
};

RingHom quotient(const RingPtr& from, const RingPtr& to) {
  std::vector<Element> img;
  for (Element x = 0; x < from->size(); ++x) img.push_back(x % to->size());
  return build_hom(from, to, img);
}

QuotientChain random_quotient_chain(Rng& g) {
  const std::size_t a = uniform(g, 2, 6), b = uniform(g, 1, 4), c = uniform(g, 1, 3);
  auto r1 = build_zmod(a * b * c), r2 = build_zmod(a * b), r3 = build_zmod(a);
  return {quotient(r1, r2), quotient(r2, r3)};
}

std::string where(std::size_t it) { return "seed " + std::to_string(kSeed) + " case " + std::to_string(it); }

}  // namespace

TEST(Property, IdealsAreIdealsAndGeneratedIdealsAreListed) {
  Rng g(kSeed);
  for (std::size_t it = 0; it < kIterations; ++it) {
    const auto r = random_base_ring(g, 64);
    const auto ideals = enumerate_ideals(r);
    for (const auto& i : ideals) EXPECT_EQ(ideal_violation(*r, i.members), "") << where(it);
    const auto gen = ideal_generated(r, random_subset(g, r->size()));
    EXPECT_TRUE(std::find(ideals.begin(), ideals.end(), gen) != ideals.end()) << where(it) << " " << r->label();
  }
}

TEST(Property, RadicalIsClosureOperator) {
  Rng g(kSeed + 1);
  for (std::size_t it = 0; it < kIterations; ++it) {
    const auto r = random_base_ring(g, 64);
    const auto sp = spec(r);
    const auto i = ideal_generated(r, random_subset(g, r->size(), 0.1));
    const auto j = ideal_generated(r, i.members | random_subset(g, r->size(), 0.1));
    const auto ri = radical(i), rj = radical(j);
    EXPECT_TRUE(i.members.is_subset_of(ri.members)) << where(it);
    EXPECT_EQ(radical(ri), ri) << where(it);
    EXPECT_TRUE(ri.members.is_subset_of(rj.members)) << where(it);
    EXPECT_EQ(ri, prime_hull_intersection(i, sp.primes)) << where(it) << " " << r->label();
  }
}

TEST(Property, SprimesFromSpecAreDistinctUnions) {
  Rng g(kSeed + 2);
  for (std::size_t it = 0; it < kIterations; ++it) {
    const auto r = random_base_ring(g, 64);
    const auto sp = spec(r);
    const auto qs = sprimes_from_spec(r, sp);
    EXPECT_EQ(qs.size(), (std::size_t{1} << sp.size()) - 1) << where(it) << " " << r->label();
    for (const auto& q : qs) EXPECT_EQ(ring_semigroup_prime_violation(*r, q.members), "") << where(it);
    if (r->size() <= kDefaultBruteforceCap) {
      auto bf = sprimes_bruteforce(r->multiplicative());
      EXPECT_EQ(bf.size(), qs.size()) << where(it) << " " << r->label();
    }
  }
}

TEST(Property, HullKernelBasisIsMultiplicative) {
  Rng g(kSeed + 3);
  for (std::size_t it = 0; it < kIterations; ++it) {
    const auto r = random_base_ring(g, 64);
    const auto space = hull_kernel_space(r);
    for (int k = 0; k < 20; ++k) {
      const Element x = uniform(g, 0, r->size() - 1), y = uniform(g, 0, r->size() - 1);
      EXPECT_EQ(space.basic_open(r->mul(x, y)), space.basic_open(x) & space.basic_open(y)) << where(it);
    }
    EXPECT_TRUE(verify_spectral(space.presentation).passed()) << where(it);
    EXPECT_EQ(space.presentation.specialization_order(), space.order) << where(it);
  }
}

TEST(Property, LatticeOperations) {
  Rng g(kSeed + 4);
  for (std::size_t it = 0; it < kIterations; ++it) {
    const auto r = random_base_ring(g, 64);
    const auto space = hull_kernel_space(r);
    std::vector<SemigroupPrime> t;
    const std::size_t k = uniform(g, 1, 3);
    for (std::size_t m = 0; m < k; ++m) t.push_back(space.primes[uniform(g, 0, space.size() - 1)]);
    const auto sup = sup_sprimes(t);
    EXPECT_NE(space.index_of(sup.members), Spectrum::npos) << where(it);
    for (const auto& q : t) EXPECT_TRUE(q.members.is_subset_of(sup.members)) << where(it);
    const auto inf = inf_sprimes(space, t);
    const auto glb = glb_exhaustive(space, t);
    EXPECT_EQ(inf.no_infimum(), !glb.has_value()) << where(it);
    if (glb && inf.infimum) EXPECT_EQ(space.primes[*glb], *inf.infimum) << where(it);
  }
}

TEST(Property, CorrespondenceOnRandomRings) {
  Rng g(kSeed + 5);
  for (std::size_t it = 0; it < kIterations / 2; ++it) {
    const auto r = random_base_ring(g, 64);
    const auto a = analyze(r);
    EXPECT_NO_THROW(check_retraction(a)) << where(it);
    const auto rep = surjectivity_report(a);
    EXPECT_TRUE(rep.j_surjective && rep.radical_principal && rep.union_avoidance && rep.basis_condition)
        << where(it) << " " << r->label();
    EXPECT_TRUE(rep.consistent()) << where(it);
    for (int k = 0; k < 10; ++k) {
      const auto y = a.xspace.points[uniform(g, 0, a.xspace.points.size() - 1)];
      EXPECT_EQ(j_map(a, p_map(a, y)).members, y) << where(it);
      const auto sub = random_nonempty_subset(g, a.spectrum().size());
      EXPECT_TRUE(monotone_p_check(a, sub, random_nonempty_subset(g, a.spectrum().size())).holds()) << where(it);
    }
    EXPECT_TRUE(density_report(a.sprimes).dense) << where(it);
  }
}

TEST(Property, FunctorialityOnQuotientChains) {
  Rng g(kSeed + 6);
  for (std::size_t it = 0; it < kIterations / 2; ++it) {
    const auto [f, h] = random_quotient_chain(g);
    const auto gf = compose(h, f);
    const auto s1 = hull_kernel_space(f.source()), s2 = hull_kernel_space(f.target()), s3 = hull_kernel_space(h.target());
    const auto sf = s_map(f, s1, s2), sh = s_map(h, s2, s3), sgf = s_map(gf, s1, s3);
    for (std::size_t q = 0; q < s3.size(); ++q) EXPECT_EQ(sgf[q], sf[sh[q]]) << where(it);
    const auto pf = spec_map(f, s1.spectrum, s2.spectrum), ph = spec_map(h, s2.spectrum, s3.spectrum);
    const auto pgf = spec_map(gf, s1.spectrum, s3.spectrum);
    for (std::size_t p = 0; p < s3.spectrum.size(); ++p) EXPECT_EQ(pgf[p], pf[ph[p]]) << where(it);

    const auto a1 = analyze(f.source()), a2 = analyze(f.target());
    const auto d = diagram_check(f, a1, a2);
    EXPECT_TRUE(d.commutes()) << where(it);
    EXPECT_TRUE(d.transfer_holds()) << where(it);
  }
}

TEST(Property, XFunctorComposes) {
  Rng g(kSeed + 7);
  for (std::size_t it = 0; it < kIterations; ++it) {
    const auto x = random_poset(g, uniform(g, 1, 7), 0.3);
    const auto y = random_poset(g, uniform(g, 1, 7), 0.3);
    const auto z = random_poset(g, uniform(g, 1, 7), 0.3);
    const auto f = random_monotone_map(g, x, y), h = random_monotone_map(g, y, z);
    ASSERT_TRUE(is_monotone(x, y, f));
    ASSERT_TRUE(is_monotone(y, z, h));
    std::vector<std::size_t> hf(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) hf[a] = h[f[a]];
    const XFunctor xf(x, y, f), xh(y, z, h), xhf(x, z, hf);
    for (const auto& c : enumerate_down_sets(x)) {
      EXPECT_EQ(xhf.apply(c), xh.apply(xf.apply(c))) << where(it);
      EXPECT_TRUE(y.is_down_set(xf.apply(c))) << where(it);
    }
    for (std::size_t p = 0; p < x.size(); ++p) EXPECT_EQ(xf.apply(phi(x, p).members), phi(y, f[p]).members) << where(it);
  }
}

TEST(Property, ClosureIdentitiesOnRandomPosets) {
  Rng g(kSeed + 8);
  for (std::size_t it = 0; it < kIterations; ++it) {
    const auto x = random_poset(g, uniform(g, 1, 10), uniform(g, 0, 1) ? 0.2 : 0.5);
    for (int k = 0; k < 30; ++k) {
      const auto y = random_subset(g, x.size(), 0.4);
      EXPECT_EQ(inverse_closure_by_opens(x, y), x.down_closure(y)) << where(it);
      EXPECT_EQ(closure(x, y, ClosureMode::inverse), closure(x, y, ClosureMode::generization)) << where(it);
      EXPECT_EQ(constructible_closure_by_opens(x, y), y) << where(it);
      EXPECT_EQ(alexandrov_presentation(x).closure(y), x.up_closure(y)) << where(it);
    }
    const auto xs = xspace(x);
    EXPECT_EQ(xs.presentation.specialization_order(), xs.order) << where(it);
    EXPECT_TRUE(verify_spectral(xs.presentation).passed()) << where(it);
    EXPECT_NO_THROW(check_phi_embedding(x, xs)) << where(it);
  }
}

TEST(Property, BruteforceMatchesDefinitionOnSemilattices) {
  // (subsets of {0..k-1}, union) restricted to a random union-closed family.
  Rng g(kSeed + 9);
  for (std::size_t it = 0; it < kIterations; ++it) {
    const std::size_t k = uniform(g, 1, 4);
    std::vector<unsigned> family;
    for (unsigned m = 0; m < (1u << k); ++m)
      if (uniform(g, 0, 2) != 0) family.push_back(m);
    if (family.empty()) family.push_back(0);
    for (bool grown = true; grown;) {
      grown = false;
      for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = 0; b < family.size(); ++b)
          if (std::find(family.begin(), family.end(), family[a] | family[b]) == family.end()) {
            family.push_back(family[a] | family[b]);
            grown = true;
          }
    }
    std::sort(family.begin(), family.end());
    std::map<unsigned, std::size_t> index;
    for (std::size_t i = 0; i < family.size(); ++i) index[family[i]] = i;
    std::vector<std::vector<std::size_t>> table(family.size(), std::vector<std::size_t>(family.size()));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < family.size(); ++a) {
      names.push_back(std::to_string(family[a]));
      for (std::size_t b = 0; b < family.size(); ++b) table[a][b] = index[family[a] | family[b]];
    }
    const auto s = Semigroup::from_table("semilattice", table, names);
    const auto found = sprimes_bruteforce(s);
    std::size_t expected = 0;
    for (std::size_t m = 1; m + 1 < (std::size_t{1} << family.size()); ++m)
      expected += semigroup_prime_violation(*s, ElementSet(family.size(), m)).empty();
    EXPECT_EQ(found.size(), expected) << where(it);
    for (const auto& q : found) EXPECT_EQ(semigroup_prime_violation(*s, q.members), "") << where(it);
  }
}
