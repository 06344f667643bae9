// Acceptance run over the default corpus. Prints one PASS/FAIL line per
// criterion and exits nonzero when any criterion fails.

#include "specprime/corpus.hpp"
#include "specprime/correspondence.hpp"
#include "specprime/errors.hpp"
#include "specprime/jobs.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace specprime;

namespace {

// Pinned limits.
constexpr double kCorpusBudgetSeconds = 10.0;
constexpr std::size_t kBruteforceRingSize = 16;
constexpr std::size_t kExhaustiveSubsetPoints = 12;
constexpr std::size_t kRandomSubsets = 1000;
constexpr std::size_t kLatticeSpaceLimit = 64;
constexpr std::size_t kMaxFamily = 3;
constexpr std::size_t kUfdMax = 10;
constexpr std::size_t kUfdExactMax = 6;
constexpr std::uint64_t kSeed = 20240601;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects the first few failure messages of one criterion.
class Criterion {
 public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }

  bool report() const {
    std::printf("%s criterion %2d: %s (%zu checks%s%s)\n", failures_ ? "FAIL" : "PASS", number_, title_.c_str(),
                checks_, notes_.empty() ? "" : "; ", notes_.c_str());
    for (const auto& m : messages_) std::printf("    %s\n", m.c_str());
    std::fflush(stdout);
    return failures_ == 0;
  }

 private:
  int number_;
  std::string title_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
  std::string notes_;
};

std::vector<ElementSet> sorted_members(const std::vector<SemigroupPrime>& qs) {
  std::vector<ElementSet> out;
  for (const auto& q : qs) out.push_back(q.members);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

bool is_field(const FiniteRing& r) { return r.units().count() + 1 == r.size(); }

// Every nonempty family of at most `k` distinct indices below n.
void for_each_family(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!cur.empty()) fn(cur);
    if (cur.size() == k) return;
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

FinitePoset inclusion_order(const std::vector<ElementSet>& sets) {
  std::vector<std::string> names(sets.size());
  return FinitePoset::from_predicate(std::move(names),
                                     [&](std::size_t a, std::size_t b) { return sets[a].is_subset_of(sets[b]); });
}

}  // namespace

int main() {
  const auto suite_start = Clock::now();
  bool all_ok = true;

  std::vector<RingPtr> rings;
  for (const auto& s : corpus_ring_specs()) rings.push_back(parse_ring(s));
  std::vector<FinitePoset> zoo;
  for (const auto& s : corpus_poset_specs()) zoo.push_back(parse_poset(s));

  // 1. Brute force against the union construction.
  {
    Criterion c(1, "subset scan equals unions of primes; counts; corpus time");
    const auto t0 = Clock::now();
    std::size_t scanned = 0;
    for (const auto& r : rings) {
      const auto from_spec = sprimes_from_spec(r);
      if (r->size() <= kBruteforceRingSize) {
        ++scanned;
        c.expect(sorted_members(sprimes_bruteforce(r->multiplicative(), kBruteforceRingSize)) == sorted_members(from_spec),
                 r->label() + ": subset scan differs");
      } else {
        for (const auto& q : from_spec)
          c.expect(ring_semigroup_prime_violation(*r, q.members).empty(), r->label() + ": invalid semigroup prime");
      }
    }
    c.expect(sprimes_from_spec(build_zmod(6)).size() == 3, "|S(Z/6)| != 3");
    c.expect(sprimes_from_spec(build_zmod(30)).size() == 7, "|S(Z/30)| != 7");
    std::size_t fields = 0;
    for (const auto& r : rings)
      if (is_field(*r)) {
        ++fields;
        c.expect(sprimes_from_spec(r).size() == 1, r->label() + ": field with |S| != 1");
      }
    const double union_seconds = seconds_since(t0);

    RunOptions opts;
    opts.write_files = false;
    const auto t1 = Clock::now();
    const auto run = run_job(parse_job(default_job()), opts);
    const double corpus_seconds = seconds_since(t1);
    c.expect(run.exit_code == kExitOk, "default corpus job exit code " + std::to_string(run.exit_code));
    c.expect(corpus_seconds < kCorpusBudgetSeconds, "default corpus job took " + std::to_string(corpus_seconds) + " s");
    std::ostringstream n;
    n.precision(2);
    n << std::fixed << scanned << " rings scanned, " << fields << " fields, union route " << union_seconds
      << " s, full corpus job " << corpus_seconds << " s (limit " << kCorpusBudgetSeconds << " s)";
    c.note(n.str());
    all_ok &= c.report();
  }

  std::vector<RingAnalysis> analyses;
  for (const auto& r : rings) analyses.push_back(analyze(r));

  // 2. Spectrality.
  {
    Criterion c(2, "S(R), X(R) and Alexandrov presentations are spectral");
    for (const auto& a : analyses) {
      c.expect(verify_spectral(a.sprimes.presentation).passed(), a.ring->label() + ": S(R) not spectral");
      c.expect(verify_spectral(a.xspace.presentation).passed(), a.ring->label() + ": X(R) not spectral");
    }
    for (const auto& x : zoo)
      c.expect(verify_spectral(alexandrov_presentation(x)).passed(), "zoo poset of size " + std::to_string(x.size()));
    all_ok &= c.report();
  }

  // 3. Retraction and formulas.
  {
    Criterion c(3, "p o j = id, jp_closure = j o p, j o i = phi");
    for (const auto& a : analyses) {
      const auto& l = a.ring->label();
      for (const auto& q : a.sprimes.primes) c.expect(p_map(a, j_map(a, q)) == q, l + ": p(j(Q)) != Q");
      for (const auto& y : a.xspace.points) {
        const DownSet d{y};
        c.expect(jp_closure(a, d) == j_map(a, p_map(a, d)), l + ": jp_closure != j(p(Y))");
      }
      const auto& sp = a.spectrum();
      for (std::size_t p = 0; p < sp.size(); ++p) {
        const auto& q = a.sprimes.primes[a.sprimes.spec_embedding[p]];
        c.expect(j_map(a, q) == phi(sp.order, p), l + ": j(i(P)) != phi(P)");
      }
    }
    all_ok &= c.report();
  }

  // 4. Surjectivity conditions.
  {
    Criterion c(4, "surjectivity conditions agree and hold; sufficient conditions agree and imply them");
    for (const auto& a : analyses) {
      const auto r = surjectivity_report(a);
      const auto& l = a.ring->label();
      const bool t[] = {r.j_surjective, r.radical_principal, r.union_avoidance, r.basis_condition};
      const bool k[] = {r.prime_radical_principal, r.compactly_packed_ideal, r.compactly_packed_prime};
      c.expect(std::all_of(std::begin(t), std::end(t), [&](bool b) { return b == t[0]; }), l + ": surjectivity conditions disagree");
      c.expect(t[0], l + ": surjectivity conditions false");
      c.expect(std::all_of(std::begin(k), std::end(k), [&](bool b) { return b == k[0]; }), l + ": sufficient conditions disagree");
      c.expect(!(k[0] && r.noetherian_spectrum) || t[0], l + ": sufficient conditions hold without surjectivity");
    }
    all_ok &= c.report();
  }

  // 5. Functoriality.
  {
    Criterion c(5, "diagram squares, S(g o f) = S(f) o S(g), embedding transfer");
    std::size_t embeddings = 0, homeomorphisms = 0;
    for (const auto& h : corpus_hom_specs()) {
      const auto f = parse_hom(h);
      const auto d = diagram_check(f, analyze(f.source()), analyze(f.target()));
      const std::string l = f.source()->label() + " -> " + f.target()->label();
      c.expect(d.left_square, l + ": left square fails");
      c.expect(d.right_square, l + ": right square fails");
      c.expect(d.transfer_holds(), l + ": embedding transfer fails");
      embeddings += d.fa_embedding;
      homeomorphisms += d.fa_homeomorphism;
    }
    for (const auto& spec_pair : corpus_composable_specs()) {
      const auto [f, g] = parse_composable(spec_pair);
      const auto gf = compose(g, f);
      const auto s1 = hull_kernel_space(f.source()), s2 = hull_kernel_space(f.target()), s3 = hull_kernel_space(g.target());
      const auto sf = s_map(f, s1, s2), sg = s_map(g, s2, s3), sgf = s_map(gf, s1, s3);
      for (std::size_t q = 0; q < s3.size(); ++q)
        c.expect(sgf[q] == sf[sg[q]], f.source()->label() + " -> " + g.target()->label() + ": S(g o f) != S(f) o S(g)");
      const auto a1 = analyze(f.source()), a3 = analyze(g.target());
      c.expect(diagram_check(gf, a1, a3).commutes(), "composite diagram fails");
    }
    c.note(std::to_string(corpus_hom_specs().size()) + " homs, " + std::to_string(embeddings) + " with f^a an embedding, " +
           std::to_string(homeomorphisms) + " homeomorphisms");
    all_ok &= c.report();
  }

  // 6. Closure identities and specialization orders.
  {
    Criterion c(6, "inverse closure = generization closure, constructible closure = identity, orders are inclusion");
    std::mt19937_64 rng(kSeed);
    std::size_t subsets = 0;
    for (const auto& x : zoo) {
      auto test = [&](const ElementSet& y) {
        ++subsets;
        c.expect(inverse_closure_by_opens(x, y) == closure(x, y, ClosureMode::generization), "inverse closure differs");
        c.expect(constructible_closure_by_opens(x, y) == y, "constructible closure is not the identity");
      };
      if (x.size() <= kExhaustiveSubsetPoints) {
        for (std::size_t m = 0; m < (std::size_t{1} << x.size()); ++m) test(ElementSet(x.size(), m));
      } else {
        std::bernoulli_distribution coin(0.5);
        for (std::size_t k = 0; k < kRandomSubsets; ++k) {
          ElementSet y(x.size());
          for (std::size_t i = 0; i < x.size(); ++i)
            if (coin(rng)) y.set(i);
          test(y);
        }
      }
    }
    for (const auto& a : analyses) {
      c.expect(a.sprimes.presentation.specialization_order() == inclusion_order(sorted_members(a.sprimes.primes)) &&
                   a.sprimes.presentation.specialization_order() == a.sprimes.order,
               a.ring->label() + ": S(R) specialization order is not inclusion");
      c.expect(a.xspace.presentation.specialization_order() == inclusion_order(a.xspace.points),
               a.ring->label() + ": X(R) specialization order is not inclusion");
    }
    c.note(std::to_string(subsets) + " subsets");
    all_ok &= c.report();
  }

  // 7. Lattice structure.
  {
    Criterion c(7, "sup is a semigroup prime, NoInfimum iff no glb, prime avoidance");
    std::size_t families = 0, no_inf = 0;
    for (const auto& a : analyses) {
      const auto& s = a.sprimes;
      const auto& l = a.ring->label();
      if (s.size() > kLatticeSpaceLimit) continue;
      for_each_family(s.size(), kMaxFamily, [&](const std::vector<std::size_t>& idx) {
        ++families;
        std::vector<SemigroupPrime> t;
        for (auto i : idx) t.push_back(s.primes[i]);
        const auto sup = sup_sprimes(t);
        c.expect(s.index_of(sup.members) != Spectrum::npos && ring_semigroup_prime_violation(*a.ring, sup.members).empty(),
                 l + ": sup is not a semigroup prime");
        const auto inf = inf_sprimes(s, t);
        const auto glb = glb_exhaustive(s, t);
        no_inf += inf.no_infimum();
        c.expect(inf.no_infimum() == !glb.has_value(), l + ": NoInfimum disagrees with exhaustive search");
        if (inf.infimum && glb) c.expect(*inf.infimum == s.primes[*glb], l + ": infimum differs from glb");
      });
      const auto& sp = a.spectrum();
      for_each_family(sp.size(), kMaxFamily, [&](const std::vector<std::size_t>& idx) {
        std::vector<Ideal> ps;
        for (auto i : idx) ps.push_back(sp.primes[i]);
        c.expect(prime_avoidance_j(a, ps).holds(), l + ": prime avoidance fails");
      });
    }
    const auto z6 = analyze(build_zmod(6));
    std::vector<SemigroupPrime> t;
    for (Element g : {2, 3}) t.push_back(SemigroupPrime{z6.ring->multiplicative(), principal_ideal(z6.ring, g).members});
    c.expect(inf_sprimes(z6.sprimes, t).no_infimum(), "Z/6 {(2),(3)} has an infimum");
    c.note(std::to_string(families) + " families, " + std::to_string(no_inf) + " without infimum");
    all_ok &= c.report();
  }

  // 8. UFD model.
  {
    Criterion c(8, "UFD model: 2^n semigroup primes, homeomorphic to the power set");
    for (std::size_t n = 0; n <= kUfdMax; ++n) {
      const auto r = check_ufd_model(ufd_model(n), n <= kUfdExactMax);
      const auto l = "n=" + std::to_string(n);
      c.expect(r.sprime_count == (std::size_t{1} << n), l + ": count");
      c.expect(r.bijective && r.order_is_inclusion && r.minimum_is_zero_ideal, l + ": model structure");
      c.expect(r.homeomorphic, l + ": not homeomorphic");
      c.expect(r.spectral, l + ": not spectral");
    }
    c.note("open families compared exactly for n <= " + std::to_string(kUfdExactMax));
    all_ok &= c.report();
  }

  // 9. Density.
  {
    Criterion c(9, "Spec(R) dense in S(R); Z/6 not very dense; fields very dense");
    std::size_t fields = 0;
    for (const auto& a : analyses) {
      const auto d = density_report(a.sprimes);
      c.expect(d.dense, a.ring->label() + ": not dense");
      if (is_field(*a.ring)) {
        ++fields;
        c.expect(d.very_dense, a.ring->label() + ": field not very dense");
      }
    }
    const auto z6 = hull_kernel_space(build_zmod(6));
    const auto d6 = density_report(z6);
    c.expect(!d6.very_dense, "Z/6 reported very dense");
    c.expect(d6.witness.has_value(), "Z/6 has no witness");
    if (d6.witness) {
      const auto& [u, v] = *d6.witness;
      const auto opens = z6.presentation.opens();
      const auto image = z6.spec_image();
      c.expect(u != v && (u & image) == (v & image), "Z/6 witness opens do not share a trace");
      c.expect(std::find(opens.begin(), opens.end(), u) != opens.end() &&
                   std::find(opens.begin(), opens.end(), v) != opens.end(),
               "Z/6 witness sets are not open");
    }
    c.note(std::to_string(fields) + " fields");
    all_ok &= c.report();
  }

  // 10. Dedekind verdict.
  {
    Criterion c(10, "Dedekind verdict is Homeomorphism iff free rank 0");
    const auto grid = corpus_profile_specs();
    c.expect(grid.size() == 16, "profile grid size");
    std::set<std::pair<unsigned, std::vector<unsigned>>> seen;
    for (const auto& s : grid) {
      const auto p = parse_profile(s);
      seen.insert({p.free_rank, p.torsion_invariants});
      c.expect((dedekind_verdict(p) == DedekindVerdict::Homeomorphism) == (p.free_rank == 0), p.describe());
    }
    for (unsigned rank = 0; rank <= 3; ++rank)
      for (const auto& tor : std::vector<std::vector<unsigned>>{{}, {2}, {5}, {2, 4}})
        c.expect(seen.count({rank, tor}) == 1, "grid misses " + ClassGroupProfile{rank, tor}.describe());
    all_ok &= c.report();
  }

  std::printf("acceptance: %s in %.2f s\n", all_ok ? "all criteria pass" : "some criteria fail", seconds_since(suite_start));
  return all_ok ? 0 : 1;
}
