#include "specprime/correspondence.hpp"

#include "specprime/errors.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace specprime {

RingAnalysis analyze(const RingPtr& r) {
  RingAnalysis a;
  a.ring = r;
  a.ideals = enumerate_ideals(r);
  a.sprimes = hull_kernel_space(r, spec(r));
  const auto& sp = a.sprimes.spectrum;
  a.xspace = xspace(sp.order);
  check_phi_embedding(sp.order, a.xspace);

  const std::string where = " for " + r->label();
  for (const auto& q : a.sprimes.primes) a.j_index.push_back(a.xspace.index_of(j_map(a, q).members));
  require_invariant(is_order_embedding(a.sprimes.order, a.xspace.order, a.j_index),
                    "j is not an injective order embedding" + where);

  ElementSet j_image(a.xspace.points.size());
  for (auto k : a.j_index) j_image.set(k);
  for (Element x = 0; x < r->size(); ++x) {
    ElementSet pushed(a.xspace.points.size());
    for_each_member(a.sprimes.basic_open(x), [&](std::size_t k) { pushed.set(a.j_index[k]); });
    require_invariant(pushed == (a.xspace.basic_open(sp.basic_open(x)) & j_image),
                      "j(U(x)) != U(D(x)) n j(S(R)) at x=" + r->name(x) + where);
  }
  for (std::size_t p = 0; p < sp.size(); ++p)
    require_invariant(a.j_index[a.sprimes.spec_embedding[p]] == a.xspace.index_of(phi(sp.order, p).members),
                      "j o i != phi at " + sp.order.names()[p] + where);
  return a;
}

DownSet j_map(const RingAnalysis& a, const SemigroupPrime& q) {
  if (q.carrier != a.ring->multiplicative()) throw InvalidParameter("semigroup prime of another ring");
  const auto& sp = a.spectrum();
  ElementSet y(sp.size());
  for (std::size_t p = 0; p < sp.size(); ++p)
    if (sp.primes[p].members.is_subset_of(q.members)) y.set(p);
  return DownSet::make(sp.order, std::move(y));
}

SemigroupPrime p_map(const RingAnalysis& a, const ElementSet& y) {
  const auto& sp = a.spectrum();
  if (y.size() != sp.size() || y.none()) throw InvalidParameter("P(Y) needs a nonempty set of Spec points");
  return SemigroupPrime{a.ring->multiplicative(), sp.union_of(y)};
}

SemigroupPrime p_map(const RingAnalysis& a, const DownSet& y) { return p_map(a, y.members); }

void check_retraction(const RingAnalysis& a) {
  for (const auto& q : a.sprimes.primes)
    require_invariant(p_map(a, j_map(a, q)) == q, "P(j(Q)) != Q for Q=" + format_set(q.members, a.ring->names()));
  const auto& xs = a.xspace;
  for (Element x = 0; x < a.ring->size(); ++x) {
    ElementSet pre(xs.points.size());
    for (std::size_t k = 0; k < xs.points.size(); ++k)
      if (!p_map(a, xs.points[k]).members.test(x)) pre.set(k);
    require_invariant(pre == xs.basic_open(a.spectrum().basic_open(x)),
                      "P^-1(U(x)) != U(D(x)) at x=" + a.ring->name(x));
  }
}

DownSet jp_closure(const RingAnalysis& a, const DownSet& y) {
  const auto& sp = a.spectrum();
  ElementSet out = make_full_set(sp.size());
  for (Element x = 0; x < a.ring->size(); ++x) {
    const ElementSet d = sp.basic_open(x);
    if (y.members.is_subset_of(d)) out &= d;
  }
  require_invariant(y.members.is_subset_of(out), "principal-open hull does not contain Y");
  require_invariant(out == j_map(a, p_map(a, y)).members, "(j o P)(Y) differs from the principal-open hull");
  return DownSet::make(sp.order, std::move(out));
}

// --- surjectivity conditions ---------------------------------------------------

namespace {

// Calls fn(Y) for every nonempty subset Y of `points`.
template <class Fn>
bool all_nonempty_subsets(const ElementSet& points, Fn&& fn) {
  const auto idx = indices_of(points);
  const std::uint64_t total = std::uint64_t{1} << idx.size();
  for (std::uint64_t m = 1; m < total; ++m) {
    ElementSet y(points.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      if ((m >> i) & 1) y.set(idx[i]);
    if (!fn(y)) return false;
  }
  return true;
}

bool contained_in_some(const Spectrum& sp, const ElementSet& ideal, const ElementSet& y) {
  bool found = false;
  for_each_member(y, [&](std::size_t p) { found = found || ideal.is_subset_of(sp.primes[p].members); });
  return found;
}

}  // namespace

bool SurjectivityReport::theorem_consistent() const {
  return j_surjective == radical_principal && radical_principal == union_avoidance &&
         union_avoidance == basis_condition;
}

bool SurjectivityReport::corollary_consistent() const {
  return prime_radical_principal == compactly_packed_ideal && compactly_packed_ideal == compactly_packed_prime;
}

bool SurjectivityReport::corollary_implies_theorem() const {
  const bool corollary = noetherian_spectrum && prime_radical_principal;
  return !corollary || (j_surjective && radical_principal && union_avoidance && basis_condition);
}

SurjectivityReport surjectivity_report(const RingAnalysis& a) {
  const RingPtr& r = a.ring;
  const auto& sp = a.spectrum();
  const auto& xs = a.xspace;
  SurjectivityReport rep;
  rep.ring_label = r->label();
  rep.sprime_count = a.sprimes.size();
  rep.xspace_count = xs.points.size();
  rep.noetherian_spectrum = true;

  // (i) image of j against X(R), compared as down-sets.
  std::unordered_set<ElementSet> image;
  for (const auto& q : a.sprimes.primes) image.insert(j_map(a, q).members);
  rep.j_surjective = true;
  for (const auto& y : xs.points)
    if (!image.count(y)) {
      rep.j_surjective = false;
      rep.missing_xspace_point = y;
      break;
    }

  // (ii) radicals of all (finitely generated) ideals against principal radicals.
  std::unordered_set<ElementSet> principal_radicals;
  for (Element x = 0; x < r->size(); ++x) principal_radicals.insert(radical(principal_ideal(r, x)).members);
  rep.radical_principal = true;
  for (const auto& i : a.ideals)
    if (!principal_radicals.count(radical(i).members)) {
      rep.radical_principal = false;
      rep.nonprincipal_radical = i.members;
      break;
    }

  // (iii) per ideal, per semigroup prime Q, per presentation Q = u Y.
  rep.union_avoidance = true;
  for (const auto& i : a.ideals) {
    for (const auto& q : a.sprimes.primes) {
      if (!i.members.is_subset_of(q.members)) continue;
      const ElementSet below = j_map(a, q).members;
      const bool ok = all_nonempty_subsets(below, [&](const ElementSet& y) {
        if (sp.union_of(y) != q.members) return true;
        return contained_in_some(sp, i.members, y);
      });
      if (!ok) {
        rep.union_avoidance = false;
        rep.avoidance_failure = std::make_pair(i.members, q.members);
        break;
      }
    }
    if (!rep.union_avoidance) break;
  }

  // (iv) for each J with D(J) nonempty, some x with D(J) in U(D(x)) subset of U(D(J)).
  rep.basis_condition = true;
  for (const auto& j : a.ideals) {
    const ElementSet dj = sp.open_of(j.members);
    if (dj.none()) continue;
    const std::size_t point = xs.index_of(dj);
    const ElementSet target = xs.basic_open(dj);
    bool found = false;
    for (Element x = 0; x < r->size() && !found; ++x) {
      const ElementSet candidate = xs.basic_open(sp.basic_open(x));
      found = candidate.test(point) && candidate.is_subset_of(target);
    }
    if (!found) {
      rep.basis_condition = false;
      rep.basis_failure = j.members;
      break;
    }
  }

  // Every prime is the radical of a principal ideal.
  rep.prime_radical_principal = true;
  for (const auto& p : sp.primes)
    if (!principal_radicals.count(p.members)) {
      rep.prime_radical_principal = false;
      rep.nonprincipal_prime = p.members;
      break;
    }

  // Compact packing: I subset of u Y forces I subset of some P in Y, over
  // every nonempty Y of Spec(R).
  auto packed = [&](const auto& candidates, auto& failure) {
    for (const auto& i : candidates) {
      std::optional<ElementSet> bad;
      all_nonempty_subsets(make_full_set(sp.size()), [&](const ElementSet& y) {
        const ElementSet u = sp.union_of(y);
        if (!i.members.is_subset_of(u) || contained_in_some(sp, i.members, y)) return true;
        bad = u;
        return false;
      });
      if (bad) {
        failure = std::make_pair(i.members, *bad);
        return false;
      }
    }
    return true;
  };
  rep.compactly_packed_ideal = packed(a.ideals, rep.packed_ideal_failure);
  rep.compactly_packed_prime = packed(sp.primes, rep.packed_prime_failure);
  return rep;
}

// --- diagram ----------------------------------------------------------------------

DiagramReport diagram_check(const RingHom& f, const RingAnalysis& source, const RingAnalysis& target) {
  if (source.ring != f.source() || target.ring != f.target())
    throw InvalidParameter("analyses do not match the homomorphism's rings");
  const auto& spec1 = source.spectrum();
  const auto& spec2 = target.spectrum();
  const auto fa = spec_map(f, spec1, spec2);
  const auto sf = s_map(f, source.sprimes, target.sprimes);

  DiagramReport rep;
  for (std::size_t p = 0; p < spec2.size(); ++p)
    if (sf[target.sprimes.spec_embedding[p]] != source.sprimes.spec_embedding[fa[p]]) rep.left_failures.push_back(p);
  rep.left_square = rep.left_failures.empty();

  const XFunctor xf(spec2.order, spec1.order, fa);
  for (std::size_t k = 0; k < target.sprimes.size(); ++k) {
    const ElementSet lhs = xf.apply(target.xspace.points[target.j_index[k]]);
    const ElementSet rhs = source.xspace.points[source.j_index[sf[k]]];
    if (lhs != rhs) rep.right_failures.push_back(k);
  }
  rep.right_square = rep.right_failures.empty();

  rep.fa_embedding = is_order_embedding(spec2.order, spec1.order, fa);
  rep.fa_homeomorphism = rep.fa_embedding && spec1.size() == spec2.size();
  rep.s_embedding = is_order_embedding(target.sprimes.order, source.sprimes.order, sf);
  rep.s_homeomorphism = rep.s_embedding && source.sprimes.size() == target.sprimes.size();
  return rep;
}

// --- remarks ------------------------------------------------------------------------

AvoidanceReport prime_avoidance_j(const RingAnalysis& a, const std::vector<Ideal>& primes) {
  if (primes.empty()) throw InvalidParameter("prime avoidance needs at least one prime");
  const auto& sp = a.spectrum();
  ElementSet u(a.ring->size());
  AvoidanceReport rep;
  rep.rhs = ElementSet(sp.size());
  for (const auto& p : primes) {
    if (p.ring != a.ring) throw InvalidParameter("ideal belongs to another ring");
    const auto k = sp.index_of(p.members);
    if (k == Spectrum::npos)
      throw InvalidParameter("not a prime ideal: " + format_set(p.members, a.ring->names()));
    u |= p.members;
    rep.rhs |= j_map(a, SemigroupPrime{a.ring->multiplicative(), p.members}).members;
  }
  rep.lhs = j_map(a, SemigroupPrime{a.ring->multiplicative(), u}).members;
  return rep;
}

MonotoneReport monotone_p_check(const RingAnalysis& a, const ElementSet& y1, const ElementSet& y2) {
  const auto& order = a.spectrum().order;
  if (y1.size() != order.size() || y2.size() != order.size() || y1.none() || y2.none())
    throw InvalidParameter("monotonicity check needs nonempty subsets of Spec(R)");
  const ElementSet c1 = inverse_closure_by_opens(order, y1);
  const ElementSet c2 = inverse_closure_by_opens(order, y2);
  const ElementSet p1 = p_map(a, y1).members;
  const ElementSet p2 = p_map(a, y2).members;
  MonotoneReport rep;
  rep.closure_inclusion = c1.is_subset_of(c2);
  rep.p_inclusion = p1.is_subset_of(p2);
  rep.implication_holds = !rep.closure_inclusion || rep.p_inclusion;
  rep.p_stable_first = p1 == p_map(a, c1).members;
  rep.p_stable_second = p2 == p_map(a, c2).members;
  return rep;
}

std::vector<std::pair<ElementSet, ElementSet>> random_subset_pairs(std::size_t n, std::size_t count,
                                                                   std::uint64_t seed) {
  if (n == 0) throw InvalidParameter("cannot draw nonempty subsets of an empty set");
  std::mt19937_64 gen(seed);
  std::bernoulli_distribution coin(0.5);
  auto draw = [&] {
    ElementSet y(n);
    while (y.none())
      for (std::size_t i = 0; i < n; ++i) y[i] = coin(gen);
    return y;
  };
  std::vector<std::pair<ElementSet, ElementSet>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    auto y1 = draw();
    out.emplace_back(y1, draw());
  }
  return out;
}

// --- Dedekind class groups --------------------------------------------------------

void ClassGroupProfile::validate() const {
  for (auto t : torsion_invariants)
    if (t < 2) throw InvalidParameter("torsion invariant " + std::to_string(t) + " is below 2");
}

std::string ClassGroupProfile::describe() const {
  std::string s;
  if (free_rank > 0) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (auto t : torsion_invariants) s += (s.empty() ? "" : " x ") + ("Z/" + std::to_string(t));
  return s.empty() ? "0" : s;
}

DedekindVerdict dedekind_verdict(const ClassGroupProfile& profile) {
  profile.validate();
  return profile.is_torsion() ? DedekindVerdict::Homeomorphism : DedekindVerdict::NotSurjective;
}

const char* to_string(DedekindVerdict v) {
  return v == DedekindVerdict::Homeomorphism ? "Homeomorphism" : "NotSurjective";
}

}  // namespace specprime
