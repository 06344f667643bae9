#include "specprime/sprime.hpp"

#include "specprime/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace specprime {

// --- definition suite ------------------------------------------------------

std::string semigroup_prime_violation(const Semigroup& s, const ElementSet& q) {
  const std::size_t n = s.size();
  if (q.size() != n) return "width differs from carrier size";
  if (q.none()) return "empty";
  if (q.all()) return "not proper";
  for (auto a = q.find_first(); a != ElementSet::npos; a = q.find_next(a))
    if (!s.multiples(a).is_subset_of(q)) return "does not absorb multiples of " + s.names()[a];
  const ElementSet complement = ~q;
  for (auto a = complement.find_first(); a != ElementSet::npos; a = complement.find_next(a))
    for (auto b = a; b != ElementSet::npos; b = complement.find_next(b))
      if (q.test(s.mul(a, b)))
        return "complement not multiplicatively closed: " + s.names()[a] + " * " + s.names()[b];
  // Saturation: ab outside Q forces a and b outside Q.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!q.test(s.mul(a, b)) && (q.test(a) || q.test(b)))
        return "complement not saturated at " + s.names()[a] + " * " + s.names()[b];
  return {};
}

std::string ring_semigroup_prime_violation(const FiniteRing& r, const ElementSet& q) {
  std::string v = semigroup_prime_violation(*r.multiplicative(), q);
  if (!v.empty()) return v;
  if (!q.test(r.zero())) return "does not contain zero";
  if (q.intersects(r.units())) return "contains a unit";
  return {};
}

// --- enumeration -------------------------------------------------------------

std::vector<SemigroupPrime> sprimes_bruteforce(const std::shared_ptr<const Semigroup>& s, std::size_t cap) {
  const std::size_t n = s->size();
  if (n > std::min(cap, kMaxBruteforceCap))
    throw TooLarge("subset scan over " + std::to_string(n) + " elements exceeds cap " +
                   std::to_string(std::min(cap, kMaxBruteforceCap)));
  using Mask = std::uint64_t;
  const Mask all = (Mask{1} << n) - 1;
  std::vector<Mask> multiples(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) multiples[a] |= Mask{1} << s->mul(a, b);

  std::vector<SemigroupPrime> out;
  for (Mask q = 1; q < all; ++q) {
    bool absorbing = true;
    for (Mask rest = q; rest && absorbing; rest &= rest - 1) {
      const auto a = static_cast<std::size_t>(__builtin_ctzll(rest));
      absorbing = (multiples[a] & ~q) == 0;
    }
    if (!absorbing) continue;
    const Mask complement = all & ~q;
    bool closed = true;
    for (Mask ra = complement; ra && closed; ra &= ra - 1) {
      const auto a = static_cast<std::size_t>(__builtin_ctzll(ra));
      for (Mask rb = ra; rb; rb &= rb - 1) {
        const auto b = static_cast<std::size_t>(__builtin_ctzll(rb));
        if ((q >> s->mul(a, b)) & 1) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    ElementSet members(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((q >> i) & 1) members.set(i);
    out.push_back(SemigroupPrime{s, std::move(members)});
  }
  std::sort(out.begin(), out.end(),
            [](const SemigroupPrime& a, const SemigroupPrime& b) { return canonical_less(a.members, b.members); });
  return out;
}

std::vector<SemigroupPrime> sprimes_from_spec(const RingPtr& r, const Spectrum& sp) {
  const std::size_t k = sp.size();
  if (k > kMaxSpecForUnions) throw TooLarge("too many primes to enumerate unions");
  std::unordered_set<ElementSet> seen;
  std::vector<ElementSet> unions;
  for (std::uint64_t y = 1; y < (std::uint64_t{1} << k); ++y) {
    ElementSet u(r->size());
    for (std::size_t i = 0; i < k; ++i)
      if ((y >> i) & 1) u |= sp.primes[i].members;
    if (seen.insert(u).second) unions.push_back(std::move(u));
  }
  std::sort(unions.begin(), unions.end(), canonical_less);
  std::vector<SemigroupPrime> out;
  for (auto& u : unions) {
    const std::string v = ring_semigroup_prime_violation(*r, u);
    require_invariant(v.empty(), "union of primes " + format_set(u, r->names()) + " is not a semigroup prime: " + v);
    out.push_back(SemigroupPrime{r->multiplicative(), std::move(u)});
  }
  return out;
}

std::vector<SemigroupPrime> sprimes_from_spec(const RingPtr& r) { return sprimes_from_spec(r, spec(r)); }

// --- hull-kernel space --------------------------------------------------------

TopologyPresentation hull_kernel_presentation(const Semigroup& s, const std::vector<SemigroupPrime>& primes) {
  TopologyPresentation t;
  for (const auto& q : primes) t.names.push_back(format_set(q.members, s.names()));
  t.basis.assign(s.size(), ElementSet(primes.size()));
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t k = 0; k < primes.size(); ++k)
      if (!primes[k].members.test(x)) t.basis[x].set(k);
  return t;
}

std::size_t SPrimeSpace::index_of(const ElementSet& q) const {
  auto it = lookup.find(q);
  return it == lookup.end() ? Spectrum::npos : it->second;
}

ElementSet SPrimeSpace::spec_image() const {
  ElementSet out(primes.size());
  for (auto k : spec_embedding) out.set(k);
  return out;
}

SPrimeSpace hull_kernel_space(const RingPtr& r) { return hull_kernel_space(r, spec(r)); }

SPrimeSpace hull_kernel_space(const RingPtr& r, Spectrum sp) {
  SPrimeSpace s;
  s.ring = r;
  s.primes = sprimes_from_spec(r, sp);
  s.spectrum = std::move(sp);
  const Semigroup& mult = *r->multiplicative();
  s.presentation = hull_kernel_presentation(mult, s.primes);
  for (std::size_t k = 0; k < s.primes.size(); ++k) s.lookup.emplace(s.primes[k].members, k);
  s.order = FinitePoset::from_predicate(s.presentation.names, [&](std::size_t a, std::size_t b) {
    return s.primes[a].members.is_subset_of(s.primes[b].members);
  });
  for (const auto& p : s.spectrum.primes) {
    const auto k = s.index_of(p.members);
    require_invariant(k != Spectrum::npos, "prime ideal missing from S(R)");
    s.spec_embedding.push_back(k);
  }

  const std::string where = " in S(" + r->label() + ")";
  const auto report = verify_spectral(s.presentation);
  require_invariant(report.passed(), "hull-kernel presentation is not spectral" + where);
  require_invariant(s.presentation.specialization_order() == s.order,
                    "specialization order differs from inclusion" + where);
  const std::size_t n = r->size();
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y)
      require_invariant(s.basic_open(r->mul(x, y)) == (s.basic_open(x) & s.basic_open(y)),
                        "U(xy) != U(x) n U(y) for x=" + r->name(x) + ", y=" + r->name(y) + where);
  const ElementSet image = s.spec_image();
  for (Element x = 0; x < n; ++x) {
    ElementSet d_image(s.size());
    for_each_member(s.spectrum.basic_open(x), [&](std::size_t p) { d_image.set(s.spec_embedding[p]); });
    require_invariant(d_image == (s.basic_open(x) & image), "i(D(x)) != U(x) n i(Spec) for x=" + r->name(x) + where);
  }
  return s;
}

// --- functoriality --------------------------------------------------------------

std::vector<std::size_t> s_map(const RingHom& f, const SPrimeSpace& source_space, const SPrimeSpace& target_space) {
  if (source_space.ring != f.source() || target_space.ring != f.target())
    throw InvalidParameter("spaces do not match the homomorphism's rings");
  const FiniteRing& R1 = *f.source();
  std::vector<std::size_t> out;
  out.reserve(target_space.size());
  for (const auto& q : target_space.primes) {
    ElementSet pre = f.preimage(q.members);
    const std::string v = ring_semigroup_prime_violation(R1, pre);
    require_invariant(v.empty(), "S(f)(Q) is not a semigroup prime: " + v);
    const auto k = source_space.index_of(pre);
    require_invariant(k != Spectrum::npos, "S(f)(Q) missing from S(R1)");
    out.push_back(k);
  }
  for (Element x = 0; x < R1.size(); ++x) {
    ElementSet pre(target_space.size());
    for (std::size_t k = 0; k < out.size(); ++k)
      if (source_space.basic_open(x).test(out[k])) pre.set(k);
    require_invariant(pre == target_space.basic_open(f(x)), "S(f)^-1(U(x)) != U(f(x)) for x=" + R1.name(x));
  }
  return out;
}

// --- lattice structure ----------------------------------------------------------

namespace {

const std::shared_ptr<const Semigroup>& common_carrier(const std::vector<SemigroupPrime>& t) {
  if (t.empty()) throw InvalidParameter("empty family of semigroup primes");
  for (const auto& q : t)
    if (q.carrier != t.front().carrier) throw InvalidParameter("semigroup primes over different rings");
  return t.front().carrier;
}

}  // namespace

SemigroupPrime sup_sprimes(const std::vector<SemigroupPrime>& t) {
  const auto& carrier = common_carrier(t);
  ElementSet u(carrier->size());
  for (const auto& q : t) u |= q.members;
  const std::string v = semigroup_prime_violation(*carrier, u);
  require_invariant(v.empty(), "union of semigroup primes is not a semigroup prime: " + v);
  return SemigroupPrime{carrier, std::move(u)};
}

InfimumResult inf_sprimes(const SPrimeSpace& space, const std::vector<SemigroupPrime>& t) {
  const auto& carrier = common_carrier(t);
  if (carrier != space.ring->multiplicative()) throw InvalidParameter("semigroup primes belong to another ring");
  const auto& spec = space.spectrum;
  InfimumResult r;
  r.common_primes = make_full_set(spec.size());
  for (const auto& q : t)
    for (std::size_t p = 0; p < spec.size(); ++p)
      if (!spec.primes[p].members.is_subset_of(q.members)) r.common_primes.reset(p);
  if (r.common_primes.none()) return r;

  SemigroupPrime q0{carrier, spec.union_of(r.common_primes)};
  const auto k0 = space.index_of(q0.members);
  require_invariant(k0 != Spectrum::npos, "union of C_T is not a semigroup prime");
  for (const auto& q : t) require_invariant(q0.members.is_subset_of(q.members), "infimum is not a lower bound");
  for (const auto& other : space.primes) {
    const bool lower = std::all_of(t.begin(), t.end(),
                                   [&](const SemigroupPrime& q) { return other.members.is_subset_of(q.members); });
    if (lower) require_invariant(other.members.is_subset_of(q0.members), "infimum is not the greatest lower bound");
  }
  r.infimum = std::move(q0);
  return r;
}

std::optional<std::size_t> glb_exhaustive(const SPrimeSpace& space, const std::vector<SemigroupPrime>& t) {
  common_carrier(t);
  std::vector<std::size_t> lower;
  for (std::size_t k = 0; k < space.size(); ++k) {
    const auto& m = space.primes[k].members;
    if (std::all_of(t.begin(), t.end(), [&](const SemigroupPrime& q) { return m.is_subset_of(q.members); }))
      lower.push_back(k);
  }
  for (auto k : lower)
    if (std::all_of(lower.begin(), lower.end(),
                    [&](std::size_t o) { return space.primes[o].members.is_subset_of(space.primes[k].members); }))
      return k;
  return std::nullopt;
}

// --- UFD model --------------------------------------------------------------------

namespace {

std::string subset_name(std::uint32_t b, std::size_t n) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i)
    if ((b >> i) & 1) {
      s += (first ? "p" : ",p") + std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

UfdElement with_support(std::uint32_t support, std::size_t n, unsigned exponent) {
  UfdElement e;
  e.exponents.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if ((support >> i) & 1) e.exponents[i] = exponent;
  return e;
}

UfdElement zero_element(std::size_t n) {
  UfdElement z;
  z.is_zero = true;
  z.exponents.assign(n, 0);
  return z;
}

// A finite window of elements: zero, units, and products over small exponents.
std::vector<UfdElement> sample_elements(std::size_t n) {
  std::vector<UfdElement> out{zero_element(n)};
  if (n <= 6) {
    const std::size_t total = std::size_t{1} << n;
    for (std::size_t m = 0; m < total; ++m) {
      UfdElement x;
      x.exponents.assign(n, 0);
      for (std::size_t i = 0; i < n; ++i) x.exponents[i] = (m >> i) & 1;
      out.push_back(x);
      x.unit = -1;
      out.push_back(x);
    }
  } else {
    out.push_back(with_support(0, n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        auto x = with_support(0, n, 0);
        x.exponents[i] += 1;
        x.exponents[j] += 1;
        out.push_back(x);
      }
    for (std::size_t i = 0; i < n; ++i) out.push_back(with_support(std::uint32_t{1} << i, n, 1));
  }
  return out;
}

}  // namespace

UfdModel::UfdModel(std::size_t n) : n_(n) {
  if (n > kMaxUfdPrimes)
    throw TooLarge("UFD model with " + std::to_string(n) + " prime classes exceeds cap " + std::to_string(kMaxUfdPrimes));
}

UfdModel ufd_model(std::size_t n) { return UfdModel(n); }

bool UfdModel::contains(std::uint32_t b, const UfdElement& x) const {
  if (x.is_zero) return true;
  for (std::size_t i = 0; i < n_; ++i)
    if (((b >> i) & 1) && x.exponents[i] > 0) return true;
  return false;
}

UfdElement UfdModel::multiply(const UfdElement& a, const UfdElement& b) const {
  if (a.is_zero || b.is_zero) return zero_element(n_);
  UfdElement out;
  out.unit = a.unit * b.unit;
  out.exponents.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) out.exponents[i] = a.exponents[i] + b.exponents[i];
  return out;
}

TopologyPresentation UfdModel::hull_kernel_presentation() const {
  const std::uint32_t points = static_cast<std::uint32_t>(sprime_count());
  TopologyPresentation t;
  for (std::uint32_t b = 0; b < points; ++b) t.names.push_back("Q" + subset_name(b, n_));
  auto u_of = [&](const UfdElement& x) {
    ElementSet u(points);
    for (std::uint32_t b = 0; b < points; ++b)
      if (!contains(b, x)) u.set(b);
    return u;
  };
  for (std::uint32_t s = 0; s < points; ++s) t.basis.push_back(u_of(with_support(s, n_, 1)));
  t.basis.push_back(u_of(zero_element(n_)));
  return t;
}

TopologyPresentation UfdModel::power_set_presentation() const {
  const std::uint32_t points = static_cast<std::uint32_t>(sprime_count());
  TopologyPresentation t;
  for (std::uint32_t b = 0; b < points; ++b) t.names.push_back(subset_name(b, n_));
  for (std::uint32_t s = 0; s < points; ++s) {
    ElementSet v(points);
    for (std::uint32_t b = 0; b < points; ++b)
      if ((b & s) == 0) v.set(b);
    t.basis.push_back(std::move(v));
  }
  return t;
}

namespace {

// Every basic open of `a` is a union of basic opens of `b`.
bool refines(const TopologyPresentation& a, const TopologyPresentation& b) {
  for (const auto& u : a.basis) {
    ElementSet covered(u.size());
    for (const auto& v : b.basis)
      if (v.is_subset_of(u)) covered |= v;
    if (covered != u) return false;
  }
  return true;
}

}  // namespace

UfdReport check_ufd_model(const UfdModel& m, bool exact_open_check) {
  UfdReport r;
  const std::size_t n = m.prime_count();
  const auto points = static_cast<std::uint32_t>(m.sprime_count());
  r.n = n;
  r.sprime_count = m.sprime_count();

  // Each Q(B) satisfies the definition on the sample window, and the prime
  // elements themselves separate distinct B.
  const auto window = sample_elements(n);
  bool definition_ok = true;
  for (std::uint32_t b = 0; b < points && definition_ok; ++b) {
    bool has_member = false, misses = false;
    for (const auto& x : window) {
      const bool in = m.contains(b, x);
      has_member |= in;
      misses |= !in;
      for (const auto& y : window) {
        const bool prod_in = m.contains(b, m.multiply(x, y));
        if (in && !prod_in) definition_ok = false;
        if (!in && !m.contains(b, y) && prod_in) definition_ok = false;
      }
    }
    definition_ok = definition_ok && has_member && misses;
  }
  std::unordered_set<std::uint32_t> signatures;
  for (std::uint32_t b = 0; b < points; ++b) {
    std::uint32_t sig = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m.contains(b, with_support(std::uint32_t{1} << i, n, 1))) sig |= std::uint32_t{1} << i;
    signatures.insert(sig);
  }
  r.bijective = definition_ok && signatures.size() == points;

  const auto hull = m.hull_kernel_presentation();
  const auto power = m.power_set_presentation();
  const auto order = hull.specialization_order();
  bool inclusion = true;
  for (std::uint32_t a = 0; a < points && inclusion; ++a)
    for (std::uint32_t b = 0; b < points; ++b)
      if (order.leq(a, b) != ((a & ~b) == 0)) {
        inclusion = false;
        break;
      }
  r.order_is_inclusion = inclusion;
  r.minimum_is_zero_ideal = order.up(0).all();
  r.spectral = verify_spectral(hull).passed();
  if (exact_open_check) {
    r.homeomorphic = refines(hull, power) && refines(power, hull);
  } else {
    std::unordered_set<ElementSet> a(hull.basis.begin(), hull.basis.end());
    std::unordered_set<ElementSet> b(power.basis.begin(), power.basis.end());
    b.insert(ElementSet(points));
    r.homeomorphic = a == b;
  }
  return r;
}

// --- density ----------------------------------------------------------------------

DensityReport density_report(const SPrimeSpace& space) {
  DensityReport r;
  const ElementSet image = space.spec_image();
  r.dense = space.presentation.closure(image).all();
  require_invariant(r.dense, "Spec(R) is not dense in S(" + space.ring->label() + ")");
  const auto opens = space.presentation.opens();
  r.open_count = opens.size();
  std::unordered_map<ElementSet, std::size_t> by_trace;
  r.very_dense = true;
  for (std::size_t k = 0; k < opens.size(); ++k) {
    auto [it, fresh] = by_trace.emplace(opens[k] & image, k);
    if (!fresh) {
      r.very_dense = false;
      r.witness = std::make_pair(opens[it->second], opens[k]);
      break;
    }
  }
  return r;
}

}  // namespace specprime
