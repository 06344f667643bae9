#include "specprime/ring.hpp"

#include "specprime/errors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace specprime {

namespace {

std::string at_str(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(x);
  }
  return s + ")";
}

bool is_prime_number(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

RingPtr FiniteRing::from_tables(std::string label, std::vector<std::string> names,
                                std::vector<std::vector<Element>> add,
                                std::vector<std::vector<Element>> mul, Element zero, Element one,
                                std::size_t size_cap) {
  const std::size_t n = add.size();
  if (n > std::min(size_cap, kHardRingSizeCap))
    throw InvalidParameter("ring of size " + std::to_string(n) + " exceeds size cap " +
                           std::to_string(std::min(size_cap, kHardRingSizeCap)));
  if (n < 2) throw InvalidParameter("zero ring excluded: need at least two elements");
  if (mul.size() != n) throw InvalidParameter("addition and multiplication tables differ in size");
  if (zero >= n || one >= n) throw InvalidParameter("zero/one index out of range");
  if (zero == one) throw InvalidParameter("zero ring excluded: one equals zero");
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  if (names.size() != n) throw InvalidParameter("element name count differs from ring size");

  std::shared_ptr<FiniteRing> r(new FiniteRing());
  r->n_ = n;
  r->label_ = std::move(label);
  r->names_ = std::move(names);
  r->zero_ = zero;
  r->one_ = one;
  r->add_.resize(n * n);
  r->mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (add[a].size() != n || mul[a].size() != n) throw InvalidParameter("tables are not square");
    for (std::size_t b = 0; b < n; ++b) {
      if (add[a][b] >= n || mul[a][b] >= n) throw InvalidParameter("table entry out of range");
      r->add_[a * n + b] = static_cast<std::uint16_t>(add[a][b]);
      r->mul_[a * n + b] = static_cast<std::uint16_t>(mul[a][b]);
    }
  }

  const FiniteRing& R = *r;
  // Additive abelian group.
  for (std::size_t a = 0; a < n; ++a) {
    if (R.add(a, zero) != a) throw InvalidParameter("zero is not an additive identity at " + at_str({a}));
    for (std::size_t b = a + 1; b < n; ++b)
      if (R.add(a, b) != R.add(b, a)) throw InvalidParameter("addition not commutative at " + at_str({a, b}));
  }
  r->neg_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b)
      if (R.add(a, b) == zero) {
        r->neg_[a] = static_cast<std::uint16_t>(b);
        found = true;
      }
    if (!found) throw InvalidParameter("no additive inverse for " + at_str({a}));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
          throw InvalidParameter("addition not associative at " + at_str({a, b, c}));

  // Commutative monoid under multiplication, distributive over addition.
  for (std::size_t a = 0; a < n; ++a) {
    if (R.mul(a, one) != a) throw InvalidParameter("one is not a multiplicative identity at " + at_str({a}));
    for (std::size_t b = a + 1; b < n; ++b)
      if (R.mul(a, b) != R.mul(b, a))
        throw InvalidParameter("multiplication not commutative at " + at_str({a, b}));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
          throw InvalidParameter("multiplication not associative at " + at_str({a, b, c}));
        if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
          throw InvalidParameter("multiplication does not distribute at " + at_str({a, b, c}));
      }

  r->units_ = ElementSet(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (R.mul(a, b) == one) {
        r->units_.set(a);
        break;
      }

  r->mult_ = Semigroup::from_flat(r->label_ + " (multiplicative)", n, r->mul_, r->names_);
  return r;
}

Element FiniteRing::pow(Element a, std::size_t k) const {
  Element acc = one_;
  for (std::size_t i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

RingPtr build_zmod(std::size_t n, std::size_t size_cap) {
  if (n < 2) throw InvalidParameter("Z/n requires n >= 2 (zero ring excluded), got " + std::to_string(n));
  if (n > std::min(size_cap, kHardRingSizeCap))
    throw InvalidParameter("Z/" + std::to_string(n) + " exceeds size cap");
  std::vector<std::vector<Element>> add(n, std::vector<Element>(n)), mul = add;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      add[a][b] = (a + b) % n;
      mul[a][b] = (a * b) % n;
    }
  }
  return FiniteRing::from_tables("Z/" + std::to_string(n), std::move(names), std::move(add),
                                 std::move(mul), 0, 1 % n, size_cap);
}

std::vector<Element> product_coordinates(const std::vector<RingPtr>& factors, Element e) {
  std::vector<Element> coords(factors.size());
  for (std::size_t k = factors.size(); k-- > 0;) {
    coords[k] = e % factors[k]->size();
    e /= factors[k]->size();
  }
  return coords;
}

Element product_index(const std::vector<RingPtr>& factors, const std::vector<Element>& coords) {
  Element e = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) e = e * factors[k]->size() + coords[k];
  return e;
}

RingPtr build_product(const std::vector<RingPtr>& factors, std::size_t size_cap) {
  if (factors.empty()) throw InvalidParameter("product of an empty list of rings");
  std::size_t n = 1;
  for (const auto& f : factors) {
    if (!f) throw InvalidParameter("null factor");
    n *= f->size();
    if (n > std::min(size_cap, kHardRingSizeCap))
      throw InvalidParameter("product exceeds size cap " + std::to_string(std::min(size_cap, kHardRingSizeCap)));
  }
  std::vector<std::vector<Element>> coords(n);
  std::vector<std::string> names(n);
  std::string label;
  for (std::size_t k = 0; k < factors.size(); ++k) label += (k ? " x " : "") + factors[k]->label();
  for (Element e = 0; e < n; ++e) {
    coords[e] = product_coordinates(factors, e);
    if (factors.size() == 1) {
      names[e] = factors[0]->name(coords[e][0]);
    } else {
      std::string s = "(";
      for (std::size_t k = 0; k < factors.size(); ++k) s += (k ? "," : "") + factors[k]->name(coords[e][k]);
      names[e] = s + ")";
    }
  }
  std::vector<std::vector<Element>> add(n, std::vector<Element>(n)), mul = add;
  std::vector<Element> tmp(factors.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < factors.size(); ++k) tmp[k] = factors[k]->add(coords[a][k], coords[b][k]);
      add[a][b] = product_index(factors, tmp);
      for (std::size_t k = 0; k < factors.size(); ++k) tmp[k] = factors[k]->mul(coords[a][k], coords[b][k]);
      mul[a][b] = product_index(factors, tmp);
    }
  std::vector<Element> zc(factors.size()), oc(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    zc[k] = factors[k]->zero();
    oc[k] = factors[k]->one();
  }
  return FiniteRing::from_tables(std::move(label), std::move(names), std::move(add), std::move(mul),
                                 product_index(factors, zc), product_index(factors, oc), size_cap);
}

namespace {

std::string poly_name(const std::vector<std::size_t>& c) {
  std::string s;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c[i]);
    } else {
      if (c[i] != 1) s += std::to_string(c[i]);
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

std::string modulus_label(std::size_t p, const std::vector<std::size_t>& f) {
  return "F" + std::to_string(p) + "[x]/(" + poly_name(f) + ")";
}

}  // namespace

RingPtr build_poly_quotient(std::size_t p, const std::vector<long long>& modulus, std::size_t size_cap) {
  if (!is_prime_number(p)) throw InvalidParameter("characteristic " + std::to_string(p) + " is not prime");
  std::vector<std::size_t> f;
  for (long long c : modulus) {
    long long r = c % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    f.push_back(static_cast<std::size_t>(r));
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() < 2) throw InvalidParameter("modulus must have degree >= 1 after reduction mod p");
  if (f.back() != 1) throw InvalidParameter("modulus is not monic");
  const std::size_t d = f.size() - 1;
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= p;
    if (n > std::min(size_cap, kHardRingSizeCap))
      throw InvalidParameter("p^d exceeds size cap " + std::to_string(std::min(size_cap, kHardRingSizeCap)));
  }

  auto coeffs = [&](Element e) {
    std::vector<std::size_t> c(d);
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = e % p;
      e /= p;
    }
    return c;
  };
  auto index = [&](const std::vector<std::size_t>& c) {
    Element e = 0;
    for (std::size_t i = d; i-- > 0;) e = e * p + c[i];
    return e;
  };

  std::vector<std::string> names(n);
  std::vector<std::vector<Element>> add(n, std::vector<Element>(n)), mul = add;
  for (Element a = 0; a < n; ++a) {
    const auto ca = coeffs(a);
    names[a] = poly_name(ca);
    for (Element b = 0; b < n; ++b) {
      const auto cb = coeffs(b);
      std::vector<std::size_t> sum(d);
      for (std::size_t i = 0; i < d; ++i) sum[i] = (ca[i] + cb[i]) % p;
      add[a][b] = index(sum);

      std::vector<std::size_t> prod(2 * d, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      // x^d = -(f_0 + ... + f_{d-1} x^{d-1})
      for (std::size_t k = 2 * d; k-- > d;) {
        const std::size_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::size_t i = 0; i < d; ++i) prod[k - d + i] = (prod[k - d + i] + (p - c) * f[i]) % p;
      }
      prod.resize(d);
      mul[a][b] = index(prod);
    }
  }
  return FiniteRing::from_tables(modulus_label(p, f), std::move(names), std::move(add), std::move(mul),
                                 0, 1, size_cap);
}

// --- ideals ---------------------------------------------------------------

std::string ideal_violation(const FiniteRing& r, const ElementSet& s) {
  if (s.size() != r.size()) return "width differs from ring size";
  if (!s.test(r.zero())) return "does not contain zero";
  for (auto a = s.find_first(); a != ElementSet::npos; a = s.find_next(a)) {
    for (auto b = s.find_first(); b != ElementSet::npos; b = s.find_next(b))
      if (!s.test(r.add(a, b)))
        return "not closed under addition: " + r.name(a) + " + " + r.name(b);
    for (Element x = 0; x < r.size(); ++x)
      if (!s.test(r.mul(x, a)))
        return "does not absorb: " + r.name(x) + " * " + r.name(a);
  }
  return {};
}

bool is_ideal(const FiniteRing& r, const ElementSet& s) { return ideal_violation(r, s).empty(); }

bool is_prime_ideal(const FiniteRing& r, const ElementSet& s) {
  if (!is_ideal(r, s) || s.all()) return false;
  for (Element a = 0; a < r.size(); ++a) {
    if (s.test(a)) continue;
    for (Element b = 0; b < r.size(); ++b)
      if (!s.test(b) && s.test(r.mul(a, b))) return false;
  }
  return true;
}

namespace {

// Additive closure of a set already closed under absorption.
ElementSet additive_closure(const FiniteRing& r, ElementSet s) {
  s.set(r.zero());
  std::vector<Element> frontier = indices_of(s);
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element a : frontier)
      for (auto b = s.find_first(); b != ElementSet::npos; b = s.find_next(b)) {
        const Element c = r.add(a, b);
        if (!s.test(c)) next.push_back(c);
      }
    for (Element c : next) s.set(c);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return s;
}

ElementSet absorb(const FiniteRing& r, const ElementSet& gens) {
  ElementSet s(r.size());
  for_each_member(gens, [&](Element g) { s |= r.multiplicative()->multiples(g); });
  return s;
}

}  // namespace

Ideal ideal_generated(const RingPtr& r, const ElementSet& gens) {
  if (gens.size() != r->size()) throw InvalidParameter("generator set width differs from ring size");
  return Ideal{r, additive_closure(*r, absorb(*r, gens))};
}

Ideal ideal_generated(const RingPtr& r, const std::vector<Element>& gens) {
  return ideal_generated(r, set_from_indices(r->size(), gens));
}

Ideal principal_ideal(const RingPtr& r, Element a) { return ideal_generated(r, std::vector<Element>{a}); }

std::vector<Ideal> enumerate_ideals(const RingPtr& r) {
  // Every ideal of a finite ring is a finite sum of principal ideals, so
  // closing {(0)} under I -> I + (x) reaches all of them.
  const FiniteRing& R = *r;
  std::vector<ElementSet> principal(R.size());
  for (Element x = 0; x < R.size(); ++x) principal[x] = principal_ideal(r, x).members;

  std::unordered_set<ElementSet> seen;
  std::vector<ElementSet> found;
  ElementSet zero(R.size());
  zero.set(R.zero());
  seen.insert(zero);
  found.push_back(zero);
  for (std::size_t k = 0; k < found.size(); ++k) {
    const ElementSet current = found[k];
    for (Element x = 0; x < R.size(); ++x) {
      if (current.test(x)) continue;
      ElementSet next = additive_closure(R, current | principal[x]);
      if (seen.insert(next).second) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& s : found) out.push_back(Ideal{r, std::move(s)});
  return out;
}

Ideal radical(const Ideal& i) {
  const FiniteRing& R = *i.ring;
  ElementSet out(R.size());
  for (Element x = 0; x < R.size(); ++x) {
    Element power = x;
    for (std::size_t k = 1; k <= R.size(); ++k) {
      if (i.members.test(power)) {
        out.set(x);
        break;
      }
      power = R.mul(power, x);
    }
  }
  return Ideal{i.ring, std::move(out)};
}

Ideal prime_hull_intersection(const Ideal& i, const std::vector<Ideal>& primes) {
  ElementSet out = i.ring->full_set();
  for (const auto& p : primes)
    if (i.members.is_subset_of(p.members)) out &= p.members;
  return Ideal{i.ring, std::move(out)};
}

// --- spectrum -------------------------------------------------------------

std::size_t Spectrum::index_of(const ElementSet& members) const {
  for (std::size_t k = 0; k < primes.size(); ++k)
    if (primes[k].members == members) return k;
  return npos;
}

ElementSet Spectrum::basic_open(Element a) const {
  ElementSet d(primes.size());
  for (std::size_t k = 0; k < primes.size(); ++k)
    if (!primes[k].members.test(a)) d.set(k);
  return d;
}

ElementSet Spectrum::open_of(const ElementSet& j) const {
  ElementSet d(primes.size());
  for (std::size_t k = 0; k < primes.size(); ++k)
    if (!j.is_subset_of(primes[k].members)) d.set(k);
  return d;
}

ElementSet Spectrum::union_of(const ElementSet& points) const {
  if (primes.empty()) return {};
  ElementSet u(primes.front().members.size());
  for_each_member(points, [&](std::size_t k) { u |= primes[k].members; });
  return u;
}

Spectrum spec(const RingPtr& r) {
  Spectrum sp;
  for (auto& i : enumerate_ideals(r))
    if (is_prime_ideal(*r, i.members)) sp.primes.push_back(std::move(i));
  std::vector<std::string> names;
  for (const auto& p : sp.primes) names.push_back(format_set(p.members, r->names()));
  const auto& primes = sp.primes;
  sp.order = FinitePoset::from_predicate(std::move(names), [&](std::size_t a, std::size_t b) {
    return primes[a].members.is_subset_of(primes[b].members);
  });
  require_invariant(!sp.primes.empty(), "finite ring " + r->label() + " has no prime ideal");
  require_invariant(sp.order.is_antichain(), "Spec(" + r->label() + ") is not an antichain");
  return sp;
}

// --- homomorphisms --------------------------------------------------------

RingHom RingHom::build(RingPtr source, RingPtr target, std::vector<Element> image) {
  if (!source || !target) throw InvalidParameter("null ring");
  const FiniteRing& A = *source;
  const FiniteRing& B = *target;
  if (image.size() != A.size())
    throw InvalidParameter("map has " + std::to_string(image.size()) + " entries, source has " +
                           std::to_string(A.size()) + " elements");
  for (Element x : image)
    if (x >= B.size()) throw InvalidParameter("map entry out of target range");
  if (image[A.one()] != B.one()) throw NotAHomomorphism("one is not mapped to one");
  for (Element a = 0; a < A.size(); ++a)
    for (Element b = 0; b < A.size(); ++b) {
      if (image[A.add(a, b)] != B.add(image[a], image[b]))
        throw NotAHomomorphism("addition not preserved at (" + A.name(a) + "," + A.name(b) + ")");
      if (image[A.mul(a, b)] != B.mul(image[a], image[b]))
        throw NotAHomomorphism("multiplication not preserved at (" + A.name(a) + "," + A.name(b) + ")");
    }
  return RingHom(std::move(source), std::move(target), std::move(image));
}

RingHom RingHom::identity(const RingPtr& r) {
  std::vector<Element> img(r->size());
  std::iota(img.begin(), img.end(), Element{0});
  return RingHom(r, r, std::move(img));
}

ElementSet RingHom::preimage(const ElementSet& s) const {
  ElementSet out(source_->size());
  for (Element a = 0; a < source_->size(); ++a)
    if (s.test(image_[a])) out.set(a);
  return out;
}

ElementSet RingHom::image_of(const ElementSet& s) const {
  ElementSet out(target_->size());
  for_each_member(s, [&](Element a) { out.set(image_[a]); });
  return out;
}

RingHom build_hom(RingPtr source, RingPtr target, std::vector<Element> image) {
  return RingHom::build(std::move(source), std::move(target), std::move(image));
}

RingHom compose(const RingHom& g, const RingHom& f) {
  if (f.target() != g.source()) throw InvalidParameter("homomorphisms are not composable");
  std::vector<Element> img(f.source()->size());
  for (Element a = 0; a < img.size(); ++a) img[a] = g(f(a));
  return RingHom::build(f.source(), g.target(), std::move(img));
}

Ideal preimage_ideal(const RingHom& f, const Ideal& i) {
  if (i.ring != f.target()) throw InvalidParameter("ideal does not belong to the target ring");
  Ideal out{f.source(), f.preimage(i.members)};
  require_invariant(is_ideal(*out.ring, out.members), "preimage of an ideal is not an ideal");
  return out;
}

std::vector<std::size_t> spec_map(const RingHom& f, const Spectrum& source_spec, const Spectrum& target_spec) {
  std::vector<std::size_t> out;
  out.reserve(target_spec.size());
  for (const auto& p : target_spec.primes) {
    const std::size_t k = source_spec.index_of(f.preimage(p.members));
    require_invariant(k != Spectrum::npos, "preimage of a prime ideal is not prime");
    out.push_back(k);
  }
  return out;
}

}  // namespace specprime
