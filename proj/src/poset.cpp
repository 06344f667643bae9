#include "specprime/poset.hpp"

#include "specprime/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_set>

namespace specprime {

// --- FinitePoset ----------------------------------------------------------

FinitePoset FinitePoset::from_relation(std::vector<std::string> names,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t n = names.size();
  FinitePoset p;
  p.names_ = std::move(names);
  p.up_.assign(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a) p.up_[a].set(a);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw InvalidParameter("relation pair out of range");
    p.up_[a].set(b);
  }
  // Warshall on rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (p.up_[a].test(k)) p.up_[a] |= p.up_[k];
  p.down_.assign(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for_each_member(p.up_[a], [&](std::size_t b) { p.down_[b].set(a); });
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (p.up_[a].test(b) && p.up_[b].test(a))
        throw NotAPartialOrder("cycle through points " + p.names_[a] + " and " + p.names_[b]);
  return p;
}

FinitePoset FinitePoset::from_relation(std::size_t n,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return from_relation(std::move(names), pairs);
}

ElementSet FinitePoset::up_closure(const ElementSet& y) const {
  ElementSet out(size());
  for_each_member(y, [&](std::size_t x) { out |= up_[x]; });
  return out;
}

ElementSet FinitePoset::down_closure(const ElementSet& y) const {
  ElementSet out(size());
  for_each_member(y, [&](std::size_t x) { out |= down_[x]; });
  return out;
}

bool FinitePoset::is_down_set(const ElementSet& y) const {
  bool ok = y.size() == size();
  if (ok) for_each_member(y, [&](std::size_t x) { ok = ok && down_[x].is_subset_of(y); });
  return ok;
}

bool FinitePoset::is_antichain() const {
  for (std::size_t a = 0; a < size(); ++a)
    if (up_[a].count() != 1) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for_each_member(up_[a], [&](std::size_t b) {
      if (a == b) return;
      // Nothing strictly between: up(a) n down(b) = {a, b}.
      if ((up_[a] & down_[b]).count() == 2) out.emplace_back(a, b);
    });
  return out;
}

DownSet DownSet::make(const FinitePoset& x, ElementSet members) {
  if (members.size() != x.size()) throw InvalidParameter("down-set width differs from poset size");
  if (members.none()) throw InvalidParameter("down-set must be nonempty");
  if (!x.is_down_set(members)) throw InvalidParameter("set is not closed under generizations");
  return DownSet{std::move(members)};
}

// --- presentations --------------------------------------------------------

ElementSet TopologyPresentation::closure(const ElementSet& s) const {
  ElementSet out(size());
  if (s.none()) return out;
  out.set();
  for (const auto& b : basis)
    if (!b.intersects(s)) out -= b;
  return out;
}

namespace {

// sig[p] = indices of the basic opens containing p.
std::vector<ElementSet> signatures(const TopologyPresentation& t) {
  std::vector<ElementSet> sig(t.size(), ElementSet(t.basis.size()));
  for (std::size_t k = 0; k < t.basis.size(); ++k)
    for_each_member(t.basis[k], [&](std::size_t p) { sig[p].set(k); });
  return sig;
}

}  // namespace

FinitePoset TopologyPresentation::specialization_order() const {
  const auto sig = signatures(*this);
  return FinitePoset::from_predicate(names, [&](std::size_t x, std::size_t y) {
    return sig[y].is_subset_of(sig[x]);
  });
}

std::vector<ElementSet> TopologyPresentation::opens(std::size_t cap) const {
  std::unordered_set<ElementSet> seen;
  std::vector<ElementSet> out;
  auto push = [&](ElementSet s) {
    if (seen.insert(s).second) {
      out.push_back(std::move(s));
      if (out.size() > cap) throw TooLarge("more than " + std::to_string(cap) + " open sets");
    }
  };
  push(ElementSet(size()));
  for (const auto& b : basis) push(b);
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& b : basis) {
      if (b.is_subset_of(out[k])) continue;
      push(out[k] | b);
    }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// --- down-sets and closures -----------------------------------------------

std::vector<ElementSet> enumerate_down_sets(const FinitePoset& x, std::size_t cap) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Sorting by number of generizations gives a linear extension.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x.down(a).count() < x.down(b).count(); });
  std::vector<ElementSet> out;
  ElementSet current(n);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      out.push_back(current);
      if (out.size() > cap) throw TooLarge("more than " + std::to_string(cap) + " down-sets");
      return;
    }
    const std::size_t p = order[depth];
    self(self, depth + 1);
    ElementSet below = x.down(p);
    below.reset(p);
    if (below.is_subset_of(current)) {
      current.set(p);
      self(self, depth + 1);
      current.reset(p);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

TopologyPresentation alexandrov_presentation(const FinitePoset& x) {
  return TopologyPresentation{x.names(), enumerate_down_sets(x)};
}

namespace {

constexpr std::size_t kFullOpenFamilyCap = 256;

// Quasi-compact opens used by the intersection formulas: every open when
// there are few, otherwise the principal opens {x}^gen and the co-principal
// opens X \ {x}^sp, which already determine both intersections.
std::vector<ElementSet> closure_open_family(const FinitePoset& x) {
  try {
    return enumerate_down_sets(x, kFullOpenFamilyCap);
  } catch (const TooLarge&) {
  }
  std::vector<ElementSet> family{x.empty_set(), x.full_set()};
  for (std::size_t p = 0; p < x.size(); ++p) {
    family.push_back(x.down(p));
    family.push_back(~x.up(p));
  }
  return family;
}

}  // namespace

ElementSet inverse_closure_by_opens(const FinitePoset& x, const ElementSet& y) {
  ElementSet out = x.full_set();
  for (const auto& u : closure_open_family(x))
    if (y.is_subset_of(u)) out &= u;
  return out;
}

ElementSet constructible_closure_by_opens(const FinitePoset& x, const ElementSet& y) {
  const auto family = closure_open_family(x);
  ElementSet out = x.full_set();
  ElementSet y_in_v, removed;
  for (const auto& v : family) {
    y_in_v = y & v;
    for (const auto& u : family) {
      // Y subset of U u (X \ V)  <=>  Y n V subset of U.
      if (!y_in_v.is_subset_of(u)) continue;
      removed = v;
      removed -= u;
      out -= removed;
    }
  }
  return out;
}

ElementSet closure(const FinitePoset& x, const ElementSet& y, ClosureMode mode) {
  if (y.size() != x.size()) throw InvalidParameter("subset width differs from poset size");
  switch (mode) {
    case ClosureMode::specialization:
      return x.up_closure(y);
    case ClosureMode::generization:
      return x.down_closure(y);
    case ClosureMode::inverse: {
      ElementSet c = inverse_closure_by_opens(x, y);
      require_invariant(c == x.down_closure(y), "inverse closure differs from generization closure");
      return c;
    }
    case ClosureMode::constructible: {
      ElementSet c = constructible_closure_by_opens(x, y);
      require_invariant(c == y, "constructible closure of a finite space is not discrete");
      return c;
    }
  }
  return y;
}

// --- X(X) -----------------------------------------------------------------

std::size_t XSpace::index_of(const ElementSet& y) const {
  auto it = lookup.find(y);
  if (it == lookup.end()) throw InvalidParameter("not a point of X(X): " + format_set(y));
  return it->second;
}

ElementSet XSpace::basic_open(const ElementSet& omega) const {
  ElementSet out(points.size());
  for (std::size_t k = 0; k < points.size(); ++k)
    if (points[k].is_subset_of(omega)) out.set(k);
  return out;
}

XSpace xspace(const FinitePoset& x) {
  XSpace xs;
  xs.base_opens = enumerate_down_sets(x);
  for (const auto& d : xs.base_opens)
    if (d.any()) xs.points.push_back(d);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < xs.points.size(); ++k) {
    xs.lookup.emplace(xs.points[k], k);
    names.push_back(format_set(xs.points[k], x.names()));
  }
  xs.order = FinitePoset::from_predicate(names, [&](std::size_t a, std::size_t b) {
    return xs.points[a].is_subset_of(xs.points[b]);
  });
  xs.presentation.names = std::move(names);
  for (const auto& omega : xs.base_opens) xs.presentation.basis.push_back(xs.basic_open(omega));
  require_invariant(xs.presentation.specialization_order() == xs.order,
                    "X(X): specialization order differs from inclusion");
  return xs;
}

DownSet phi(const FinitePoset& x, std::size_t point) {
  if (point >= x.size()) throw InvalidParameter("point out of range");
  return DownSet{x.down(point)};
}

void check_phi_embedding(const FinitePoset& x, const XSpace& xs) {
  std::vector<std::size_t> image(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) image[p] = xs.index_of(phi(x, p).members);
  require_invariant(is_order_embedding(x, xs.order, image), "phi is not an order embedding");
  for (std::size_t k = 0; k < xs.base_opens.size(); ++k) {
    ElementSet pre(x.size());
    for (std::size_t p = 0; p < x.size(); ++p)
      if (xs.presentation.basis[k].test(image[p])) pre.set(p);
    require_invariant(pre == xs.base_opens[k],
                      "phi^-1(U(Omega)) != Omega for Omega = " + format_set(xs.base_opens[k], x.names()));
  }
}

// --- maps -----------------------------------------------------------------

bool is_monotone(const FinitePoset& a, const FinitePoset& b, const std::vector<std::size_t>& f) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !b.leq(f[x], f[y])) return false;
  return true;
}

bool is_order_embedding(const FinitePoset& a, const FinitePoset& b, const std::vector<std::size_t>& f) {
  if (f.size() != a.size()) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (x != y && f[x] == f[y]) return false;
      if (a.leq(x, y) != b.leq(f[x], f[y])) return false;
    }
  return true;
}

XFunctor::XFunctor(const FinitePoset& source, const FinitePoset& target, std::vector<std::size_t> image)
    : target_(target), image_(std::move(image)) {
  if (image_.size() != source.size()) throw InvalidParameter("map size differs from source size");
  for (auto y : image_)
    if (y >= target.size()) throw InvalidParameter("map entry out of target range");
  if (!is_monotone(source, target, image_)) throw NotSpectral("map is not monotone");
}

ElementSet XFunctor::apply(const ElementSet& c) const {
  ElementSet img(target_.size());
  for_each_member(c, [&](std::size_t p) { img.set(image_[p]); });
  return target_.down_closure(img);
}

// --- Hochster axioms --------------------------------------------------------

namespace {

using Mask = std::uint64_t;

Mask to_mask(const ElementSet& s) {
  Mask m = 0;
  for_each_member(s, [&](std::size_t i) { m |= Mask{1} << i; });
  return m;
}

// Direct oracle on small spaces: enumerate closed sets, test irreducibility
// by the two-proper-closed-subsets definition, count generic points.
// Returns the irreducible closed sets and the first one failing uniqueness.
std::pair<std::vector<Mask>, std::optional<Mask>> irreducible_closed_sets(const TopologyPresentation& t) {
  const std::size_t n = t.size();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Mask> basis;
  for (const auto& b : t.basis) basis.push_back(to_mask(b));
  auto closure = [&](Mask s) -> Mask {
    if (s == 0) return 0;
    Mask out = all;
    for (Mask b : basis)
      if ((b & s) == 0) out &= ~b;
    return out;
  };
  std::vector<Mask> closed;
  for (Mask c = 0; c <= all; ++c) {
    const Mask open = all & ~c;
    Mask covered = 0;
    for (Mask b : basis)
      if ((b & ~open) == 0) covered |= b;
    if (covered == open) closed.push_back(c);
  }
  std::vector<Mask> irreducible;
  std::optional<Mask> failure;
  for (Mask c : closed) {
    if (c == 0) continue;
    bool reducible = false;
    for (Mask a : closed) {
      if ((a & ~c) != 0 || a == c) continue;
      if (closure(c & ~a) != c) {
        reducible = true;
        break;
      }
    }
    if (reducible) continue;
    irreducible.push_back(c);
    std::size_t generic = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (((c >> x) & 1) && closure(Mask{1} << x) == c) ++generic;
    if (generic != 1 && !failure) failure = c;
  }
  return {irreducible, failure};
}

}  // namespace

SpectralReport verify_spectral(const TopologyPresentation& t) {
  SpectralReport r;
  const std::size_t n = t.size();
  for (const auto& b : t.basis)
    if (b.size() != n) throw InvalidParameter("basic open width differs from point count");
  const auto sig = signatures(t);

  r.t0 = true;
  std::unordered_map<ElementSet, std::size_t> by_sig;
  for (std::size_t p = 0; p < n && r.t0; ++p) {
    auto [it, fresh] = by_sig.emplace(sig[p], p);
    if (!fresh) {
      r.t0 = false;
      r.t0_witness = std::make_pair(it->second, p);
    }
  }

  // A finite space is quasi-compact once the basic opens cover it.
  r.quasi_compact = true;
  for (std::size_t p = 0; p < n; ++p)
    if (sig[p].none()) {
      r.quasi_compact = false;
      r.uncovered_point = p;
      break;
    }

  r.basis_intersection_closed = true;
  std::unordered_set<ElementSet> members(t.basis.begin(), t.basis.end());
  for (std::size_t i = 0; i < t.basis.size() && r.basis_intersection_closed; ++i)
    for (std::size_t j = i + 1; j < t.basis.size(); ++j)
      if (!members.count(t.basis[i] & t.basis[j])) {
        r.basis_intersection_closed = false;
        r.intersection_witness = std::make_pair(i, j);
        break;
      }

  // Single-minimal-element criterion: the irreducible closed sets of a
  // finite space are the point closures cl({x}) = {y : sig[y] subset of
  // sig[x]}; x must be the only point with that closure.
  r.sober = true;
  std::vector<ElementSet> point_closures(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (sig[y].is_subset_of(sig[x])) point_closures[x].set(y);
  for (std::size_t x = 0; x < n && r.sober; ++x)
    for (std::size_t z = 0; z < n; ++z)
      if (z != x && point_closures[z] == point_closures[x]) {
        r.sober = false;
        r.sober_witness = point_closures[x];
        break;
      }

  if (n <= kIrreducibilityOracleMaxPoints) {
    r.oracle_ran = true;
    auto [irreducible, failure] = irreducible_closed_sets(t);
    std::vector<Mask> expected;
    for (const auto& c : point_closures) expected.push_back(to_mask(c));
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    std::sort(irreducible.begin(), irreducible.end());
    require_invariant(irreducible == expected,
                      "irreducible closed sets differ from point closures");
    require_invariant(failure.has_value() == !r.sober, "generic-point oracle disagrees with criterion");
  }
  return r;
}

// --- DOT --------------------------------------------------------------------

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const FinitePoset& x, const std::string& graph_name, const std::vector<std::string>& labels) {
  std::string out = "digraph \"" + dot_escape(graph_name) + "\" {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=box];\n";
  for (std::size_t p = 0; p < x.size(); ++p) {
    const std::string& label = p < labels.size() ? labels[p] : x.names()[p];
    out += "  n" + std::to_string(p) + " [label=\"" + dot_escape(label) + "\"];\n";
  }
  for (auto [a, b] : x.covers()) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace specprime
