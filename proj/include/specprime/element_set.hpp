#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace specprime {

/// Fixed-width bit vector over an index range (ring elements, poset points,
/// space points). Width is fixed at construction and never changes.
using ElementSet = boost::dynamic_bitset<>;

inline ElementSet make_set(std::size_t width) { return ElementSet(width); }

inline ElementSet make_full_set(std::size_t width) {
  ElementSet s(width);
  s.set();
  return s;
}

ElementSet set_from_indices(std::size_t width, const std::vector<std::size_t>& indices);
ElementSet set_from_indices(std::size_t width, std::initializer_list<std::size_t> indices);

std::vector<std::size_t> indices_of(const ElementSet& s);

/// Canonical total order: smaller cardinality first, then lexicographic on
/// the index lists read from index 0 upward (the set holding the first
/// differing index sorts first).
bool canonical_less(const ElementSet& a, const ElementSet& b);

struct CanonicalLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const { return canonical_less(a, b); }
};

/// "{0,2,4}" style rendering using the supplied element names (or indices).
std::string format_set(const ElementSet& s, const std::vector<std::string>& names = {});

template <class Fn>
void for_each_member(const ElementSet& s, Fn&& fn) {
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) fn(i);
}

}  // namespace specprime
