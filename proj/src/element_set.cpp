#include "specprime/element_set.hpp"

#include "specprime/errors.hpp"

namespace specprime {

ElementSet set_from_indices(std::size_t width, const std::vector<std::size_t>& indices) {
  ElementSet s(width);
  for (auto i : indices) {
    if (i >= width) throw InvalidParameter("index " + std::to_string(i) + " out of range " + std::to_string(width));
    s.set(i);
  }
  return s;
}

ElementSet set_from_indices(std::size_t width, std::initializer_list<std::size_t> indices) {
  return set_from_indices(width, std::vector<std::size_t>(indices));
}

std::vector<std::size_t> indices_of(const ElementSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for_each_member(s, [&](std::size_t i) { out.push_back(i); });
  return out;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  ElementSet diff = a ^ b;
  auto first = diff.find_first();
  if (first == ElementSet::npos) return false;
  return a.test(first);
}

std::string format_set(const ElementSet& s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](std::size_t i) {
    if (!first) out += ",";
    first = false;
    out += i < names.size() ? names[i] : std::to_string(i);
  });
  out += "}";
  return out;
}

}  // namespace specprime
