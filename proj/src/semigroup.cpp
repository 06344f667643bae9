#include "specprime/semigroup.hpp"

#include "specprime/errors.hpp"

namespace specprime {

std::shared_ptr<const Semigroup> Semigroup::from_table(std::string label,
                                                       std::vector<std::vector<std::size_t>> table,
                                                       std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidSemigroup("empty multiplication table");
  if (n > 0xFFFF) throw TooLarge("semigroup too large");
  std::vector<std::uint16_t> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw InvalidSemigroup("multiplication table is not square");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) throw InvalidSemigroup("table entry out of range");
      flat[a * n + b] = static_cast<std::uint16_t>(table[a][b]);
    }
  }
  return from_flat(std::move(label), n, std::move(flat), std::move(names));
}

std::shared_ptr<const Semigroup> Semigroup::from_flat(std::string label, std::size_t n,
                                                      std::vector<std::uint16_t> table,
                                                      std::vector<std::string> names) {
  auto at = [&](std::size_t a, std::size_t b) -> std::size_t { return table[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (at(a, b) != at(b, a))
        throw InvalidSemigroup("not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw InvalidSemigroup("not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                                 "," + std::to_string(c) + ")");

  std::shared_ptr<Semigroup> s(new Semigroup());
  s->n_ = n;
  s->label_ = std::move(label);
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  s->names_ = std::move(names);
  s->table_ = std::move(table);
  s->multiples_.assign(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s->multiples_[a].set(s->mul(a, b));
  return s;
}

}  // namespace specprime
