#pragma once

#include "specprime/element_set.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace specprime {

/// A finite commutative semigroup given by its multiplication table. The
/// multiplicative monoid of every FiniteRing is one of these.
class Semigroup {
 public:
  /// Validates commutativity and associativity; throws InvalidSemigroup.
  static std::shared_ptr<const Semigroup> from_table(std::string label,
                                                     std::vector<std::vector<std::size_t>> table,
                                                     std::vector<std::string> names = {});

  std::size_t size() const { return n_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& names() const { return names_; }

  /// {a*s : s in S}.
  const ElementSet& multiples(std::size_t a) const { return multiples_[a]; }

 private:
  Semigroup() = default;
  friend class FiniteRing;
  static std::shared_ptr<const Semigroup> from_flat(std::string label, std::size_t n,
                                                    std::vector<std::uint16_t> table,
                                                    std::vector<std::string> names);

  std::size_t n_ = 0;
  std::string label_;
  std::vector<std::string> names_;
  std::vector<std::uint16_t> table_;
  std::vector<ElementSet> multiples_;
};

}  // namespace specprime
