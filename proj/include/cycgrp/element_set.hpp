#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cycgrp {

using Elem = std::uint16_t;

/// Subset of a group's elements, stored as a membership bit vector.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t owner_order);

  static ElementSet full(std::size_t owner_order);
  static ElementSet of(std::size_t owner_order, std::span<const Elem> members);
  static ElementSet of(std::size_t owner_order, std::initializer_list<Elem> members);

  std::size_t owner_order() const noexcept { return n_; }
  bool contains(Elem e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1U; }
  void insert(Elem e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool is_full() const noexcept { return size() == n_; }

  /// Members in ascending index order.
  std::vector<Elem> elements() const;

  bool is_subset_of(const ElementSet& other) const noexcept;
  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator|(const ElementSet& other) const;

  bool operator==(const ElementSet& other) const noexcept = default;

  std::size_t hash() const noexcept;

  // Lexicographic order of the ascending member lists.
  friend bool lex_less(const ElementSet& a, const ElementSet& b) noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical subgroup ordering: by size, then lexicographic member order.
bool canonical_less(const ElementSet& a, const ElementSet& b) noexcept;

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace cycgrp
