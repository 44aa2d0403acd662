#include "cycgrp/element_set.hpp"

#include <bit>

namespace cycgrp {

ElementSet::ElementSet(std::size_t owner_order) : n_(owner_order), words_((owner_order + 63) / 64, 0) {}

ElementSet ElementSet::full(std::size_t owner_order) {
  ElementSet s(owner_order);
  for (std::size_t i = 0; i < owner_order; ++i) s.insert(static_cast<Elem>(i));
  return s;
}

ElementSet ElementSet::of(std::size_t owner_order, std::span<const Elem> members) {
  ElementSet s(owner_order);
  for (Elem e : members) s.insert(e);
  return s;
}

ElementSet ElementSet::of(std::size_t owner_order, std::initializer_list<Elem> members) {
  return of(owner_order, std::span<const Elem>(members.begin(), members.size()));
}

std::size_t ElementSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Elem> ElementSet::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet out(n_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] & other.words_[w];
  return out;
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  ElementSet out(n_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] | other.words_[w];
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ n_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool lex_less(const ElementSet& a, const ElementSet& b) noexcept {
  const std::size_t nw = a.words_.size();
  for (std::size_t w = 0; w < nw; ++w) {
    const auto diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const int bit = std::countr_zero(diff);
    const bool in_a = (a.words_[w] >> bit) & 1U;
    const ElementSet& other = in_a ? b : a;
    // Does `other` have a member beyond the first differing element?
    bool other_continues = false;
    const auto above = bit == 63 ? std::uint64_t{0} : (~std::uint64_t{0} << (bit + 1));
    if ((other.words_[w] & above) != 0) other_continues = true;
    for (std::size_t v = w + 1; v < nw && !other_continues; ++v)
      if (other.words_[v] != 0) other_continues = true;
    // The list holding the smaller element wins unless the other list ends first.
    return in_a ? other_continues : !other_continues;
  }
  return false;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) noexcept {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  return lex_less(a, b);
}

}  // namespace cycgrp
