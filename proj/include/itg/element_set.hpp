#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace itg {

// Subset of a dense ground set {0,...,n-1}, stored as a bitmask.
// Ground sets are capped at 31 elements; this library targets desk-scale
// matroids (|E| <= 12 or so).
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t mask) : mask_(mask) {}

  static ElementSet of(std::initializer_list<int> elems) {
    ElementSet s;
    for (int e : elems) s.insert(e);
    return s;
  }

  static ElementSet from_indices(const std::vector<int>& elems) {
    ElementSet s;
    for (int e : elems) s.insert(e);
    return s;
  }

  static constexpr ElementSet full(int n) {
    return ElementSet(n <= 0 ? 0u : (n >= 32 ? ~0u : (1u << n) - 1u));
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int e) const { return (mask_ >> e) & 1u; }
  constexpr bool subset_of(ElementSet o) const { return (mask_ & ~o.mask_) == 0; }
  constexpr bool intersects(ElementSet o) const { return (mask_ & o.mask_) != 0; }

  constexpr void insert(int e) { mask_ |= (1u << e); }
  constexpr void erase(int e) { mask_ &= ~(1u << e); }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(mask_ | o.mask_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(mask_ & o.mask_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(mask_ & ~o.mask_); }
  constexpr ElementSet& operator|=(ElementSet o) { mask_ |= o.mask_; return *this; }

  // Lowest element; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(mask_); }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  // Order of the sorted index lists: compare smallest elements first,
  // a proper prefix sorts before its extensions.
  static bool lex_less(ElementSet a, ElementSet b) {
    if (a.mask_ == b.mask_) return false;
    const int t = std::countr_zero(a.mask_ ^ b.mask_);
    const std::uint32_t above = ~((t == 31) ? ~0u : ((1u << (t + 1)) - 1u));
    if (a.contains(t)) return (b.mask_ & above) != 0;
    return (a.mask_ & above) == 0;
  }

  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

}  // namespace itg
