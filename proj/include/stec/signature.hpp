#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace stec {

// Blade sets are stored as 16-bit masks, which bounds the algebra at 2^16
// basis blades and keeps every sign computation a couple of popcounts.
inline constexpr int max_dims = 16;

// (k,n) space-time metric descriptor: indices 0..k-1 are time axes squaring
// to -1, indices k..k+n-1 are space axes squaring to +1.
struct Signature {
  int time_dims = 0;
  int space_dims = 1;

  Signature() = default;
  Signature(int k, int n) : time_dims(k), space_dims(n) {
    if (k < 0 || n < 0 || k + n < 1 || k + n > max_dims)
      throw std::domain_error("signature requires k,n >= 0 and 1 <= k+n <= 16");
  }

  int dims() const { return time_dims + space_dims; }

  // Delta_ii
  int metric(int i) const {
    if (i < 0 || i >= dims()) throw std::domain_error("axis index out of range");
    return i < time_dims ? -1 : +1;
  }

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Canonical basis blade e_I for a strictly increasing index list I, stored as
// a bitmask (bit i set = e_i present). The empty mask is the scalar blade.
//
// Blades order lexicographically on their ascending index lists, so e_013
// sorts before e_2 and the scalar blade sorts first; rendered multivectors
// list terms in this order.
class Blade {
 public:
  constexpr Blade() = default;

  static constexpr Blade from_mask(std::uint32_t mask) {
    if (mask >= (1u << max_dims)) throw std::domain_error("blade mask exceeds 16 axes");
    Blade b;
    b.bits_ = mask;
    return b;
  }

  // Indices must be strictly increasing and < max_dims.
  static Blade from_indices(std::span<const int> indices) {
    std::uint32_t mask = 0;
    int prev = -1;
    for (int i : indices) {
      if (i <= prev || i >= max_dims)
        throw std::domain_error("blade indices must be strictly increasing and < 16");
      mask |= 1u << i;
      prev = i;
    }
    return from_mask(mask);
  }

  static Blade axis(int i) {
    if (i < 0 || i >= max_dims) throw std::domain_error("axis index out of range");
    return from_mask(1u << i);
  }

  constexpr std::uint32_t mask() const { return bits_; }
  int grade() const { return std::popcount(bits_); }
  bool is_scalar() const { return bits_ == 0; }
  bool contains(int i) const { return (bits_ >> i) & 1u; }
  bool subset_of(Blade o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(Blade o) const { return (bits_ & o.bits_) != 0; }
  int max_index() const { return bits_ == 0 ? -1 : std::bit_width(bits_) - 1; }

  Blade unite(Blade o) const { return from_mask(bits_ | o.bits_); }
  Blade minus(Blade o) const { return from_mask(bits_ & ~o.bits_); }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(grade()));
    for (std::uint32_t x = bits_; x; x &= x - 1) out.push_back(std::countr_zero(x));
    return out;
  }

  friend constexpr bool operator==(Blade, Blade) = default;

  friend constexpr std::strong_ordering operator<=>(Blade a, Blade b) {
    std::uint32_t x = a.bits_, y = b.bits_;
    while (x != 0 && y != 0) {
      int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i <=> j;
      x &= x - 1;
      y &= y - 1;
    }
    return (x != 0 ? 1 : 0) <=> (y != 0 ? 1 : 0);
  }

 private:
  std::uint32_t bits_ = 0;
};

// Result of merging two blades: sign 0 means the product vanished (shared
// index); otherwise sign is the parity of the permutation sorting the
// concatenation and blade the sorted union.
struct SignedBlade {
  Blade blade;
  int sign = 0;
};

// Result of sorting an arbitrary integer sequence, tracking the parity of the
// sorting permutation. sign == 0 iff the input had a repeated value, in which
// case `values` is unspecified.
struct SortedInts {
  std::vector<int> values;
  int sign = 0;
};

// Ascending sort with permutation parity, by merge sort with inversion
// counting; O(m log m). Duplicates yield sign 0.
SortedInts sort_with_parity(std::span<const int> seq);

// sigma(a,b): parity of the permutation sorting the concatenation (a,b) of
// two canonical blades; 0 when they share an index. An inversion is a pair
// (i in a, j in b) with i > j.
inline int merge_sign(Blade a, Blade b) {
  if (a.intersects(b)) return 0;
  int inversions = 0;
  for (std::uint32_t x = a.mask(); x; x &= x - 1) {
    int i = std::countr_zero(x);
    inversions += std::popcount(b.mask() & ((1u << i) - 1u));
  }
  return (inversions & 1) ? -1 : +1;
}

// (epsilon(a,b), sigma(a,b)) in one call.
inline SignedBlade sorted_merge(Blade a, Blade b) {
  int s = merge_sign(a, b);
  return {s == 0 ? Blade{} : a.unite(b), s};
}

inline void require_within(Blade b, const Signature& sig) {
  if (b.max_index() >= sig.dims())
    throw std::domain_error("blade index out of range for signature");
}

// I^c: ascending list of axes of `sig` not in `b`.
inline Blade complement(Blade b, const Signature& sig) {
  require_within(b, sig);
  std::uint32_t full = (sig.dims() == 32) ? ~0u : ((1u << sig.dims()) - 1u);
  return Blade::from_mask(full & ~b.mask());
}

inline Blade top_blade(const Signature& sig) {
  return Blade::from_mask((1u << sig.dims()) - 1u);
}

// Delta_{I,I}: product of the metric signs over the blade's indices; the
// empty product is +1.
inline int metric_sign(Blade b, const Signature& sig) {
  require_within(b, sig);
  std::uint32_t time_mask = (1u << sig.time_dims) - 1u;
  return (std::popcount(b.mask() & time_mask) & 1) ? -1 : +1;
}

}  // namespace stec
