#pragma once

#include <bit>
#include <cstdint>

namespace cospec {

/// Fixed 128-bit set used for adjacency rows. Two words cover every graph the
/// library accepts (n <= 128).
struct BitSet128 {
  std::uint64_t w0 = 0, w1 = 0;

  bool test(int i) const {
    return i < 64 ? (w0 >> i) & 1u : (w1 >> (i - 64)) & 1u;
  }
  void set(int i) {
    if (i < 64)
      w0 |= std::uint64_t(1) << i;
    else
      w1 |= std::uint64_t(1) << (i - 64);
  }
  void reset(int i) {
    if (i < 64)
      w0 &= ~(std::uint64_t(1) << i);
    else
      w1 &= ~(std::uint64_t(1) << (i - 64));
  }
  int count() const { return std::popcount(w0) + std::popcount(w1); }
  bool any() const { return (w0 | w1) != 0; }
  bool none() const { return !any(); }

  BitSet128 operator&(const BitSet128& o) const { return {w0 & o.w0, w1 & o.w1}; }
  BitSet128 operator|(const BitSet128& o) const { return {w0 | o.w0, w1 | o.w1}; }
  BitSet128 operator^(const BitSet128& o) const { return {w0 ^ o.w0, w1 ^ o.w1}; }
  BitSet128& operator|=(const BitSet128& o) {
    w0 |= o.w0;
    w1 |= o.w1;
    return *this;
  }
  BitSet128& operator&=(const BitSet128& o) {
    w0 &= o.w0;
    w1 &= o.w1;
    return *this;
  }
  bool operator==(const BitSet128&) const = default;

  /// -1 when empty.
  int lowest() const {
    if (w0) return std::countr_zero(w0);
    if (w1) return 64 + std::countr_zero(w1);
    return -1;
  }

  /// Calls fn(i) for every set bit in ascending order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    std::uint64_t a = w0;
    while (a) {
      fn(std::countr_zero(a));
      a &= a - 1;
    }
    a = w1;
    while (a) {
      fn(64 + std::countr_zero(a));
      a &= a - 1;
    }
  }

  static BitSet128 first_n(int n) {
    BitSet128 r;
    if (n >= 64) {
      r.w0 = ~std::uint64_t(0);
      r.w1 = n >= 128 ? ~std::uint64_t(0) : (std::uint64_t(1) << (n - 64)) - 1;
    } else {
      r.w0 = (std::uint64_t(1) << n) - 1;
    }
    return r;
  }
};

}  // namespace cospec
