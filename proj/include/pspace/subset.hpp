#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pspace {

// Membership mask over the carrier {0, ..., universe-1} of some finite set.
// The width is fixed at construction; combining masks of different widths is
// a programming error (checked with assert in debug builds).
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static Subset full(std::size_t universe);
  static Subset of(std::size_t universe, std::initializer_list<std::size_t> members);
  static Subset singleton(std::size_t universe, std::size_t member);
  // Low `universe` bits of `bits` (universe <= 64).
  static Subset from_bits(std::size_t universe, std::uint64_t bits);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void insert(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool empty() const noexcept;
  std::size_t count() const noexcept;
  bool is_subset_of(const Subset& other) const noexcept;
  bool intersects(const Subset& other) const noexcept;
  Subset complement() const;
  Subset minus(const Subset& other) const;

  Subset& operator|=(const Subset& other) noexcept;
  Subset& operator&=(const Subset& other) noexcept;
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }

  // Members in increasing index order.
  std::vector<std::size_t> elements() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  // First member, or universe() when empty.
  std::size_t first() const noexcept;

  friend bool operator==(const Subset&, const Subset&) = default;
  // Total order usable as a map key; compares by width, then by bit pattern.
  friend bool operator<(const Subset& a, const Subset& b) noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Lexicographic comparison of sorted member lists; used for deterministic
// presentation order.
bool lex_less(const Subset& a, const Subset& b);

}  // namespace pspace
