#include "pspace/subset.hpp"

#include <algorithm>
#include <cassert>

namespace pspace {

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

Subset Subset::of(std::size_t universe, std::initializer_list<std::size_t> members) {
  Subset s(universe);
  for (std::size_t m : members) {
    assert(m < universe);
    s.insert(m);
  }
  return s;
}

Subset Subset::singleton(std::size_t universe, std::size_t member) {
  Subset s(universe);
  s.insert(member);
  return s;
}

Subset Subset::from_bits(std::size_t universe, std::uint64_t bits) {
  assert(universe <= 64);
  Subset s(universe);
  if (universe > 0) {
    if (universe < 64) bits &= (std::uint64_t{1} << universe) - 1;
    s.words_[0] = bits;
  }
  return s;
}

bool Subset::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Subset::count() const noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Subset::is_subset_of(const Subset& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

bool Subset::intersects(const Subset& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

Subset Subset::complement() const { return full(universe_).minus(*this); }

Subset Subset::minus(const Subset& other) const {
  assert(universe_ == other.universe_);
  Subset r(*this);
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~other.words_[w];
  return r;
}

Subset& Subset::operator|=(const Subset& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t Subset::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return universe_;
}

bool operator<(const Subset& a, const Subset& b) noexcept {
  if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
  return a.words_ < b.words_;
}

bool lex_less(const Subset& a, const Subset& b) {
  auto ea = a.elements();
  auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

}  // namespace pspace
