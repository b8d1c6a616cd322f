#include "solvkit/dense_bitset.hpp"

#include <algorithm>

namespace solvkit {

void DenseBitset::set_all() noexcept {
  std::fill(words_.begin(), words_.end(), ~Word{0});
  const std::size_t tail = size_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() = (Word{1} << tail) - 1;
}

void DenseBitset::clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

std::size_t DenseBitset::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool DenseBitset::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool DenseBitset::is_subset_of(const DenseBitset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool DenseBitset::intersects(const DenseBitset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

DenseBitset& DenseBitset::operator|=(const DenseBitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

DenseBitset& DenseBitset::operator&=(const DenseBitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::size_t DenseBitset::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return size_;
}

std::uint64_t DenseBitset::digest() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ size_;
  for (Word w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<std::uint32_t> DenseBitset::to_ids() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
  return out;
}

}  // namespace solvkit
