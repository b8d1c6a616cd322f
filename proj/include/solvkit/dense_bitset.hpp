#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace solvkit {

/// Fixed-length bitset with word-level set algebra.
class DenseBitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  DenseBitset() = default;
  explicit DenseBitset(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  /// Sets bit i and reports whether it was previously clear.
  bool insert(std::size_t i) noexcept {
    Word& w = words_[i / kWordBits];
    const Word mask = Word{1} << (i % kWordBits);
    const bool fresh = (w & mask) == 0;
    w |= mask;
    return fresh;
  }

  void set_all() noexcept;
  void clear() noexcept;

  std::size_t count() const noexcept;
  bool none() const noexcept;

  bool is_subset_of(const DenseBitset& other) const noexcept;
  bool intersects(const DenseBitset& other) const noexcept;

  DenseBitset& operator|=(const DenseBitset& other) noexcept;
  DenseBitset& operator&=(const DenseBitset& other) noexcept;

  /// Index of the lowest set bit, or size() if empty.
  std::size_t first() const noexcept;

  /// 64-bit digest of the contents (FNV-style mix over words).
  std::uint64_t digest() const noexcept;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int tz = std::countr_zero(bits);
        f(w * kWordBits + static_cast<std::size_t>(tz));
        bits &= bits - 1;
      }
    }
  }

  /// Visits set bits in ascending order while `f` returns true; reports
  /// whether every visit returned true.
  template <typename F>
  bool all_of(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int tz = std::countr_zero(bits);
        if (!f(w * kWordBits + static_cast<std::size_t>(tz))) return false;
        bits &= bits - 1;
      }
    }
    return true;
  }

  std::vector<std::uint32_t> to_ids() const;

  const std::vector<Word>& words() const noexcept { return words_; }

  friend bool operator==(const DenseBitset& a, const DenseBitset& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator<(const DenseBitset& a, const DenseBitset& b) noexcept {
    return a.words_ < b.words_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct DenseBitsetHash {
  std::size_t operator()(const DenseBitset& b) const noexcept {
    return static_cast<std::size_t>(b.digest());
  }
};

}  // namespace solvkit
