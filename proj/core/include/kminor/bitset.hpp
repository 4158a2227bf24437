#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace kminor {

/// Fixed-size dense bit row. Used for adjacency rows and candidate sets.
class BitRow {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitRow() = default;
  explicit BitRow(std::size_t size) : words_((size + 63) / 64, 0), size_(size) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  void set_all() noexcept {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }

  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool any() const noexcept {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }

  /// First set index at or after `from`, or npos.
  std::size_t next(std::size_t from = 0) const noexcept {
    if (from >= size_) return npos;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }

  BitRow& operator&=(const BitRow& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  /// this &= ~other
  BitRow& subtract(const BitRow& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend BitRow operator&(BitRow a, const BitRow& b) noexcept { return a &= b; }

  bool operator==(const BitRow&) const = default;

 private:
  void trim() noexcept {
    if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

}  // namespace kminor
