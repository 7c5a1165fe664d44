#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "semibrace/error.hpp"

namespace semibrace {

// A subset of the element universe {0, ..., n - 1} of a fixed structure.
class Subset {
 public:
  Subset() = default;

  explicit Subset(std::size_t universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  Subset(std::size_t universe, std::span<element_t const> members)
      : Subset(universe) {
    for (auto x : members) {
      insert(x);
    }
  }

  Subset(std::size_t universe, std::initializer_list<element_t> members)
      : Subset(universe, std::span<element_t const>(members.begin(), members.size())) {}

  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (std::size_t i = 0; i < universe; ++i) {
      s.insert(static_cast<element_t>(i));
    }
    return s;
  }

  static Subset singleton(std::size_t universe, element_t x) {
    Subset s(universe);
    s.insert(x);
    return s;
  }

  std::size_t universe() const noexcept { return n_; }

  bool contains(element_t x) const noexcept {
    assert(x < n_);
    return (words_[x >> 6] >> (x & 63)) & 1U;
  }

  void insert(element_t x) noexcept {
    assert(x < n_);
    words_[x >> 6] |= std::uint64_t{1} << (x & 63);
  }

  void erase(element_t x) noexcept {
    assert(x < n_);
    words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
  }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) {
      total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
  }

  bool empty() const noexcept {
    for (auto w : words_) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  bool is_full() const noexcept { return size() == n_; }

  bool is_subset_of(Subset const& other) const noexcept {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) {
        return false;
      }
    }
    return true;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w != 0) {
        auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<element_t>(i * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<element_t> elements() const {
    std::vector<element_t> out;
    out.reserve(size());
    for_each([&out](element_t x) { out.push_back(x); });
    return out;
  }

  Subset& operator|=(Subset const& other) noexcept {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= other.words_[i];
    }
    return *this;
  }

  Subset& operator&=(Subset const& other) noexcept {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= other.words_[i];
    }
    return *this;
  }

  friend Subset operator|(Subset lhs, Subset const& rhs) { return lhs |= rhs; }
  friend Subset operator&(Subset lhs, Subset const& rhs) { return lhs &= rhs; }

  friend bool operator==(Subset const&, Subset const&) = default;

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (auto w : words_) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace semibrace

template <>
struct std::hash<semibrace::Subset> {
  std::size_t operator()(semibrace::Subset const& s) const noexcept { return s.hash(); }
};
