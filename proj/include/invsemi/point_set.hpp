#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace invsemi {

  // A subset of {0, ..., 31} stored as a bitmask.  Ground sets in this
  // library have at most 16 points.
  class PointSet {
   public:
    static constexpr std::size_t kCapacity = 32;

    class const_iterator {
     public:
      using iterator_category = std::forward_iterator_tag;
      using value_type        = std::size_t;
      using difference_type   = std::ptrdiff_t;
      using pointer           = void;
      using reference         = std::size_t;

      constexpr const_iterator() = default;
      constexpr explicit const_iterator(std::uint32_t rest) : rest_(rest) {}

      constexpr std::size_t operator*() const noexcept {
        return static_cast<std::size_t>(std::countr_zero(rest_));
      }
      constexpr const_iterator& operator++() noexcept {
        rest_ &= rest_ - 1;
        return *this;
      }
      constexpr const_iterator operator++(int) noexcept {
        auto tmp = *this;
        ++*this;
        return tmp;
      }
      constexpr bool operator==(const_iterator const&) const = default;

     private:
      std::uint32_t rest_ = 0;
    };

    constexpr PointSet() = default;
    PointSet(std::initializer_list<std::size_t> points);

    static constexpr PointSet from_bits(std::uint32_t bits) noexcept {
      PointSet s;
      s.bits_ = bits;
      return s;
    }

    // {0, ..., n-1}
    static constexpr PointSet range(std::size_t n) noexcept {
      return from_bits(n >= kCapacity ? ~std::uint32_t{0}
                                      : (std::uint32_t{1} << n) - 1);
    }

    constexpr std::uint32_t bits() const noexcept { return bits_; }
    constexpr std::size_t   size() const noexcept { return std::popcount(bits_); }
    constexpr bool          empty() const noexcept { return bits_ == 0; }

    constexpr bool contains(std::size_t x) const noexcept {
      return x < kCapacity && ((bits_ >> x) & 1u) != 0;
    }

    constexpr void insert(std::size_t x) noexcept { bits_ |= std::uint32_t{1} << x; }
    constexpr void erase(std::size_t x) noexcept { bits_ &= ~(std::uint32_t{1} << x); }

    // Least element; undefined on the empty set.
    constexpr std::size_t min() const noexcept {
      return static_cast<std::size_t>(std::countr_zero(bits_));
    }

    constexpr bool subset_of(PointSet other) const noexcept {
      return (bits_ & ~other.bits_) == 0;
    }

    constexpr const_iterator begin() const noexcept { return const_iterator(bits_); }
    constexpr const_iterator end() const noexcept { return const_iterator(0); }

    std::vector<std::size_t> to_vector() const;

    // "{0,2}"
    std::string to_string() const;

    friend constexpr PointSet operator|(PointSet a, PointSet b) noexcept {
      return from_bits(a.bits_ | b.bits_);
    }
    friend constexpr PointSet operator&(PointSet a, PointSet b) noexcept {
      return from_bits(a.bits_ & b.bits_);
    }
    // Set difference.
    friend constexpr PointSet operator-(PointSet a, PointSet b) noexcept {
      return from_bits(a.bits_ & ~b.bits_);
    }

    constexpr bool operator==(PointSet const&) const = default;

   private:
    std::uint32_t bits_ = 0;
  };

  // Lexicographic order of the increasing element sequences, so that
  // {0,1} < {0,1,2} < {0,2} < {1}.
  constexpr bool lex_less(PointSet a, PointSet b) noexcept {
    std::uint32_t const diff = a.bits() ^ b.bits();
    if (diff == 0) {
      return false;
    }
    // Below the lowest differing point both sequences agree.  Whoever owns
    // that point is smaller, unless the other sequence stops there.
    std::uint32_t const low   = diff & (~diff + 1);
    std::uint32_t const above = ~((low << 1) - 1);
    if ((a.bits() & low) != 0) {
      return (b.bits() & above) != 0;
    }
    return (a.bits() & above) == 0;
  }

}  // namespace invsemi
