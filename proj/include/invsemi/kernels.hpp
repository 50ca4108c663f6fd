#pragma once

// Batch kernels over transformations of degree at most 16.
//
// A transformation of degree n <= 16 is stored as a 16-byte Block whose first
// n bytes are the images and whose remaining bytes hold the identity
// (byte i == i).  With that padding, composition is a single byte shuffle
// (pshufb / vpshufb / tbl), which is what the SIMD variants exploit.
//
// Every kernel has a portable scalar reference implementation.  The SIMD
// variants are selected at runtime from the CPU features (see active()) and
// must agree with the scalar reference bit for bit.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace invsemi::kernels {

  inline constexpr std::size_t kLanes = 16;

  // Largest degree accepted by the rank kernel: 8^8 < 2^32.
  inline constexpr unsigned kMaxRankDegree = 8;

  struct alignas(16) Block {
    std::array<std::uint8_t, kLanes> bytes{};

    constexpr std::uint8_t  operator[](std::size_t i) const noexcept { return bytes[i]; }
    constexpr std::uint8_t& operator[](std::size_t i) noexcept { return bytes[i]; }

    constexpr bool operator==(Block const&) const = default;
    constexpr auto operator<=>(Block const&) const = default;
  };

  static_assert(sizeof(Block) == kLanes, "Block must be densely packable");

  constexpr Block identity_block() noexcept {
    Block b;
    for (std::size_t i = 0; i < kLanes; ++i) {
      b.bytes[i] = static_cast<std::uint8_t>(i);
    }
    return b;
  }

  // Function table for one instruction-set tier.  Composition is left to
  // right: (a * b)[x] = b[a[x]].
  struct KernelTable {
    std::string_view name;

    // out[k] = items[k] * g
    void (*right_multiply)(std::span<Block const> items, Block const& g, Block* out);

    // out[k] = g * items[k]
    void (*left_multiply)(Block const& g, std::span<Block const> items, Block* out);

    // out[k] = sum_{i<degree} items[k][i] * degree^(degree-1-i), i.e. the
    // position of the image sequence in lexicographic order.  Requires
    // degree <= kMaxRankDegree.
    void (*rank)(std::span<Block const> items, unsigned degree, std::uint32_t* out);

    // counts[v] = |{i < degree : a[i] == v}| for v < 16.
    void (*fiber_counts)(Block const& a, unsigned degree, std::uint8_t* counts);

    // Bit v set iff v == a[i] for some i < degree.
    std::uint32_t (*image_mask)(Block const& a, unsigned degree);
  };

  KernelTable const& scalar();

  // Best table supported by the running CPU.  The environment variable
  // INVSEMI_KERNEL (scalar, sse41, avx2, neon) forces a particular tier when
  // it is available.
  KernelTable const& active();

  // Every table usable on this CPU, scalar first.
  std::vector<KernelTable const*> available();

  KernelTable const* find(std::string_view name);

  namespace testing {
    // A deliberately broken table whose multiplications compose right to
    // left.  Used to check that the verification harness detects errors.
    KernelTable const& flipped_composition();
  }  // namespace testing

  namespace detail {
#if defined(INVSEMI_X86_KERNELS)
    KernelTable const& sse41_table();
    KernelTable const& avx2_table();
#endif
#if defined(INVSEMI_NEON_KERNELS)
    KernelTable const& neon_table();
#endif
    // Rank weights degree^(degree-1-i) for i < degree, zero elsewhere.
    std::array<std::uint32_t, kLanes> rank_weights(unsigned degree) noexcept;
  }  // namespace detail

}  // namespace invsemi::kernels
