// SSSE3 / SSE4.1 tier.  Compiled with -mssse3 -msse4.1; only reached after
// a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "invsemi/kernels.hpp"

namespace invsemi::kernels::detail {

  namespace {

    inline __m128i load(Block const& b) {
      return _mm_loadu_si128(reinterpret_cast<__m128i const*>(b.bytes.data()));
    }

    inline void store(Block* b, __m128i v) {
      _mm_storeu_si128(reinterpret_cast<__m128i*>(b->bytes.data()), v);
    }

    void right_multiply(std::span<Block const> items, Block const& g, Block* out) {
      __m128i const table = load(g);
      for (std::size_t k = 0; k < items.size(); ++k) {
        store(out + k, _mm_shuffle_epi8(table, load(items[k])));
      }
    }

    void left_multiply(Block const& g, std::span<Block const> items, Block* out) {
      __m128i const idx = load(g);
      for (std::size_t k = 0; k < items.size(); ++k) {
        store(out + k, _mm_shuffle_epi8(load(items[k]), idx));
      }
    }

    inline std::uint32_t hsum(__m128i v) {
      v = _mm_add_epi32(v, _mm_shuffle_epi32(v, 0x4E));
      v = _mm_add_epi32(v, _mm_shuffle_epi32(v, 0xB1));
      return static_cast<std::uint32_t>(_mm_cvtsi128_si32(v));
    }

    void rank(std::span<Block const> items, unsigned degree, std::uint32_t* out) {
      auto const   w  = rank_weights(degree);
      __m128i const w0 = _mm_loadu_si128(reinterpret_cast<__m128i const*>(w.data()));
      __m128i const w1 = _mm_loadu_si128(reinterpret_cast<__m128i const*>(w.data() + 4));
      for (std::size_t k = 0; k < items.size(); ++k) {
        __m128i const v  = load(items[k]);
        __m128i const lo = _mm_mullo_epi32(_mm_cvtepu8_epi32(v), w0);
        __m128i const hi = _mm_mullo_epi32(_mm_cvtepu8_epi32(_mm_srli_si128(v, 4)), w1);
        out[k]           = hsum(_mm_add_epi32(lo, hi));
      }
    }

    // Lanes at or beyond the degree are forced to 0xFF so they never match.
    inline __m128i masked(Block const& a, unsigned degree) {
      __m128i const iota  = _mm_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
      __m128i const valid = _mm_cmpgt_epi8(_mm_set1_epi8(static_cast<char>(degree)), iota);
      return _mm_or_si128(load(a), _mm_andnot_si128(valid, _mm_set1_epi8(-1)));
    }

    void fiber_counts(Block const& a, unsigned degree, std::uint8_t* counts) {
      __m128i const v = masked(a, degree);
      for (unsigned x = 0; x < kLanes; ++x) {
        int const m = _mm_movemask_epi8(_mm_cmpeq_epi8(v, _mm_set1_epi8(static_cast<char>(x))));
        counts[x]   = static_cast<std::uint8_t>(std::popcount(static_cast<unsigned>(m)));
      }
    }

    std::uint32_t image_mask(Block const& a, unsigned degree) {
      __m128i const v    = masked(a, degree);
      std::uint32_t mask = 0;
      for (unsigned x = 0; x < kLanes; ++x) {
        int const m = _mm_movemask_epi8(_mm_cmpeq_epi8(v, _mm_set1_epi8(static_cast<char>(x))));
        mask |= static_cast<std::uint32_t>(m != 0) << x;
      }
      return mask;
    }

    constexpr KernelTable kTable{
        "sse41", right_multiply, left_multiply, rank, fiber_counts, image_mask};

  }  // namespace

  KernelTable const& sse41_table() {
    return kTable;
  }

}  // namespace invsemi::kernels::detail
