// AVX2 tier.  vpshufb shuffles within each 128-bit lane, so two 16-byte
// transformations are composed per instruction.

#include <immintrin.h>

#include <bit>

#include "invsemi/kernels.hpp"

namespace invsemi::kernels::detail {

  namespace {

    inline __m128i load(Block const& b) {
      return _mm_loadu_si128(reinterpret_cast<__m128i const*>(b.bytes.data()));
    }

    inline __m256i load2(Block const* b) {
      return _mm256_loadu_si256(reinterpret_cast<__m256i const*>(b->bytes.data()));
    }

    inline void store(Block* b, __m128i v) {
      _mm_storeu_si128(reinterpret_cast<__m128i*>(b->bytes.data()), v);
    }

    inline void store2(Block* b, __m256i v) {
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(b->bytes.data()), v);
    }

    void right_multiply(std::span<Block const> items, Block const& g, Block* out) {
      __m256i const table = _mm256_broadcastsi128_si256(load(g));
      std::size_t   k     = 0;
      for (; k + 2 <= items.size(); k += 2) {
        store2(out + k, _mm256_shuffle_epi8(table, load2(items.data() + k)));
      }
      if (k < items.size()) {
        store(out + k, _mm_shuffle_epi8(_mm256_castsi256_si128(table), load(items[k])));
      }
    }

    void left_multiply(Block const& g, std::span<Block const> items, Block* out) {
      __m256i const idx = _mm256_broadcastsi128_si256(load(g));
      std::size_t   k   = 0;
      for (; k + 2 <= items.size(); k += 2) {
        store2(out + k, _mm256_shuffle_epi8(load2(items.data() + k), idx));
      }
      if (k < items.size()) {
        store(out + k, _mm_shuffle_epi8(load(items[k]), _mm256_castsi256_si128(idx)));
      }
    }

    void rank(std::span<Block const> items, unsigned degree, std::uint32_t* out) {
      auto const    w       = rank_weights(degree);
      __m256i const weights = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(w.data()));
      for (std::size_t k = 0; k < items.size(); ++k) {
        __m256i const v = _mm256_cvtepu8_epi32(load(items[k]));
        __m256i const p = _mm256_mullo_epi32(v, weights);
        __m128i       s = _mm_add_epi32(_mm256_castsi256_si128(p), _mm256_extracti128_si256(p, 1));
        s               = _mm_add_epi32(s, _mm_shuffle_epi32(s, 0x4E));
        s               = _mm_add_epi32(s, _mm_shuffle_epi32(s, 0xB1));
        out[k]          = static_cast<std::uint32_t>(_mm_cvtsi128_si32(s));
      }
    }

    // Both 128-bit lanes hold the same transformation; lanes at or beyond the
    // degree are forced to 0xFF.
    inline __m256i masked_pair(Block const& a, unsigned degree) {
      __m128i const iota  = _mm_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
      __m128i const valid = _mm_cmpgt_epi8(_mm_set1_epi8(static_cast<char>(degree)), iota);
      __m128i const v     = _mm_or_si128(load(a), _mm_andnot_si128(valid, _mm_set1_epi8(-1)));
      return _mm256_broadcastsi128_si256(v);
    }

    // Compares against x in the low lane and x + 1 in the high lane.
    inline std::uint32_t match_pair(__m256i v, unsigned x) {
      __m256i const probe = _mm256_setr_m128i(_mm_set1_epi8(static_cast<char>(x)),
                                              _mm_set1_epi8(static_cast<char>(x + 1)));
      return static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, probe)));
    }

    void fiber_counts(Block const& a, unsigned degree, std::uint8_t* counts) {
      __m256i const v = masked_pair(a, degree);
      for (unsigned x = 0; x < kLanes; x += 2) {
        std::uint32_t const m = match_pair(v, x);
        counts[x]             = static_cast<std::uint8_t>(std::popcount(m & 0xFFFFu));
        counts[x + 1]         = static_cast<std::uint8_t>(std::popcount(m >> 16));
      }
    }

    std::uint32_t image_mask(Block const& a, unsigned degree) {
      __m256i const v    = masked_pair(a, degree);
      std::uint32_t mask = 0;
      for (unsigned x = 0; x < kLanes; x += 2) {
        std::uint32_t const m = match_pair(v, x);
        mask |= static_cast<std::uint32_t>((m & 0xFFFFu) != 0) << x;
        mask |= static_cast<std::uint32_t>((m >> 16) != 0) << (x + 1);
      }
      return mask;
    }

    constexpr KernelTable kTable{
        "avx2", right_multiply, left_multiply, rank, fiber_counts, image_mask};

  }  // namespace

  KernelTable const& avx2_table() {
    return kTable;
  }

}  // namespace invsemi::kernels::detail
