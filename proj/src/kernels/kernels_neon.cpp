// NEON tier (AArch64).  tbl performs the 16-byte table lookup that
// composition needs.

#include <arm_neon.h>

#include "invsemi/kernels.hpp"

namespace invsemi::kernels::detail {

  namespace {

    inline uint8x16_t load(Block const& b) {
      return vld1q_u8(b.bytes.data());
    }

    void right_multiply(std::span<Block const> items, Block const& g, Block* out) {
      uint8x16_t const table = load(g);
      for (std::size_t k = 0; k < items.size(); ++k) {
        vst1q_u8(out[k].bytes.data(), vqtbl1q_u8(table, load(items[k])));
      }
    }

    void left_multiply(Block const& g, std::span<Block const> items, Block* out) {
      uint8x16_t const idx = load(g);
      for (std::size_t k = 0; k < items.size(); ++k) {
        vst1q_u8(out[k].bytes.data(), vqtbl1q_u8(load(items[k]), idx));
      }
    }

    void rank(std::span<Block const> items, unsigned degree, std::uint32_t* out) {
      auto const       w  = rank_weights(degree);
      uint32x4_t const w0 = vld1q_u32(w.data());
      uint32x4_t const w1 = vld1q_u32(w.data() + 4);
      for (std::size_t k = 0; k < items.size(); ++k) {
        uint16x8_t const v16 = vmovl_u8(vget_low_u8(load(items[k])));
        uint32x4_t       acc = vmulq_u32(vmovl_u16(vget_low_u16(v16)), w0);
        acc                  = vmlaq_u32(acc, vmovl_u16(vget_high_u16(v16)), w1);
        out[k]               = vaddvq_u32(acc);
      }
    }

    inline uint8x16_t masked(Block const& a, unsigned degree) {
      static constexpr std::uint8_t kIota[16] = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
      uint8x16_t const valid = vcltq_u8(vld1q_u8(kIota), vdupq_n_u8(static_cast<std::uint8_t>(degree)));
      return vorrq_u8(load(a), vmvnq_u8(valid));
    }

    void fiber_counts(Block const& a, unsigned degree, std::uint8_t* counts) {
      uint8x16_t const v = masked(a, degree);
      for (unsigned x = 0; x < kLanes; ++x) {
        uint8x16_t const eq = vceqq_u8(v, vdupq_n_u8(static_cast<std::uint8_t>(x)));
        counts[x]           = vaddvq_u8(vandq_u8(eq, vdupq_n_u8(1)));
      }
    }

    std::uint32_t image_mask(Block const& a, unsigned degree) {
      uint8x16_t const v    = masked(a, degree);
      std::uint32_t    mask = 0;
      for (unsigned x = 0; x < kLanes; ++x) {
        uint8x16_t const eq = vceqq_u8(v, vdupq_n_u8(static_cast<std::uint8_t>(x)));
        mask |= static_cast<std::uint32_t>(vmaxvq_u8(eq) != 0) << x;
      }
      return mask;
    }

    constexpr KernelTable kTable{
        "neon", right_multiply, left_multiply, rank, fiber_counts, image_mask};

  }  // namespace

  KernelTable const& neon_table() {
    return kTable;
  }

}  // namespace invsemi::kernels::detail
