#include "invsemi/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <string>

namespace invsemi::kernels {

  namespace {

    void right_multiply_scalar(std::span<Block const> items, Block const& g, Block* out) {
      for (std::size_t k = 0; k < items.size(); ++k) {
        Block r;
        for (std::size_t i = 0; i < kLanes; ++i) {
          r.bytes[i] = g.bytes[items[k].bytes[i]];
        }
        out[k] = r;
      }
    }

    void left_multiply_scalar(Block const& g, std::span<Block const> items, Block* out) {
      for (std::size_t k = 0; k < items.size(); ++k) {
        Block r;
        for (std::size_t i = 0; i < kLanes; ++i) {
          r.bytes[i] = items[k].bytes[g.bytes[i]];
        }
        out[k] = r;
      }
    }

    void rank_scalar(std::span<Block const> items, unsigned degree, std::uint32_t* out) {
      for (std::size_t k = 0; k < items.size(); ++k) {
        std::uint32_t r = 0;
        for (unsigned i = 0; i < degree; ++i) {
          r = r * degree + items[k].bytes[i];
        }
        out[k] = r;
      }
    }

    void fiber_counts_scalar(Block const& a, unsigned degree, std::uint8_t* counts) {
      for (std::size_t v = 0; v < kLanes; ++v) {
        counts[v] = 0;
      }
      for (unsigned i = 0; i < degree; ++i) {
        ++counts[a.bytes[i]];
      }
    }

    std::uint32_t image_mask_scalar(Block const& a, unsigned degree) {
      std::uint32_t mask = 0;
      for (unsigned i = 0; i < degree; ++i) {
        mask |= std::uint32_t{1} << a.bytes[i];
      }
      return mask;
    }

    // The mutant swaps the two multiplication orders.
    void right_multiply_flipped(std::span<Block const> items, Block const& g, Block* out) {
      left_multiply_scalar(g, items, out);
    }

    void left_multiply_flipped(Block const& g, std::span<Block const> items, Block* out) {
      right_multiply_scalar(items, g, out);
    }

    constexpr KernelTable kScalar{"scalar",
                                  right_multiply_scalar,
                                  left_multiply_scalar,
                                  rank_scalar,
                                  fiber_counts_scalar,
                                  image_mask_scalar};

    constexpr KernelTable kFlipped{"flipped-composition",
                                   right_multiply_flipped,
                                   left_multiply_flipped,
                                   rank_scalar,
                                   fiber_counts_scalar,
                                   image_mask_scalar};

    bool supported(std::string_view name) {
      if (name == "scalar") {
        return true;
      }
#if defined(INVSEMI_X86_KERNELS)
      __builtin_cpu_init();
      if (name == "sse41") {
        return __builtin_cpu_supports("ssse3") && __builtin_cpu_supports("sse4.1");
      }
      if (name == "avx2") {
        return __builtin_cpu_supports("avx2");
      }
#endif
#if defined(INVSEMI_NEON_KERNELS)
      if (name == "neon") {
        return true;
      }
#endif
      return false;
    }

    KernelTable const* table_by_name(std::string_view name) {
      if (name == "scalar") {
        return &kScalar;
      }
#if defined(INVSEMI_X86_KERNELS)
      if (name == "sse41") {
        return &detail::sse41_table();
      }
      if (name == "avx2") {
        return &detail::avx2_table();
      }
#endif
#if defined(INVSEMI_NEON_KERNELS)
      if (name == "neon") {
        return &detail::neon_table();
      }
#endif
      return nullptr;
    }

    KernelTable const& select() {
      if (char const* forced = std::getenv("INVSEMI_KERNEL")) {
        if (KernelTable const* t = find(forced)) {
          return *t;
        }
      }
      auto tables = available();
      return *tables.back();
    }

  }  // namespace

  KernelTable const& scalar() {
    return kScalar;
  }

  KernelTable const& active() {
    static KernelTable const& chosen = select();
    return chosen;
  }

  std::vector<KernelTable const*> available() {
    std::vector<KernelTable const*> result;
    for (std::string_view name : {"scalar", "sse41", "avx2", "neon"}) {
      if (KernelTable const* t = find(name)) {
        result.push_back(t);
      }
    }
    return result;
  }

  KernelTable const* find(std::string_view name) {
    KernelTable const* t = table_by_name(name);
    if (t != nullptr && supported(name)) {
      return t;
    }
    return nullptr;
  }

  namespace testing {
    KernelTable const& flipped_composition() {
      return kFlipped;
    }
  }  // namespace testing

  namespace detail {
    std::array<std::uint32_t, kLanes> rank_weights(unsigned degree) noexcept {
      std::array<std::uint32_t, kLanes> w{};
      std::uint32_t p = 1;
      for (unsigned i = degree; i-- > 0;) {
        w[i] = p;
        p *= degree;
      }
      return w;
    }
  }  // namespace detail

}  // namespace invsemi::kernels
