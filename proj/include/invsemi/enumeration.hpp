#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "invsemi/context.hpp"
#include "invsemi/kernels.hpp"
#include "invsemi/transformation.hpp"

namespace invsemi {

  inline constexpr std::size_t kDefaultEnumerationBudget = 6;

  // Largest n for which enumerations are attempted.  INVSEMI_BUDGET
  // overrides the default; the value is clamped to [1, kernels::kMaxRankDegree].
  std::size_t enumeration_budget();

  // All members of one of the four families, in lexicographic order of
  // image sequences.
  class Enumeration {
   public:
    // Throws ResourceError when ctx.degree() exceeds budget.
    Enumeration(Context ctx, Family family, std::size_t budget = enumeration_budget());

    Context const& context() const noexcept { return ctx_; }
    Family         family() const noexcept { return family_; }
    std::size_t    size() const noexcept { return elements_.size(); }

    std::span<Transformation const> elements() const noexcept { return elements_; }
    std::span<kernels::Block const> blocks() const noexcept { return blocks_; }
    Transformation const&           operator[](std::size_t i) const noexcept { return elements_[i]; }

    std::optional<std::size_t> index_of(Transformation const& f) const;
    bool                       contains(Transformation const& f) const { return index_of(f).has_value(); }

    // Position of the element with the given lexicographic rank, or -1.
    std::int32_t index_of_rank(std::uint32_t rank) const noexcept {
      return rank < by_rank_.size() ? by_rank_[rank] : -1;
    }

   private:
    Context                     ctx_;
    Family                      family_;
    std::vector<Transformation> elements_;
    std::vector<kernels::Block> blocks_;
    std::vector<std::int32_t>   by_rank_;
  };

  // Every bijection f of X with Yf = Y: the group of units of Ω̄(X,Y).
  // Throws ResourceError when the degree exceeds budget.
  std::vector<Transformation> units(Context const& ctx, std::size_t budget = enumeration_budget());

}  // namespace invsemi
