#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invsemi/context.hpp"
#include "invsemi/extnat.hpp"
#include "invsemi/transformation.hpp"

namespace invsemi {

  struct IdealSet {
    Context                                    ctx;
    std::vector<Transformation>                members;  // sorted
    std::optional<std::vector<Transformation>> generator_hint;
    // max |Xf \ Y| over the members, when nonempty
    std::optional<std::size_t>                 threshold;

    bool contains(Transformation const& f) const;
  };

  // J(F): every f ∈ Ω̄(X,Y) with |Xf \ Y| <= |Xg \ Y| and a cover of the
  // Y-fibers of g by those of f, for some g ∈ F.  Throws ArgumentError on an
  // empty F and DomainError when F leaves Ω̄(X,Y).
  IdealSet j_of_f(Context const& ctx, std::span<Transformation const> generators);

  // hfh' ∈ F for all f ∈ F and h, h' ∈ Ω̄(X,Y).  False for an empty F or one
  // that leaves Ω̄(X,Y).
  bool is_ideal(Context const& ctx, std::span<Transformation const> members);

  // Cap on the number of J-classes for the down-set enumeration.
  inline constexpr std::size_t kMaxIdealClasses = 20;

  // Every ideal, as unions of J-class down-sets, ordered by size then
  // lexicographically.  Throws ResourceError above the oracle budget.
  std::vector<IdealSet> ideals_all(Context const& ctx);

  struct JstResult {
    IdealSet                   set;
    bool                       is_ideal = false;
    std::optional<std::string> warning;
  };

  // J(s,t) = { f ∈ Ω̄ : n(f|Y) <= s and |Xf \ Y| <= t }.  Throws ArgumentError
  // unless t is finite and t <= n - |Y|.
  JstResult j_st(Context const& ctx, ExtNat s, ExtNat t);

  // The intersection of all ideals.
  IdealSet kernel(Context const& ctx);

  nlohmann::json to_json(IdealSet const& ideal);

}  // namespace invsemi
