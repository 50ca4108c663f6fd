#pragma once

#include <optional>
#include <vector>

#include "invsemi/context.hpp"
#include "invsemi/point_set.hpp"
#include "invsemi/transformation.hpp"

namespace invsemi {

  struct RegularityReport {
    // Structural side: f|Y a bijection of Y, and a transversal T_f ⊇ Y of
    // ker(f) with |X \ T_f| = |X \ Xf|.
    bool                          is_regular      = false;
    bool                          is_unit_regular = false;
    std::optional<Transformation> witness_pre_inverse;
    std::optional<Transformation> witness_unit;
    std::optional<PointSet>       certifying_transversal;

    // Definitional side, present when the degree is within the enumeration
    // budget: the least pre-inverse in Ω̄ and the least unit u with fuf = f.
    std::optional<bool>           oracle_regular;
    std::optional<bool>           oracle_unit_regular;
    std::optional<Transformation> oracle_pre_inverse;
    std::optional<Transformation> oracle_unit;
  };

  // Every g in the family with fgf = f, in lexicographic order.  Throws
  // DomainError unless f is in the family, ResourceError above the budget.
  std::vector<Transformation> pre_inverses(Context const& ctx, Transformation const& f, Family family);

  // f|Y is a bijection of Y.  Throws DomainError unless f ∈ Ω̄(X,Y).
  bool is_regular(Context const& ctx, Transformation const& f);
  // Pre(f) taken in Ω̄(X,Y) is nonempty.
  bool is_regular_oracle(Context const& ctx, Transformation const& f);

  // A pre-inverse in S̄(X,Y) built from (f|Y)^-1 on Y and least preimages
  // elsewhere; absent unless f ∈ S̄(X,Y).
  std::optional<Transformation> constructive_pre_inverse(Context const& ctx, Transformation const& f);

  // The first transversal of ker(f) containing Y, in lexicographic order,
  // with |X \ T_f| = |X \ Xf|.
  std::optional<PointSet> unit_regular_transversal(Context const& ctx, Transformation const& f);

  // The least unit u of Ω̄(X,Y) with fuf = f, searched over units(ctx).
  std::optional<Transformation> unit_regular_oracle(Context const& ctx, Transformation const& f);

  // Both sides; the oracle side is skipped (left empty) above the budget.
  // Throws DomainError unless f ∈ Ω̄(X,Y).
  RegularityReport is_unit_regular(Context const& ctx, Transformation const& f);

}  // namespace invsemi
