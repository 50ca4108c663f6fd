#pragma once

// Green's relations on Ω̄(X,Y) = { f : Yf = Y } via their structural
// characterizations, together with constructive divisibility witnesses.
//
// All predicates take f, g ∈ Ω̄(X,Y) and throw DomainError otherwise.
// Relations are taken in the monoid sense; I_X belongs to Ω̄(X,Y).

#include <optional>
#include <string_view>
#include <utility>

#include "invsemi/context.hpp"
#include "invsemi/transformation.hpp"

namespace invsemi {

  enum class Relation { L, R, H, D, J };

  std::string_view to_string(Relation rel) noexcept;
  // "L", "R", "H", "D", "J"; throws ParseError otherwise.
  Relation parse_relation(std::string_view name);

  inline constexpr Relation kAllRelations[] = {
      Relation::L, Relation::R, Relation::H, Relation::D, Relation::J};

  // Xf = Xg and |y(f|Y)^-1| = |y(g|Y)^-1| for all y ∈ Y.
  bool l_related(Context const& ctx, Transformation const& f, Transformation const& g);
  // π(f) = π(g) and π_f(Y) = π_g(Y).
  bool r_related(Context const& ctx, Transformation const& f, Transformation const& g);
  bool h_related(Context const& ctx, Transformation const& f, Transformation const& g);
  // |Xf \ Y| = |Xg \ Y| and the Y-fiber profiles match under a permutation of Y.
  bool d_related(Context const& ctx, Transformation const& f, Transformation const& g);
  // |Xf \ Y| = |Xg \ Y| and each Y-fiber profile dominates the other under
  // some indexed cover.
  bool j_related(Context const& ctx, Transformation const& f, Transformation const& g);

  bool related(Context const& ctx, Relation rel, Transformation const& f, Transformation const& g);

  // The lexicographically least h ∈ Ω̄(X,Y) with f = hg, when Xf ⊆ Xg and
  // every Y-fiber of f is at least as large as the matching fiber of g.
  std::optional<Transformation> l_below_witness(Context const&        ctx,
                                                Transformation const& f,
                                                Transformation const& g);

  // The lexicographically least h ∈ Ω̄(X,Y) with f = gh, when π(g) ⪯ π(f)
  // and π_g(Y) ⪯ π_f(Y).
  std::optional<Transformation> r_below_witness(Context const&        ctx,
                                                Transformation const& f,
                                                Transformation const& g);

  // (h, h') ∈ Ω̄(X,Y)² with f = h g h', when |Xf \ Y| <= |Xg \ Y| and the
  // Y-fiber profile of f dominates that of g.  The construction is
  // deterministic: every free choice takes the least admissible point.
  std::optional<std::pair<Transformation, Transformation>>
  j_below_witness(Context const& ctx, Transformation const& f, Transformation const& g);

}  // namespace invsemi
