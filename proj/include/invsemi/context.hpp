#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invsemi/point_set.hpp"
#include "invsemi/transformation.hpp"

namespace invsemi {

  // The ground set X = {0, ..., n-1} together with the invariant subset Y.
  class Context {
   public:
    // Throws ArgumentError unless 1 <= n <= 16 and Y is a nonempty subset of X.
    Context(std::size_t n, PointSet y);
    Context(std::size_t n, std::initializer_list<std::size_t> y) : Context(n, PointSet(y)) {}

    // Y given as a comma list such as "0,1".  Throws ParseError on bad syntax
    // and ArgumentError on a point outside X.
    static Context parse(std::size_t n, std::string_view y_list);

    std::size_t degree() const noexcept { return degree_; }
    PointSet    x() const noexcept { return PointSet::range(degree_); }
    PointSet    y() const noexcept { return y_; }
    PointSet    outside_y() const noexcept { return x() - y_; }
    std::size_t y_size() const noexcept { return y_.size(); }

    // Points of Y in increasing order; position i re-indexes Y as 0..|Y|-1.
    std::vector<std::size_t> const& y_points() const noexcept { return y_points_; }
    std::size_t                     position_in_y(std::size_t point) const;

    // "0,1"
    std::string y_string() const;

    bool operator==(Context const& other) const noexcept {
      return degree_ == other.degree_ && y_ == other.y_;
    }

   private:
    std::size_t              degree_;
    PointSet                 y_;
    std::vector<std::size_t> y_points_;
  };

  // Fix(X,Y) ⊆ S̄(X,Y) ⊆ Ω̄(X,Y) ⊆ T̄(X,Y)
  enum class Family { fix, sbar, omegabar, tbar };

  std::string_view to_string(Family family) noexcept;
  // "fix", "sbar", "omegabar", "tbar"; throws ParseError otherwise.
  Family parse_family(std::string_view name);

  struct MembershipFlags {
    bool in_tbar             = false;  // Yf ⊆ Y
    bool in_omegabar         = false;  // Yf = Y
    bool in_sbar             = false;  // f restricted to Y is a permutation of Y
    bool in_fix              = false;  // f fixes Y pointwise
    bool is_unit_of_omegabar = false;  // bijection of X with Yf = Y

    bool in(Family family) const noexcept;
  };

  // Throws DimensionError when the degrees differ.
  MembershipFlags classify(Context const& ctx, Transformation const& f);

  bool is_member(Context const& ctx, Family family, Transformation const& f);

  // f restricted to Y as a map of Y, re-indexed by sorted position.  Throws
  // DomainError unless Yf ⊆ Y.
  Transformation restrict_to_y(Context const& ctx, Transformation const& f);

  // |Xf \ Y|
  std::size_t outside_y_rank(Context const& ctx, Transformation const& f);

  // Throws DomainError unless f belongs to Ω̄(X,Y) (and DimensionError on a
  // degree mismatch).  what names the operation for the message.
  void require_omegabar(Context const& ctx, Transformation const& f, std::string_view what);

}  // namespace invsemi
