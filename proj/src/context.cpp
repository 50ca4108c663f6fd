#include "invsemi/context.hpp"

#include <cctype>
#include <charconv>

#include "invsemi/errors.hpp"

namespace invsemi {

  Context::Context(std::size_t n, PointSet y) : degree_(n), y_(y) {
    if (n == 0 || n > Transformation::kMaxDegree) {
      throw ArgumentError("ground set size must be in [1, 16], got " + std::to_string(n));
    }
    if (y.empty()) {
      throw ArgumentError("Y must be nonempty");
    }
    if (!y.subset_of(PointSet::range(n))) {
      throw ArgumentError("Y = " + y.to_string() + " is not contained in [0, "
                          + std::to_string(n) + ")");
    }
    y_points_ = y.to_vector();
  }

  Context Context::parse(std::size_t n, std::string_view y_list) {
    PointSet         y;
    std::string_view s = y_list;
    if (s.empty()) {
      throw ParseError("empty Y list");
    }
    while (true) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr == s.data()) {
        throw ParseError("bad Y list '" + std::string(y_list) + "'");
      }
      if (value >= PointSet::kCapacity) {
        throw ArgumentError("Y point " + std::to_string(value) + " is outside [0, "
                            + std::to_string(n) + ")");
      }
      y.insert(value);
      s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
      if (s.empty()) {
        break;
      }
      if (s.front() != ',') {
        throw ParseError("bad Y list '" + std::string(y_list) + "'");
      }
      s.remove_prefix(1);
    }
    return Context(n, y);
  }

  std::size_t Context::position_in_y(std::size_t point) const {
    if (!y_.contains(point)) {
      throw DomainError("point " + std::to_string(point) + " is not in Y");
    }
    return PointSet::from_bits(y_.bits() & ((std::uint32_t{1} << point) - 1)).size();
  }

  std::string Context::y_string() const {
    std::string out;
    for (std::size_t y : y_points_) {
      if (!out.empty()) {
        out += ',';
      }
      out += std::to_string(y);
    }
    return out;
  }

  std::string_view to_string(Family family) noexcept {
    switch (family) {
      case Family::fix:
        return "fix";
      case Family::sbar:
        return "sbar";
      case Family::omegabar:
        return "omegabar";
      case Family::tbar:
        return "tbar";
    }
    return "?";
  }

  Family parse_family(std::string_view name) {
    for (Family f : {Family::fix, Family::sbar, Family::omegabar, Family::tbar}) {
      if (name == to_string(f)) {
        return f;
      }
    }
    throw ParseError("unknown family '" + std::string(name)
                     + "' (expected tbar, omegabar, sbar or fix)");
  }

  bool MembershipFlags::in(Family family) const noexcept {
    switch (family) {
      case Family::fix:
        return in_fix;
      case Family::sbar:
        return in_sbar;
      case Family::omegabar:
        return in_omegabar;
      case Family::tbar:
        return in_tbar;
    }
    return false;
  }

  MembershipFlags classify(Context const& ctx, Transformation const& f) {
    if (f.degree() != ctx.degree()) {
      throw DimensionError("map of degree " + std::to_string(f.degree())
                           + " in a context of degree " + std::to_string(ctx.degree()));
    }
    MembershipFlags flags;
    PointSet const  yf = f.image_of(ctx.y());
    flags.in_tbar      = yf.subset_of(ctx.y());
    flags.in_omegabar  = yf == ctx.y();
    // f|Y is a bijection of Y iff it maps Y into Y and is injective there.
    flags.in_sbar = flags.in_tbar && yf.size() == ctx.y_size();
    flags.in_fix  = true;
    for (std::size_t y : ctx.y()) {
      if (f[y] != y) {
        flags.in_fix = false;
        break;
      }
    }
    flags.is_unit_of_omegabar = flags.in_omegabar && f.is_injective();
    return flags;
  }

  bool is_member(Context const& ctx, Family family, Transformation const& f) {
    return classify(ctx, f).in(family);
  }

  Transformation restrict_to_y(Context const& ctx, Transformation const& f) {
    if (!classify(ctx, f).in_tbar) {
      throw DomainError("cannot restrict " + f.to_string() + " to Y = {" + ctx.y_string()
                        + "}: Yf is not contained in Y");
    }
    std::vector<std::size_t> images;
    images.reserve(ctx.y_size());
    for (std::size_t y : ctx.y_points()) {
      images.push_back(ctx.position_in_y(f[y]));
    }
    return Transformation(images);
  }

  std::size_t outside_y_rank(Context const& ctx, Transformation const& f) {
    return (f.image() - ctx.y()).size();
  }

  void require_omegabar(Context const& ctx, Transformation const& f, std::string_view what) {
    if (!classify(ctx, f).in_omegabar) {
      throw DomainError(std::string(what) + ": " + f.to_string()
                        + " is not in the semigroup of maps with Yf = Y, Y = {" + ctx.y_string()
                        + "}");
    }
  }

}  // namespace invsemi
