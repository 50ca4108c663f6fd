#include "invsemi/regularity.hpp"

#include <stdexcept>
#include <string>

#include "invsemi/enumeration.hpp"
#include "invsemi/errors.hpp"
#include "invsemi/partition.hpp"

namespace invsemi {

  std::vector<Transformation> pre_inverses(Context const& ctx, Transformation const& f, Family family) {
    if (!is_member(ctx, family, f)) {
      throw DomainError("pre_inverses: " + f.to_string() + " is not in "
                        + std::string(to_string(family)));
    }
    Enumeration const           family_enum(ctx, family);
    auto const                  blocks = family_enum.blocks();
    std::vector<kernels::Block> fg(blocks.size());
    std::vector<kernels::Block> fgf(blocks.size());
    auto const&                 table = kernels::active();
    table.left_multiply(f.block(), blocks, fg.data());
    table.right_multiply(fg, f.block(), fgf.data());
    std::vector<Transformation> out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (fgf[i] == f.block()) {
        out.push_back(family_enum[i]);
      }
    }
    return out;
  }

  bool is_regular(Context const& ctx, Transformation const& f) {
    require_omegabar(ctx, f, "is_regular");
    return classify(ctx, f).in_sbar;
  }

  bool is_regular_oracle(Context const& ctx, Transformation const& f) {
    require_omegabar(ctx, f, "is_regular_oracle");
    return !pre_inverses(ctx, f, Family::omegabar).empty();
  }

  std::optional<Transformation> constructive_pre_inverse(Context const& ctx, Transformation const& f) {
    if (!classify(ctx, f).in_sbar) {
      return std::nullopt;
    }
    std::vector<std::size_t> g(ctx.degree(), 0);
    for (std::size_t x = ctx.degree(); x-- > 0;) {
      g[f[x]] = x;  // least preimage wins
    }
    for (std::size_t y : ctx.y()) {
      g[f[y]] = y;  // (f|Y)^-1 on Y
    }
    for (std::size_t z : ctx.x() - f.image()) {
      g[z] = 0;
    }
    Transformation const witness(g);
    if (compose(compose(f, witness), f) != f || !classify(ctx, witness).in_sbar) {
      throw std::logic_error("constructive_pre_inverse: witness failed re-verification");
    }
    return witness;
  }

  std::optional<PointSet> unit_regular_transversal(Context const& ctx, Transformation const& f) {
    std::size_t const missed = (ctx.x() - f.image()).size();
    for (PointSet t : transversals(f, ctx.y())) {
      if ((ctx.x() - t).size() == missed) {
        return t;
      }
    }
    return std::nullopt;
  }

  std::optional<Transformation> unit_regular_oracle(Context const& ctx, Transformation const& f) {
    for (Transformation const& u : units(ctx)) {
      if (compose(compose(f, u), f) == f) {
        return u;
      }
    }
    return std::nullopt;
  }

  namespace {

    // u sends each image point into T_f through ker(f) and matches X \ Xf
    // with X \ T_f in increasing order, so fuf = f.
    Transformation unit_from_transversal(Context const& ctx, Transformation const& f, PointSet t) {
      std::vector<std::size_t> u(ctx.degree(), 0);
      for (std::size_t x : t) {
        u[f[x]] = x;
      }
      std::vector<std::size_t> const from = (ctx.x() - f.image()).to_vector();
      std::vector<std::size_t> const to   = (ctx.x() - t).to_vector();
      for (std::size_t i = 0; i < from.size(); ++i) {
        u[from[i]] = to[i];
      }
      Transformation const unit(u);
      if (compose(compose(f, unit), f) != f || !classify(ctx, unit).is_unit_of_omegabar) {
        throw std::logic_error("is_unit_regular: unit built from a transversal failed re-verification");
      }
      return unit;
    }

  }  // namespace

  RegularityReport is_unit_regular(Context const& ctx, Transformation const& f) {
    require_omegabar(ctx, f, "is_unit_regular");
    RegularityReport report;
    report.is_regular             = is_regular(ctx, f);
    report.witness_pre_inverse    = constructive_pre_inverse(ctx, f);
    report.certifying_transversal = unit_regular_transversal(ctx, f);
    report.is_unit_regular        = report.certifying_transversal.has_value();
    if (report.certifying_transversal) {
      report.witness_unit = unit_from_transversal(ctx, f, *report.certifying_transversal);
    }
    if (ctx.degree() <= enumeration_budget()) {
      std::vector<Transformation> const pre = pre_inverses(ctx, f, Family::omegabar);
      report.oracle_regular                 = !pre.empty();
      if (!pre.empty()) {
        report.oracle_pre_inverse = pre.front();
      }
      report.oracle_unit         = unit_regular_oracle(ctx, f);
      report.oracle_unit_regular = report.oracle_unit.has_value();
    }
    return report;
  }

}  // namespace invsemi
