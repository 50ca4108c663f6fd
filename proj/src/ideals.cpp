#include "invsemi/ideals.hpp"

#include <algorithm>
#include <string>

#include "invsemi/enumeration.hpp"
#include "invsemi/errors.hpp"
#include "invsemi/oracle.hpp"

namespace invsemi {

  bool IdealSet::contains(Transformation const& f) const {
    return std::binary_search(members.begin(), members.end(), f);
  }

  namespace {

    std::optional<std::size_t> max_outside_rank(Context const& ctx, std::vector<Transformation> const& fs) {
      std::optional<std::size_t> t;
      for (auto const& f : fs) {
        t = std::max(t.value_or(0), outside_y_rank(ctx, f));
      }
      return t;
    }

  }  // namespace

  IdealSet j_of_f(Context const& ctx, std::span<Transformation const> generators) {
    if (generators.empty()) {
      throw ArgumentError("j_of_f: the generating set is empty");
    }
    struct Generator {
      std::size_t  outside;
      FiberProfile profile;
    };
    std::vector<Generator> gens;
    for (auto const& g : generators) {
      require_omegabar(ctx, g, "j_of_f");
      gens.push_back({outside_y_rank(ctx, g), profile_of(ctx, g)});
    }
    Enumeration const semigroup(ctx, Family::omegabar);
    IdealSet          out{ctx, {}, std::vector<Transformation>(generators.begin(), generators.end()), {}};
    for (Transformation const& f : semigroup.elements()) {
      std::size_t const  outside = outside_y_rank(ctx, f);
      FiberProfile const pf      = profile_of(ctx, f);
      for (auto const& g : gens) {
        if (outside <= g.outside && j_condition(pf, g.profile)) {
          out.members.push_back(f);
          break;
        }
      }
    }
    out.threshold = max_outside_rank(ctx, out.members);
    return out;
  }

  bool is_ideal(Context const& ctx, std::span<Transformation const> members) {
    if (members.empty()) {
      return false;
    }
    Enumeration const semigroup(ctx, Family::omegabar);
    std::vector<bool> in(semigroup.size(), false);
    for (auto const& f : members) {
      auto const i = semigroup.index_of(f);
      if (!i) {
        return false;
      }
      in[*i] = true;
    }
    auto const&                 table  = kernels::active();
    auto const                  blocks = semigroup.blocks();
    unsigned const              n      = static_cast<unsigned>(ctx.degree());
    std::vector<kernels::Block> products(blocks.size());
    std::vector<std::uint32_t>  ranks(blocks.size());
    auto closed = [&] {
      table.rank(products, n, ranks.data());
      return std::all_of(ranks.begin(), ranks.end(), [&](std::uint32_t r) {
        std::int32_t const i = semigroup.index_of_rank(r);
        return i >= 0 && in[static_cast<std::size_t>(i)];
      });
    };
    // With the identity available, closure under hf and fh' gives hfh'.
    for (auto const& f : members) {
      table.right_multiply(blocks, f.block(), products.data());
      if (!closed()) {
        return false;
      }
      table.left_multiply(f.block(), blocks, products.data());
      if (!closed()) {
        return false;
      }
    }
    return true;
  }

  std::vector<IdealSet> ideals_all(Context const& ctx) {
    GreenOracle const oracle(ctx);
    auto const&       ids   = oracle.class_ids(Relation::J);
    std::size_t const count = *std::max_element(ids.begin(), ids.end()) + 1;
    if (count > kMaxIdealClasses) {
      throw ResourceError("ideals_all: " + std::to_string(count) + " J-classes exceed the cap of "
                          + std::to_string(kMaxIdealClasses));
    }
    std::vector<std::size_t> rep(count, oracle.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      rep[ids[i]] = std::min(rep[ids[i]], i);
    }
    // below[a] has bit b when class b lies J-below class a.
    std::vector<std::uint32_t> below(count, 0);
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        if (oracle.two_sided_divides(rep[b], rep[a])) {
          below[a] |= std::uint32_t{1} << b;
        }
      }
    }
    std::vector<IdealSet> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << count); ++mask) {
      bool down_set = true;
      for (std::size_t a = 0; a < count && down_set; ++a) {
        if ((mask >> a) & 1u) {
          down_set = (below[a] & ~mask) == 0;
        }
      }
      if (!down_set) {
        continue;
      }
      IdealSet ideal{ctx, {}, {}, {}};
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if ((mask >> ids[i]) & 1u) {
          ideal.members.push_back(oracle.semigroup()[i]);
        }
      }
      ideal.threshold = max_outside_rank(ctx, ideal.members);
      out.push_back(std::move(ideal));
    }
    std::sort(out.begin(), out.end(), [](IdealSet const& a, IdealSet const& b) {
      if (a.members.size() != b.members.size()) {
        return a.members.size() < b.members.size();
      }
      return a.members < b.members;
    });
    return out;
  }

  JstResult j_st(Context const& ctx, ExtNat s, ExtNat t) {
    std::size_t const outside_size = ctx.degree() - ctx.y_size();
    if (!t.is_finite() || t.value() > outside_size) {
      throw ArgumentError("j_st: t must lie in [0, " + std::to_string(outside_size) + "], got "
                          + t.to_string());
    }
    Enumeration const semigroup(ctx, Family::omegabar);
    ExtNat const      ambient(ctx.y_size());
    JstResult         result{IdealSet{ctx, {}, {}, {}}, false, {}};
    for (Transformation const& f : semigroup.elements()) {
      if (n_value(profile_of(ctx, f), ambient) <= s && ExtNat(outside_y_rank(ctx, f)) <= t) {
        result.set.members.push_back(f);
      }
    }
    result.set.threshold = max_outside_rank(ctx, result.set.members);
    result.is_ideal      = is_ideal(ctx, result.set.members);
    if (ctx.y_size() >= 2 && s < ambient) {
      result.warning = "finite Y: every fiber of f|Y is smaller than |Y|, so n(f|Y) = |Y| > s and "
                       "J(s,t) is empty";
    }
    return result;
  }

  IdealSet kernel(Context const& ctx) {
    std::vector<IdealSet> const all = ideals_all(ctx);
    IdealSet                    out = all.front();
    for (IdealSet const& ideal : all) {
      std::vector<Transformation> common;
      std::set_intersection(out.members.begin(), out.members.end(), ideal.members.begin(),
                            ideal.members.end(), std::back_inserter(common));
      out.members = std::move(common);
    }
    out.threshold = max_outside_rank(ctx, out.members);
    return out;
  }

  nlohmann::json to_json(IdealSet const& ideal) {
    nlohmann::json out{{"size", ideal.members.size()}, {"members", to_strings(ideal.members)}};
    out["t"] = ideal.threshold ? nlohmann::json(*ideal.threshold) : nlohmann::json(nullptr);
    if (ideal.generator_hint) {
      out["generators"] = to_strings(*ideal.generator_hint);
    }
    return out;
  }

}  // namespace invsemi
