#include "invsemi/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "invsemi/errors.hpp"

namespace invsemi {

  std::size_t enumeration_budget() {
    std::size_t budget = kDefaultEnumerationBudget;
    if (char const* env = std::getenv("INVSEMI_BUDGET")) {
      char*               end   = nullptr;
      unsigned long const value = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0') {
        budget = static_cast<std::size_t>(value);
      }
    }
    return std::clamp<std::size_t>(budget, 1, kernels::kMaxRankDegree);
  }

  namespace {

    void check_budget(Context const& ctx, std::size_t budget, char const* what) {
      std::size_t const cap = std::min<std::size_t>(budget, kernels::kMaxRankDegree);
      if (ctx.degree() > cap) {
        throw ResourceError(std::string(what) + ": n = " + std::to_string(ctx.degree())
                            + " exceeds the enumeration budget " + std::to_string(cap));
      }
    }

    // Calls visit(values) for every sequence of the given length over
    // [0, base), in lexicographic order.
    template <typename Visit>
    void for_each_sequence(std::size_t length, std::size_t base, Visit&& visit) {
      std::vector<std::size_t> values(length, 0);
      while (true) {
        visit(values);
        std::size_t i = length;
        while (i > 0 && values[i - 1] + 1 == base) {
          values[--i] = 0;
        }
        if (i == 0) {
          return;
        }
        ++values[i - 1];
      }
    }

    bool keep_y_part(Family family, std::vector<std::size_t> const& on_y) {
      std::size_t const k = on_y.size();
      switch (family) {
        case Family::fix:
          for (std::size_t i = 0; i < k; ++i) {
            if (on_y[i] != i) {
              return false;
            }
          }
          return true;
        case Family::sbar: {
          // injective on Y
          std::vector<bool> seen(k, false);
          for (std::size_t v : on_y) {
            if (seen[v]) {
              return false;
            }
            seen[v] = true;
          }
          return true;
        }
        case Family::omegabar: {
          // Y f = Y
          std::vector<bool> hit(k, false);
          for (std::size_t v : on_y) {
            hit[v] = true;
          }
          return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
        }
        case Family::tbar:
          return true;
      }
      return false;
    }

  }  // namespace

  Enumeration::Enumeration(Context ctx, Family family, std::size_t budget)
      : ctx_(std::move(ctx)), family_(family) {
    check_budget(ctx_, budget, "enumerate");
    std::size_t const               n     = ctx_.degree();
    std::vector<std::size_t> const& ys    = ctx_.y_points();
    std::vector<std::size_t> const  other = ctx_.outside_y().to_vector();

    // The restriction to Y, as positions in Y.
    std::vector<std::vector<std::size_t>> y_parts;
    for_each_sequence(ys.size(), ys.size(), [&](std::vector<std::size_t> const& on_y) {
      if (keep_y_part(family_, on_y)) {
        y_parts.push_back(on_y);
      }
    });

    std::vector<std::size_t> images(n, 0);
    for (auto const& on_y : y_parts) {
      for (std::size_t i = 0; i < ys.size(); ++i) {
        images[ys[i]] = ys[on_y[i]];
      }
      for_each_sequence(other.size(), n, [&](std::vector<std::size_t> const& off_y) {
        for (std::size_t i = 0; i < other.size(); ++i) {
          images[other[i]] = off_y[i];
        }
        elements_.emplace_back(images);
      });
    }
    std::sort(elements_.begin(), elements_.end());

    blocks_.reserve(elements_.size());
    for (auto const& f : elements_) {
      blocks_.push_back(f.block());
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= n;
    }
    by_rank_.assign(total, -1);
    std::vector<std::uint32_t> ranks(blocks_.size());
    kernels::active().rank(blocks_, static_cast<unsigned>(n), ranks.data());
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      by_rank_[ranks[i]] = static_cast<std::int32_t>(i);
    }
  }

  std::optional<std::size_t> Enumeration::index_of(Transformation const& f) const {
    if (f.degree() != ctx_.degree()) {
      return std::nullopt;
    }
    std::uint32_t rank = 0;
    kernels::active().rank(std::span(&f.block(), 1), static_cast<unsigned>(f.degree()), &rank);
    std::int32_t const i = index_of_rank(rank);
    if (i < 0) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(i);
  }

  std::vector<Transformation> units(Context const& ctx, std::size_t budget) {
    check_budget(ctx, budget, "units");
    std::vector<std::size_t> const ys    = ctx.y_points();
    std::vector<std::size_t> const other = ctx.outside_y().to_vector();
    std::vector<std::size_t>       on_y  = ys;
    std::vector<std::size_t>       off_y = other;
    std::vector<Transformation>    out;
    std::vector<std::size_t>       images(ctx.degree(), 0);
    // on_y / off_y are sorted, so next_permutation visits every permutation.
    do {
      do {
        for (std::size_t i = 0; i < ys.size(); ++i) {
          images[ys[i]] = on_y[i];
        }
        for (std::size_t i = 0; i < other.size(); ++i) {
          images[other[i]] = off_y[i];
        }
        out.emplace_back(images);
      } while (std::next_permutation(off_y.begin(), off_y.end()));
    } while (std::next_permutation(on_y.begin(), on_y.end()));
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace invsemi
