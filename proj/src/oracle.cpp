#include "invsemi/oracle.hpp"

#include <bit>
#include <string>

#include "invsemi/errors.hpp"

namespace invsemi {

  std::size_t Bitset::count() const noexcept {
    std::size_t total = 0;
    for (std::uint64_t w : words_) {
      total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
  }

  Bitset& Bitset::operator|=(Bitset const& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= other.words_[i];
    }
    return *this;
  }

  namespace {

    Context checked(Context ctx) {
      if (ctx.degree() > kOracleMaxDegree) {
        throw ResourceError("green oracle: n = " + std::to_string(ctx.degree())
                            + " exceeds the oracle budget " + std::to_string(kOracleMaxDegree));
      }
      return ctx;
    }

  }  // namespace

  GreenOracle::GreenOracle(Context ctx, kernels::KernelTable const& table)
      : semigroup_(checked(std::move(ctx)), Family::omegabar) {
    std::size_t const                size   = semigroup_.size();
    auto const                       blocks = semigroup_.blocks();
    unsigned const                   n      = static_cast<unsigned>(semigroup_.context().degree());
    std::vector<kernels::Block>      products(size);
    std::vector<std::uint32_t>       ranks(size);

    auto collect = [&](Bitset& into) {
      table.rank(products, n, ranks.data());
      for (std::uint32_t r : ranks) {
        std::int32_t const i = semigroup_.index_of_rank(r);
        if (i < 0) {
          throw std::logic_error("green oracle: product left the semigroup");
        }
        into.set(static_cast<std::size_t>(i));
      }
    };

    left_.assign(size, Bitset(size));
    right_.assign(size, Bitset(size));
    two_sided_.assign(size, Bitset(size));
    for (std::size_t g = 0; g < size; ++g) {
      table.right_multiply(blocks, blocks[g], products.data());
      collect(left_[g]);
      table.left_multiply(blocks[g], blocks, products.data());
      collect(right_[g]);
    }
    // S g S is the union of the right ideals of the members of S g.
    for (std::size_t g = 0; g < size; ++g) {
      for (std::size_t j = 0; j < size; ++j) {
        if (left_[g].test(j)) {
          two_sided_[g] |= right_[j];
        }
      }
    }
    number_classes();
  }

  std::size_t GreenOracle::index(Transformation const& f) const {
    require_omegabar(semigroup_.context(), f, "green oracle");
    return *semigroup_.index_of(f);
  }

  void GreenOracle::number_classes() {
    std::size_t const size = semigroup_.size();
    auto number = [&](std::vector<std::size_t>& ids, auto&& same) {
      ids.assign(size, size);
      std::size_t next = 0;
      for (std::size_t f = 0; f < size; ++f) {
        if (ids[f] != size) {
          continue;
        }
        for (std::size_t g = f; g < size; ++g) {
          if (ids[g] == size && same(f, g)) {
            ids[g] = next;
          }
        }
        ++next;
      }
      return next;
    };
    auto& l_ids = ids_[static_cast<int>(Relation::L)];
    auto& r_ids = ids_[static_cast<int>(Relation::R)];
    std::size_t const l_count = number(l_ids, [&](std::size_t f, std::size_t g) {
      return left_divides(f, g) && left_divides(g, f);
    });
    r_count_ = number(r_ids, [&](std::size_t f, std::size_t g) {
      return right_divides(f, g) && right_divides(g, f);
    });
    number(ids_[static_cast<int>(Relation::H)], [&](std::size_t f, std::size_t g) {
      return l_ids[f] == l_ids[g] && r_ids[f] == r_ids[g];
    });
    meets_.assign(l_count * r_count_, false);
    for (std::size_t k = 0; k < size; ++k) {
      meets_[l_ids[k] * r_count_ + r_ids[k]] = true;
    }
    // f D g iff f L k R g for some k, i.e. the L-class of f meets the R-class of g.
    number(ids_[static_cast<int>(Relation::D)], [&](std::size_t f, std::size_t g) {
      return meets_[l_ids[f] * r_count_ + r_ids[g]];
    });
    number(ids_[static_cast<int>(Relation::J)], [&](std::size_t f, std::size_t g) {
      return two_sided_divides(f, g) && two_sided_divides(g, f);
    });
  }

  bool GreenOracle::related(Relation rel, std::size_t f, std::size_t g) const {
    switch (rel) {
      case Relation::L:
        return left_divides(f, g) && left_divides(g, f);
      case Relation::R:
        return right_divides(f, g) && right_divides(g, f);
      case Relation::H:
        return related(Relation::L, f, g) && related(Relation::R, f, g);
      case Relation::D: {
        auto const& l_ids = ids_[static_cast<int>(Relation::L)];
        auto const& r_ids = ids_[static_cast<int>(Relation::R)];
        return meets_[l_ids[f] * r_count_ + r_ids[g]];
      }
      case Relation::J:
        return two_sided_divides(f, g) && two_sided_divides(g, f);
    }
    return false;
  }

  std::vector<std::size_t> const& GreenOracle::class_ids(Relation rel) const {
    return ids_[static_cast<int>(rel)];
  }

}  // namespace invsemi
