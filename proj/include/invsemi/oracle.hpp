#pragma once

// Definitional Green's relations on Ω̄(X,Y): mutual divisibility computed by
// multiplying every element against the whole enumeration.  Independent of
// the structural characterizations in green.hpp.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "invsemi/context.hpp"
#include "invsemi/enumeration.hpp"
#include "invsemi/green.hpp"
#include "invsemi/kernels.hpp"

namespace invsemi {

  inline constexpr std::size_t kOracleMaxDegree = 5;

  class Bitset {
   public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    std::size_t count() const noexcept;

    Bitset& operator|=(Bitset const& other) noexcept;
    bool    operator==(Bitset const&) const = default;

   private:
    std::size_t                size_ = 0;
    std::vector<std::uint64_t> words_;
  };

  class GreenOracle {
   public:
    // Throws ResourceError above kOracleMaxDegree.
    explicit GreenOracle(Context ctx, kernels::KernelTable const& table = kernels::active());

    Enumeration const& semigroup() const noexcept { return semigroup_; }
    std::size_t        size() const noexcept { return semigroup_.size(); }

    // Element indices refer to semigroup().  Throws DomainError for an f
    // outside Ω̄(X,Y).
    std::size_t index(Transformation const& f) const;

    // f ∈ S g, i.e. f = hg for some h
    bool left_divides(std::size_t f, std::size_t g) const { return left_[g].test(f); }
    // f ∈ g S, i.e. f = gh for some h
    bool right_divides(std::size_t f, std::size_t g) const { return right_[g].test(f); }
    // f ∈ S g S
    bool two_sided_divides(std::size_t f, std::size_t g) const { return two_sided_[g].test(f); }

    Bitset const& left_ideal(std::size_t g) const { return left_[g]; }
    Bitset const& right_ideal(std::size_t g) const { return right_[g]; }
    Bitset const& two_sided_ideal(std::size_t g) const { return two_sided_[g]; }

    bool related(Relation rel, std::size_t f, std::size_t g) const;
    bool related(Relation rel, Transformation const& f, Transformation const& g) const {
      return related(rel, index(f), index(g));
    }

    // Class id of each element under the relation; ids are numbered in order
    // of each class's least element.
    std::vector<std::size_t> const& class_ids(Relation rel) const;

   private:
    void number_classes();

    Enumeration              semigroup_;
    std::vector<Bitset>      left_;
    std::vector<Bitset>      right_;
    std::vector<Bitset>      two_sided_;
    std::vector<std::size_t> ids_[5];
    // meets_[l * r_count + r]: the L-class l meets the R-class r.
    std::vector<bool>        meets_;
    std::size_t              r_count_ = 0;
  };

}  // namespace invsemi
