#pragma once

// Extended naturals with a single infinite level ω, and fiber profiles: the
// multiset of fiber sizes of a surjection, possibly of an infinite set.
//
// A FiberProfile lists finitely many explicit sizes and may additionally
// carry a "rest" part: countably many further indices whose fibers all have
// size 1.  This is enough to encode the standard examples on Y = ℕ, e.g. a
// map of ℕ with one infinite fiber and all other fibers singletons is
// "[w]+rest1".

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invsemi/context.hpp"
#include "invsemi/transformation.hpp"

namespace invsemi {

  class ExtNat {
   public:
    constexpr ExtNat() = default;
    constexpr ExtNat(std::uint64_t value) : value_(value) {}  // NOLINT(runtime/explicit)

    static constexpr ExtNat omega() noexcept {
      ExtNat w;
      w.infinite_ = true;
      return w;
    }

    constexpr bool is_finite() const noexcept { return !infinite_; }

    // Throws DomainError on ω.
    std::uint64_t value() const;

    friend constexpr ExtNat operator+(ExtNat a, ExtNat b) noexcept {
      if (a.infinite_ || b.infinite_) {
        return omega();
      }
      return ExtNat(a.value_ + b.value_);
    }

    ExtNat& operator+=(ExtNat other) noexcept { return *this = *this + other; }

    friend constexpr bool operator==(ExtNat a, ExtNat b) noexcept {
      return a.infinite_ == b.infinite_ && a.value_ == b.value_;
    }

    friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) noexcept {
      if (a.infinite_ != b.infinite_) {
        return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
      }
      return a.value_ <=> b.value_;
    }

    // "w" for ω, decimal otherwise.
    std::string to_string() const;

   private:
    std::uint64_t value_    = 0;
    bool          infinite_ = false;
  };

  // Accepts "w", "ω" or a decimal number.
  ExtNat parse_extnat(std::string_view text);

  struct FiberProfile {
    std::vector<ExtNat> sizes;
    // Countably many further indices, each with a fiber of size 1.
    bool rest_ones = false;

    FiberProfile() = default;
    // Throws ArgumentError if some size is 0.
    explicit FiberProfile(std::vector<ExtNat> sizes, bool rest_ones = false);

    std::size_t explicit_size() const noexcept { return sizes.size(); }

    bool all_finite() const noexcept;

    // "[w 1 1]" or "[w w]+rest1"
    std::string to_string() const;

    bool operator==(FiberProfile const&) const = default;
  };

  // Parses the text form above.  Throws ParseError.
  FiberProfile parse_profile(std::string_view text);

  // A bijection between the index sets of two profiles matching sizes.
  // targets[i] is the index in the second profile matched with explicit
  // index i of the first; nullopt sends i into the second profile's rest
  // part.  Explicit indices of the second profile not hit are matched from
  // the first profile's rest part.
  struct ProfileBijection {
    std::vector<std::optional<std::size_t>> targets;

    bool operator==(ProfileBijection const&) const = default;
  };

  // {P_y}: for every explicit source index y, the set of target indices
  // charged to y.  Blocks may be empty.
  struct IndexedCover {
    std::vector<std::vector<std::size_t>> blocks;
    // Target explicit indices (all of size 1) each absorbed by its own index
    // of the source's rest part.
    std::vector<std::size_t> into_rest;
    // When the target has a rest part: the explicit source index absorbing
    // it, or nullopt when it is matched one-to-one with the source's rest.
    std::optional<std::size_t> rest_sink;

    bool operator==(IndexedCover const&) const = default;
  };

  // Index sets are capped at this size for the exhaustive cover search.
  inline constexpr std::size_t kCoverSearchCap = 8;

  // A bijection α with p[y] = q[yα] for all y, if one exists.  Throws
  // DimensionError when the index sets have different cardinalities.
  std::optional<ProfileBijection> d_condition(FiberProfile const& p, FiberProfile const& q);

  // A cover {P_y} of q's index set indexed by p's index set with
  // p[y] >= sum_{w in P_y} q[w] for all y, if one exists.  The lexicographically
  // least block assignment is returned.  Throws ResourceError when the search
  // would exceed kCoverSearchCap and no shortcut applies.
  std::optional<IndexedCover> j_condition(FiberProfile const& p, FiberProfile const& q);

  // Checks that cover is a disjoint cover of q's index set indexed by p's
  // index set satisfying every inequality.
  bool cover_is_valid(FiberProfile const& p, FiberProfile const& q, IndexedCover const& cover);

  // Given a cover of q by p and a cover of r by q (no rest parts), the cover
  // of r by p with blocks P_y = ∪_{w ∈ first[y]} second[w].
  IndexedCover compose_covers(IndexedCover const& first, IndexedCover const& second);

  // |{ y : p[y] < ambient }|, ω when the rest part contributes.
  ExtNat n_value(FiberProfile const& p, ExtNat ambient);

  // Fiber sizes of f restricted to Y, indexed by sorted Y.  Throws
  // DomainError unless f ∈ Ω̄(X,Y).
  FiberProfile profile_of(Context const& ctx, Transformation const& f);

}  // namespace invsemi
