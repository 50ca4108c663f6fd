#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "invsemi/kernels.hpp"
#include "invsemi/point_set.hpp"

namespace invsemi {

  // A total self-map of X = {0, ..., n-1}, 1 <= n <= 16, stored as its image
  // sequence.  Maps compose left to right: x(fg) = (xf)g.
  class Transformation {
   public:
    static constexpr std::size_t kMaxDegree = kernels::kLanes;

    // The identity on a single point.
    Transformation() = default;

    // Throws ArgumentError if images is empty or longer than kMaxDegree and
    // DomainError if some image is out of range.
    explicit Transformation(std::span<std::size_t const> images);
    Transformation(std::initializer_list<std::size_t> images);

    static Transformation identity(std::size_t degree);

    // The caller guarantees that block holds a valid padded image sequence.
    static Transformation from_block(kernels::Block const& block, std::size_t degree) noexcept;

    std::size_t degree() const noexcept { return degree_; }

    std::size_t operator[](std::size_t x) const noexcept { return images_[x]; }
    std::size_t at(std::size_t x) const;

    std::span<std::uint8_t const> images() const noexcept {
      return {images_.bytes.data(), degree_};
    }

    kernels::Block const& block() const noexcept { return images_; }

    // Xf
    PointSet image() const noexcept;
    // Af
    PointSet image_of(PointSet a) const noexcept;
    // y f^-1
    PointSet preimage(std::size_t y) const noexcept;

    bool is_injective() const noexcept;
    bool is_surjective() const noexcept;
    bool is_idempotent() const noexcept;

    // Throws DomainError unless the map is a bijection.
    Transformation inverse() const;

    std::vector<std::size_t> to_vector() const;

    // "[1 0 0]"
    std::string to_string() const;

    bool operator==(Transformation const&) const = default;
    // Degree first, then the image sequence lexicographically.
    auto operator<=>(Transformation const&) const = default;

   private:
    std::uint8_t   degree_ = 1;
    kernels::Block images_ = kernels::identity_block();
  };

  // x(fg) = (xf)g.  Throws DimensionError on mismatched degrees.
  Transformation compose(Transformation const& f, Transformation const& g);

  inline Transformation operator*(Transformation const& f, Transformation const& g) {
    return compose(f, g);
  }

  // Parses "[i0 i1 ... i(n-1)]".  Throws ParseError on malformed text and
  // DomainError on an image outside [0, n).
  Transformation parse_transformation(std::string_view text);

  void to_json(nlohmann::json& j, Transformation const& f);
  void from_json(nlohmann::json const& j, Transformation& f);

  std::vector<std::string> to_strings(std::span<Transformation const> fs);

}  // namespace invsemi

template <>
struct std::hash<invsemi::Transformation> {
  std::size_t operator()(invsemi::Transformation const& f) const noexcept {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      lo |= std::uint64_t{f.block()[i]} << (8 * i);
      hi |= std::uint64_t{f.block()[i + 8]} << (8 * i);
    }
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9E3779B97F4A7C15ull) ^ f.degree());
  }
};
