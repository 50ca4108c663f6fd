#include "invsemi/transformation.hpp"

#include <cctype>
#include <charconv>

#include "invsemi/errors.hpp"

namespace invsemi {

  Transformation::Transformation(std::span<std::size_t const> images) {
    if (images.empty() || images.size() > kMaxDegree) {
      throw ArgumentError("transformation degree must be in [1, 16], got "
                          + std::to_string(images.size()));
    }
    degree_ = static_cast<std::uint8_t>(images.size());
    for (std::size_t x = 0; x < images.size(); ++x) {
      if (images[x] >= images.size()) {
        throw DomainError("image " + std::to_string(images[x]) + " of point " + std::to_string(x)
                          + " is outside [0, " + std::to_string(images.size()) + ")");
      }
      images_[x] = static_cast<std::uint8_t>(images[x]);
    }
  }

  Transformation::Transformation(std::initializer_list<std::size_t> images)
      : Transformation(std::span<std::size_t const>(images.begin(), images.size())) {}

  Transformation Transformation::identity(std::size_t degree) {
    if (degree == 0 || degree > kMaxDegree) {
      throw ArgumentError("transformation degree must be in [1, 16], got "
                          + std::to_string(degree));
    }
    Transformation t;
    t.degree_ = static_cast<std::uint8_t>(degree);
    return t;
  }

  Transformation Transformation::from_block(kernels::Block const& block,
                                            std::size_t           degree) noexcept {
    Transformation t;
    t.degree_ = static_cast<std::uint8_t>(degree);
    t.images_ = block;
    return t;
  }

  std::size_t Transformation::at(std::size_t x) const {
    if (x >= degree_) {
      throw DomainError("point " + std::to_string(x) + " is outside [0, "
                        + std::to_string(degree_) + ")");
    }
    return images_[x];
  }

  PointSet Transformation::image() const noexcept {
    return PointSet::from_bits(kernels::active().image_mask(images_, degree_));
  }

  PointSet Transformation::image_of(PointSet a) const noexcept {
    PointSet out;
    for (std::size_t x : a) {
      out.insert(images_[x]);
    }
    return out;
  }

  PointSet Transformation::preimage(std::size_t y) const noexcept {
    PointSet out;
    for (std::size_t x = 0; x < degree_; ++x) {
      if (images_[x] == y) {
        out.insert(x);
      }
    }
    return out;
  }

  bool Transformation::is_injective() const noexcept {
    return image().size() == degree_;
  }

  bool Transformation::is_surjective() const noexcept {
    return image().size() == degree_;
  }

  bool Transformation::is_idempotent() const noexcept {
    for (std::size_t x = 0; x < degree_; ++x) {
      if (images_[images_[x]] != images_[x]) {
        return false;
      }
    }
    return true;
  }

  Transformation Transformation::inverse() const {
    if (!is_injective()) {
      throw DomainError("transformation " + to_string() + " is not a bijection");
    }
    Transformation inv = *this;
    for (std::size_t x = 0; x < degree_; ++x) {
      inv.images_[images_[x]] = static_cast<std::uint8_t>(x);
    }
    return inv;
  }

  std::vector<std::size_t> Transformation::to_vector() const {
    return std::vector<std::size_t>(images().begin(), images().end());
  }

  std::string Transformation::to_string() const {
    std::string out = "[";
    for (std::size_t x = 0; x < degree_; ++x) {
      if (x != 0) {
        out += ' ';
      }
      out += std::to_string(images_[x]);
    }
    out += ']';
    return out;
  }

  Transformation compose(Transformation const& f, Transformation const& g) {
    if (f.degree() != g.degree()) {
      throw DimensionError("cannot compose maps of degree " + std::to_string(f.degree())
                           + " and " + std::to_string(g.degree()));
    }
    kernels::Block out;
    kernels::active().right_multiply(std::span(&f.block(), 1), g.block(), &out);
    return Transformation::from_block(out, f.degree());
  }

  Transformation parse_transformation(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    };
    std::string_view s = trim(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
      throw ParseError("expected a transformation of the form [i0 i1 ...], got '"
                       + std::string(text) + "'");
    }
    s = trim(s.substr(1, s.size() - 2));
    std::vector<std::size_t> images;
    while (!s.empty()) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr == s.data()) {
        throw ParseError("bad image in transformation '" + std::string(text) + "'");
      }
      images.push_back(value);
      s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
      if (!s.empty() && !std::isspace(static_cast<unsigned char>(s.front()))) {
        throw ParseError("bad separator in transformation '" + std::string(text) + "'");
      }
      s = trim(s);
    }
    if (images.empty()) {
      throw ParseError("empty transformation '" + std::string(text) + "'");
    }
    if (images.size() > Transformation::kMaxDegree) {
      throw ParseError("transformation '" + std::string(text) + "' has degree above 16");
    }
    return Transformation(images);
  }

  void to_json(nlohmann::json& j, Transformation const& f) {
    j = nlohmann::json{{"n", f.degree()}, {"images", f.to_vector()}};
  }

  void from_json(nlohmann::json const& j, Transformation& f) {
    auto const images = j.at("images").get<std::vector<std::size_t>>();
    if (j.at("n").get<std::size_t>() != images.size()) {
      throw DimensionError("JSON transformation: n does not match the number of images");
    }
    f = Transformation(images);
  }

  std::vector<std::string> to_strings(std::span<Transformation const> fs) {
    std::vector<std::string> out;
    out.reserve(fs.size());
    for (auto const& f : fs) {
      out.push_back(f.to_string());
    }
    return out;
  }

}  // namespace invsemi
