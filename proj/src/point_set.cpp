#include "invsemi/point_set.hpp"

namespace invsemi {

  PointSet::PointSet(std::initializer_list<std::size_t> points) {
    for (std::size_t x : points) {
      insert(x);
    }
  }

  std::vector<std::size_t> PointSet::to_vector() const {
    return std::vector<std::size_t>(begin(), end());
  }

  std::string PointSet::to_string() const {
    std::string out = "{";
    bool        first = true;
    for (std::size_t x : *this) {
      if (!first) {
        out += ',';
      }
      out += std::to_string(x);
      first = false;
    }
    out += '}';
    return out;
  }

}  // namespace invsemi
