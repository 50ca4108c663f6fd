#pragma once

// Egg-box picture of Ω̄(X,Y): one grid per D-class, R-classes as rows,
// L-classes as columns and H-classes as cells.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "invsemi/context.hpp"
#include "invsemi/transformation.hpp"

namespace invsemi {

  struct EggCell {
    std::vector<Transformation> members;  // sorted; empty never happens inside a D-class
    bool                        has_idempotent = false;
  };

  struct DClassGrid {
    std::size_t                       outside_rank = 0;  // |Xf \ Y| on the class
    std::vector<std::vector<EggCell>> cells;             // cells[row][column]

    std::size_t rows() const noexcept { return cells.size(); }
    std::size_t columns() const noexcept { return cells.empty() ? 0 : cells.front().size(); }
    std::size_t size() const noexcept;
    Transformation const& representative() const { return cells.front().front().members.front(); }
  };

  struct EggBox {
    Context                 ctx;
    std::vector<DClassGrid> d_classes;  // descending |Xf \ Y|, then by least element
    // (upper, lower): the lower class lies strictly J-below the upper one.
    std::vector<std::pair<std::size_t, std::size_t>> j_order;

    // Covering pairs of j_order.
    std::vector<std::pair<std::size_t, std::size_t>> hasse() const;
  };

  // Throws ResourceError above the enumeration budget.
  EggBox eggbox(Context const& ctx);

  std::string    render_text(EggBox const& box);
  std::string    render_dot(EggBox const& box);
  nlohmann::json render_json(EggBox const& box);

}  // namespace invsemi
