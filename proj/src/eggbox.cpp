#include "invsemi/eggbox.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "invsemi/enumeration.hpp"
#include "invsemi/extnat.hpp"
#include "invsemi/green.hpp"
#include "invsemi/partition.hpp"

namespace invsemi {

  std::size_t DClassGrid::size() const noexcept {
    std::size_t total = 0;
    for (auto const& row : cells) {
      for (auto const& cell : row) {
        total += cell.members.size();
      }
    }
    return total;
  }

  std::vector<std::pair<std::size_t, std::size_t>> EggBox::hasse() const {
    auto below = [&](std::size_t a, std::size_t b) {
      return std::find(j_order.begin(), j_order.end(), std::make_pair(a, b)) != j_order.end();
    };
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto const& [a, b] : j_order) {
      bool covered = true;
      for (std::size_t c = 0; c < d_classes.size() && covered; ++c) {
        if (c != a && c != b && below(a, c) && below(c, b)) {
          covered = false;
        }
      }
      if (covered) {
        out.emplace_back(a, b);
      }
    }
    return out;
  }

  namespace {

    // Canonical forms of the L- and R-characterizations: (Xf, Y-fiber sizes)
    // and (π(f), π_f(Y)).
    std::vector<std::uint64_t> l_key(Context const& ctx, Transformation const& f) {
      std::vector<std::uint64_t> key{f.image().bits()};
      for (ExtNat s : profile_of(ctx, f).sizes) {
        key.push_back(s.value());
      }
      return key;
    }

    std::vector<std::uint64_t> r_key(Context const& ctx, Transformation const& f) {
      KernelPartition const      kp(f);
      std::vector<std::uint64_t> key;
      for (PointSet b : kp.blocks()) {
        key.push_back(b.bits());
      }
      key.push_back(~std::uint64_t{0});
      for (PointSet b : kp.over(ctx.y())) {
        key.push_back(b.bits());
      }
      return key;
    }

    template <typename Key>
    std::vector<std::size_t> number_by_key(std::vector<Transformation> const& members, Key&& key) {
      std::map<std::vector<std::uint64_t>, std::size_t> seen;
      std::vector<std::size_t>                          ids;
      for (auto const& f : members) {
        auto [it, inserted] = seen.emplace(key(f), seen.size());
        ids.push_back(it->second);
      }
      return ids;
    }

  }  // namespace

  EggBox eggbox(Context const& ctx) {
    Enumeration const semigroup(ctx, Family::omegabar);

    std::vector<std::vector<Transformation>> classes;
    for (Transformation const& f : semigroup.elements()) {
      auto it = std::find_if(classes.begin(), classes.end(), [&](auto const& c) {
        return d_related(ctx, c.front(), f);
      });
      if (it == classes.end()) {
        classes.push_back({f});
      } else {
        it->push_back(f);
      }
    }
    // Elements arrive sorted, so each class is sorted and starts with its
    // least element.
    std::stable_sort(classes.begin(), classes.end(), [&](auto const& a, auto const& b) {
      return outside_y_rank(ctx, a.front()) > outside_y_rank(ctx, b.front());
    });

    EggBox box{ctx, {}, {}};
    for (auto const& members : classes) {
      std::vector<std::size_t> const rows =
          number_by_key(members, [&](Transformation const& f) { return r_key(ctx, f); });
      std::vector<std::size_t> const cols =
          number_by_key(members, [&](Transformation const& f) { return l_key(ctx, f); });
      std::size_t const row_count = *std::max_element(rows.begin(), rows.end()) + 1;
      std::size_t const col_count = *std::max_element(cols.begin(), cols.end()) + 1;

      DClassGrid grid;
      grid.outside_rank = outside_y_rank(ctx, members.front());
      grid.cells.assign(row_count, std::vector<EggCell>(col_count));
      for (std::size_t i = 0; i < members.size(); ++i) {
        EggCell& cell = grid.cells[rows[i]][cols[i]];
        cell.members.push_back(members[i]);
        cell.has_idempotent = cell.has_idempotent || members[i].is_idempotent();
      }
      box.d_classes.push_back(std::move(grid));
    }

    for (std::size_t upper = 0; upper < box.d_classes.size(); ++upper) {
      for (std::size_t lower = 0; lower < box.d_classes.size(); ++lower) {
        if (upper != lower
            && j_below_witness(ctx, box.d_classes[lower].representative(),
                               box.d_classes[upper].representative())) {
          box.j_order.emplace_back(upper, lower);
        }
      }
    }
    return box;
  }

  std::string render_text(EggBox const& box) {
    std::ostringstream out;
    out << "n=" << box.ctx.degree() << " Y={" << box.ctx.y_string() << "} d_classes="
        << box.d_classes.size() << '\n';
    for (std::size_t d = 0; d < box.d_classes.size(); ++d) {
      DClassGrid const& grid = box.d_classes[d];
      out << "D" << d << " |Xf\\Y|=" << grid.outside_rank << " size=" << grid.size()
          << " rows=" << grid.rows() << " cols=" << grid.columns() << '\n';
      std::vector<std::vector<std::string>> text(grid.rows(), std::vector<std::string>(grid.columns()));
      std::vector<std::size_t>              width(grid.columns(), 0);
      for (std::size_t r = 0; r < grid.rows(); ++r) {
        for (std::size_t c = 0; c < grid.columns(); ++c) {
          EggCell const& cell = grid.cells[r][c];
          std::string    s    = cell.has_idempotent ? "*" : " ";
          for (std::size_t i = 0; i < cell.members.size(); ++i) {
            s += (i == 0 ? "" : ",") + cell.members[i].to_string();
          }
          width[c]   = std::max(width[c], s.size());
          text[r][c] = std::move(s);
        }
      }
      for (std::size_t r = 0; r < grid.rows(); ++r) {
        out << "  |";
        for (std::size_t c = 0; c < grid.columns(); ++c) {
          out << ' ' << text[r][c] << std::string(width[c] - text[r][c].size(), ' ') << " |";
        }
        out << '\n';
      }
    }
    for (auto const& [upper, lower] : box.hasse()) {
      out << "D" << upper << " > D" << lower << '\n';
    }
    return out.str();
  }

  std::string render_dot(EggBox const& box) {
    std::ostringstream out;
    out << "digraph eggbox {\n  compound=true;\n  node [shape=box];\n";
    for (std::size_t d = 0; d < box.d_classes.size(); ++d) {
      DClassGrid const& grid = box.d_classes[d];
      out << "  subgraph cluster_d" << d << " {\n    label=\"D" << d << " |Xf\\\\Y|="
          << grid.outside_rank << "\";\n";
      for (std::size_t r = 0; r < grid.rows(); ++r) {
        for (std::size_t c = 0; c < grid.columns(); ++c) {
          EggCell const& cell = grid.cells[r][c];
          out << "    d" << d << "_r" << r << "_c" << c << " [label=\"" << cell.members.size()
              << (cell.has_idempotent ? "*" : "") << "\"];\n";
        }
      }
      out << "  }\n";
    }
    for (auto const& [upper, lower] : box.hasse()) {
      out << "  d" << upper << "_r0_c0 -> d" << lower << "_r0_c0 [ltail=cluster_d" << upper
          << ", lhead=cluster_d" << lower << "];\n";
    }
    out << "}\n";
    return out.str();
  }

  nlohmann::json render_json(EggBox const& box) {
    nlohmann::json classes = nlohmann::json::array();
    for (DClassGrid const& grid : box.d_classes) {
      nlohmann::json rows = nlohmann::json::array();
      for (auto const& row : grid.cells) {
        nlohmann::json cells = nlohmann::json::array();
        for (EggCell const& cell : row) {
          cells.push_back({{"members", to_strings(cell.members)}, {"idempotent", cell.has_idempotent}});
        }
        rows.push_back(std::move(cells));
      }
      classes.push_back({{"outside_rank", grid.outside_rank}, {"size", grid.size()}, {"cells", std::move(rows)}});
    }
    nlohmann::json order = nlohmann::json::array();
    for (auto const& [upper, lower] : box.j_order) {
      order.push_back({upper, lower});
    }
    return {{"n", box.ctx.degree()},
            {"y", box.ctx.y().to_vector()},
            {"d_classes", std::move(classes)},
            {"j_order", std::move(order)}};
  }

}  // namespace invsemi
