#include "invsemi/partition.hpp"

#include <algorithm>
#include <array>

namespace invsemi {

  KernelPartition::KernelPartition(Transformation const& f) {
    std::array<PointSet, Transformation::kMaxDegree> fibers{};
    for (std::size_t x = 0; x < f.degree(); ++x) {
      fibers[f[x]].insert(x);
    }
    for (std::size_t y = 0; y < f.degree(); ++y) {
      if (!fibers[y].empty()) {
        blocks_.push_back(fibers[y]);
        image_points_.push_back(y);
      }
    }
    std::vector<std::size_t> order(blocks_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return blocks_[a].min() < blocks_[b].min();
    });
    BlockCollection          blocks;
    std::vector<std::size_t> points;
    for (std::size_t i : order) {
      blocks.push_back(blocks_[i]);
      points.push_back(image_points_[i]);
    }
    blocks_       = std::move(blocks);
    image_points_ = std::move(points);
  }

  BlockCollection KernelPartition::over(PointSet a) const {
    BlockCollection out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (a.contains(image_points_[i])) {
        out.push_back(blocks_[i]);
      }
    }
    return out;
  }

  KernelPartition kernel_partition(Transformation const& f) {
    return KernelPartition(f);
  }

  BlockCollection restricted_blocks(Transformation const& f, PointSet a) {
    return KernelPartition(f).over(a);
  }

  bool refines(BlockCollection const& a, BlockCollection const& b) {
    return std::all_of(a.begin(), a.end(), [&](PointSet block) {
      return std::any_of(b.begin(), b.end(), [&](PointSet big) { return block.subset_of(big); });
    });
  }

  bool same_blocks(BlockCollection const& a, BlockCollection const& b) {
    return refines(a, b) && refines(b, a);
  }

  namespace {
    void extend(std::vector<PointSet> const& choices,
                std::size_t                  i,
                PointSet                     partial,
                std::vector<PointSet>&       out) {
      if (i == choices.size()) {
        out.push_back(partial);
        return;
      }
      for (std::size_t x : choices[i]) {
        PointSet next = partial;
        next.insert(x);
        extend(choices, i + 1, next, out);
      }
    }
  }  // namespace

  std::vector<PointSet> transversals(Transformation const& f, PointSet required) {
    if (!required.subset_of(PointSet::range(f.degree()))) {
      return {};
    }
    KernelPartition const kp(f);
    std::vector<PointSet> choices;
    for (PointSet block : kp.blocks()) {
      PointSet const forced = block & required;
      if (forced.size() > 1) {
        return {};
      }
      choices.push_back(forced.empty() ? block : forced);
    }
    std::vector<PointSet> out;
    extend(choices, 0, PointSet{}, out);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }

}  // namespace invsemi
