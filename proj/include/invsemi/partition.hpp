#pragma once

#include <cstddef>
#include <vector>

#include "invsemi/point_set.hpp"
#include "invsemi/transformation.hpp"

namespace invsemi {

  // A collection of pairwise-disjoint blocks, canonically ordered by least
  // element.
  using BlockCollection = std::vector<PointSet>;

  // The partition π(f) of X into the fibers x f^-1, x ∈ Xf.
  class KernelPartition {
   public:
    explicit KernelPartition(Transformation const& f);

    BlockCollection const& blocks() const noexcept { return blocks_; }

    // The image point of each block, aligned with blocks().
    std::vector<std::size_t> const& image_points() const noexcept { return image_points_; }

    // π_f(A) = { x f^-1 : x ∈ Xf ∩ A }
    BlockCollection over(PointSet a) const;

    std::size_t size() const noexcept { return blocks_.size(); }

   private:
    BlockCollection          blocks_;
    std::vector<std::size_t> image_points_;
  };

  KernelPartition kernel_partition(Transformation const& f);

  // π_f(A)
  BlockCollection restricted_blocks(Transformation const& f, PointSet a);

  // Every block of a lies inside some block of b.
  bool refines(BlockCollection const& a, BlockCollection const& b);

  // Mutual refinement.
  bool same_blocks(BlockCollection const& a, BlockCollection const& b);

  // Every transversal of ker(f) containing required, in lexicographic order.
  // Empty when some block holds two required points.
  std::vector<PointSet> transversals(Transformation const& f, PointSet required = {});

}  // namespace invsemi
