#include "invsemi/green.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "invsemi/errors.hpp"
#include "invsemi/extnat.hpp"
#include "invsemi/partition.hpp"

namespace invsemi {

  std::string_view to_string(Relation rel) noexcept {
    switch (rel) {
      case Relation::L:
        return "L";
      case Relation::R:
        return "R";
      case Relation::H:
        return "H";
      case Relation::D:
        return "D";
      case Relation::J:
        return "J";
    }
    return "?";
  }

  Relation parse_relation(std::string_view name) {
    for (Relation rel : kAllRelations) {
      if (name == to_string(rel)) {
        return rel;
      }
    }
    throw ParseError("unknown relation '" + std::string(name) + "' (expected L, R, H, D or J)");
  }

  namespace {

    void require_pair(Context const&        ctx,
                      Transformation const& f,
                      Transformation const& g,
                      std::string_view      what) {
      require_omegabar(ctx, f, what);
      require_omegabar(ctx, g, what);
    }

    void verified(bool ok, char const* what) {
      if (!ok) {
        throw std::logic_error(std::string(what) + ": constructed witness failed re-verification");
      }
    }

    // Least x with xg = target, if any.
    std::optional<std::size_t> least_preimage(Transformation const& g, std::size_t target) {
      for (std::size_t x = 0; x < g.degree(); ++x) {
        if (g[x] == target) {
          return x;
        }
      }
      return std::nullopt;
    }

    // Lexicographically least surjection γ of {0..k-1} with γ(i) ∈ choices[i].
    struct SurjectionSearch {
      std::vector<PointSet> const& choices;
      std::size_t                  k;
      std::vector<std::size_t>     gamma;

      bool run(std::size_t i, PointSet covered) {
        if (PointSet::range(k) - covered != PointSet{}
            && (PointSet::range(k) - covered).size() > k - i) {
          return false;
        }
        if (i == k) {
          return true;
        }
        for (std::size_t c : choices[i]) {
          gamma[i]       = c;
          PointSet next  = covered;
          next.insert(c);
          if (run(i + 1, next)) {
            return true;
          }
        }
        return false;
      }
    };

  }  // namespace

  bool l_related(Context const& ctx, Transformation const& f, Transformation const& g) {
    require_pair(ctx, f, g, "l_related");
    return f.image() == g.image() && profile_of(ctx, f) == profile_of(ctx, g);
  }

  bool r_related(Context const& ctx, Transformation const& f, Transformation const& g) {
    require_pair(ctx, f, g, "r_related");
    KernelPartition const kf(f);
    KernelPartition const kg(g);
    return same_blocks(kf.blocks(), kg.blocks()) && same_blocks(kf.over(ctx.y()), kg.over(ctx.y()));
  }

  bool h_related(Context const& ctx, Transformation const& f, Transformation const& g) {
    return l_related(ctx, f, g) && r_related(ctx, f, g);
  }

  bool d_related(Context const& ctx, Transformation const& f, Transformation const& g) {
    require_pair(ctx, f, g, "d_related");
    return outside_y_rank(ctx, f) == outside_y_rank(ctx, g)
           && d_condition(profile_of(ctx, f), profile_of(ctx, g)).has_value();
  }

  bool j_related(Context const& ctx, Transformation const& f, Transformation const& g) {
    require_pair(ctx, f, g, "j_related");
    if (outside_y_rank(ctx, f) != outside_y_rank(ctx, g)) {
      return false;
    }
    FiberProfile const pf = profile_of(ctx, f);
    FiberProfile const pg = profile_of(ctx, g);
    return j_condition(pf, pg).has_value() && j_condition(pg, pf).has_value();
  }

  bool related(Context const& ctx, Relation rel, Transformation const& f, Transformation const& g) {
    switch (rel) {
      case Relation::L:
        return l_related(ctx, f, g);
      case Relation::R:
        return r_related(ctx, f, g);
      case Relation::H:
        return h_related(ctx, f, g);
      case Relation::D:
        return d_related(ctx, f, g);
      case Relation::J:
        return j_related(ctx, f, g);
    }
    return false;
  }

  std::optional<Transformation> l_below_witness(Context const&        ctx,
                                                Transformation const& f,
                                                Transformation const& g) {
    require_pair(ctx, f, g, "l_below_witness");
    if (!f.image().subset_of(g.image())) {
      return std::nullopt;
    }
    FiberProfile const pf = profile_of(ctx, f);
    FiberProfile const pg = profile_of(ctx, g);
    for (std::size_t i = 0; i < pf.sizes.size(); ++i) {
      if (pf.sizes[i] < pg.sizes[i]) {
        return std::nullopt;
      }
    }
    // γ on Y with f|Y = γ g|Y; positions in Y throughout.
    std::vector<std::size_t> const& ys = ctx.y_points();
    std::size_t const               k  = ys.size();
    std::vector<PointSet>           choices(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (g[ys[j]] == f[ys[i]]) {
          choices[i].insert(j);
        }
      }
    }
    SurjectionSearch search{choices, k, std::vector<std::size_t>(k, 0)};
    if (!search.run(0, PointSet{})) {
      throw std::logic_error("l_below_witness: no surjection γ although the fiber condition holds");
    }
    std::vector<std::size_t> h(ctx.degree(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      h[ys[i]] = ys[search.gamma[i]];
    }
    for (std::size_t x : ctx.outside_y()) {
      h[x] = *least_preimage(g, f[x]);
    }
    Transformation const witness(h);
    verified(compose(witness, g) == f && classify(ctx, witness).in_omegabar, "l_below_witness");
    return witness;
  }

  std::optional<Transformation> r_below_witness(Context const&        ctx,
                                                Transformation const& f,
                                                Transformation const& g) {
    require_pair(ctx, f, g, "r_below_witness");
    KernelPartition const kf(f);
    KernelPartition const kg(g);
    if (!refines(kg.blocks(), kf.blocks()) || !refines(kg.over(ctx.y()), kf.over(ctx.y()))) {
      return std::nullopt;
    }
    // Each g-image point goes to the f-image of its g-fiber; points outside
    // Xg (never in Y, since Y = Yg) go to 0.
    std::vector<std::size_t> h(ctx.degree(), 0);
    for (std::size_t i = 0; i < kg.size(); ++i) {
      h[kg.image_points()[i]] = f[kg.blocks()[i].min()];
    }
    Transformation const witness(h);
    verified(compose(g, witness) == f && classify(ctx, witness).in_omegabar, "r_below_witness");
    return witness;
  }

  std::optional<std::pair<Transformation, Transformation>>
  j_below_witness(Context const& ctx, Transformation const& f, Transformation const& g) {
    require_pair(ctx, f, g, "j_below_witness");
    PointSet const a_set = f.image() - ctx.y();
    PointSet const b_set = g.image() - ctx.y();
    if (a_set.size() > b_set.size()) {
      return std::nullopt;
    }
    FiberProfile const                pf    = profile_of(ctx, f);
    FiberProfile const                pg    = profile_of(ctx, g);
    std::optional<IndexedCover> const cover = j_condition(pf, pg);
    if (!cover) {
      return std::nullopt;
    }

    std::vector<std::size_t> const& ys = ctx.y_points();
    std::size_t const               k  = ys.size();

    // δ on Y: every w ∈ P_y goes to y.  At finite n both profiles are all
    // ones of the same length, so every block is nonempty and δ is onto.
    std::vector<std::size_t> delta(k, 0);
    for (std::size_t y = 0; y < k; ++y) {
      if (cover->blocks[y].empty()) {
        throw std::logic_error("j_below_witness: empty cover block for a finite profile");
      }
      for (std::size_t w : cover->blocks[y]) {
        delta[w] = y;
      }
    }
    // β on Y: maps the f|Y-fiber over y onto (P_y)(g|Y)^-1, so that
    // f|Y = β g|Y δ.
    std::vector<std::size_t> beta(k, 0);
    for (std::size_t y = 0; y < k; ++y) {
      std::vector<std::size_t> source;
      std::vector<std::size_t> target;
      for (std::size_t x = 0; x < k; ++x) {
        if (ctx.position_in_y(f[ys[x]]) == y) {
          source.push_back(x);
        }
        if (delta[ctx.position_in_y(g[ys[x]])] == y) {
          target.push_back(x);
        }
      }
      if (source.size() < target.size() || target.empty()) {
        throw std::logic_error("j_below_witness: fiber inequality violated");
      }
      for (std::size_t i = 0; i < source.size(); ++i) {
        beta[source[i]] = target[std::min(i, target.size() - 1)];
      }
    }

    // Off Y: an injection ι of Xf \ Y into Xg \ Y (order preserving), each
    // ι(a) reached through its least g-preimage and sent back to a by h'.
    std::vector<std::size_t> const a_points = a_set.to_vector();
    std::vector<std::size_t> const b_points = b_set.to_vector();

    std::vector<std::size_t> h(ctx.degree(), 0);
    std::vector<std::size_t> h_prime(ctx.degree(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      h[ys[i]]       = ys[beta[i]];
      h_prime[ys[i]] = ys[delta[i]];
    }
    for (std::size_t i = 0; i < a_points.size(); ++i) {
      h_prime[b_points[i]] = a_points[i];
    }
    for (std::size_t x : ctx.outside_y()) {
      std::size_t const target = f[x];
      if (ctx.y().contains(target)) {
        std::size_t const x_prime = (f.preimage(target) & ctx.y()).min();
        h[x]                      = ys[beta[ctx.position_in_y(x_prime)]];
      } else {
        std::size_t i = 0;
        while (a_points[i] != target) {
          ++i;
        }
        h[x] = *least_preimage(g, b_points[i]);
      }
    }
    Transformation const left(h);
    Transformation const right(h_prime);
    verified(compose(compose(left, g), right) == f && classify(ctx, left).in_omegabar
                 && classify(ctx, right).in_omegabar,
             "j_below_witness");
    return std::make_pair(left, right);
  }

}  // namespace invsemi
