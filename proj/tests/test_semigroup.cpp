#include <doctest.h>

#include <string>

#include "brute.hpp"
#include "invsemi/eggbox.hpp"
#include "invsemi/enumeration.hpp"
#include "invsemi/errors.hpp"
#include "invsemi/green.hpp"
#include "invsemi/oracle.hpp"

using namespace invsemi;

namespace {

  Context const kCtx(3, {0, 1});
  Transformation const f010{0, 1, 0};
  Transformation const f100{1, 0, 0};
  Transformation const f101{1, 0, 1};
  Transformation const f012{0, 1, 2};

  // Least h in Ω̄ (lexicographic) with f = hg, by scanning.
  std::optional<brute::Map> least_left_factor(Context const& ctx, brute::Map const& f, brute::Map const& g) {
    for (auto const& h : brute::omegabar(ctx)) {
      if (brute::compose(h, g) == f) {
        return h;
      }
    }
    return std::nullopt;
  }

  std::optional<brute::Map> least_right_factor(Context const& ctx, brute::Map const& f, brute::Map const& g) {
    for (auto const& h : brute::omegabar(ctx)) {
      if (brute::compose(g, h) == f) {
        return h;
      }
    }
    return std::nullopt;
  }

}  // namespace

TEST_CASE("Green's relations on small examples") {
  CHECK(l_related(kCtx, f010, f100));
  CHECK(r_related(kCtx, f010, f101));
  CHECK(!d_related(kCtx, f012, f010));
  CHECK(!j_related(kCtx, f012, f010));
  CHECK(h_related(kCtx, f010, f010));
  for (Relation rel : kAllRelations) {
    CHECK(related(kCtx, rel, f010, f010));
  }
  CHECK_THROWS_AS(l_related(kCtx, Transformation{0, 0, 2}, f010), DomainError);
  CHECK(parse_relation("J") == Relation::J);
  CHECK_THROWS_AS(parse_relation("Q"), ParseError);
}

TEST_CASE("left witnesses are the lexicographically least factor") {
  auto const h = l_below_witness(kCtx, f010, f100);
  REQUIRE(h);
  // Scanning all of Ω̄ finds [1 0 1] first.
  CHECK(*h == Transformation{1, 0, 1});
  CHECK(brute::of(*h) == *least_left_factor(kCtx, brute::of(f010), brute::of(f100)));
  CHECK(*h * f100 == f010);
  CHECK(l_below_witness(kCtx, f010, f010) == Transformation{0, 1, 0});
  CHECK(!l_below_witness(kCtx, f012, f010));
}

TEST_CASE("right witnesses") {
  auto const h = r_below_witness(kCtx, f010, f101);
  REQUIRE(h);
  CHECK(f101 * *h == f010);
  CHECK(brute::of(*h) == *least_right_factor(kCtx, brute::of(f010), brute::of(f101)));
  CHECK((*h)[0] == 1);
  CHECK((*h)[1] == 0);
  CHECK(r_below_witness(kCtx, f012, f012) == Transformation::identity(3));
  auto const unit_side = r_below_witness(kCtx, f010, f012);
  REQUIRE(unit_side);
  CHECK(f012 * *unit_side == f010);
}

TEST_CASE("two-sided witnesses") {
  auto const w = j_below_witness(kCtx, f010, f100);
  REQUIRE(w);
  CHECK(w->first * f100 * w->second == f010);
  auto const same = j_below_witness(kCtx, f012, f012);
  REQUIRE(same);
  CHECK(same->first * f012 * same->second == f012);
  CHECK(!j_below_witness(kCtx, f012, f010));
}

TEST_CASE("witnesses agree with brute-force divisibility at n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Context const ctx(n, PointSet::from_bits(mask));
      auto const    s = brute::omegabar(ctx);
      for (auto const& a : s) {
        for (auto const& b : s) {
          Transformation const f = brute::to(a), g = brute::to(b);
          auto const           l = l_below_witness(ctx, f, g);
          CHECK(l.has_value() == brute::left_divides(s, a, b));
          if (l) {
            CHECK(brute::of(*l) == *least_left_factor(ctx, a, b));
          }
          auto const r = r_below_witness(ctx, f, g);
          CHECK(r.has_value() == brute::right_divides(s, a, b));
          if (r) {
            CHECK(brute::compose(b, brute::of(*r)) == a);
          }
          auto const j = j_below_witness(ctx, f, g);
          CHECK(j.has_value() == brute::two_sided_divides(s, a, b));
          if (j) {
            CHECK(brute::compose(brute::compose(brute::of(j->first), b), brute::of(j->second)) == a);
          }
        }
      }
    }
  }
}

TEST_CASE("characterizations and both oracles agree at n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Context const     ctx(n, PointSet::from_bits(mask));
      GreenOracle const oracle(ctx);
      auto const        s = brute::omegabar(ctx);
      REQUIRE(oracle.size() == s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
          bool const l = brute::left_divides(s, s[i], s[j]) && brute::left_divides(s, s[j], s[i]);
          bool const r = brute::right_divides(s, s[i], s[j]) && brute::right_divides(s, s[j], s[i]);
          bool const jj = brute::two_sided_divides(s, s[i], s[j]) && brute::two_sided_divides(s, s[j], s[i]);
          bool       d  = false;
          for (auto const& k : s) {
            d = d
                || (brute::left_divides(s, s[i], k) && brute::left_divides(s, k, s[i])
                    && brute::right_divides(s, k, s[j]) && brute::right_divides(s, s[j], k));
          }
          Transformation const f = brute::to(s[i]), g = brute::to(s[j]);
          CHECK(l_related(ctx, f, g) == l);
          CHECK(r_related(ctx, f, g) == r);
          CHECK(h_related(ctx, f, g) == (l && r));
          CHECK(d_related(ctx, f, g) == d);
          CHECK(j_related(ctx, f, g) == jj);
          CHECK(oracle.related(Relation::L, i, j) == l);
          CHECK(oracle.related(Relation::R, i, j) == r);
          CHECK(oracle.related(Relation::D, i, j) == d);
          CHECK(oracle.related(Relation::J, i, j) == jj);
        }
      }
    }
  }
}

TEST_CASE("the oracle enforces its budget") {
  CHECK_THROWS_AS(GreenOracle(Context(6, {0})), ResourceError);
}

TEST_CASE("egg-box at n = 3, Y = {0,1}") {
  EggBox const box = eggbox(kCtx);
  REQUIRE(box.d_classes.size() == 2);
  DClassGrid const& top = box.d_classes[0];
  CHECK(top.outside_rank == 1);
  CHECK(top.rows() == 1);
  CHECK(top.columns() == 1);
  CHECK(top.cells[0][0].members == std::vector<Transformation>{f012, Transformation{1, 0, 2}});
  CHECK(top.cells[0][0].has_idempotent);
  DClassGrid const& bottom = box.d_classes[1];
  CHECK(bottom.outside_rank == 0);
  CHECK(bottom.rows() == 2);
  CHECK(bottom.columns() == 1);
  CHECK(bottom.cells[0][0].members.size() == 2);
  CHECK(bottom.cells[1][0].members.size() == 2);
  CHECK(box.j_order == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  CHECK(box.hasse() == box.j_order);

  std::string const dot = render_dot(box);
  std::size_t       clusters = 0;
  for (std::size_t at = dot.find("subgraph cluster_"); at != std::string::npos;
       at = dot.find("subgraph cluster_", at + 1)) {
    ++clusters;
  }
  CHECK(clusters == 2);
  CHECK(dot.find("label=\"2*\"") != std::string::npos);

  nlohmann::json const j = render_json(box);
  CHECK(j["d_classes"].size() == 2);
  CHECK(j["d_classes"][1]["cells"].size() == 2);
  CHECK(render_text(box).find("D0 |Xf\\Y|=1 size=2 rows=1 cols=1") != std::string::npos);
}

TEST_CASE("egg-box degenerate cases") {
  EggBox const one = eggbox(Context(1, {0}));
  REQUIRE(one.d_classes.size() == 1);
  CHECK(one.d_classes[0].rows() == 1);
  CHECK(one.d_classes[0].columns() == 1);

  EggBox const group = eggbox(Context(2, {0, 1}));
  REQUIRE(group.d_classes.size() == 1);
  CHECK(group.d_classes[0].rows() == 1);
  CHECK(group.d_classes[0].columns() == 1);
  CHECK(group.d_classes[0].cells[0][0].members.size() == 2);
  CHECK(group.j_order.empty());
}

TEST_CASE("egg-box cells are H-classes and idempotent cells are groups") {
  Context const     ctx(4, {0, 1});
  EggBox const      box = eggbox(ctx);
  GreenOracle const oracle(ctx);
  std::size_t       total = 0;
  for (DClassGrid const& grid : box.d_classes) {
    for (auto const& row : grid.cells) {
      for (EggCell const& cell : row) {
        total += cell.members.size();
        for (auto const& f : cell.members) {
          CHECK(oracle.related(Relation::H, f, cell.members.front()));
          if (cell.has_idempotent) {
            for (auto const& g : cell.members) {
              CHECK(std::binary_search(cell.members.begin(), cell.members.end(), f * g));
            }
          }
        }
      }
    }
  }
  CHECK(total == oracle.size());
}
