#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "invsemi/context.hpp"
#include "invsemi/enumeration.hpp"
#include "invsemi/errors.hpp"
#include "invsemi/partition.hpp"
#include "invsemi/point_set.hpp"
#include "invsemi/transformation.hpp"

using namespace invsemi;

TEST_CASE("point sets") {
  PointSet const a{0, 2};
  CHECK(a.size() == 2);
  CHECK(a.contains(2));
  CHECK(!a.contains(1));
  CHECK(a.to_string() == "{0,2}");
  CHECK(PointSet::range(3) - a == PointSet{1});
  CHECK(a.subset_of(PointSet::range(3)));
  CHECK(a.min() == 0);
  // Lexicographic order of sorted sequences: {0,1} < {0,2} < {1} < {1,2}.
  CHECK(lex_less(PointSet{0, 1}, PointSet{0, 2}));
  CHECK(lex_less(PointSet{0, 2}, PointSet{1}));
  CHECK(lex_less(PointSet{1}, PointSet{1, 2}));
  CHECK(lex_less(PointSet{0}, PointSet{0, 1}));
  CHECK(!lex_less(PointSet{1}, PointSet{0, 2}));
  CHECK(!lex_less(a, a));
}

TEST_CASE("transformations parse, print and compose left to right") {
  Transformation const f = parse_transformation("[0 1 0]");
  CHECK(f.to_string() == "[0 1 0]");
  CHECK(parse_transformation("  [ 1   0 2 ] ") == Transformation{1, 0, 2});
  CHECK(f.degree() == 3);
  CHECK(f.image() == PointSet{0, 1});
  CHECK(f.preimage(0) == PointSet{0, 2});
  CHECK(f.is_idempotent());

  // x(fg) = (xf)g
  Transformation const swap01{1, 0, 2};
  Transformation const swap12{0, 2, 1};
  CHECK(compose(swap01, swap12) == Transformation{2, 0, 1});
  CHECK(swap01 * swap12 == Transformation{2, 0, 1});
  CHECK(compose(swap12, swap01) == Transformation{1, 2, 0});
  CHECK(swap01.inverse() == swap01);
  CHECK(Transformation::identity(3) == Transformation{0, 1, 2});

  CHECK_THROWS_AS(parse_transformation("[0 1"), ParseError);
  CHECK_THROWS_AS(parse_transformation("0 1 0"), ParseError);
  CHECK_THROWS_AS(parse_transformation("[0 x 0]"), ParseError);
  CHECK_THROWS_AS((Transformation{0, 3, 0}), DomainError);
  CHECK_THROWS_AS(compose(f, Transformation{0, 1}), DimensionError);
  CHECK_THROWS_AS(f.inverse(), DomainError);
}

TEST_CASE("transformations round-trip through JSON") {
  Transformation const f{2, 0, 1, 1};
  nlohmann::json const j = f;
  CHECK(j["n"] == 4);
  CHECK(j.get<Transformation>() == f);
}

TEST_CASE("contexts") {
  Context const ctx = Context::parse(3, "0,1");
  CHECK(ctx.degree() == 3);
  CHECK(ctx.y() == PointSet{0, 1});
  CHECK(ctx.outside_y() == PointSet{2});
  CHECK(ctx.y_string() == "0,1");
  CHECK(ctx.position_in_y(1) == 1);
  CHECK_THROWS_AS(Context::parse(3, "3"), ArgumentError);
  CHECK_THROWS_AS(Context::parse(3, "0,,1"), ParseError);
  CHECK_THROWS_AS(Context(3, PointSet{}), ArgumentError);
  CHECK_THROWS_AS(Context(0, PointSet{0}), ArgumentError);
}

TEST_CASE("classify against the family definitions") {
  Context const ctx(3, {0, 1});
  auto          flags = classify(ctx, Transformation{0, 1, 0});
  CHECK(flags.in_tbar);
  CHECK(flags.in_omegabar);
  CHECK(flags.in_sbar);
  CHECK(flags.in_fix);
  CHECK(!flags.is_unit_of_omegabar);

  flags = classify(ctx, Transformation{0, 0, 2});
  CHECK(flags.in_tbar);
  CHECK(!flags.in_omegabar);
  CHECK(!flags.in_sbar);

  flags = classify(ctx, Transformation{1, 0, 2});
  CHECK(flags.is_unit_of_omegabar);
  CHECK(!flags.in_fix);

  CHECK(!classify(ctx, Transformation{2, 1, 0}).in_tbar);
  CHECK(outside_y_rank(ctx, Transformation{0, 1, 2}) == 1);
  CHECK(restrict_to_y(ctx, Transformation{1, 0, 0}) == Transformation{1, 0});
  CHECK_THROWS_AS(restrict_to_y(ctx, Transformation{2, 1, 0}), DomainError);
  CHECK_THROWS_AS(classify(ctx, Transformation{0, 1}), DimensionError);
  CHECK_THROWS_AS(require_omegabar(ctx, Transformation{0, 0, 2}, "test"), DomainError);
}

TEST_CASE("kernel partitions and transversals") {
  Transformation const f{1, 0, 1};
  KernelPartition const kp(f);
  REQUIRE(kp.size() == 2);
  CHECK(kp.blocks()[0] == PointSet{0, 2});
  CHECK(kp.blocks()[1] == PointSet{1});
  // π_f({0,1}) lists the fibers over 0 and 1, in canonical order.
  BlockCollection const over = kp.over(PointSet{0, 1});
  REQUIRE(over.size() == 2);
  CHECK(over[0] == PointSet{0, 2});
  CHECK(over[1] == PointSet{1});
  CHECK(refines(KernelPartition(Transformation{0, 1, 2}).blocks(), kp.blocks()));
  CHECK(!refines(kp.blocks(), KernelPartition(Transformation{0, 1, 2}).blocks()));

  auto const ts = transversals(Transformation{0, 1, 0});
  REQUIRE(ts.size() == 2);
  CHECK(ts[0] == PointSet{0, 1});
  CHECK(ts[1] == PointSet{1, 2});
  CHECK(transversals(Transformation{0, 1, 0}, PointSet{0, 1}) == std::vector<PointSet>{PointSet{0, 1}});
  CHECK(transversals(Transformation{0, 1, 0}, PointSet{0, 2}).empty());
}

TEST_CASE("enumeration sizes and contents match a brute-force filter") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Context const     ctx(n, PointSet::from_bits(mask));
      Enumeration const e(ctx, Family::omegabar);
      auto const        want = brute::omegabar(ctx);
      REQUIRE(e.size() == want.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        CHECK(brute::of(e[i]) == want[i]);
      }
      for (auto const& f : want) {
        CHECK(e.contains(brute::to(f)));
      }
    }
  }
  CHECK(Enumeration(Context(3, {0, 1}), Family::omegabar).size() == 6);
  CHECK(Enumeration(Context(4, {0, 1}), Family::omegabar).size() == 32);
  Enumeration const fix(Context(2, {0, 1}), Family::fix);
  REQUIRE(fix.size() == 1);
  CHECK(fix[0] == Transformation::identity(2));
}

TEST_CASE("the enumeration budget is enforced") {
  CHECK_THROWS_AS(Enumeration(Context(4, {0}), Family::tbar, 3), ResourceError);
  CHECK_NOTHROW(Enumeration(Context(3, {0}), Family::tbar, 3));
  CHECK(enumeration_budget() >= 1);
}

TEST_CASE("units of Ω̄") {
  auto const u = units(Context(3, {0, 1}));
  CHECK(u == std::vector<Transformation>{Transformation{0, 1, 2}, Transformation{1, 0, 2}});
  CHECK(units(Context(1, {0})) == std::vector<Transformation>{Transformation{0}});
  CHECK(units(Context(3, {0, 1, 2})).size() == 6);
  // Every unit has its two-sided inverse inside Ω̄.
  Context const ctx(4, {0, 1});
  for (auto const& f : units(ctx)) {
    CHECK(classify(ctx, f.inverse()).in_omegabar);
    CHECK(f * f.inverse() == Transformation::identity(4));
  }
}

TEST_CASE("property: composition is associative on random triples") {
  std::mt19937 rng(2024);
  int          checked = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 2000; ++trial) {
      brute::Map a(n), b(n), c(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = rng() % n;
        b[i] = rng() % n;
        c[i] = rng() % n;
      }
      Transformation const f(a), g(b), h(c);
      CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
      CHECK(brute::of(compose(f, g)) == brute::compose(a, b));
      ++checked;
    }
  }
  CHECK(checked >= 10000);
}

TEST_CASE("property: the four families form a chain and are closed") {
  constexpr Family kAll[] = {Family::fix, Family::sbar, Family::omegabar, Family::tbar};
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Context const ctx(n, PointSet::from_bits(mask));
      for (std::size_t k = 0; k < 4; ++k) {
        Enumeration const e(ctx, kAll[k]);
        for (auto const& f : e.elements()) {
          for (std::size_t up = k; up < 4; ++up) {
            CHECK(is_member(ctx, kAll[up], f));
          }
          for (auto const& g : e.elements()) {
            CHECK(e.contains(f * g));
          }
        }
      }
    }
  }
}

TEST_CASE("property: on finite Y, f|Y injective iff surjective; |T_f| = |Xf|") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Context const ctx(n, PointSet::from_bits(mask));
      Enumeration const e(ctx, Family::tbar);
      for (auto const& f : e.elements()) {
        Transformation const r = restrict_to_y(ctx, f);
        CHECK(r.is_injective() == r.is_surjective());
        for (PointSet t : transversals(f)) {
          CHECK(t.size() == f.image().size());
          CHECK(f.image_of(t) == f.image());
        }
      }
    }
  }
}
