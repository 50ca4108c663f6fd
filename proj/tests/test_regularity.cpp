#include <doctest.h>

#include "brute.hpp"
#include "invsemi/enumeration.hpp"
#include "invsemi/errors.hpp"
#include "invsemi/regularity.hpp"

using namespace invsemi;

namespace {

  Context const        kCtx(3, {0, 1});
  Transformation const f010{0, 1, 0};

}  // namespace

TEST_CASE("pre-inverses of [0 1 0] in Ω̄") {
  auto const pre = pre_inverses(kCtx, f010, Family::omegabar);
  // g must fix 0 and 1 and send 0 back into {0,2}: g2 free, so 3 choices.
  CHECK(pre == std::vector<Transformation>{{0, 1, 0}, {0, 1, 1}, {0, 1, 2}});
  for (auto const& g : pre) {
    CHECK(f010 * g * f010 == f010);
  }
  CHECK_THROWS_AS(pre_inverses(kCtx, Transformation{0, 0, 2}, Family::omegabar), DomainError);
}

TEST_CASE("pre-inverses agree with a brute-force scan") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Context const ctx(n, PointSet::from_bits(mask));
      auto const    s = brute::omegabar(ctx);
      for (auto const& a : s) {
        std::vector<Transformation> want;
        for (auto const& b : s) {
          if (brute::compose(brute::compose(a, b), a) == a) {
            want.push_back(brute::to(b));
          }
        }
        CHECK(pre_inverses(ctx, brute::to(a), Family::omegabar) == want);
      }
    }
  }
}

TEST_CASE("regularity and its constructive witness") {
  CHECK(is_regular(kCtx, f010));
  CHECK(is_regular_oracle(kCtx, f010));
  Transformation const swap{1, 0, 0};
  auto const           g = constructive_pre_inverse(kCtx, swap);
  REQUIRE(g);
  CHECK(swap * *g * swap == swap);
  CHECK(classify(kCtx, *g).in_sbar);

  // A map folding Y is not in Ω̄ at all.
  CHECK_THROWS_AS(is_regular(kCtx, Transformation{0, 0, 2}), DomainError);
  CHECK(!constructive_pre_inverse(kCtx, Transformation{0, 0, 2}));
}

TEST_CASE("unit regularity of [0 1 0]") {
  RegularityReport const r = is_unit_regular(kCtx, f010);
  CHECK(r.is_regular);
  CHECK(r.is_unit_regular);
  CHECK(r.certifying_transversal == PointSet{0, 1});
  REQUIRE(r.witness_unit);
  CHECK(f010 * *r.witness_unit * f010 == f010);
  CHECK(r.oracle_unit_regular == true);
  CHECK(r.oracle_unit == Transformation{0, 1, 2});
  CHECK(unit_regular_oracle(kCtx, f010) == Transformation{0, 1, 2});
  CHECK_THROWS_AS(is_unit_regular(kCtx, Transformation{2, 1, 0}), DomainError);
}

TEST_CASE("every element is unit-regular at n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Context const ctx(n, PointSet::from_bits(mask));
      Enumeration const e(ctx, Family::omegabar);
      for (auto const& f : e.elements()) {
        RegularityReport const r = is_unit_regular(ctx, f);
        CHECK(r.is_unit_regular);
        CHECK(r.oracle_unit_regular == true);
        REQUIRE(r.certifying_transversal);
        CHECK(ctx.y().subset_of(*r.certifying_transversal));
        REQUIRE(r.witness_unit);
        CHECK(f * *r.witness_unit * f == f);
        CHECK(r.is_regular == classify(ctx, f).in_sbar);
      }
    }
  }
}
