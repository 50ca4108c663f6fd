#include <doctest.h>

#include "brute.hpp"
#include "invsemi/enumeration.hpp"
#include "invsemi/errors.hpp"
#include "invsemi/ideals.hpp"

using namespace invsemi;

namespace {

  // Independent down-set count: subsets of Ω̄ closed under h f h'.
  std::size_t brute_ideal_count(Context const& ctx) {
    auto const        s = brute::omegabar(ctx);
    std::size_t const m = s.size();
    std::size_t       count = 0;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      bool closed = true;
      for (std::size_t i = 0; closed && i < m; ++i) {
        if (!((mask >> i) & 1u)) {
          continue;
        }
        for (std::size_t j = 0; closed && j < m; ++j) {
          for (std::size_t k = 0; closed && k < m; ++k) {
            auto const  p   = brute::compose(brute::compose(s[j], s[i]), s[k]);
            std::size_t pos = std::lower_bound(s.begin(), s.end(), p) - s.begin();
            closed          = (mask >> pos) & 1u;
          }
        }
      }
      count += closed;
    }
    return count;
  }

}  // namespace

TEST_CASE("J(F) on a small example") {
  Context const              ctx(3, {0, 1});
  std::vector<Transformation> gens{{0, 1, 0}};
  IdealSet const             j = j_of_f(ctx, gens);
  CHECK(j.members.size() == 4);
  CHECK(j.threshold == 0u);
  for (auto const& f : j.members) {
    CHECK(f.image() == ctx.y());
  }
  CHECK(is_ideal(ctx, j.members));

  std::vector<Transformation> top{{0, 1, 2}};
  CHECK(j_of_f(ctx, top).members.size() == 6);

  CHECK_THROWS_AS(j_of_f(ctx, std::vector<Transformation>{}), ArgumentError);
  CHECK_THROWS_AS(j_of_f(ctx, std::vector<Transformation>{{0, 0, 2}}), DomainError);
}

TEST_CASE("is_ideal") {
  Context const ctx(3, {0, 1});
  CHECK(!is_ideal(ctx, std::vector<Transformation>{}));
  CHECK(!is_ideal(ctx, std::vector<Transformation>{{0, 1, 0}}));
  CHECK(!is_ideal(ctx, std::vector<Transformation>{{0, 0, 2}}));
  CHECK(is_ideal(ctx, Enumeration(ctx, Family::omegabar).elements()));
}

TEST_CASE("ideals form a chain whose length matches a brute-force count") {
  CHECK(ideals_all(Context(3, {0, 1})).size() == 2);
  auto const four = ideals_all(Context(4, {0, 1}));
  REQUIRE(four.size() == 3);
  CHECK(four[0].members.size() == 8);
  CHECK(four[1].members.size() == 28);
  CHECK(four[2].members.size() == 32);
  CHECK(ideals_all(Context(2, {0, 1})).size() == 1);

  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Context const ctx(n, PointSet::from_bits(mask));
      CHECK(ideals_all(ctx).size() == brute_ideal_count(ctx));
      CHECK(ideals_all(ctx).size() == n - ctx.y_size() + 1);
    }
  }
}

TEST_CASE("J(s,t)") {
  Context const   ctx(4, {0, 1});
  JstResult const top = j_st(ctx, ExtNat::omega(), ExtNat(2));
  CHECK(top.is_ideal);
  CHECK(!top.warning);
  CHECK(top.set.members.size() == 32);
  CHECK(j_st(ctx, ExtNat(2), ExtNat(1)).set.members.size() == 28);

  JstResult const empty = j_st(Context(3, {0, 1}), ExtNat(0), ExtNat(0));
  CHECK(empty.set.members.empty());
  CHECK(!empty.is_ideal);
  CHECK(empty.warning);

  CHECK_THROWS_AS(j_st(ctx, ExtNat(0), ExtNat(3)), ArgumentError);
  CHECK_THROWS_AS(j_st(ctx, ExtNat(0), ExtNat::omega()), ArgumentError);
}

TEST_CASE("the kernel is {f : Xf = Y}") {
  CHECK(kernel(Context(3, {0, 1})).members.size() == 4);
  // Only the constant map onto the single point of Y.
  IdealSet const k = kernel(Context(4, {0}));
  REQUIRE(k.members.size() == 1);
  CHECK(k.members[0] == Transformation{0, 0, 0, 0});
  CHECK(kernel(Context(2, {0, 1})).members.size() == 2);

  nlohmann::json const j = to_json(kernel(Context(3, {0, 1})));
  CHECK(j["size"] == 4);
  CHECK(j["t"] == 0);
}
