#include <catch_amalgamated.hpp>

#include "freecomm/error.hpp"
#include "freecomm/lattice.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace freecomm;
using namespace freecomm::testing;

TEST_CASE("subindex examples") {
  CHECK(subindex(Subgroup(2)) == 1);
  for (std::int64_t p : {2, 3, 5, 7}) {
    std::vector<std::int64_t> const wts{1, 0};
    CHECK(subindex(kernel_mod_p(2, wts, p)) == static_cast<std::size_t>(p));
  }
  std::vector<std::int64_t> const wts{1, 0};
  auto const h4 = kernel_mod_p(2, wts, 4);
  CHECK(subindex(h4) == 2);
  auto const og = overgroups(h4);
  CHECK(og.size() == 3);
  CHECK(og.front() == h4);
  CHECK(og.back() == Subgroup(2));
  CHECK(std::find(og.begin(), og.end(), kernel_mod_p(2, wts, 2)) != og.end());
  CHECK_THROWS_AS(subindex(Subgroup::from_generators(2, std::vector<Word>{
                      parse_word("aa")})),
                  InfiniteIndex);
}

TEST_CASE("overgroups match block systems of the coset action") {
  Rng rng(17);
  for (int i = 0; i < 120; ++i) {
    auto const h = random_cover(rng, i % 2 ? 3 : 2, 1, 10);
    auto const og = overgroups(h);
    auto const blocks = blocks_by_subsets(h);
    REQUIRE(og.size() == blocks.size());
    CHECK(blocks_by_closure(h) == blocks);
    // each overgroup's index matches a block size
    std::multiset<std::size_t> a;
    std::multiset<std::size_t> b;
    for (auto const& k : og) {
      CHECK(is_subgroup_of(h, k));
      a.insert(h.finite_index() / k.finite_index());
    }
    for (auto const& bl : blocks) b.insert(bl.size());
    CHECK(a == b);
    for (std::size_t j = 1; j < og.size(); ++j) {
      CHECK(og[j - 1].finite_index() >= og[j].finite_index());
    }
    CHECK(subindex(h) == block_subindex(blocks));
  }
}

TEST_CASE("subindex monotone bound") {
  Rng rng(19);
  for (int i = 0; i < 60; ++i) {
    auto const h = random_cover(rng, 2, 1, 5);
    auto const f = intersect(h, random_cover(rng, 2, 1, 4));
    CHECK(subindex(f) <= std::max(subindex(h), subindex_in(f, h)));
    CHECK(subindex_in(h, h) == 1);
  }
}
