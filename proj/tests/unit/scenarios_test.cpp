#include <catch_amalgamated.hpp>

#include "freecomm/documents.hpp"
#include "freecomm/error.hpp"
#include "freecomm/scenarios.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace freecomm;
using namespace freecomm::testing;

namespace {

ScenarioCheck const& find_check(ScenarioReport const& r, std::string const& name) {
  for (auto const& c : r.checks) {
    if (c.name == name) return c;
  }
  FAIL("no check named " << name);
  return r.checks.front();
}

}  // namespace

TEST_CASE("kernel swap grid") {
  for (std::size_t n : {2, 3}) {
    for (std::int64_t p : {2, 3, 5, 7}) {
      auto const r = kernel_swap(n, p);
      INFO(r.to_document());
      CHECK(r.passed());
      CHECK_NOTHROW(validate_report_document(r.to_document()));
    }
  }
  auto const r = kernel_swap(3, 5);
  CHECK(find_check(r, "rank of H").actual == "11");
  auto const r23 = kernel_swap(2, 3);
  CHECK(find_check(r23, "root-free word").actual == "b");
  CHECK(find_check(r23, "missing root degree").actual == "3");
  CHECK_THROWS(kernel_swap(1, 3));
  CHECK_THROWS(kernel_swap(2, 1));
}

TEST_CASE("free product twist") {
  for (std::size_t n : {2, 3, 4}) {
    for (std::int64_t p : {2, 3, 5}) {
      auto const r = free_product_twist(n, p);
      INFO(r.to_document());
      CHECK(r.passed());
      CHECK_NOTHROW(validate_report_document(r.to_document()));
    }
  }
  auto const r = free_product_twist(3, 3);
  // rank(H) = 7, one basis element in A, two in B
  CHECK(find_check(r, "|A-part|").actual == "1");
  CHECK(find_check(r, "|B-part|").actual == "2");
  CHECK(find_check(r, "|C| = rank(H) - |A-part| - |B-part|").actual == "4");
  CHECK(free_product_twist(3, 2, parse_word("bcB")).passed());
  CHECK_THROWS(free_product_twist(2, 3, parse_word("ab")));
  CHECK_THROWS(free_product_twist(2, 3, Word{}));
}

TEST_CASE("Baumslag-Solitar arithmetic") {
  BigInt const k = 2;
  auto const a = BSElement::a(k);
  auto const t = BSElement::t(k);
  CHECK(bs_mul(bs_mul(t, a), bs_inv(t)) == BSElement(k, 2, 0, 0));
  CHECK(bs_psi(a, 3) == BSElement(k, 3, 0, 0));
  // t^-1 a t = 1/2
  auto const half = bs_mul(bs_mul(bs_inv(t), a), t);
  CHECK(half == BSElement(k, 1, 1, 0));
  CHECK(bs_pow(half, 2) == a);
  // normalization: 4 / 2^2 == 1
  CHECK(BSElement(k, 4, 2, 5) == BSElement(k, 1, 0, 5));
  CHECK(BSElement(-2, 4, 1, 0) == BSElement(-2, -2, 0, 0));
  CHECK_THROWS(BSElement(1, 0, 0, 0));
  CHECK_THROWS(bs_mul(a, BSElement::a(3)));
  CHECK(bs_image_index(2, 5) == 5);
  CHECK_THROWS(bs_image_index(2, 4));
}

TEST_CASE("Baumslag-Solitar group laws on random elements") {
  Rng rng(43);
  for (std::int64_t kk : {2, -2, 3, 6}) {
    BigInt const k = kk;
    auto random_element = [&] {
      auto e = BSElement::identity(k);
      for (int i = 0; i < 10; ++i) {
        switch (rng() % 4) {
          case 0: e = bs_mul(e, BSElement::a(k)); break;
          case 1: e = bs_mul(e, bs_inv(BSElement::a(k))); break;
          case 2: e = bs_mul(e, BSElement::t(k)); break;
          default: e = bs_mul(e, bs_inv(BSElement::t(k))); break;
        }
      }
      return e;
    };
    for (int i = 0; i < 100; ++i) {
      auto const x = random_element();
      auto const y = random_element();
      auto const z = random_element();
      CHECK(bs_mul(bs_mul(x, y), z) == bs_mul(x, bs_mul(y, z)));
      CHECK(bs_mul(x, bs_inv(x)) == BSElement::identity(k));
      CHECK(bs_mul(bs_inv(x), x) == BSElement::identity(k));
      CHECK(bs_psi(bs_mul(x, y), 5) == bs_mul(bs_psi(x, 5), bs_psi(y, 5)));
    }
  }
}

TEST_CASE("Baumslag-Solitar index against a coset walk") {
  for (auto [k, p] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {2, 3}, {2, 5}, {3, 5}, {6, 7}, {-2, 3}, {5, 11}}) {
    CHECK(bs_image_index(k, p) ==
          static_cast<std::int64_t>(bs_cosets_by_walk(k, p, 20000, 1)));
    CHECK(bs_group(k, p).passed());
  }
  CHECK_THROWS(bs_group(1, 3));
  CHECK_THROWS(bs_group(6, 3));
}

TEST_CASE("HNN obstruction matches direct evaluation") {
  for (std::int64_t n = 3; n <= 8; ++n) {
    for (std::int64_t bound : {1, 5, 30}) {
      auto const fast = hnn_obstruction(n, bound);
      auto const slow = hnn_bruteforce(n, bound);
      CHECK(std::set<std::pair<std::int64_t, std::int64_t>>(
                fast.begin(), fast.end()) == slow);
      CHECK(std::is_sorted(fast.begin(), fast.end()));
    }
  }
}

TEST_CASE("HNN obstruction values") {
  using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;
  Pairs const expected{{-1, 1}, {1, -1}};
  for (std::int64_t n : {3, 5, 7}) CHECK(hnn_obstruction(n, 20) == expected);
  // For even n the sum at (1,-1) telescopes to 0, so nothing survives.
  for (std::int64_t n : {4, 6, 8}) CHECK(hnn_obstruction(n, 50).empty());
  // symmetry under (l, r) -> (-l, -r) for odd n
  for (std::int64_t n : {3, 5}) {
    auto const s = hnn_obstruction(n, 15);
    for (auto [l, r] : s) {
      CHECK(std::find(s.begin(), s.end(), std::pair{-l, -r}) != s.end());
    }
  }
  CHECK(hnn_report(3, 20).passed());
  CHECK(hnn_report(4, 20).passed());
  CHECK_THROWS(hnn_obstruction(2, 10));
}
