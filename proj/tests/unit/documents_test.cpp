#include <catch_amalgamated.hpp>

#include "freecomm/commensurator.hpp"
#include "freecomm/documents.hpp"
#include "freecomm/error.hpp"
#include "random.hpp"

using namespace freecomm;
using namespace freecomm::testing;

TEST_CASE("graph documents round trip") {
  Rng rng(47);
  for (int i = 0; i < 50; ++i) {
    auto const h = i % 3 == 0
                       ? Subgroup::from_generators(
                             2, std::vector<Word>{random_word(rng, 2, 6),
                                                  random_word(rng, 2, 6)})
                       : random_cover(rng, 2, 1, 9);
    auto const doc = to_document(h);
    CHECK(subgroup_from_document(doc) == h);
    CHECK(to_document(subgroup_from_document(doc)) == doc);
  }
}

TEST_CASE("iso documents round trip") {
  Rng rng(53);
  for (int i = 0; i < 30; ++i) {
    auto const f = random_iso(rng, 2, 5);
    auto const g = iso_from_document(to_document(f));
    CHECK(g.domain() == f.domain());
    CHECK(g.codomain() == f.codomain());
    CHECK(g.images() == f.images());
  }
}

TEST_CASE("documents are rendered identically every time") {
  std::vector<std::int64_t> const wts{1, 0};
  auto const h = kernel_mod_p(2, wts, 3);
  CHECK(to_document(h) ==
        R"({"rank":2,"basepoint":0,"edges":[[0,1,1],[0,0,2],[1,2,1],[1,1,2],[2,0,1],[2,2,2]]})");
}

TEST_CASE("graph documents are validated") {
  auto rejects = [](char const* doc, char const* needle) {
    try {
      (void)subgroup_from_document(doc);
    } catch (DocumentError const& e) {
      CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring(needle));
      return;
    }
    FAIL("accepted " << doc);
  };
  rejects("{", "malformed");
  rejects(R"({"basepoint":0,"edges":[]})", "rank");
  rejects(R"({"rank":0,"basepoint":0,"edges":[]})", "rank");
  rejects(R"({"rank":2,"basepoint":0,"edges":[[0,0,3]]})", "label");
  rejects(R"({"rank":2,"basepoint":0,"edges":[[0,0,1],[0,1,1],[1,1,2]]})",
          "folded");
  rejects(R"({"rank":2,"basepoint":0,"edges":[[0,0,1],[2,2,2]]})", "core");
  rejects(R"({"rank":2,"basepoint":0,"edges":[[0,1,1]]})", "core");
  rejects(R"({"rank":2,"basepoint":0,"edges":[[0,1]]})", "edge");
  rejects(R"({"rank":2,"basepoint":-1,"edges":[]})", "basepoint");
  CHECK_NOTHROW(subgroup_from_document(R"({"rank":2,"basepoint":0,"edges":[]})"));
}

TEST_CASE("iso documents are validated") {
  std::vector<std::int64_t> const wts{1, 0};
  auto const h = to_document(kernel_mod_p(2, wts, 3));
  auto doc = [&](char const* images) {
    return std::string(R"({"rank":2,"domain":)") + h + R"(,"codomain":)" + h +
           R"(,"images":)" + images + "}";
  };
  CHECK_NOTHROW(iso_from_document(doc(R"(["b","aaa","abA","Aba"])")));
  CHECK_THROWS_AS(iso_from_document(doc(R"(["b","aaa","abA"])")), DocumentError);
  CHECK_THROWS_AS(iso_from_document(doc(R"(["b","a","abA","Aba"])")),
                  DocumentError);
  CHECK_THROWS_AS(iso_from_document(doc(R"(["b","aaa","abA","c"])")),
                  DocumentError);
}

TEST_CASE("report documents revalidate") {
  CHECK_THROWS_AS(
      validate_report_document(
          R"({"objects":[{"name":"H","kind":"subgroup","document":{"rank":1,"basepoint":0,"edges":[[0,0,1],[0,1,1]]}}]})"),
      DocumentError);
  CHECK_THROWS_AS(
      validate_report_document(R"({"objects":[{"name":"x","kind":"blob","document":1}]})"),
      DocumentError);
}
