#include <catch_amalgamated.hpp>

#include "freecomm/commensurator.hpp"
#include "freecomm/error.hpp"
#include "freecomm/partial_iso.hpp"
#include "random.hpp"

using namespace freecomm;
using namespace freecomm::testing;
using Reason = InvalidIso::Reason;

namespace {

Word w(char const* s) { return parse_word(s); }

Subgroup k3() {
  std::vector<std::int64_t> const wts{1, 0};
  return kernel_mod_p(2, wts, 3);
}

PartialIso swap_iso() {
  auto const h = k3();
  auto images = h.basis();
  auto const i = std::find(images.begin(), images.end(), w("aaa"));
  auto const j = std::find(images.begin(), images.end(), w("b"));
  std::iter_swap(i, j);
  return make_iso(h, h, images);
}

Reason reason_of(auto&& f) {
  try {
    f();
  } catch (InvalidIso const& e) {
    return e.reason();
  }
  FAIL("expected InvalidIso");
  return Reason::kHypothesis;
}

}  // namespace

TEST_CASE("make_iso accepts and rejects") {
  Subgroup const rose(2);
  CHECK_NOTHROW(make_iso(rose, rose, rose.basis()));
  CHECK_NOTHROW(swap_iso());
  CHECK(reason_of([&] { (void)make_iso(rose, rose, {w("a"), w("a")}); }) ==
        Reason::kRankDrop);
  CHECK(reason_of([&] { (void)make_iso(rose, rose, {w("a")}); }) ==
        Reason::kBasisCount);
  auto const h = k3();
  CHECK(reason_of([&] { (void)make_iso(h, h, {w("a"), w("b"), w("b"), w("b")}); }) ==
        Reason::kImageOutsideCodomain);
  // images inside H spanning a proper subgroup of it
  CHECK(reason_of([&] {
          (void)make_iso(h, h, {w("b"), w("aaaaaa"), w("abA"), w("Aba")});
        }) == Reason::kImageMismatch);
  auto const inf = Subgroup::from_generators(2, std::vector<Word>{w("aa")});
  CHECK(reason_of([&] { (void)make_iso(inf, inf, inf.basis()); }) ==
        Reason::kInfiniteIndex);
}

TEST_CASE("apply") {
  auto const s = swap_iso();
  CHECK(s.apply(w("aaa")) == w("b"));
  CHECK(s.apply(w("b")) == w("aaa"));
  CHECK(s.apply(w("Aba")) == w("Aba"));
  CHECK(s.apply(Word{}).empty());
  CHECK_THROWS_AS(s.apply(w("a")), NotInSubgroup);
  auto const id = identity_iso(k3());
  CHECK(id.apply(w("abAbaaab")) == w("abAbaaab"));
}

TEST_CASE("invert_iso") {
  auto const id = identity_iso(k3());
  CHECK(invert_iso(id).images() == id.images());
  auto const s = swap_iso();
  auto const si = invert_iso(s);
  CHECK(si.images() == s.images());
  auto const flip = embed_aut(2, {w("b"), w("a")});
  CHECK(invert_iso(flip).images() == flip.images());
  auto const r = restrict(flip, k3());
  auto const ri = invert_iso(r);
  for (auto const& b : r.codomain().basis()) {
    CHECK(r.apply(ri.apply(b)) == b);
    CHECK(ri.apply(b) == flip.apply(b));
  }
}

TEST_CASE("compose") {
  auto const s = swap_iso();
  auto const id = identity_iso(Subgroup(2));
  CHECK(equivalent(compose(id, s), s));
  CHECK(equivalent(compose(s, id), s));
  CHECK(is_identity_class(compose(s, invert_iso(s))));
  CHECK(is_identity_class(compose(s, s)));
  auto const nm = embed_aut(2, {w("ab"), w("b")});
  auto const both = compose(nm, s);
  for (auto const& b : both.domain().basis()) {
    CHECK(both.apply(b) == s.apply(nm.apply(b)));
  }
  CHECK_THROWS(compose_many(std::span<PartialIso const>{}));
  std::vector<PartialIso> const three{nm, s, invert_iso(nm)};
  auto const c = compose_many(three);
  for (auto const& b : c.domain().basis()) {
    CHECK(c.apply(b) == invert_iso(nm).apply(s.apply(nm.apply(b))));
  }
}

TEST_CASE("restrict") {
  auto const h = k3();
  auto const r = restrict(identity_iso(Subgroup(2)), h);
  CHECK(r.domain() == h);
  CHECK(r.codomain() == h);
  CHECK(r.images() == h.basis());
  auto const s = swap_iso();
  CHECK(restrict(s, s.domain()).images() == s.images());
  std::vector<std::int64_t> const wts{0, 1};
  auto const sub = intersect(h, kernel_mod_p(2, wts, 2));
  auto const rs = restrict(s, sub);
  CHECK(rs.domain().index() == 6);
  CHECK(equivalent(rs, s));
  CHECK_THROWS_AS(restrict(s, Subgroup(2)), NotInSubgroup);
}

TEST_CASE("embed_aut") {
  auto const flip = embed_aut(2, {w("b"), w("a")});
  CHECK_FALSE(is_identity_class(flip));
  CHECK_NOTHROW(embed_aut(2, {w("ab"), w("b")}));
  CHECK(reason_of([] { (void)embed_aut(2, {w("aa"), w("b")}); }) ==
        Reason::kNotAutomorphism);
  CHECK(reason_of([] { (void)embed_aut(2, {w("a")}); }) ==
        Reason::kNotAutomorphism);
  CHECK(is_identity_class(embed_aut(3, identity_images(3))));
}

TEST_CASE("inverse and composition laws on random isos") {
  Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    auto const f = random_iso(rng, 2, 4);
    auto const fi = invert_iso(f);
    CHECK(fi.domain() == f.codomain());
    CHECK(fi.codomain() == f.domain());
    for (int j = 0; j < 5; ++j) {
      auto const x = random_word(rng, 2, 8);
      if (f.domain().contains(x)) CHECK(fi.apply(f.apply(x)) == x);
      if (f.codomain().contains(x)) CHECK(f.apply(fi.apply(x)) == x);
    }
    // the composition is a valid iso: re-validate through make_iso
    auto const g = random_iso(rng, 2, 4);
    auto const fg = compose(f, g);
    CHECK_NOTHROW(make_iso(fg.domain(), fg.codomain(), fg.images()));
    for (auto const& b : fg.domain().basis()) {
      CHECK(fg.apply(b) == g.apply(f.apply(b)));
    }
  }
}
