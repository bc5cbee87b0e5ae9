#include "freecomm/tracked_subgroup.hpp"

#include "folding.hpp"
#include "folding_graph.hpp"
#include "freecomm/error.hpp"

namespace freecomm {

using detail::kNone;

struct TrackedSubgroup::Tables {
  std::size_t rank = 0;
  // Per folded vertex and label: target and tag, kNone when missing.
  std::vector<std::int32_t> out;
  std::vector<std::int32_t> in;
  std::vector<Word> out_tag;
  std::vector<Word> in_tag;
  std::int32_t base = 0;
  // D(basepoint) when the basepoint was merged under another root.
  Word base_offset;
};

TrackedSubgroup::~TrackedSubgroup() = default;
TrackedSubgroup::TrackedSubgroup(TrackedSubgroup&&) noexcept = default;
TrackedSubgroup& TrackedSubgroup::operator=(TrackedSubgroup&&) noexcept =
    default;

namespace {

Subgroup fold_tracked(std::size_t rank, std::span<Word const> generators,
                      detail::TrackedFolder& f, std::int32_t base) {
  for (std::size_t j = 0; j < generators.size(); ++j) {
    auto const& g = generators[j];
    if (g.max_index() > rank) {
      throw RankError("generator " + to_string(g) + " exceeds rank " +
                      std::to_string(rank));
    }
    if (g.empty()) {
      throw InvalidIso(InvalidIso::Reason::kRankDrop,
                       "generator " + std::to_string(j + 1) +
                           " is the identity, so the tuple is not a basis");
    }
    f.add_path(base, g, base, Word::generator(static_cast<std::uint32_t>(j + 1)));
  }
  if (!f.consistent()) {
    throw InvalidIso(InvalidIso::Reason::kRankDrop,
                     "generating tuple satisfies a relation, so it is not a "
                     "free basis");
  }
  return Subgroup(detail::extract_core_graph(f, base, "tracked fold"));
}

}  // namespace

TrackedSubgroup::TrackedSubgroup(std::size_t rank,
                                 std::span<Word const> generators)
    : generators_(generators.begin(), generators.end()),
      subgroup_(rank),
      tables_(std::make_unique<Tables>()) {
  detail::TrackedFolder f(rank);
  auto const base = f.add_vertex();
  subgroup_ = fold_tracked(rank, generators_, f, base);
  // A consistent fold can still hide a relation when the tuple is longer
  // than the rank of what it generates.
  if (subgroup_.basis_rank() != generators_.size()) {
    throw InvalidIso(InvalidIso::Reason::kRankDrop,
                     "generating tuple of length " +
                         std::to_string(generators_.size()) +
                         " spans a subgroup of rank " +
                         std::to_string(subgroup_.basis_rank()));
  }

  auto& t = *tables_;
  t.rank = rank;
  auto const n = f.vertex_count();
  t.out.assign(n * rank, kNone);
  t.in.assign(n * rank, kNone);
  t.out_tag.assign(n * rank, Word{});
  t.in_tag.assign(n * rank, Word{});
  for (std::size_t v = 0; v < n; ++v) {
    auto const vv = static_cast<std::int32_t>(v);
    if (!f.is_root(vv)) continue;
    for (std::uint32_t l = 1; l <= rank; ++l) {
      auto const s = v * rank + l - 1;
      if (auto const& o = f.out(vv, l); o.v != kNone) {
        t.out[s] = o.v;
        t.out_tag[s] = o.tag;
      }
      if (auto const& i = f.in(vv, l); i.v != kNone) {
        t.in[s] = i.v;
        t.in_tag[s] = i.tag;
      }
    }
  }
  auto [root, offset] = f.find(base);
  t.base = root;
  t.base_offset = std::move(offset);
}

Word TrackedSubgroup::express(Word const& w) const {
  auto const& t = *tables_;
  std::vector<Letter> out;
  std::int32_t v = t.base;
  Word acc;
  for (auto l : w.letters()) {
    auto const label = letter_index(l);
    if (label > t.rank) {
      v = kNone;
      break;
    }
    auto const s = static_cast<std::size_t>(v) * t.rank + label - 1;
    if (l > 0) {
      if (t.out[s] == kNone) {
        v = kNone;
        break;
      }
      acc = acc * t.out_tag[s];
      v = t.out[s];
    } else {
      if (t.in[s] == kNone) {
        v = kNone;
        break;
      }
      acc = acc * invert(t.in_tag[s]);
      v = t.in[s];
    }
  }
  if (v != t.base) {
    throw NotInSubgroup(to_string(w) + " is not in the tracked subgroup");
  }
  // Root-coordinate loop tags are D x D^-1.
  if (!t.base_offset.empty()) {
    acc = invert(t.base_offset) * acc * t.base_offset;
  }
  return acc;
}

}  // namespace freecomm
