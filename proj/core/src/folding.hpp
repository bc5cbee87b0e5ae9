#pragma once

// Stallings folding over a union-find of vertices.
//
// Every edge may carry a tag from a group (a word over a generating-set
// alphabet for tracked folding, the trivial group otherwise). A vertex x
// merged into a root r carries an offset D(x): an edge a->b with tag t is
// equivalent to r(a)->r(b) with tag D(a) t D(b)^-1. Folding two edges that
// share a source and label identifies their targets with the offset that
// keeps both edges' tags equal, so the tag product along any basepoint loop
// is invariant under folding.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "freecomm/word.hpp"

namespace freecomm::detail {

struct NoTag {
  friend bool operator==(NoTag, NoTag) = default;
};

inline NoTag tag_mul(NoTag, NoTag) { return {}; }
inline NoTag tag_inv(NoTag) { return {}; }
inline bool tag_is_identity(NoTag) { return true; }

inline Word tag_mul(Word const& a, Word const& b) { return a * b; }
inline Word tag_inv(Word const& a) { return invert(a); }
inline bool tag_is_identity(Word const& a) { return a.empty(); }

inline constexpr std::int32_t kNone = -1;

template <class Tag>
class BasicFolder {
 public:
  struct Slot {
    std::int32_t v = kNone;
    Tag tag{};
  };

  explicit BasicFolder(std::size_t rank) : rank_(rank) {}

  [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
  [[nodiscard]] std::size_t vertex_count() const noexcept {
    return parent_.size();
  }
  [[nodiscard]] std::size_t root_count() const noexcept { return roots_; }

  // False once folding identified two vertices that were already equal
  // with a nontrivial offset, i.e. the tags satisfy a relation.
  [[nodiscard]] bool consistent() const noexcept { return consistent_; }

  std::int32_t add_vertex() {
    auto const v = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(v);
    offset_.emplace_back();
    size_.push_back(1);
    out_.resize(out_.size() + rank_);
    in_.resize(in_.size() + rank_);
    ++roots_;
    return v;
  }

  // Adds a -label-> b with tag t, then folds.
  void add_edge(std::int32_t a, std::uint32_t label, std::int32_t b,
                Tag const& t = {}) {
    insert_edge(a, label, b, t);
    process();
  }

  // Adds a path spelling w from `from` to `to` whose tag product is `tag`.
  // An empty w identifies the endpoints.
  void add_path(std::int32_t from, Word const& w, std::int32_t to,
                Tag const& tag = {}) {
    auto const letters = w.letters();
    if (letters.empty()) {
      coincidences_.push_back({from, to, tag_inv(tag)});
      process();
      return;
    }
    auto cur = from;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      auto const next = i + 1 == letters.size() ? to : add_vertex();
      Tag const t = i == 0 ? tag : Tag{};
      auto const l = letters[i];
      if (l > 0) {
        insert_edge(cur, letter_index(l), next, t);
      } else {
        insert_edge(next, letter_index(l), cur, tag_inv(t));
      }
      process();
      cur = next;
    }
  }

  // Identifies a and b so that an out-edge of a with tag t becomes an
  // out-edge of b with tag c t.
  void identify(std::int32_t a, std::int32_t b, Tag const& c = {}) {
    coincidences_.push_back({a, b, c});
    process();
  }

  // Root of x and D(x).
  std::pair<std::int32_t, Tag> find(std::int32_t x) {
    path_.clear();
    auto r = x;
    while (parent_[r] != r) {
      path_.push_back(r);
      r = parent_[r];
    }
    Tag acc{};
    for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
      acc = tag_mul(acc, offset_[*it]);
      offset_[*it] = acc;
      parent_[*it] = r;
    }
    return {r, path_.empty() ? Tag{} : offset_[x]};
  }

  [[nodiscard]] bool is_root(std::int32_t v) const { return parent_[v] == v; }
  [[nodiscard]] Slot const& out(std::int32_t v, std::uint32_t label) const {
    return out_[slot(v, label)];
  }
  [[nodiscard]] Slot const& in(std::int32_t v, std::uint32_t label) const {
    return in_[slot(v, label)];
  }

 private:
  struct Coincidence {
    std::int32_t x;
    std::int32_t y;
    Tag c;
  };

  [[nodiscard]] std::size_t slot(std::int32_t v,
                                 std::uint32_t label) const noexcept {
    return static_cast<std::size_t>(v) * rank_ + (label - 1);
  }

  void insert_edge(std::int32_t a, std::uint32_t label, std::int32_t b,
                   Tag const& t) {
    auto [ra, da] = find(a);
    auto [rb, db] = find(b);
    Tag const tr = tag_mul(tag_mul(da, t), tag_inv(db));
    auto& o = out_[slot(ra, label)];
    if (o.v != kNone) {
      coincidences_.push_back({rb, o.v, tag_mul(tag_inv(o.tag), tr)});
      return;
    }
    auto& i = in_[slot(rb, label)];
    if (i.v != kNone) {
      coincidences_.push_back({ra, i.v, tag_mul(i.tag, tag_inv(tr))});
      return;
    }
    o = Slot{rb, tr};
    i = Slot{ra, tr};
  }

  void process() {
    while (!coincidences_.empty()) {
      auto [x, y, c] = std::move(coincidences_.front());
      coincidences_.pop_front();
      auto [rx, dx] = find(x);
      auto [ry, dy] = find(y);
      Tag delta = tag_mul(tag_mul(dy, c), tag_inv(dx));
      if (rx == ry) {
        if (!tag_is_identity(delta)) consistent_ = false;
        continue;
      }
      if (size_[rx] > size_[ry]) {
        std::swap(rx, ry);
        delta = tag_inv(delta);
      }
      // rx becomes a child of ry.
      parent_[rx] = ry;
      offset_[rx] = delta;
      size_[ry] += size_[rx];
      --roots_;
      rewire(rx);
    }
  }

  // Moves every edge incident to the former root v onto its new root.
  void rewire(std::int32_t v) {
    pending_.clear();
    for (std::uint32_t l = 1; l <= rank_; ++l) {
      auto& o = out_[slot(v, l)];
      if (o.v != kNone) {
        auto const w = o.v;
        pending_.push_back({v, l, w, std::move(o.tag)});
        o = Slot{};
        in_[slot(w, l)] = Slot{};
      }
      auto& i = in_[slot(v, l)];
      if (i.v != kNone) {
        auto const u = i.v;
        pending_.push_back({u, l, v, std::move(i.tag)});
        i = Slot{};
        out_[slot(u, l)] = Slot{};
      }
    }
    // insert_edge may recurse into rewire only through process(), which
    // runs after this loop, so the local copy is safe.
    auto edges = std::move(pending_);
    pending_ = {};
    for (auto& e : edges) insert_edge(e.a, e.label, e.b, e.tag);
  }

  struct PendingEdge {
    std::int32_t a;
    std::uint32_t label;
    std::int32_t b;
    Tag tag;
  };

  std::size_t rank_;
  std::vector<std::int32_t> parent_;
  std::vector<Tag> offset_;
  std::vector<std::uint32_t> size_;
  std::vector<Slot> out_;
  std::vector<Slot> in_;
  std::deque<Coincidence> coincidences_;
  std::vector<std::int32_t> path_;
  std::vector<PendingEdge> pending_;
  std::size_t roots_ = 0;
  bool consistent_ = true;
};

using Folder = BasicFolder<NoTag>;
using TrackedFolder = BasicFolder<Word>;

}  // namespace freecomm::detail
