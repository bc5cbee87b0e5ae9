#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace freecomm {

struct Edge {
  std::int32_t source;
  std::int32_t target;
  std::uint32_t label;  // 1-based generator index

  friend bool operator==(Edge const&, Edge const&) = default;
};

// A folded, connected, based core graph in canonical form.
//
// Vertices are numbered 0..n-1 in the order a breadth-first search from the
// basepoint first reaches them, scanning labels in ascending order and, per
// label, the outgoing edge before the incoming one. The basepoint is 0.
// Two CoreGraphs spell the same subgroup iff they compare equal.
class CoreGraph {
 public:
  static constexpr std::int32_t kNone = -1;

  // The one-vertex graph without edges (trivial subgroup).
  explicit CoreGraph(std::size_t rank);

  // Builds from an arbitrary folded edge list: prunes hanging trees,
  // discards what is unreachable from `basepoint`, renumbers canonically.
  // Throws DocumentError when the edges are not folded or reference
  // labels outside [1, rank].
  static CoreGraph from_edges(std::size_t rank, std::int32_t basepoint,
                              std::vector<Edge> const& edges);

  // Same, from slot tables indexed [v * rank + label - 1]. The tables must
  // already be folded.
  static CoreGraph from_tables(std::size_t rank, std::int32_t basepoint,
                               std::vector<std::int32_t> out,
                               std::vector<std::int32_t> in);

  [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
  [[nodiscard]] std::size_t vertex_count() const noexcept {
    return vertices_;
  }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_; }

  [[nodiscard]] std::int32_t out(std::int32_t v,
                                 std::uint32_t label) const noexcept {
    return out_[static_cast<std::size_t>(v) * rank_ + label - 1];
  }
  [[nodiscard]] std::int32_t in(std::int32_t v,
                                std::uint32_t label) const noexcept {
    return in_[static_cast<std::size_t>(v) * rank_ + label - 1];
  }
  // Follows a signed letter; kNone when the edge is missing.
  [[nodiscard]] std::int32_t step(std::int32_t v, std::int32_t letter) const {
    return letter > 0 ? out(v, static_cast<std::uint32_t>(letter))
                      : in(v, static_cast<std::uint32_t>(-letter));
  }

  // Every vertex has exactly one outgoing and one incoming edge per label.
  [[nodiscard]] bool is_cover() const noexcept;

  // Edges sorted by (source, label).
  [[nodiscard]] std::vector<Edge> edges() const;

  friend bool operator==(CoreGraph const&, CoreGraph const&) = default;

 private:
  CoreGraph() = default;

  std::size_t rank_ = 0;
  std::size_t vertices_ = 1;
  std::size_t edges_ = 0;
  std::vector<std::int32_t> out_;
  std::vector<std::int32_t> in_;
};

// Graphviz rendering: one directed edge per graph edge labelled by its
// generator letter, basepoint drawn as a double circle.
std::string to_dot(CoreGraph const& g, std::string const& name = "core");

}  // namespace freecomm
