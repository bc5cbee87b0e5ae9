#include "freecomm/core_graph.hpp"

#include <algorithm>
#include <sstream>

#include "freecomm/error.hpp"
#include "freecomm/limits.hpp"

namespace freecomm {

CoreGraph::CoreGraph(std::size_t rank)
    : rank_(rank), vertices_(1), out_(rank, kNone), in_(rank, kNone) {}

CoreGraph CoreGraph::from_edges(std::size_t rank, std::int32_t basepoint,
                                std::vector<Edge> const& edges) {
  std::int32_t max_vertex = basepoint;
  if (basepoint < 0) throw DocumentError("basepoint must be non-negative");
  for (auto const& e : edges) {
    if (e.source < 0 || e.target < 0) {
      throw DocumentError("vertices must be non-negative integers");
    }
    if (e.label < 1 || e.label > rank) {
      throw DocumentError("edge label " + std::to_string(e.label) +
                          " outside [1, " + std::to_string(rank) + "]");
    }
    max_vertex = std::max({max_vertex, e.source, e.target});
  }
  auto const n = static_cast<std::size_t>(max_vertex) + 1;
  check_index_cap(n, "graph document");
  std::vector<std::int32_t> out(n * rank, kNone);
  std::vector<std::int32_t> in(n * rank, kNone);
  for (auto const& e : edges) {
    auto& o = out[static_cast<std::size_t>(e.source) * rank + e.label - 1];
    auto& i = in[static_cast<std::size_t>(e.target) * rank + e.label - 1];
    if (o == e.target && i == e.source) continue;  // duplicate listing
    if (o != kNone || i != kNone) {
      throw DocumentError("graph is not folded: two edges labelled " +
                          std::to_string(e.label) + " share an endpoint at " +
                          "vertex " +
                          std::to_string(o != kNone ? e.source : e.target));
    }
    o = e.target;
    i = e.source;
  }
  return from_tables(rank, basepoint, std::move(out), std::move(in));
}

CoreGraph CoreGraph::from_tables(std::size_t rank, std::int32_t basepoint,
                                 std::vector<std::int32_t> out,
                                 std::vector<std::int32_t> in) {
  auto const n = rank == 0 ? static_cast<std::size_t>(basepoint) + 1
                           : out.size() / rank;
  auto idx = [rank](std::int32_t v, std::uint32_t l) {
    return static_cast<std::size_t>(v) * rank + l - 1;
  };

  // Prune: repeatedly delete non-basepoint vertices of degree <= 1.
  std::vector<std::uint32_t> degree(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::uint32_t l = 1; l <= rank; ++l) {
      auto const vv = static_cast<std::int32_t>(v);
      degree[v] += (out[idx(vv, l)] != kNone) + (in[idx(vv, l)] != kNone);
    }
  }
  std::vector<std::int32_t> stack;
  std::vector<bool> removed(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (static_cast<std::int32_t>(v) != basepoint && degree[v] <= 1) {
      stack.push_back(static_cast<std::int32_t>(v));
    }
  }
  while (!stack.empty()) {
    auto const v = stack.back();
    stack.pop_back();
    if (removed[v]) continue;
    removed[v] = true;
    for (std::uint32_t l = 1; l <= rank; ++l) {
      if (auto w = out[idx(v, l)]; w != kNone) {
        out[idx(v, l)] = kNone;
        in[idx(w, l)] = kNone;
        if (--degree[w] <= 1 && w != basepoint && !removed[w]) {
          stack.push_back(w);
        }
      }
      if (auto u = in[idx(v, l)]; u != kNone) {
        in[idx(v, l)] = kNone;
        out[idx(u, l)] = kNone;
        if (--degree[u] <= 1 && u != basepoint && !removed[u]) {
          stack.push_back(u);
        }
      }
    }
  }

  // Canonical breadth-first renumbering.
  std::vector<std::int32_t> number(n, kNone);
  std::vector<std::int32_t> order;
  order.reserve(n);
  number[basepoint] = 0;
  order.push_back(basepoint);
  for (std::size_t head = 0; head < order.size(); ++head) {
    auto const v = order[head];
    for (std::uint32_t l = 1; l <= rank; ++l) {
      for (auto w : {out[idx(v, l)], in[idx(v, l)]}) {
        if (w != kNone && number[w] == kNone) {
          number[w] = static_cast<std::int32_t>(order.size());
          order.push_back(w);
        }
      }
    }
  }

  CoreGraph g;
  g.rank_ = rank;
  g.vertices_ = order.size();
  g.out_.assign(order.size() * rank, kNone);
  g.in_.assign(order.size() * rank, kNone);
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto const v = order[i];
    for (std::uint32_t l = 1; l <= rank; ++l) {
      auto const ii = static_cast<std::int32_t>(i);
      if (auto w = out[idx(v, l)]; w != kNone) {
        g.out_[idx(ii, l)] = number[w];
        ++g.edges_;
      }
      if (auto u = in[idx(v, l)]; u != kNone) g.in_[idx(ii, l)] = number[u];
    }
  }
  return g;
}

bool CoreGraph::is_cover() const noexcept {
  return std::none_of(out_.begin(), out_.end(),
                      [](auto v) { return v == kNone; }) &&
         std::none_of(in_.begin(), in_.end(),
                      [](auto v) { return v == kNone; });
}

std::vector<Edge> CoreGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edges_);
  for (std::size_t v = 0; v < vertices_; ++v) {
    for (std::uint32_t l = 1; l <= rank_; ++l) {
      auto const s = static_cast<std::int32_t>(v);
      if (auto w = out(s, l); w != kNone) result.push_back({s, w, l});
    }
  }
  return result;
}

std::string to_dot(CoreGraph const& g, std::string const& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  node [shape=circle];\n";
  os << "  0 [shape=doublecircle];\n";
  for (std::size_t v = 1; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (auto const& e : g.edges()) {
    os << "  " << e.source << " -> " << e.target << " [label=\"";
    if (e.label <= 26) {
      os << static_cast<char>('a' + e.label - 1);
    } else {
      os << 'x' << e.label;
    }
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace freecomm
