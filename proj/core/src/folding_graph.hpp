#pragma once

#include <vector>

#include "folding.hpp"
#include "freecomm/core_graph.hpp"
#include "freecomm/limits.hpp"

namespace freecomm::detail {

// Loads a core graph into a folder; returns the folder id of vertex 0.
template <class Tag>
std::int32_t load_graph(BasicFolder<Tag>& f, CoreGraph const& g) {
  auto const first = static_cast<std::int32_t>(f.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) f.add_vertex();
  for (auto const& e : g.edges()) {
    f.add_edge(first + e.source, e.label, first + e.target);
  }
  return first;
}

// Collapses the folder's roots into a canonical core graph based at
// `basepoint`.
template <class Tag>
CoreGraph extract_core_graph(BasicFolder<Tag>& f, std::int32_t basepoint,
                             char const* operation) {
  auto const rank = f.rank();
  auto const n = f.vertex_count();
  std::vector<std::int32_t> compact(n, kNone);
  std::int32_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto const vv = static_cast<std::int32_t>(v);
    if (f.is_root(vv)) compact[v] = next++;
  }
  check_index_cap(static_cast<std::size_t>(next), operation);
  std::vector<std::int32_t> out(static_cast<std::size_t>(next) * rank, kNone);
  std::vector<std::int32_t> in(static_cast<std::size_t>(next) * rank, kNone);
  for (std::size_t v = 0; v < n; ++v) {
    auto const vv = static_cast<std::int32_t>(v);
    if (!f.is_root(vv)) continue;
    for (std::uint32_t l = 1; l <= rank; ++l) {
      auto const s = static_cast<std::size_t>(compact[v]) * rank + l - 1;
      if (auto w = f.out(vv, l).v; w != kNone) out[s] = compact[w];
      if (auto u = f.in(vv, l).v; u != kNone) in[s] = compact[u];
    }
  }
  auto const base = compact[f.find(basepoint).first];
  return CoreGraph::from_tables(rank, base, std::move(out), std::move(in));
}

}  // namespace freecomm::detail
