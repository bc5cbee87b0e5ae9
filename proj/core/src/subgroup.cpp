#include "freecomm/subgroup.hpp"

#include <numeric>
#include <unordered_map>

#include "folding_graph.hpp"
#include "freecomm/error.hpp"
#include "freecomm/limits.hpp"

namespace freecomm {

using detail::kNone;

Subgroup::Subgroup(std::size_t rank) {
  std::vector<std::int32_t> loops(rank, 0);
  data_ = build(CoreGraph::from_tables(rank, 0, loops, loops));
}

Subgroup::Subgroup(CoreGraph graph) : data_(build(std::move(graph))) {}

Subgroup Subgroup::trivial(std::size_t rank) { return Subgroup(CoreGraph(rank)); }

Subgroup Subgroup::from_generators(std::size_t rank,
                                   std::span<Word const> generators) {
  detail::Folder f(rank);
  auto const base = f.add_vertex();
  for (auto const& g : generators) {
    if (g.max_index() > rank) {
      throw RankError("generator " + to_string(g) + " exceeds rank " +
                      std::to_string(rank));
    }
    f.add_path(base, g, base);
  }
  return Subgroup(detail::extract_core_graph(f, base, "from_generators"));
}

std::shared_ptr<Subgroup::Data const> Subgroup::build(CoreGraph graph) {
  auto data = std::make_shared<Data>();
  auto const n = graph.vertex_count();
  auto const rank = graph.rank();
  data->tree_parent.assign(n, kNone);
  data->tree_letter.assign(n, 0);
  data->edge_basis.assign(n * rank, 0);
  std::vector<bool> tree_slot(n * rank, false);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  // The canonical numbering is the BFS order, so scanning vertices in
  // index order replays the search.
  for (std::size_t v = 0; v < n; ++v) {
    auto const vv = static_cast<std::int32_t>(v);
    for (std::uint32_t l = 1; l <= rank; ++l) {
      auto const sl = static_cast<Letter>(l);
      if (auto w = graph.out(vv, l); w != kNone && !seen[w]) {
        seen[w] = true;
        data->tree_parent[w] = vv;
        data->tree_letter[w] = sl;
        tree_slot[v * rank + l - 1] = true;
      }
      if (auto u = graph.in(vv, l); u != kNone && !seen[u]) {
        seen[u] = true;
        data->tree_parent[u] = vv;
        data->tree_letter[u] = -sl;
        tree_slot[static_cast<std::size_t>(u) * rank + l - 1] = true;
      }
    }
  }
  data->graph = std::move(graph);
  Subgroup view;
  view.data_ = data;
  for (std::size_t v = 0; v < n; ++v) {
    auto const vv = static_cast<std::int32_t>(v);
    for (std::uint32_t l = 1; l <= rank; ++l) {
      auto const w = data->graph.out(vv, l);
      if (w == kNone || tree_slot[v * rank + l - 1]) continue;
      data->basis.push_back(view.path_to(vv) *
                            Word::generator(l) * invert(view.path_to(w)));
      data->edge_basis[v * rank + l - 1] =
          static_cast<std::int32_t>(data->basis.size());
    }
  }
  return data;
}

std::optional<std::size_t> Subgroup::index() const noexcept {
  if (!is_finite_index()) return std::nullopt;
  return graph().vertex_count();
}

std::size_t Subgroup::finite_index() const {
  if (auto i = index()) return *i;
  throw InfiniteIndex("subgroup has infinite index");
}

std::int32_t Subgroup::trace(Word const& w) const {
  std::int32_t v = 0;
  for (auto l : w.letters()) {
    if (letter_index(l) > rank()) return kNone;
    v = graph().step(v, l);
    if (v == kNone) return kNone;
  }
  return v;
}

bool Subgroup::contains(Word const& w) const { return trace(w) == 0; }

Word Subgroup::express_in_basis(Word const& w) const {
  auto const& g = graph();
  auto const rank = g.rank();
  std::vector<Letter> out;
  std::int32_t v = 0;
  for (auto l : w.letters()) {
    auto const label = letter_index(l);
    if (label > rank) v = kNone;
    if (v == kNone) break;
    if (l > 0) {
      auto const e = data_->edge_basis[static_cast<std::size_t>(v) * rank +
                                       label - 1];
      if (e != 0) out.push_back(e);
      v = g.out(v, label);
    } else {
      auto const u = g.in(v, label);
      if (u != kNone) {
        auto const e = data_->edge_basis[static_cast<std::size_t>(u) * rank +
                                         label - 1];
        if (e != 0) out.push_back(-e);
      }
      v = u;
    }
  }
  if (v != 0) {
    throw NotInSubgroup(to_string(w) + " is not in the subgroup");
  }
  return Word(out);
}

Word Subgroup::path_to(std::int32_t v) const {
  std::vector<Letter> rev;
  while (v != 0) {
    rev.push_back(data_->tree_letter[v]);
    v = data_->tree_parent[v];
  }
  return Word(std::vector<Letter>(rev.rbegin(), rev.rend()));
}

std::vector<Word> Subgroup::coset_representatives() const {
  auto const n = finite_index();
  std::vector<Word> reps;
  reps.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    reps.push_back(path_to(static_cast<std::int32_t>(v)));
  }
  return reps;
}

std::int64_t Subgroup::coset_order(Letter generator) const {
  if (!is_finite_index()) {
    throw InfiniteIndex("coset_order needs a finite-index subgroup");
  }
  if (generator == 0 || letter_index(generator) > rank()) {
    throw RankError("coset_order: no such generator");
  }
  std::int64_t m = 0;
  std::int32_t v = 0;
  do {
    v = graph().step(v, generator);
    ++m;
  } while (v != 0);
  return m;
}

bool equals(Subgroup const& h, Subgroup const& k) { return h == k; }

Subgroup intersect(Subgroup const& h, Subgroup const& k) {
  if (h.rank() != k.rank()) throw RankError("intersect: rank mismatch");
  auto const rank = h.rank();
  auto const& a = h.graph();
  auto const& b = k.graph();
  auto key = [&](std::int32_t x, std::int32_t y) {
    return static_cast<std::uint64_t>(x) * b.vertex_count() +
           static_cast<std::uint64_t>(y);
  };
  std::unordered_map<std::uint64_t, std::int32_t> ids;
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
  std::vector<std::int32_t> out;
  std::vector<std::int32_t> in;
  auto id_of = [&](std::int32_t x, std::int32_t y) {
    auto [it, fresh] =
        ids.try_emplace(key(x, y), static_cast<std::int32_t>(pairs.size()));
    if (fresh) {
      pairs.emplace_back(x, y);
      check_index_cap(pairs.size(), "intersect");
      out.resize(out.size() + rank, kNone);
      in.resize(in.size() + rank, kNone);
    }
    return it->second;
  };
  id_of(0, 0);
  for (std::size_t head = 0; head < pairs.size(); ++head) {
    auto const [x, y] = pairs[head];
    auto const p = static_cast<std::int32_t>(head);
    for (std::uint32_t l = 1; l <= rank; ++l) {
      auto const xo = a.out(x, l);
      auto const yo = b.out(y, l);
      if (xo != kNone && yo != kNone) {
        auto const q = id_of(xo, yo);
        out[static_cast<std::size_t>(p) * rank + l - 1] = q;
        in[static_cast<std::size_t>(q) * rank + l - 1] = p;
      }
      auto const xi = a.in(x, l);
      auto const yi = b.in(y, l);
      if (xi != kNone && yi != kNone) {
        auto const q = id_of(xi, yi);
        in[static_cast<std::size_t>(p) * rank + l - 1] = q;
        out[static_cast<std::size_t>(q) * rank + l - 1] = p;
      }
    }
  }
  return Subgroup(CoreGraph::from_tables(rank, 0, std::move(out),
                                         std::move(in)));
}

Subgroup join(Subgroup const& h, Subgroup const& k) {
  if (h.rank() != k.rank()) throw RankError("join: rank mismatch");
  detail::Folder f(h.rank());
  auto const a = detail::load_graph(f, h.graph());
  auto const b = detail::load_graph(f, k.graph());
  f.identify(b, a);
  return Subgroup(detail::extract_core_graph(f, a, "join"));
}

Subgroup join(Subgroup const& h, std::span<Word const> words) {
  detail::Folder f(h.rank());
  auto const a = detail::load_graph(f, h.graph());
  for (auto const& w : words) {
    if (w.max_index() > h.rank()) throw RankError("join: rank mismatch");
    f.add_path(a, w, a);
  }
  return Subgroup(detail::extract_core_graph(f, a, "join"));
}

Subgroup conjugate_subgroup(Subgroup const& h, Word const& g) {
  if (g.max_index() > h.rank()) {
    throw RankError("conjugate_subgroup: rank mismatch");
  }
  if (h.is_finite_index()) {
    // Covers: move the basepoint along g.
    auto const& graph = h.graph();
    auto edges = graph.edges();
    return Subgroup(CoreGraph::from_edges(h.rank(), h.trace(g), edges));
  }
  detail::Folder f(h.rank());
  auto const a = detail::load_graph(f, h.graph());
  auto const b = f.add_vertex();
  f.add_path(a, g, b);
  return Subgroup(detail::extract_core_graph(f, b, "conjugate_subgroup"));
}

bool is_normal(Subgroup const& h) {
  if (!h.is_finite_index()) {
    throw InfiniteIndex("is_normal needs a finite-index subgroup");
  }
  for (std::uint32_t i = 1; i <= h.rank(); ++i) {
    if (conjugate_subgroup(h, Word::generator(i)) != h) return false;
  }
  return true;
}

bool is_subgroup_of(Subgroup const& h, Subgroup const& k) {
  if (h.rank() != k.rank()) throw RankError("is_subgroup_of: rank mismatch");
  for (auto const& b : h.basis()) {
    if (!k.contains(b)) return false;
  }
  return true;
}

Subgroup kernel_mod_p(std::size_t rank, std::span<std::int64_t const> weights,
                      std::int64_t p) {
  if (rank == 0) throw RankError("kernel_mod_p: rank must be positive");
  if (weights.size() != rank) {
    throw RankError("kernel_mod_p: expected " + std::to_string(rank) +
                    " weights, got " + std::to_string(weights.size()));
  }
  if (p < 2) throw Error("kernel_mod_p: modulus must be at least 2");
  check_index_cap(static_cast<std::size_t>(p), "kernel_mod_p");
  std::vector<std::int64_t> w(rank);
  bool nonzero = false;
  for (std::size_t i = 0; i < rank; ++i) {
    w[i] = ((weights[i] % p) + p) % p;
    nonzero = nonzero || w[i] != 0;
  }
  if (!nonzero) {
    throw Error("kernel_mod_p: every weight is 0 mod " + std::to_string(p));
  }
  auto const n = static_cast<std::size_t>(p);
  std::vector<std::int32_t> out(n * rank);
  std::vector<std::int32_t> in(n * rank);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < rank; ++i) {
      auto const t = (r + static_cast<std::size_t>(w[i])) % n;
      out[r * rank + i] = static_cast<std::int32_t>(t);
      in[t * rank + i] = static_cast<std::int32_t>(r);
    }
  }
  return Subgroup(CoreGraph::from_tables(rank, 0, std::move(out),
                                         std::move(in)));
}

Subgroup relative_subgroup(Subgroup const& h, Subgroup const& k) {
  if (h.rank() != k.rank()) {
    throw RankError("relative_subgroup: rank mismatch");
  }
  std::vector<Word> gens;
  gens.reserve(k.basis_rank());
  for (auto const& b : k.basis()) gens.push_back(h.express_in_basis(b));
  return Subgroup::from_generators(h.basis_rank(), gens);
}

std::optional<std::size_t> relative_index(Subgroup const& h,
                                          Subgroup const& k) {
  return relative_subgroup(h, k).index();
}

}  // namespace freecomm
