#include "freecomm/lattice.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <unordered_map>

#include "freecomm/error.hpp"

namespace freecomm {

namespace {

struct GraphHash {
  std::size_t operator()(CoreGraph const& g) const noexcept {
    std::size_t h = g.vertex_count() * 0x9e3779b97f4a7c15ULL;
    for (auto const& e : g.edges()) {
      h ^= (static_cast<std::size_t>(e.source) << 20) ^
           (static_cast<std::size_t>(e.target) << 4) ^ e.label;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

bool canonical_less(Subgroup const& a, Subgroup const& b) {
  if (a.finite_index() != b.finite_index()) {
    return a.finite_index() > b.finite_index();
  }
  auto const ea = a.graph().edges();
  auto const eb = b.graph().edges();
  return std::lexicographical_compare(
      ea.begin(), ea.end(), eb.begin(), eb.end(),
      [](Edge const& x, Edge const& y) {
        return std::tie(x.source, x.label, x.target) <
               std::tie(y.source, y.label, y.target);
      });
}

}  // namespace

std::vector<Subgroup> overgroups(Subgroup const& h) {
  if (!h.is_finite_index()) {
    throw InfiniteIndex("overgroups needs a finite-index subgroup");
  }
  // Every overgroup is generated by H and the coset representatives it
  // contains, so it is a join of the atoms <H, r>.
  std::vector<Subgroup> atoms;
  for (auto const& r : h.coset_representatives()) {
    Word const one[] = {r};
    atoms.push_back(join(h, one));
  }

  std::vector<Subgroup> members;
  std::unordered_map<CoreGraph, std::size_t, GraphHash> seen;
  auto add = [&](Subgroup const& k) {
    if (seen.try_emplace(k.graph(), members.size()).second) {
      members.push_back(k);
    }
  };
  for (auto const& a : atoms) add(a);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto const& a : atoms) {
      if (is_subgroup_of(a, members[i])) continue;
      add(join(members[i], a));
    }
  }
  std::sort(members.begin(), members.end(), canonical_less);
  return members;
}

std::size_t subindex(Subgroup const& h) {
  auto const lattice = overgroups(h);
  auto const n = lattice.size();
  // lattice[0] is H, lattice[n-1] the whole group; a proper containment
  // always strictly lowers the index, so sorted order is a topological one.
  std::vector<std::size_t> best(n, std::numeric_limits<std::size_t>::max());
  best[0] = 1;
  for (std::size_t j = 1; j < n; ++j) {
    auto const ij = lattice[j].finite_index();
    for (std::size_t i = 0; i < j; ++i) {
      auto const ii = lattice[i].finite_index();
      if (ii <= ij || best[i] == std::numeric_limits<std::size_t>::max()) {
        continue;
      }
      if (!is_subgroup_of(lattice[i], lattice[j])) continue;
      best[j] = std::min(best[j], std::max(best[i], ii / ij));
    }
  }
  return best[n - 1];
}

std::size_t subindex_in(Subgroup const& f, Subgroup const& h) {
  return subindex(relative_subgroup(h, f));
}

}  // namespace freecomm
