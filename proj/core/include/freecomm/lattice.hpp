#pragma once

#include <cstddef>
#include <vector>

#include "freecomm/subgroup.hpp"

namespace freecomm {

// All K with H <= K <= F_rank for a finite-index H, sorted by decreasing
// index (H first, the whole group last); ties broken by canonical edges.
// Throws InfiniteIndex for infinite-index H.
std::vector<Subgroup> overgroups(Subgroup const& h);

// Minimal n such that some chain H = G_0 <= G_1 <= ... <= G_k = F_rank has
// every step index [G_i : G_{i-1}] <= n. The whole group has subindex 1.
std::size_t subindex(Subgroup const& h);

// Subindex of F inside H (F <= H, both finite index), computed in
// F_{basis_rank(H)} after rewriting F over basis(H).
std::size_t subindex_in(Subgroup const& f, Subgroup const& h);

}  // namespace freecomm
