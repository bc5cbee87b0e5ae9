#pragma once

// Slow, independent reimplementations used only to cross-check the library.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "freecomm/core_graph.hpp"
#include "freecomm/subgroup.hpp"
#include "freecomm/word.hpp"

namespace freecomm::testing {

// Coset action of a finite-index subgroup: perms[l][v] = v . x_{l+1}.
std::vector<std::vector<std::int32_t>> coset_action(Subgroup const& h);

// Blocks of imprimitivity containing the basepoint coset, as sorted vertex
// lists. Overgroups of H correspond one-to-one to these blocks.
// Exhaustive over subsets; fine up to index ~16.
std::vector<std::vector<std::int32_t>> blocks_by_subsets(Subgroup const& h);

// Same set, grown from minimal blocks <0, v> by union-find closure.
std::vector<std::vector<std::int32_t>> blocks_by_closure(Subgroup const& h);

// Subindex from a block list: minimax over chains of blocks ordered by
// inclusion, step index = size ratio.
std::size_t block_subindex(std::vector<std::vector<std::int32_t>> blocks);

// Folding by repeated scan-and-merge in an order driven by `seed`.
// Returns the folded, cored graph (canonically renumbered).
CoreGraph naive_fold(std::size_t rank, std::vector<Word> const& generators,
                     std::uint64_t seed);

// Direct evaluation with 128-bit integers.
std::set<std::pair<std::int64_t, std::int64_t>> hnn_bruteforce(
    std::int64_t n, std::int64_t bound);

// Left cosets of p Z[1/k] x| <t> in BS(1,k) met by a random walk of the
// given length; equals the index once the walk has visited them all.
std::size_t bs_cosets_by_walk(std::int64_t k, std::int64_t p,
                              std::size_t steps, std::uint64_t seed);

}  // namespace freecomm::testing
