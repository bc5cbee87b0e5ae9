#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "freecomm/core_graph.hpp"
#include "freecomm/word.hpp"

namespace freecomm {

// A finitely generated subgroup of the free group F_rank, represented by
// its canonical core graph. Membership is "spells a basepoint loop".
//
// The canonical breadth-first spanning tree fixes a deterministic free
// basis: one element per non-tree edge, taken in (source, label) order,
// each spelled path(source) label path(target)^-1.
class Subgroup {
 public:
  // The whole group F_rank (the rose).
  explicit Subgroup(std::size_t rank);
  explicit Subgroup(CoreGraph graph);

  static Subgroup from_generators(std::size_t rank,
                                  std::span<Word const> generators);
  static Subgroup trivial(std::size_t rank);

  [[nodiscard]] std::size_t rank() const noexcept { return graph().rank(); }
  [[nodiscard]] CoreGraph const& graph() const noexcept {
    return data_->graph;
  }

  // Index in F_rank; nullopt when infinite.
  [[nodiscard]] std::optional<std::size_t> index() const noexcept;
  [[nodiscard]] bool is_finite_index() const noexcept {
    return graph().is_cover();
  }
  // Throws InfiniteIndex when infinite.
  [[nodiscard]] std::size_t finite_index() const;

  [[nodiscard]] bool contains(Word const& w) const;

  // Vertex reached by reading w from the basepoint, kNone if it falls off.
  [[nodiscard]] std::int32_t trace(Word const& w) const;

  [[nodiscard]] std::vector<Word> const& basis() const noexcept {
    return data_->basis;
  }
  [[nodiscard]] std::size_t basis_rank() const noexcept {
    return data_->basis.size();
  }

  // Rewrites w over the basis: letter +j stands for basis()[j-1].
  // Throws NotInSubgroup when w is not a member.
  [[nodiscard]] Word express_in_basis(Word const& w) const;

  // Spanning-tree word from the basepoint to v.
  [[nodiscard]] Word path_to(std::int32_t v) const;

  // One word per vertex (tree paths), basepoint first. Finite index only.
  [[nodiscard]] std::vector<Word> coset_representatives() const;

  // Length of the cycle of `generator` through the basepoint in the coset
  // action: minimal m > 0 with generator^m in H. Finite index only.
  [[nodiscard]] std::int64_t coset_order(Letter generator) const;

  friend bool operator==(Subgroup const& a, Subgroup const& b) {
    return a.data_ == b.data_ || a.graph() == b.graph();
  }

 private:
  Subgroup() = default;

  struct Data {
    CoreGraph graph{std::size_t{0}};
    std::vector<std::int32_t> tree_parent;   // kNone at the basepoint
    std::vector<Letter> tree_letter;         // letter read parent -> v
    std::vector<std::int32_t> edge_basis;    // per out-slot, 0 for tree
    std::vector<Word> basis;
  };

  static std::shared_ptr<Data const> build(CoreGraph graph);

  std::shared_ptr<Data const> data_;
};

bool equals(Subgroup const& h, Subgroup const& k);

// Fiber product of the two core graphs at the basepoint pair.
Subgroup intersect(Subgroup const& h, Subgroup const& k);

// Smallest subgroup containing both (wedge at the basepoints and fold).
Subgroup join(Subgroup const& h, Subgroup const& k);

// The subgroup generated by h and the extra words.
Subgroup join(Subgroup const& h, std::span<Word const> words);

// g^-1 H g
Subgroup conjugate_subgroup(Subgroup const& h, Word const& g);

// H is normal iff conjugation by every generator fixes it. Finite index only.
bool is_normal(Subgroup const& h);

// h <= k
bool is_subgroup_of(Subgroup const& h, Subgroup const& k);

// Kernel of F_rank -> Z/p sending generator i to weights[i-1]: the coset
// graph on residues reachable from 0. Throws when every weight is 0 mod p.
Subgroup kernel_mod_p(std::size_t rank, std::span<std::int64_t const> weights,
                      std::int64_t p);

// K <= H rewritten over basis(H): a subgroup of F_{basis_rank(H)}.
// Throws NotInSubgroup if K is not contained in H.
Subgroup relative_subgroup(Subgroup const& h, Subgroup const& k);

// [H : K] for K <= H; nullopt when infinite.
std::optional<std::size_t> relative_index(Subgroup const& h,
                                          Subgroup const& k);

}  // namespace freecomm
