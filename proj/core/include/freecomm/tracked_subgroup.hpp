#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "freecomm/subgroup.hpp"
#include "freecomm/word.hpp"

namespace freecomm {

// A subgroup together with a chosen free basis (g_1, ..., g_m) of it.
// express() rewrites members over that tuple: letter +j stands for g_j.
//
// Built by folding the bouquet of the g_j while carrying, on every edge, a
// tag word over the tuple; a basepoint loop's tag product is its rewriting.
class TrackedSubgroup {
 public:
  // Throws InvalidIso(kRankDrop) when the tuple is not a free basis of the
  // subgroup it generates (it contains the identity or satisfies a
  // relation).
  TrackedSubgroup(std::size_t rank, std::span<Word const> generators);
  ~TrackedSubgroup();
  TrackedSubgroup(TrackedSubgroup&&) noexcept;
  TrackedSubgroup& operator=(TrackedSubgroup&&) noexcept;

  [[nodiscard]] Subgroup const& subgroup() const noexcept { return subgroup_; }
  [[nodiscard]] std::span<Word const> generators() const noexcept {
    return generators_;
  }

  // Throws NotInSubgroup for non-members.
  [[nodiscard]] Word express(Word const& w) const;

 private:
  struct Tables;

  std::vector<Word> generators_;
  Subgroup subgroup_;
  std::unique_ptr<Tables> tables_;
};

}  // namespace freecomm
