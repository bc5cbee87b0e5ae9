#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "freecomm/subgroup.hpp"
#include "freecomm/word.hpp"

namespace freecomm {

// An isomorphism between two finite-index subgroups of F_rank, given by the
// images of the canonical basis of its domain.
//
// Invariants (checked by make_iso): every image lies in the codomain, the
// images fold to exactly the codomain, and they span a subgroup of rank
// |basis(domain)|. Free groups are hopfian, so the last two together
// certify bijectivity.
class PartialIso {
 public:
  [[nodiscard]] std::size_t rank() const noexcept { return domain_.rank(); }
  [[nodiscard]] Subgroup const& domain() const noexcept { return domain_; }
  [[nodiscard]] Subgroup const& codomain() const noexcept { return codomain_; }
  [[nodiscard]] std::vector<Word> const& images() const noexcept {
    return images_;
  }

  // Throws NotInSubgroup when w is outside the domain.
  [[nodiscard]] Word apply(Word const& w) const;

  friend PartialIso make_iso(Subgroup domain, Subgroup codomain,
                             std::vector<Word> images);

 private:
  struct Trusted {};
  PartialIso(Trusted, Subgroup domain, Subgroup codomain,
             std::vector<Word> images)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        images_(std::move(images)) {}

  Subgroup domain_;
  Subgroup codomain_;
  std::vector<Word> images_;

  friend PartialIso unchecked_iso(Subgroup domain, Subgroup codomain,
                                  std::vector<Word> images);
};

// Validates and builds; throws InvalidIso naming the failed invariant.
PartialIso make_iso(Subgroup domain, Subgroup codomain,
                    std::vector<Word> images);

// Domain given, codomain folded from the images.
PartialIso make_iso(Subgroup domain, std::vector<Word> images);

PartialIso identity_iso(Subgroup const& h);

// Domain and codomain swapped; apply(invert_iso(f), apply(f, w)) == w.
PartialIso invert_iso(PartialIso const& f);

// Product alpha then beta, defined on alpha^-1(codomain(alpha) cap
// domain(beta)). apply(compose(a, b), w) == apply(b, apply(a, w)).
PartialIso compose(PartialIso const& alpha, PartialIso const& beta);

// Left-to-right product. Throws on an empty list.
PartialIso compose_many(std::span<PartialIso const> isos);

// f restricted to a finite-index K <= domain(f).
PartialIso restrict(PartialIso const& f, Subgroup const& k);

// The automorphism x_i -> images[i-1] of F_rank as a partial iso on the
// whole group. Throws InvalidIso(kNotAutomorphism) otherwise.
PartialIso embed_aut(std::size_t rank, std::vector<Word> images);

}  // namespace freecomm
