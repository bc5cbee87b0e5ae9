#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "freecomm/partial_iso.hpp"
#include "freecomm/subgroup.hpp"

namespace freecomm {

// alpha ~ beta iff they agree on the basis of domain(alpha) cap
// domain(beta). Free groups have unique roots, so agreement on any common
// finite-index subgroup forces agreement on the whole intersection.
bool equivalent(PartialIso const& alpha, PartialIso const& beta);

// Test oracle for `equivalent` straight from the definition: searches for a
// finite-index H <= domain(alpha) cap domain(beta) with [F : H] <= max_index
// on whose basis alpha and beta agree. Enumerates coset tables of the
// intersection, pruning a branch as soon as a closed loop separates the
// two maps.
bool equivalent_bruteforce(PartialIso const& alpha, PartialIso const& beta,
                           std::size_t max_index);

bool is_identity_class(PartialIso const& f);

struct Extension {
  std::vector<Word> images;  // generator images of the automorphism
};

struct NoExtension {
  // Generator whose coset-power image has no root, when that is the cause.
  std::optional<std::uint32_t> generator;
  std::int64_t exponent = 0;  // coset order m of that generator
  Word word;                  // f(generator^m), the root-free word
  std::string reason;
};

using ExtensionResult = std::variant<Extension, NoExtension>;

// Tries to extend f to an automorphism of the ambient free group. For each
// generator g with coset order m, the only candidate image is the m-th
// root of f(g^m); the candidate is then validated as an automorphism that
// agrees with f on basis(domain(f)).
ExtensionResult compute_extension(PartialIso const& f);

// Sound non-extendability certificate for an automorphism f of H when
// <A, B> is the whole group: f is not the identity class but fixes
// H cap A and H cap B pointwise. Throws when <A, B> is proper or f is not
// an automorphism of its domain.
bool extendAB_certificate(PartialIso const& f, Subgroup const& a,
                          Subgroup const& b);

// Common extension of f1 and f2 to join(H1, H2) = H1 H2, defined by
// f(h1 h2) = f1(h1) f2(h2). Requires H2 normal and agreement of f1, f2 on
// H1 cap H2; throws InvalidIso(kHypothesis) otherwise.
PartialIso extend_pair(PartialIso const& f1, PartialIso const& f2);

// Comm(F) -> Comm(H) for finite-index H: restricts alpha to
// alpha^-1(G2 cap H) cap H and rewrites everything over basis(H). The
// result lives in F_{basis_rank(H)}.
PartialIso transfer_to_subgroup(PartialIso const& alpha, Subgroup const& h);

// Comm(H) -> Comm(F): beta is a partial iso of F_{basis_rank(H)}, read
// through the basis of H.
PartialIso transfer_to_overgroup(PartialIso const& beta, Subgroup const& h);

// max(subindex(domain), subindex(codomain))
std::size_t subindex_of_iso(PartialIso const& f);

// An element of Comm(F_rank): a representative plus the equivalence test.
class CommClass {
 public:
  explicit CommClass(PartialIso representative)
      : rep_(std::move(representative)) {}

  [[nodiscard]] PartialIso const& representative() const noexcept {
    return rep_;
  }
  [[nodiscard]] CommClass inverse() const { return CommClass(invert_iso(rep_)); }

  friend CommClass operator*(CommClass const& a, CommClass const& b) {
    return CommClass(compose(a.rep_, b.rep_));
  }
  friend bool operator==(CommClass const& a, CommClass const& b) {
    return equivalent(a.rep_, b.rep_);
  }

 private:
  PartialIso rep_;
};

}  // namespace freecomm
