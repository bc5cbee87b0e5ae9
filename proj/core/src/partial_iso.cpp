#include "freecomm/partial_iso.hpp"

#include "freecomm/error.hpp"
#include "freecomm/tracked_subgroup.hpp"
#include "iso_internal.hpp"

namespace freecomm {

using Reason = InvalidIso::Reason;

PartialIso unchecked_iso(Subgroup domain, Subgroup codomain,
                         std::vector<Word> images) {
  return PartialIso(PartialIso::Trusted{}, std::move(domain),
                    std::move(codomain), std::move(images));
}

Word PartialIso::apply(Word const& w) const {
  return apply_hom(images_, domain_.express_in_basis(w));
}

PartialIso make_iso(Subgroup domain, Subgroup codomain,
                    std::vector<Word> images) {
  if (domain.rank() != codomain.rank()) {
    throw InvalidIso(Reason::kBasisCount, "domain and codomain ranks differ");
  }
  if (!domain.is_finite_index()) {
    throw InvalidIso(Reason::kInfiniteIndex, "domain has infinite index");
  }
  if (!codomain.is_finite_index()) {
    throw InvalidIso(Reason::kInfiniteIndex, "codomain has infinite index");
  }
  if (images.size() != domain.basis_rank()) {
    throw InvalidIso(Reason::kBasisCount,
                     "expected " + std::to_string(domain.basis_rank()) +
                         " images (one per domain basis element), got " +
                         std::to_string(images.size()));
  }
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j].max_index() > domain.rank() ||
        !codomain.contains(images[j])) {
      throw InvalidIso(Reason::kImageOutsideCodomain,
                       "image " + std::to_string(j + 1) + " (" +
                           to_string(images[j]) + ") is not in the codomain");
    }
  }
  auto const spanned = Subgroup::from_generators(domain.rank(), images);
  if (spanned.basis_rank() != images.size()) {
    throw InvalidIso(Reason::kRankDrop,
                     "images span a subgroup of rank " +
                         std::to_string(spanned.basis_rank()) + " < " +
                         std::to_string(images.size()) +
                         " (map is not injective)");
  }
  if (spanned != codomain) {
    throw InvalidIso(Reason::kImageMismatch,
                     "images generate a proper subgroup of the codomain");
  }
  return unchecked_iso(std::move(domain), std::move(codomain),
                       std::move(images));
}

PartialIso make_iso(Subgroup domain, std::vector<Word> images) {
  for (auto const& w : images) {
    if (w.max_index() > domain.rank()) {
      throw InvalidIso(Reason::kImageOutsideCodomain,
                       "image " + to_string(w) + " exceeds the rank");
    }
  }
  auto codomain = Subgroup::from_generators(domain.rank(), images);
  return make_iso(std::move(domain), std::move(codomain), std::move(images));
}

PartialIso identity_iso(Subgroup const& h) {
  if (!h.is_finite_index()) {
    throw InvalidIso(Reason::kInfiniteIndex, "domain has infinite index");
  }
  return unchecked_iso(h, h, h.basis());
}

PartialIso invert_iso(PartialIso const& f) {
  TrackedSubgroup const tracked(f.rank(), f.images());
  std::vector<Word> images;
  images.reserve(f.codomain().basis_rank());
  for (auto const& c : f.codomain().basis()) {
    images.push_back(apply_hom(f.domain().basis(), tracked.express(c)));
  }
  return unchecked_iso(f.codomain(), f.domain(), std::move(images));
}

PartialIso compose(PartialIso const& alpha, PartialIso const& beta) {
  if (alpha.rank() != beta.rank()) {
    throw RankError("compose: ambient ranks differ");
  }
  auto const meet = intersect(alpha.codomain(), beta.domain());
  TrackedSubgroup const tracked(alpha.rank(), alpha.images());
  std::vector<Word> preimages;
  preimages.reserve(meet.basis_rank());
  for (auto const& k : meet.basis()) {
    preimages.push_back(apply_hom(alpha.domain().basis(), tracked.express(k)));
  }
  auto domain = Subgroup::from_generators(alpha.rank(), preimages);
  std::vector<Word> images;
  images.reserve(domain.basis_rank());
  for (auto const& d : domain.basis()) {
    images.push_back(beta.apply(alpha.apply(d)));
  }
  auto codomain = Subgroup::from_generators(alpha.rank(), images);
  return unchecked_iso(std::move(domain), std::move(codomain),
                       std::move(images));
}

PartialIso compose_many(std::span<PartialIso const> isos) {
  if (isos.empty()) throw Error("compose_many: empty product");
  auto result = isos.front();
  for (auto const& f : isos.subspan(1)) result = compose(result, f);
  return result;
}

PartialIso restrict(PartialIso const& f, Subgroup const& k) {
  if (k.rank() != f.rank()) throw RankError("restrict: rank mismatch");
  if (!k.is_finite_index()) {
    throw InvalidIso(Reason::kInfiniteIndex,
                     "restriction target has infinite index");
  }
  if (!is_subgroup_of(k, f.domain())) {
    throw NotInSubgroup("restrict: subgroup is not contained in the domain");
  }
  std::vector<Word> images;
  images.reserve(k.basis_rank());
  for (auto const& b : k.basis()) images.push_back(f.apply(b));
  auto codomain = Subgroup::from_generators(f.rank(), images);
  return unchecked_iso(k, std::move(codomain), std::move(images));
}

PartialIso embed_aut(std::size_t rank, std::vector<Word> images) {
  if (images.size() != rank) {
    throw InvalidIso(Reason::kNotAutomorphism,
                     "expected " + std::to_string(rank) +
                         " generator images, got " +
                         std::to_string(images.size()));
  }
  Subgroup const whole(rank);
  try {
    return make_iso(whole, whole, std::move(images));
  } catch (InvalidIso const& e) {
    throw InvalidIso(Reason::kNotAutomorphism,
                     std::string("not an automorphism: ") + e.what());
  }
}

}  // namespace freecomm
