#include "freecomm/commensurator.hpp"

#include <algorithm>
#include <unordered_map>

#include "freecomm/error.hpp"
#include "freecomm/lattice.hpp"
#include "iso_internal.hpp"

namespace freecomm {

using Reason = InvalidIso::Reason;

bool equivalent(PartialIso const& alpha, PartialIso const& beta) {
  if (alpha.rank() != beta.rank()) {
    throw RankError("equivalent: ambient ranks differ");
  }
  auto const meet = intersect(alpha.domain(), beta.domain());
  return std::all_of(meet.basis().begin(), meet.basis().end(),
                     [&](Word const& b) {
                       return alpha.apply(b) == beta.apply(b);
                     });
}

namespace {

// Depth-first coset enumeration over the free group on the basis of the
// intersection. Slots are scanned coset by coset, label by label,
// outgoing before incoming; the first empty slot is filled either with an
// existing coset (closing a loop, which must be an agreement element) or
// with the next new coset.
class AgreementSearch {
 public:
  AgreementSearch(std::vector<Word> alpha_images,
                  std::vector<Word> beta_images, std::size_t max_cosets)
      : rank_(alpha_images.size()),
        max_cosets_(max_cosets),
        alpha_(std::move(alpha_images)),
        beta_(std::move(beta_images)) {}

  bool run() {
    if (rank_ == 0) return true;
    out_.assign(max_cosets_ * rank_, kFree);
    in_.assign(max_cosets_ * rank_, kFree);
    paths_.assign(max_cosets_, Word{});
    cosets_ = 1;
    return search(0);
  }

 private:
  static constexpr std::int32_t kFree = -1;

  std::size_t slot(std::size_t c, std::size_t g) const {
    return c * rank_ + g;
  }

  bool agrees(Word const& loop) const {
    return apply_hom(alpha_, loop) == apply_hom(beta_, loop);
  }

  // `from` is where scanning may resume: every slot before it is filled.
  bool search(std::size_t from) {
    auto const total = cosets_ * rank_ * 2;
    std::size_t pos = from;
    while (pos < total) {
      auto const c = pos / (2 * rank_);
      auto const g = (pos / 2) % rank_;
      auto const outgoing = pos % 2 == 0;
      auto const filled =
          outgoing ? out_[slot(c, g)] != kFree : in_[slot(c, g)] != kFree;
      if (!filled) break;
      ++pos;
    }
    if (pos == total) return true;

    auto const c = pos / (2 * rank_);
    auto const g = (pos / 2) % rank_;
    auto const outgoing = pos % 2 == 0;
    auto const letter = Word::generator(static_cast<std::uint32_t>(g + 1));
    auto& here = outgoing ? out_[slot(c, g)] : in_[slot(c, g)];

    for (std::size_t t = 0; t < cosets_; ++t) {
      auto& there = outgoing ? in_[slot(t, g)] : out_[slot(t, g)];
      if (there != kFree) continue;
      auto const loop = outgoing
                            ? paths_[c] * letter * invert(paths_[t])
                            : paths_[t] * letter * invert(paths_[c]);
      if (!agrees(loop)) continue;
      here = static_cast<std::int32_t>(t);
      there = static_cast<std::int32_t>(c);
      if (search(pos + 1)) return true;
      here = kFree;
      there = kFree;
    }

    if (cosets_ < max_cosets_) {
      auto const t = cosets_++;
      auto& there = outgoing ? in_[slot(t, g)] : out_[slot(t, g)];
      paths_[t] = outgoing ? paths_[c] * letter : paths_[c] * invert(letter);
      here = static_cast<std::int32_t>(t);
      there = static_cast<std::int32_t>(c);
      if (search(pos + 1)) return true;
      here = kFree;
      there = kFree;
      --cosets_;
    }
    return false;
  }

  std::size_t rank_;
  std::size_t max_cosets_;
  std::vector<Word> alpha_;
  std::vector<Word> beta_;
  std::vector<std::int32_t> out_;
  std::vector<std::int32_t> in_;
  std::vector<Word> paths_;
  std::size_t cosets_ = 0;
};

}  // namespace

bool equivalent_bruteforce(PartialIso const& alpha, PartialIso const& beta,
                           std::size_t max_index) {
  if (alpha.rank() != beta.rank()) {
    throw RankError("equivalent_bruteforce: ambient ranks differ");
  }
  auto const meet = intersect(alpha.domain(), beta.domain());
  auto const base_index = meet.finite_index();
  if (base_index > max_index) return false;
  std::vector<Word> a;
  std::vector<Word> b;
  for (auto const& w : meet.basis()) {
    a.push_back(alpha.apply(w));
    b.push_back(beta.apply(w));
  }
  return AgreementSearch(std::move(a), std::move(b), max_index / base_index)
      .run();
}

bool is_identity_class(PartialIso const& f) {
  return equivalent(f, identity_iso(f.domain()));
}

ExtensionResult compute_extension(PartialIso const& f) {
  auto const rank = f.rank();
  std::vector<Word> candidate;
  candidate.reserve(rank);
  for (std::uint32_t i = 1; i <= rank; ++i) {
    auto const g = Word::generator(i);
    auto const m = f.domain().coset_order(static_cast<Letter>(i));
    auto image = f.apply(power(g, m));
    auto root = nth_root(image, m);
    if (!root) {
      auto reason = "generator " + to_string(g) + ": " + to_string(image) +
                    " has no " + std::to_string(m) + "-th root";
      return NoExtension{i, m, std::move(image), std::move(reason)};
    }
    candidate.push_back(std::move(*root));
  }
  try {
    (void)embed_aut(rank, candidate);
  } catch (InvalidIso const& e) {
    return NoExtension{std::nullopt, 0, {},
                       std::string("root candidate rejected: ") + e.what()};
  }
  for (auto const& b : f.domain().basis()) {
    if (apply_hom(candidate, b) != f.apply(b)) {
      return NoExtension{std::nullopt, 0, b,
                         "root candidate disagrees with the map on basis "
                         "element " +
                             to_string(b)};
    }
  }
  return Extension{std::move(candidate)};
}

bool extendAB_certificate(PartialIso const& f, Subgroup const& a,
                          Subgroup const& b) {
  if (a.rank() != f.rank() || b.rank() != f.rank()) {
    throw RankError("extendAB_certificate: rank mismatch");
  }
  if (join(a, b) != Subgroup(f.rank())) {
    throw Error("extendAB_certificate: A and B do not generate the group");
  }
  if (f.domain() != f.codomain()) {
    throw Error("extendAB_certificate: map is not an automorphism of its "
                "domain");
  }
  auto fixes = [&f](Subgroup const& part) {
    auto const& basis = part.basis();
    return std::all_of(basis.begin(), basis.end(),
                       [&f](Word const& w) { return f.apply(w) == w; });
  };
  return !is_identity_class(f) && fixes(intersect(f.domain(), a)) &&
         fixes(intersect(f.domain(), b));
}

namespace {

// For each vertex v of the cover of `normal`, a word of h reaching v.
std::unordered_map<std::int32_t, Word> coset_witnesses(Subgroup const& h,
                                                       Subgroup const& normal) {
  auto const& a = h.graph();
  auto const& b = normal.graph();
  auto const rank = h.rank();
  auto const nb = b.vertex_count();
  auto key = [nb](std::int32_t x, std::int32_t y) {
    return static_cast<std::size_t>(x) * nb + static_cast<std::size_t>(y);
  };
  struct Visit {
    std::size_t parent;
    Letter letter;
  };
  std::unordered_map<std::size_t, Visit> visited;
  std::vector<std::pair<std::int32_t, std::int32_t>> queue{{0, 0}};
  visited.emplace(key(0, 0), Visit{key(0, 0), 0});
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto const [x, y] = queue[head];
    for (std::uint32_t l = 1; l <= rank; ++l) {
      for (Letter s : {static_cast<Letter>(l), -static_cast<Letter>(l)}) {
        auto const nx = a.step(x, s);
        auto const ny = b.step(y, s);
        if (nx == CoreGraph::kNone || ny == CoreGraph::kNone) continue;
        if (visited.try_emplace(key(nx, ny), Visit{key(x, y), s}).second) {
          queue.emplace_back(nx, ny);
        }
      }
    }
  }
  std::unordered_map<std::int32_t, Word> witnesses;
  for (auto const& [x, y] : queue) {
    if (x != 0 || witnesses.contains(y)) continue;
    std::vector<Letter> rev;
    for (auto k = key(x, y); k != key(0, 0);) {
      auto const& v = visited.at(k);
      rev.push_back(v.letter);
      k = v.parent;
    }
    witnesses.emplace(y, Word(std::vector<Letter>(rev.rbegin(), rev.rend())));
  }
  return witnesses;
}

}  // namespace

PartialIso extend_pair(PartialIso const& f1, PartialIso const& f2) {
  if (f1.rank() != f2.rank()) throw RankError("extend_pair: rank mismatch");
  auto const& h1 = f1.domain();
  auto const& h2 = f2.domain();
  if (!is_normal(h2)) {
    throw InvalidIso(Reason::kHypothesis,
                     "extend_pair: second domain is not normal");
  }
  if (!equivalent(f1, f2)) {
    throw InvalidIso(Reason::kHypothesis,
                     "extend_pair: maps disagree on the intersection of "
                     "their domains");
  }
  auto const joined = join(h1, h2);
  auto const witnesses = coset_witnesses(h1, h2);
  std::vector<Word> images;
  images.reserve(joined.basis_rank());
  for (auto const& j : joined.basis()) {
    auto const& w1 = witnesses.at(h2.trace(j));
    // Same H2-coset and H2 normal, so w1^-1 j lies in H2.
    images.push_back(f1.apply(w1) * f2.apply(invert(w1) * j));
  }
  return make_iso(joined, std::move(images));
}

PartialIso transfer_to_subgroup(PartialIso const& alpha, Subgroup const& h) {
  if (h.rank() != alpha.rank()) {
    throw RankError("transfer_to_subgroup: rank mismatch");
  }
  if (!h.is_finite_index()) {
    throw InfiniteIndex("transfer_to_subgroup: subgroup has infinite index");
  }
  auto const inverse = invert_iso(alpha);
  auto const target = intersect(alpha.codomain(), h);
  std::vector<Word> preimages;
  preimages.reserve(target.basis_rank());
  for (auto const& w : target.basis()) preimages.push_back(inverse.apply(w));
  auto const domain =
      intersect(Subgroup::from_generators(alpha.rank(), preimages), h);
  auto const restricted = restrict(alpha, domain);

  auto const& hb = h.basis();
  auto local_domain = relative_subgroup(h, domain);
  std::vector<Word> images;
  images.reserve(local_domain.basis_rank());
  for (auto const& d : local_domain.basis()) {
    images.push_back(h.express_in_basis(restricted.apply(apply_hom(hb, d))));
  }
  return make_iso(std::move(local_domain),
                  relative_subgroup(h, restricted.codomain()),
                  std::move(images));
}

PartialIso transfer_to_overgroup(PartialIso const& beta, Subgroup const& h) {
  if (beta.rank() != h.basis_rank()) {
    throw RankError("transfer_to_overgroup: iso rank " +
                    std::to_string(beta.rank()) +
                    " does not match the subgroup's basis rank " +
                    std::to_string(h.basis_rank()));
  }
  if (!h.is_finite_index()) {
    throw InfiniteIndex("transfer_to_overgroup: subgroup has infinite index");
  }
  auto const& hb = h.basis();
  std::vector<Word> gens;
  gens.reserve(beta.domain().basis_rank());
  for (auto const& b : beta.domain().basis()) gens.push_back(apply_hom(hb, b));
  auto domain = Subgroup::from_generators(h.rank(), gens);
  std::vector<Word> images;
  images.reserve(domain.basis_rank());
  for (auto const& e : domain.basis()) {
    images.push_back(apply_hom(hb, beta.apply(h.express_in_basis(e))));
  }
  return make_iso(std::move(domain), std::move(images));
}

std::size_t subindex_of_iso(PartialIso const& f) {
  return std::max(subindex(f.domain()), subindex(f.codomain()));
}

}  // namespace freecomm
