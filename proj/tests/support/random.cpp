#include "random.hpp"

#include <algorithm>
#include <numeric>

#include "freecomm/commensurator.hpp"

namespace freecomm::testing {

Word random_word(Rng& rng, std::size_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Letter> gen(1, static_cast<Letter>(rank));
  std::bernoulli_distribution flip(0.5);
  std::vector<Letter> letters(len(rng));
  for (auto& l : letters) l = flip(rng) ? gen(rng) : -gen(rng);
  return Word(letters);
}

namespace {

bool transitive(std::vector<std::vector<std::int32_t>> const& perms,
                std::size_t m) {
  std::vector<char> seen(m, 0);
  std::vector<std::int32_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  // Finite groups: forward images alone reach the whole orbit.
  while (!stack.empty()) {
    auto const v = stack.back();
    stack.pop_back();
    for (auto const& p : perms) {
      auto const w = p[static_cast<std::size_t>(v)];
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == m;
}

}  // namespace

std::vector<std::vector<std::int32_t>> random_transitive_action(
    Rng& rng, std::size_t rank, std::size_t m) {
  std::vector<std::vector<std::int32_t>> perms(
      rank, std::vector<std::int32_t>(m));
  do {
    for (auto& p : perms) {
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
    }
  } while (!transitive(perms, m));
  return perms;
}

Subgroup random_cover(Rng& rng, std::size_t rank, std::size_t min_index,
                      std::size_t max_index) {
  std::uniform_int_distribution<std::size_t> pick(min_index, max_index);
  auto const m = pick(rng);
  auto const perms = random_transitive_action(rng, rank, m);
  std::vector<Edge> edges;
  for (std::size_t l = 0; l < rank; ++l) {
    for (std::size_t v = 0; v < m; ++v) {
      edges.push_back({static_cast<std::int32_t>(v), perms[l][v],
                       static_cast<std::uint32_t>(l + 1)});
    }
  }
  return Subgroup(CoreGraph::from_edges(rank, 0, edges));
}

std::vector<Word> random_nielsen(Rng& rng, std::size_t rank,
                                 std::size_t moves) {
  auto images = identity_images(rank);
  std::uniform_int_distribution<std::size_t> idx(0, rank - 1);
  std::uniform_int_distribution<int> kind(0, 3);
  for (std::size_t s = 0; s < moves; ++s) {
    auto const i = idx(rng);
    auto j = idx(rng);
    switch (kind(rng)) {
      case 0:  // x_i -> x_i x_j^{+-1}
        if (rank > 1) {
          while (j == i) j = idx(rng);
          images[i] = images[i] * (rng() % 2 ? images[j] : invert(images[j]));
        }
        break;
      case 1:  // x_i -> x_j^{+-1} x_i
        if (rank > 1) {
          while (j == i) j = idx(rng);
          images[i] = (rng() % 2 ? images[j] : invert(images[j])) * images[i];
        }
        break;
      case 2:
        images[i] = invert(images[i]);
        break;
      default:
        std::swap(images[i], images[j]);
        break;
    }
  }
  return images;
}

PartialIso random_iso(Rng& rng, std::size_t rank, std::size_t max_index,
                      std::size_t moves) {
  auto const h = random_cover(rng, rank, 1, max_index);
  auto const local = embed_aut(h.basis_rank(),
                               random_nielsen(rng, h.basis_rank(), moves));
  return transfer_to_overgroup(local, h);
}

}  // namespace freecomm::testing
