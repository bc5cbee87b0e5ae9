#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freecomm/baumslag_solitar.hpp"
#include "freecomm/partial_iso.hpp"
#include "freecomm/subgroup.hpp"

namespace freecomm {

struct ScenarioCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ScenarioObject {
  std::string name;
  std::string kind;      // "subgroup", "iso" or "data"
  std::string document;  // JSON
};

struct ScenarioReport {
  std::string scenario;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ScenarioObject> objects;
  std::vector<ScenarioCheck> checks;

  [[nodiscard]] bool passed() const;
  // JSON with a fixed field order:
  // scenario, parameters, objects, checks, passed.
  [[nodiscard]] std::string to_document() const;
};

// H = ker(F_n -> Z/p, x_1 -> 1, rest -> 0) and the automorphism of H
// swapping its basis elements x^p and y = x_2.
ScenarioReport kernel_swap(std::size_t rank, std::int64_t p);

// The same H, with A = <x_1>, B = <x_2..x_n>. phi is the identity on the
// basis elements inside A or B and conjugation c -> b^-1 c b on the rest.
// b defaults to x_2 and must be a nontrivial word in x_2..x_n.
ScenarioReport free_product_twist(std::size_t rank, std::int64_t p,
                                  std::optional<Word> b = std::nullopt);

// BS(1, k) relation, psi: a -> a^p, t -> t on `samples` seeded random
// elements, and the index of its image.
ScenarioReport bs_group(std::int64_t k, std::int64_t p,
                        std::size_t samples = 1000, std::uint64_t seed = 1);

// Coprime pairs (l, r), both nonzero, |l|, |r| <= bound, with
// |l^{n-1} + l^{n-2} r + ... + r^{n-1}| == 1. Sorted. Throws for n < 3.
std::vector<std::pair<std::int64_t, std::int64_t>> hnn_obstruction(
    std::int64_t n, std::int64_t bound);

ScenarioReport hnn_report(std::int64_t n, std::int64_t bound);

}  // namespace freecomm
