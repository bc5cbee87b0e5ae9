#pragma once

#include <cstdint>
#include <string>

#include "freecomm/word.hpp"

namespace freecomm {

// Element (x, t^i) of BS(1, k) = Z[1/k] x| <t>, where t acts on Z[1/k] by
// multiplication by k. x = num / k^denom_exp, kept normalized: either
// denom_exp == 0 or k does not divide num. |k| >= 2.
class BSElement {
 public:
  BSElement(BigInt k, BigInt num, std::uint64_t denom_exp, std::int64_t texp);

  static BSElement identity(BigInt k) { return {std::move(k), 0, 0, 0}; }
  // a = (1, t^0)
  static BSElement a(BigInt k) { return {std::move(k), 1, 0, 0}; }
  // t = (0, t^1)
  static BSElement t(BigInt k) { return {std::move(k), 0, 0, 1}; }

  [[nodiscard]] BigInt const& k() const noexcept { return k_; }
  [[nodiscard]] BigInt const& num() const noexcept { return num_; }
  [[nodiscard]] std::uint64_t denom_exp() const noexcept { return denom_exp_; }
  [[nodiscard]] std::int64_t texp() const noexcept { return texp_; }

  friend bool operator==(BSElement const&, BSElement const&) = default;

 private:
  BigInt k_;
  BigInt num_;
  std::uint64_t denom_exp_;
  std::int64_t texp_;
};

// (x, i)(y, j) = (x + k^i y, i + j). Throws when the k differ.
BSElement bs_mul(BSElement const& a, BSElement const& b);
BSElement bs_inv(BSElement const& a);
BSElement bs_pow(BSElement const& a, std::int64_t n);
// (x, i) -> (p x, i), the endomorphism a -> a^p, t -> t.
BSElement bs_psi(BSElement const& a, BigInt const& p);

// Index of psi(G) = p Z[1/k] x| <t> in G: orbit size of the coset of the
// identity under a (r -> r + 1) and t (r -> k r) on Z[1/k] / p Z[1/k].
// Requires gcd(p, k) == 1.
std::int64_t bs_image_index(std::int64_t k, std::int64_t p);

std::string to_string(BSElement const& a);

}  // namespace freecomm
