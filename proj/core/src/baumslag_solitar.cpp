#include "freecomm/baumslag_solitar.hpp"

#include <numeric>
#include <vector>

#include "freecomm/error.hpp"

namespace freecomm {

namespace {

BigInt pow_big(BigInt const& base, std::uint64_t e) {
  BigInt r = 1;
  BigInt b = base;
  while (e != 0) {
    if (e & 1U) r *= b;
    b *= b;
    e >>= 1U;
  }
  return r;
}

// x * k^shift as (numerator, denominator exponent), not yet normalized.
std::pair<BigInt, std::uint64_t> scaled(BSElement const& x,
                                        std::int64_t shift) {
  if (shift >= 0) {
    return {x.num() * pow_big(x.k(), static_cast<std::uint64_t>(shift)),
            x.denom_exp()};
  }
  return {x.num(), x.denom_exp() + static_cast<std::uint64_t>(-shift)};
}

void check_same_k(BSElement const& a, BSElement const& b) {
  if (a.k() != b.k()) throw Error("BS(1,k) elements with different k");
}

}  // namespace

BSElement::BSElement(BigInt k, BigInt num, std::uint64_t denom_exp,
                     std::int64_t texp)
    : k_(std::move(k)),
      num_(std::move(num)),
      denom_exp_(denom_exp),
      texp_(texp) {
  if (abs(k_) < 2) throw Error("BS(1,k) needs |k| >= 2");
  if (num_ == 0) denom_exp_ = 0;
  while (denom_exp_ > 0 && num_ % k_ == 0) {
    num_ /= k_;
    --denom_exp_;
  }
}

BSElement bs_mul(BSElement const& a, BSElement const& b) {
  check_same_k(a, b);
  auto [bn, be] = scaled(b, a.texp());
  auto const e = std::max(a.denom_exp(), be);
  BigInt num = a.num() * pow_big(a.k(), e - a.denom_exp()) +
               bn * pow_big(a.k(), e - be);
  return {a.k(), std::move(num), e, a.texp() + b.texp()};
}

BSElement bs_inv(BSElement const& a) {
  auto [n, e] = scaled(a, -a.texp());
  return {a.k(), -n, e, -a.texp()};
}

BSElement bs_pow(BSElement const& a, std::int64_t n) {
  auto base = n < 0 ? bs_inv(a) : a;
  auto e = n < 0 ? -static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  auto result = BSElement::identity(a.k());
  while (e != 0) {
    if (e & 1U) result = bs_mul(result, base);
    base = bs_mul(base, base);
    e >>= 1U;
  }
  return result;
}

BSElement bs_psi(BSElement const& a, BigInt const& p) {
  return {a.k(), a.num() * p, a.denom_exp(), a.texp()};
}

std::int64_t bs_image_index(std::int64_t k, std::int64_t p) {
  if (k == 0 || (k < 0 ? -k : k) < 2) throw Error("bs_image_index: |k| < 2");
  if (p < 2) throw Error("bs_image_index: p must be at least 2");
  if (std::gcd(k, p) != 1) {
    throw Error("bs_image_index: p = " + std::to_string(p) +
                " shares a factor with k = " + std::to_string(k));
  }
  auto const km = ((k % p) + p) % p;
  std::int64_t k_inv = 1;
  while ((km * k_inv) % p != 1) ++k_inv;
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  std::vector<std::int64_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto const r = queue[head];
    for (auto s : {(r + 1) % p, (r + p - 1) % p, (r * km) % p,
                   (r * k_inv) % p}) {
      if (!seen[static_cast<std::size_t>(s)]) {
        seen[static_cast<std::size_t>(s)] = true;
        queue.push_back(s);
      }
    }
  }
  return static_cast<std::int64_t>(queue.size());
}

std::string to_string(BSElement const& a) {
  std::string x = a.num().str();
  if (a.denom_exp() != 0) {
    x += "/" + a.k().str() + "^" + std::to_string(a.denom_exp());
  }
  return "(" + x + ", t^" + std::to_string(a.texp()) + ")";
}

}  // namespace freecomm
