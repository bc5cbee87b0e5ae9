#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace freecomm {

using BigInt = boost::multiprecision::cpp_int;

// A letter is a signed generator index: +i is the i-th free generator
// (1-based), -i its inverse. Zero is never a valid letter.
using Letter = std::int32_t;

struct Generator {
  std::uint32_t index;  // 1-based
  bool inverse = false;

  [[nodiscard]] constexpr Letter letter() const noexcept {
    return inverse ? -static_cast<Letter>(index) : static_cast<Letter>(index);
  }
  [[nodiscard]] static constexpr Generator from_letter(Letter l) noexcept {
    return l < 0 ? Generator{static_cast<std::uint32_t>(-l), true}
                 : Generator{static_cast<std::uint32_t>(l), false};
  }
};

[[nodiscard]] constexpr std::uint32_t letter_index(Letter l) noexcept {
  return static_cast<std::uint32_t>(l < 0 ? -l : l);
}

// Freely reduced word in a free group. The ambient rank is not stored;
// operations that need it take it explicitly.
class Word {
 public:
  Word() = default;

  // Freely reduces `letters`. Throws RankError for a zero letter, or for an
  // index above `rank` when `rank` is given.
  explicit Word(std::span<Letter const> letters,
                std::optional<std::size_t> rank = std::nullopt);
  Word(std::initializer_list<Letter> letters);

  [[nodiscard]] static Word generator(std::uint32_t index) {
    return Word{static_cast<Letter>(index)};
  }

  [[nodiscard]] std::span<Letter const> letters() const noexcept {
    return letters_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }

  // Largest generator index that occurs, 0 for the identity.
  [[nodiscard]] std::uint32_t max_index() const noexcept;

  friend bool operator==(Word const&, Word const&) = default;
  // Shortlex order.
  friend std::strong_ordering operator<=>(Word const& a, Word const& b);

 private:
  struct Trusted {};
  Word(Trusted, std::vector<Letter> reduced) : letters_(std::move(reduced)) {}

  std::vector<Letter> letters_;

  friend Word concat(Word const& u, Word const& v);
  friend Word invert(Word const& w);
  friend Word power(Word const& w, std::int64_t n);
  friend Word apply_hom(std::span<Word const> images, Word const& w);
};

// Free reduction of a raw letter sequence.
Word reduce(std::span<Letter const> letters,
            std::optional<std::size_t> rank = std::nullopt);

Word concat(Word const& u, Word const& v);
Word invert(Word const& w);
Word power(Word const& w, std::int64_t n);
// g^-1 w g
Word conjugate(Word const& w, Word const& g);

Word operator*(Word const& u, Word const& v);

// Splits w = u^-1 c u with c cyclically reduced.
struct CyclicDecomposition {
  Word conjugator;  // u
  Word core;        // c
};
CyclicDecomposition cyclic_decomposition(Word const& w);

// The unique v with v^n = w, if it exists. n must be positive.
std::optional<Word> nth_root(Word const& w, std::int64_t n);

// Substitutes generator i by images[i-1] (inverse for inverse letters).
// Throws RankError when w uses a generator beyond images.size().
Word apply_hom(std::span<Word const> images, Word const& w);

// Exponent-sum vector of length `rank`.
std::vector<BigInt> abelianize(Word const& w, std::size_t rank);

struct NotPrimitive {
  BigInt divisor;
  friend bool operator==(NotPrimitive const&, NotPrimitive const&) = default;
};
struct Inconclusive {
  friend bool operator==(Inconclusive const&, Inconclusive const&) = default;
};
using ImprimitivityCertificate = std::variant<NotPrimitive, Inconclusive>;

// One-sided primitivity test: NotPrimitive(d) when the gcd d of the
// exponent sums exceeds 1. Never claims primitivity. Throws on the identity.
ImprimitivityCertificate imprimitivity_certificate(Word const& w,
                                                   std::size_t rank);

// Text syntax: generator i is the i-th lowercase letter, its inverse the
// uppercase one; "" or "1" is the identity. Rank is capped at 26 here.
Word parse_word(std::string_view text,
                std::optional<std::size_t> rank = std::nullopt);
std::string to_string(Word const& w);

std::vector<Word> identity_images(std::size_t rank);

}  // namespace freecomm

template <>
struct std::hash<freecomm::Word> {
  std::size_t operator()(freecomm::Word const& w) const noexcept;
};
