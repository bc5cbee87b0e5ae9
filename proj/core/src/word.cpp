#include "freecomm/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "freecomm/error.hpp"

namespace freecomm {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == -l) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

void check_letter(Letter l, std::optional<std::size_t> rank) {
  if (l == 0) {
    throw RankError("letter 0 is not a generator");
  }
  if (rank && letter_index(l) > *rank) {
    throw RankError("generator index " + std::to_string(letter_index(l)) +
                    " exceeds rank " + std::to_string(*rank));
  }
}

}  // namespace

Word::Word(std::span<Letter const> letters, std::optional<std::size_t> rank) {
  letters_.reserve(letters.size());
  for (auto l : letters) {
    check_letter(l, rank);
    push_reduced(letters_, l);
  }
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<Letter const>(letters.begin(), letters.size())) {}

std::uint32_t Word::max_index() const noexcept {
  std::uint32_t m = 0;
  for (auto l : letters_) m = std::max(m, letter_index(l));
  return m;
}

std::strong_ordering operator<=>(Word const& a, Word const& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
      b.letters_.end());
}

Word reduce(std::span<Letter const> letters, std::optional<std::size_t> rank) {
  return Word(letters, rank);
}

Word concat(Word const& u, Word const& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out = u.letters_;
  for (auto l : v.letters_) push_reduced(out, l);
  return Word(Word::Trusted{}, std::move(out));
}

Word operator*(Word const& u, Word const& v) { return concat(u, v); }

Word invert(Word const& w) {
  std::vector<Letter> out(w.letters_.rbegin(), w.letters_.rend());
  for (auto& l : out) l = -l;
  return Word(Word::Trusted{}, std::move(out));
}

Word power(Word const& w, std::int64_t n) {
  if (n == 0 || w.empty()) return {};
  Word base = n < 0 ? invert(w) : w;
  auto const count = n < 0 ? -static_cast<std::uint64_t>(n)
                           : static_cast<std::uint64_t>(n);
  auto [u, c] = cyclic_decomposition(base);
  // u^-1 c^count u, with c cyclically reduced so the middle never cancels.
  std::vector<Letter> out;
  out.reserve(2 * u.size() + c.size() * count);
  auto const u_inv = invert(u);
  out.insert(out.end(), u_inv.letters_.begin(), u_inv.letters_.end());
  for (std::uint64_t i = 0; i < count; ++i) {
    out.insert(out.end(), c.letters_.begin(), c.letters_.end());
  }
  out.insert(out.end(), u.letters_.begin(), u.letters_.end());
  return Word(Word::Trusted{}, std::move(out));
}

Word conjugate(Word const& w, Word const& g) {
  return concat(concat(invert(g), w), g);
}

CyclicDecomposition cyclic_decomposition(Word const& w) {
  auto const letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
    ++lo;
    --hi;
  }
  // w = letters[0,lo) c letters[hi,n) and the tail is the inverse of the head.
  Word core(letters.subspan(lo, hi - lo));
  Word conj(letters.subspan(hi));
  return {std::move(conj), std::move(core)};
}

std::optional<Word> nth_root(Word const& w, std::int64_t n) {
  if (n < 1) {
    throw Error("nth_root: exponent must be positive");
  }
  if (n == 1 || w.empty()) return w;
  auto [u, c] = cyclic_decomposition(w);
  auto const len = c.size();
  auto const un = static_cast<std::uint64_t>(n);
  if (len % un != 0) return std::nullopt;
  auto const period = len / un;
  auto const letters = c.letters();
  for (std::size_t i = period; i < len; ++i) {
    if (letters[i] != letters[i - period]) return std::nullopt;
  }
  Word prefix(letters.subspan(0, period));
  return conjugate(prefix, u);
}

Word apply_hom(std::span<Word const> images, Word const& w) {
  std::vector<Letter> out;
  for (auto l : w.letters_) {
    auto const i = letter_index(l);
    if (i > images.size()) {
      throw RankError("apply_hom: generator " + std::to_string(i) +
                      " has no image (domain rank " +
                      std::to_string(images.size()) + ")");
    }
    auto const& img = images[i - 1].letters_;
    if (l > 0) {
      for (auto x : img) push_reduced(out, x);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) {
        push_reduced(out, -*it);
      }
    }
  }
  return Word(Word::Trusted{}, std::move(out));
}

std::vector<BigInt> abelianize(Word const& w, std::size_t rank) {
  if (w.max_index() > rank) {
    throw RankError("abelianize: word uses a generator beyond rank " +
                    std::to_string(rank));
  }
  // Word lengths fit in int64, so count natively and widen at the end.
  std::vector<std::int64_t> counts(rank, 0);
  for (auto l : w.letters()) {
    counts[letter_index(l) - 1] += l > 0 ? 1 : -1;
  }
  return {counts.begin(), counts.end()};
}

ImprimitivityCertificate imprimitivity_certificate(Word const& w,
                                                   std::size_t rank) {
  if (w.empty()) {
    throw Error("imprimitivity_certificate: the identity is never primitive "
                "and has no certificate");
  }
  BigInt d = 0;
  for (auto const& e : abelianize(w, rank)) {
    d = boost::multiprecision::gcd(d, e);
  }
  if (d > 1) return NotPrimitive{d};
  return Inconclusive{};
}

Word parse_word(std::string_view text, std::optional<std::size_t> rank) {
  if (text == "1") return {};
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    auto const c = static_cast<unsigned char>(ch);
    if (std::islower(c) && ch >= 'a' && ch <= 'z') {
      letters.push_back(ch - 'a' + 1);
    } else if (std::isupper(c) && ch >= 'A' && ch <= 'Z') {
      letters.push_back(-(ch - 'A' + 1));
    } else {
      throw RankError(std::string("invalid character '") + ch +
                      "' in word \"" + std::string(text) + "\"");
    }
  }
  return Word(letters, rank);
}

std::string to_string(Word const& w) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (auto l : w.letters()) {
    auto const i = letter_index(l);
    if (i > 26) {
      throw RankError("to_string: generator " + std::to_string(i) +
                      " has no letter (text syntax supports rank <= 26)");
    }
    out.push_back(static_cast<char>((l > 0 ? 'a' : 'A') + (i - 1)));
  }
  return out;
}

std::vector<Word> identity_images(std::size_t rank) {
  std::vector<Word> out;
  out.reserve(rank);
  for (std::size_t i = 1; i <= rank; ++i) {
    out.push_back(Word::generator(static_cast<std::uint32_t>(i)));
  }
  return out;
}

}  // namespace freecomm

std::size_t std::hash<freecomm::Word>::operator()(
    freecomm::Word const& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto l : w.letters()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(l));
    h *= 0x100000001b3ULL;
  }
  return h;
}
