#include "freecomm/scenarios.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "freecomm/commensurator.hpp"
#include "freecomm/documents.hpp"
#include "freecomm/error.hpp"
#include "json.hpp"

namespace freecomm {

using json = nlohmann::ordered_json;

bool ScenarioReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](ScenarioCheck const& c) { return c.pass; });
}

std::string ScenarioReport::to_document() const {
  json params = json::object();
  for (auto const& [k, v] : parameters) params[k] = v;
  json objs = json::array();
  for (auto const& o : objects) {
    objs.push_back({{"name", o.name},
                    {"kind", o.kind},
                    {"document", json::parse(o.document)}});
  }
  json chks = json::array();
  for (auto const& c : checks) {
    chks.push_back({{"name", c.name},
                    {"expected", c.expected},
                    {"actual", c.actual},
                    {"pass", c.pass}});
  }
  json doc{{"scenario", scenario},
           {"parameters", params},
           {"objects", objs},
           {"checks", chks},
           {"passed", passed()}};
  return doc.dump(2);
}

namespace {

std::string str(bool b) { return b ? "true" : "false"; }

template <class T>
void check(ScenarioReport& r, std::string name, T const& expected,
           T const& actual) {
  std::string e;
  std::string a;
  if constexpr (std::is_same_v<T, bool>) {
    e = str(expected);
    a = str(actual);
  } else if constexpr (std::is_same_v<T, std::string>) {
    e = expected;
    a = actual;
  } else {
    e = std::to_string(expected);
    a = std::to_string(actual);
  }
  r.checks.push_back({std::move(name), e, a, expected == actual});
}

void add_subgroup(ScenarioReport& r, std::string name, Subgroup const& h) {
  r.objects.push_back({std::move(name), "subgroup", to_document(h)});
}

void add_iso(ScenarioReport& r, std::string name, PartialIso const& f) {
  r.objects.push_back({std::move(name), "iso", to_document(f)});
}

void require_params(std::size_t rank, std::int64_t p, char const* who) {
  if (rank < 2) throw Error(std::string(who) + ": rank must be >= 2");
  if (rank > 26) throw Error(std::string(who) + ": rank must be <= 26");
  if (p < 2) throw Error(std::string(who) + ": p must be >= 2");
}

Subgroup weight_kernel(std::size_t rank, std::int64_t p) {
  std::vector<std::int64_t> weights(rank, 0);
  weights[0] = 1;
  return kernel_mod_p(rank, weights, p);
}

std::optional<std::size_t> basis_position(Subgroup const& h, Word const& w) {
  auto const& b = h.basis();
  auto const it = std::find(b.begin(), b.end(), w);
  if (it == b.end()) return std::nullopt;
  return static_cast<std::size_t>(it - b.begin());
}

bool uses_only(Word const& w, std::uint32_t lo, std::uint32_t hi) {
  return std::all_of(w.letters().begin(), w.letters().end(), [&](Letter l) {
    auto const i = letter_index(l);
    return i >= lo && i <= hi;
  });
}

std::string describe(ExtensionResult const& r) {
  if (std::holds_alternative<Extension>(r)) return "Extension";
  return "NoExtension: " + std::get<NoExtension>(r).reason;
}

}  // namespace

ScenarioReport kernel_swap(std::size_t rank, std::int64_t p) {
  require_params(rank, p, "kernel_swap");
  ScenarioReport r;
  r.scenario = "kernel-swap";
  r.parameters = {{"rank", std::to_string(rank)}, {"prime", std::to_string(p)}};

  auto const h = weight_kernel(rank, p);
  add_subgroup(r, "H", h);
  auto const n = static_cast<std::int64_t>(rank);
  check(r, "H is normal", true, is_normal(h));
  check(r, "index of H", p, static_cast<std::int64_t>(h.finite_index()));
  check(r, "rank of H", 1 + p * (n - 1),
        static_cast<std::int64_t>(h.basis_rank()));

  // x^p and the conjugates x^-j x_i x^j, j < p, i >= 2.
  auto const x = Word::generator(1);
  std::vector<Word> y_set{power(x, p)};
  for (std::int64_t j = 0; j < p; ++j) {
    for (std::uint32_t i = 2; i <= rank; ++i) {
      y_set.push_back(conjugate(Word::generator(i), power(x, j)));
    }
  }
  check(r, "listed generating set folds to H", true,
        Subgroup::from_generators(rank, y_set) == h);

  auto const xp = power(x, p);
  auto const y = Word::generator(2);
  auto const pos_xp = basis_position(h, xp);
  auto const pos_y = basis_position(h, y);
  check(r, "x^p is a basis element of H", true, pos_xp.has_value());
  check(r, "y is a basis element of H", true, pos_y.has_value());
  if (!pos_xp || !pos_y) return r;

  auto images = h.basis();
  std::swap(images[*pos_xp], images[*pos_y]);
  std::optional<PartialIso> swap;
  std::string why = "valid";
  try {
    swap = make_iso(h, h, images);
  } catch (InvalidIso const& e) {
    why = e.what();
  }
  check(r, "swap is an automorphism of H", std::string("valid"), why);
  if (!swap) return r;
  add_iso(r, "swap", *swap);

  check(r, "swap(x^p) == y", to_string(y), to_string(swap->apply(xp)));
  check(r, "swap is the identity class", false, is_identity_class(*swap));

  auto const ext = compute_extension(*swap);
  check(r, "extension to F", std::string("NoExtension"),
        describe(ext).substr(0, 11));
  if (auto const* no = std::get_if<NoExtension>(&ext)) {
    check(r, "failing generator", std::string("a"),
          no->generator ? to_string(Word::generator(*no->generator))
                        : std::string("none"));
    check(r, "root-free word", to_string(y), to_string(no->word));
    check(r, "missing root degree", p, no->exponent);
  }

  auto const cert = imprimitivity_certificate(xp, rank);
  std::string cert_text = "Inconclusive";
  if (auto const* np = std::get_if<NotPrimitive>(&cert)) {
    cert_text = "NotPrimitive(" + np->divisor.str() + ")";
  }
  check(r, "imprimitivity of x^p in F",
        "NotPrimitive(" + std::to_string(p) + ")", cert_text);
  return r;
}

ScenarioReport free_product_twist(std::size_t rank, std::int64_t p,
                                  std::optional<Word> b) {
  require_params(rank, p, "free_product_twist");
  auto const bw = b.value_or(Word::generator(2));
  if (bw.empty() || !uses_only(bw, 2, static_cast<std::uint32_t>(rank))) {
    throw Error("free_product_twist: b must be a nontrivial word in x_2..x_" +
                std::to_string(rank));
  }
  ScenarioReport r;
  r.scenario = "twist";
  r.parameters = {{"rank", std::to_string(rank)},
                  {"prime", std::to_string(p)},
                  {"b", to_string(bw)}};

  auto const h = weight_kernel(rank, p);
  add_subgroup(r, "H", h);
  auto const a_group =
      Subgroup::from_generators(rank, std::vector<Word>{Word::generator(1)});
  std::vector<Word> b_gens;
  for (std::uint32_t i = 2; i <= rank; ++i) b_gens.push_back(Word::generator(i));
  auto const b_group = Subgroup::from_generators(rank, b_gens);
  add_subgroup(r, "A", a_group);
  add_subgroup(r, "B", b_group);
  check(r, "b lies in H", true, h.contains(bw));

  std::size_t a_part = 0;
  std::size_t b_part = 0;
  std::vector<Word> images;
  json c_words = json::array();
  auto const last = static_cast<std::uint32_t>(rank);
  for (auto const& w : h.basis()) {
    if (uses_only(w, 1, 1)) {
      ++a_part;
      images.push_back(w);
    } else if (uses_only(w, 2, last)) {
      ++b_part;
      images.push_back(w);
    } else {
      c_words.push_back(to_string(w));
      images.push_back(conjugate(w, bw));
    }
  }
  auto const c_part = c_words.size();
  r.objects.push_back({"C", "data", c_words.dump()});
  check(r, "|A-part|", std::size_t{1}, a_part);
  check(r, "|B-part|", rank - 1, b_part);
  check(r, "C is nonempty", true, c_part > 0);
  check(r, "|C| = rank(H) - |A-part| - |B-part|",
        h.basis_rank() - a_part - b_part, c_part);
  if (c_part == 0) return r;

  std::optional<PartialIso> phi;
  std::string why = "valid";
  try {
    phi = make_iso(h, h, images);
  } catch (InvalidIso const& e) {
    why = e.what();
  }
  check(r, "phi is an automorphism of H", std::string("valid"), why);
  if (!phi) return r;
  add_iso(r, "phi", *phi);

  check(r, "extendAB certificate", true,
        extendAB_certificate(*phi, a_group, b_group));
  auto const ext = compute_extension(*phi);
  check(r, "extension to F", std::string("NoExtension"),
        describe(ext).substr(0, 11));
  return r;
}

ScenarioReport bs_group(std::int64_t k, std::int64_t p, std::size_t samples,
                        std::uint64_t seed) {
  if (k > -2 && k < 2) throw Error("bs_group: |k| must be >= 2");
  if (p < 2) throw Error("bs_group: p must be >= 2");
  if (std::gcd(k, p) != 1) throw Error("bs_group: p and k must be coprime");
  ScenarioReport r;
  r.scenario = "bs";
  r.parameters = {{"k", std::to_string(k)},
                  {"p", std::to_string(p)},
                  {"samples", std::to_string(samples)},
                  {"seed", std::to_string(seed)}};

  BigInt const kk = k;
  BigInt const pp = p;
  auto const a = BSElement::a(kk);
  auto const t = BSElement::t(kk);
  auto const lhs = bs_mul(bs_mul(t, a), bs_inv(t));
  check(r, "t a t^-1 == a^k", to_string(bs_pow(a, k)), to_string(lhs));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, 16);
  std::uniform_int_distribution<int> pick(0, 3);
  auto random_element = [&] {
    auto e = BSElement::identity(kk);
    for (int i = len(rng); i > 0; --i) {
      switch (pick(rng)) {
        case 0: e = bs_mul(e, a); break;
        case 1: e = bs_mul(e, bs_inv(a)); break;
        case 2: e = bs_mul(e, t); break;
        default: e = bs_mul(e, bs_inv(t)); break;
      }
    }
    return e;
  };

  std::size_t hom_failures = 0;
  std::size_t injectivity_failures = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    auto const x = random_element();
    auto const y = random_element();
    if (bs_psi(bs_mul(x, y), pp) != bs_mul(bs_psi(x, pp), bs_psi(y, pp))) {
      ++hom_failures;
    }
    if ((bs_psi(x, pp) == bs_psi(y, pp)) != (x == y)) ++injectivity_failures;
    // psi(x) trivial forces x trivial
    if (bs_psi(x, pp) == BSElement::identity(kk) &&
        x != BSElement::identity(kk)) {
      ++injectivity_failures;
    }
  }
  check(r, "psi homomorphism failures", std::size_t{0}, hom_failures);
  check(r, "psi injectivity failures", std::size_t{0}, injectivity_failures);
  check(r, "index of psi(G)", p, bs_image_index(k, p));
  return r;
}

std::vector<std::pair<std::int64_t, std::int64_t>> hnn_obstruction(
    std::int64_t n, std::int64_t bound) {
  if (n < 3) throw Error("hnn_obstruction: n must be >= 3");
  if (bound < 1) throw Error("hnn_obstruction: bound must be positive");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t l = -bound; l <= bound; ++l) {
    for (std::int64_t r = -bound; r <= bound; ++r) {
      if (l == 0 || r == 0 || std::gcd(l, r) != 1) continue;
      BigInt sum = 0;
      BigInt lp = 1;  // l^(n-1-i), built from the top
      for (std::int64_t i = 0; i < n - 1; ++i) lp *= l;
      BigInt rp = 1;
      BigInt const bl = l;
      for (std::int64_t i = 0; i < n; ++i) {
        sum += lp * rp;
        rp *= r;
        if (i + 1 < n) lp /= bl;
      }
      if (sum == 1 || sum == -1) out.emplace_back(l, r);
    }
  }
  return out;
}

ScenarioReport hnn_report(std::int64_t n, std::int64_t bound) {
  auto const solutions = hnn_obstruction(n, bound);
  ScenarioReport r;
  r.scenario = "hnn";
  r.parameters = {{"n", std::to_string(n)}, {"bound", std::to_string(bound)}};
  json list = json::array();
  std::string text;
  for (auto const& [l, rr] : solutions) {
    auto s = "(" + std::to_string(l) + "," + std::to_string(rr) + ")";
    list.push_back(s);
    text += (text.empty() ? "" : " ") + s;
  }
  r.objects.push_back({"solutions", "data", list.dump()});
  auto const within = std::all_of(
      solutions.begin(), solutions.end(), [](auto const& s) {
        return (s.first == 1 && s.second == -1) ||
               (s.first == -1 && s.second == 1);
      });
  r.checks.push_back({"solution set", "(-1,1) (1,-1) or a subset",
                      text.empty() ? "none" : text, within});
  return r;
}

}  // namespace freecomm
