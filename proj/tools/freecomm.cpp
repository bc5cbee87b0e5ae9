// freecomm: command-line front end to the core library.
//
// Exit status: 0 success, 1 a scenario check failed, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "freecomm/commensurator.hpp"
#include "freecomm/documents.hpp"
#include "freecomm/error.hpp"
#include "freecomm/lattice.hpp"
#include "freecomm/limits.hpp"
#include "freecomm/scenarios.hpp"

using namespace freecomm;

namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(std::string const& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Subgroup load_subgroup(std::string const& path) {
  return subgroup_from_document(read_input(path));
}

PartialIso load_iso(std::string const& path) {
  return iso_from_document(read_input(path));
}

std::vector<Word> parse_words(std::vector<std::string> const& texts,
                              std::size_t rank) {
  std::vector<Word> out;
  out.reserve(texts.size());
  for (auto const& t : texts) out.push_back(parse_word(t, rank));
  return out;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
}

void print_bool(bool b) { std::cout << (b ? "true" : "false") << '\n'; }

void print_words(std::vector<Word> const& ws) {
  for (auto const& w : ws) std::cout << to_string(w) << '\n';
}

std::string text_graph(CoreGraph const& g) {
  std::ostringstream os;
  os << "rank " << g.rank() << "\nvertices " << g.vertex_count()
     << "\nbasepoint 0\n";
  for (auto const& e : g.edges()) {
    os << e.source << ' ' << to_string(Word::generator(e.label)) << ' '
       << e.target << '\n';
  }
  return os.str();
}

int emit_report(ScenarioReport const& r) {
  std::cout << r.to_document() << '\n';
  return r.passed() ? 0 : kCheckFailed;
}

void apply_env_cap() {
  char const* env = std::getenv("FREECOMM_INDEX_CAP");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  auto const v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) {
    throw UsageError("FREECOMM_INDEX_CAP must be a positive integer");
  }
  set_index_cap(static_cast<std::size_t>(v));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation with finite-index subgroups of free groups "
               "and their partial isomorphisms"};
  app.require_subcommand(1);
  int status = 0;

  // --- subgroup ---------------------------------------------------------
  auto* sub = app.add_subcommand("subgroup", "core-graph operations");
  sub->require_subcommand(1);

  std::size_t rank = 2;
  std::vector<std::string> words;
  auto* gens = sub->add_subcommand("gens", "fold a generating set");
  gens->add_option("--rank", rank, "ambient rank")->check(CLI::Range(1, 26));
  gens->add_option("words", words, "generators in letter syntax");
  gens->callback([&] {
    std::cout << to_document(
                     Subgroup::from_generators(rank, parse_words(words, rank)))
              << '\n';
  });

  std::vector<std::int64_t> weights;
  std::int64_t p = 0;
  auto* kern = sub->add_subcommand("kernel", "kernel of F -> Z/p");
  kern->add_option("--rank", rank)->required()->check(CLI::Range(1, 26));
  kern->add_option("--weights", weights, "image of each generator")
      ->required()
      ->delimiter(',');
  kern->add_option("--p", p, "modulus")->required()->check(CLI::Range(2, 1 << 20));
  kern->callback([&] {
    if (weights.size() != rank) {
      throw UsageError("--weights needs exactly --rank entries");
    }
    std::cout << to_document(kernel_mod_p(rank, weights, p)) << '\n';
  });

  std::string file_a;
  std::string file_b;
  auto one_graph = [&](char const* name, char const* help, auto body) {
    auto* c = sub->add_subcommand(name, help);
    c->add_option("graph", file_a, "graph document (default stdin)");
    c->callback([&, body] { body(load_subgroup(file_a)); });
    return c;
  };
  auto two_graphs = [&](char const* name, char const* help, auto body) {
    auto* c = sub->add_subcommand(name, help);
    c->add_option("first", file_a)->required();
    c->add_option("second", file_b)->required();
    c->callback([&, body] { body(load_subgroup(file_a), load_subgroup(file_b)); });
    return c;
  };

  one_graph("index", "index in F, or 'infinite'", [](Subgroup const& h) {
    auto const i = h.index();
    std::cout << (i ? std::to_string(*i) : std::string("infinite")) << '\n';
  });
  one_graph("basis", "canonical free basis", [](Subgroup const& h) {
    print_words(h.basis());
  });
  one_graph("normal", "normality test", [](Subgroup const& h) {
    print_bool(is_normal(h));
  });
  one_graph("subindex", "minimal maximal step of a chain up to F",
            [](Subgroup const& h) { std::cout << subindex(h) << '\n'; });
  std::string word_text;
  one_graph("contains", "membership test", [&](Subgroup const& h) {
    print_bool(h.contains(parse_word(word_text, h.rank())));
  })->add_option("--word", word_text)->required();
  two_graphs("intersect", "intersection", [](Subgroup const& a, Subgroup const& b) {
    std::cout << to_document(intersect(a, b)) << '\n';
  });
  two_graphs("join", "subgroup generated by both", [](Subgroup const& a,
                                                      Subgroup const& b) {
    std::cout << to_document(join(a, b)) << '\n';
  });
  two_graphs("equals", "equality test", [](Subgroup const& a, Subgroup const& b) {
    print_bool(a == b);
  });

  // --- iso --------------------------------------------------------------
  auto* iso = app.add_subcommand("iso", "partial isomorphisms");
  iso->require_subcommand(1);

  std::string domain_file;
  std::string codomain_file;
  std::vector<std::string> images;
  auto* make = iso->add_subcommand(
      "make", "iso from a domain and images of its basis (or --rank N for an "
              "automorphism of F_N)");
  auto* make_domain = make->add_option("--domain", domain_file);
  make->add_option("--codomain", codomain_file);
  auto* make_rank =
      make->add_option("--rank", rank)->check(CLI::Range(1, 26))->excludes(make_domain);
  make->add_option("--images", images)->required()->delimiter(',');
  make->callback([&] {
    if (make_rank->count() > 0) {
      std::cout << to_document(embed_aut(rank, parse_words(images, rank)))
                << '\n';
      return;
    }
    auto domain = load_subgroup(domain_file);
    auto imgs = parse_words(images, domain.rank());
    auto f = codomain_file.empty()
                 ? make_iso(std::move(domain), std::move(imgs))
                 : make_iso(std::move(domain), load_subgroup(codomain_file),
                            std::move(imgs));
    std::cout << to_document(f) << '\n';
  });

  std::string iso_file;
  auto* apply = iso->add_subcommand("apply", "image of a word");
  apply->add_option("iso", iso_file);
  apply->add_option("--word", word_text)->required();
  apply->callback([&] {
    auto const f = load_iso(iso_file);
    std::cout << to_string(f.apply(parse_word(word_text, f.rank()))) << '\n';
  });

  std::vector<std::string> iso_files;
  auto* comp = iso->add_subcommand("compose", "left-to-right product");
  comp->add_option("isos", iso_files)->required();
  comp->callback([&] {
    std::vector<PartialIso> fs;
    for (auto const& f : iso_files) fs.push_back(load_iso(f));
    std::cout << to_document(compose_many(fs)) << '\n';
  });

  auto* inv = iso->add_subcommand("invert", "inverse");
  inv->add_option("iso", iso_file);
  inv->callback([&] { std::cout << to_document(invert_iso(load_iso(iso_file))) << '\n'; });

  auto* eq = iso->add_subcommand("equiv", "same commensurator class?");
  eq->add_option("first", file_a)->required();
  eq->add_option("second", file_b)->required();
  eq->callback([&] { print_bool(equivalent(load_iso(file_a), load_iso(file_b))); });

  auto* res = iso->add_subcommand("restrict", "restriction to a subgroup");
  res->add_option("iso", iso_file)->required();
  res->add_option("subgroup", file_a)->required();
  res->callback([&] {
    std::cout << to_document(restrict(load_iso(iso_file), load_subgroup(file_a)))
              << '\n';
  });

  auto* pair = iso->add_subcommand(
      "extend-pair", "common extension to H1 H2 (second domain normal)");
  pair->add_option("first", file_a)->required();
  pair->add_option("second", file_b)->required();
  pair->callback([&] {
    std::cout << to_document(extend_pair(load_iso(file_a), load_iso(file_b)))
              << '\n';
  });

  auto* amb = iso->add_subcommand(
      "extend-ambient", "extend to an automorphism of F, if one exists");
  amb->add_option("iso", iso_file);
  amb->callback([&] {
    auto const r = compute_extension(load_iso(iso_file));
    if (auto const* e = std::get_if<Extension>(&r)) {
      std::cout << "Extension\n";
      print_words(e->images);
    } else {
      std::cout << "NoExtension: " << std::get<NoExtension>(r).reason << '\n';
    }
  });

  std::string direction = "down";
  auto* tr = iso->add_subcommand(
      "transfer", "move a class between F and a finite-index subgroup H");
  tr->add_option("iso", iso_file)->required();
  tr->add_option("subgroup", file_a)->required();
  tr->add_option("--direction", direction, "down: F -> H, up: H -> F")
      ->check(CLI::IsMember({"down", "up"}));
  tr->callback([&] {
    auto const f = load_iso(iso_file);
    auto const h = load_subgroup(file_a);
    std::cout << to_document(direction == "down" ? transfer_to_subgroup(f, h)
                                                 : transfer_to_overgroup(f, h))
              << '\n';
  });

  // --- paper ------------------------------------------------------------
  auto* paper = app.add_subcommand("paper", "scenario reports");
  paper->require_subcommand(1);

  std::int64_t prime = 0;
  auto* ks = paper->add_subcommand("kernel-swap", "swap of x^p and y in the kernel");
  ks->add_option("--rank", rank)->required()->check(CLI::Range(2, 26));
  ks->add_option("--prime", prime)->required()->check(CLI::Range(2, 1000));
  ks->callback([&] {
    require_prime(prime);
    status = emit_report(kernel_swap(rank, prime));
  });

  std::string b_text;
  auto* tw = paper->add_subcommand("twist", "free-product conjugation twist");
  tw->add_option("--rank", rank)->required()->check(CLI::Range(2, 26));
  tw->add_option("--prime", prime)->required()->check(CLI::Range(2, 1000));
  tw->add_option("--b", b_text, "word in x_2..x_n (default x_2)");
  tw->callback([&] {
    require_prime(prime);
    std::optional<Word> b;
    if (!b_text.empty()) b = parse_word(b_text, rank);
    status = emit_report(free_product_twist(rank, prime, b));
  });

  std::int64_t k = 0;
  auto* bs = paper->add_subcommand("bs", "Baumslag-Solitar self-embedding");
  bs->add_option("--k", k)->required()->check(CLI::Range(-1000000, 1000000));
  bs->add_option("--p", p)->required()->check(CLI::Range(2, 1000000));
  bs->callback([&] {
    require_prime(p);
    status = emit_report(bs_group(k, p));
  });

  std::int64_t n = 0;
  std::int64_t bound = 0;
  auto* hnn = paper->add_subcommand("hnn", "arithmetic HNN obstruction");
  hnn->add_option("--n", n)->required()->check(CLI::Range(3, 64));
  hnn->add_option("--bound", bound)->required()->check(CLI::Range(1, 1000));
  hnn->callback([&] { status = emit_report(hnn_report(n, bound)); });

  // --- export -----------------------------------------------------------
  auto* exp = app.add_subcommand("export", "render documents");
  exp->require_subcommand(1);
  std::string format = "dot";
  auto* dot = exp->add_subcommand("dot", "render a graph document");
  dot->add_option("graph", file_a);
  dot->add_option("--format", format)->check(CLI::IsMember({"dot", "text"}));
  dot->callback([&] {
    auto const h = load_subgroup(file_a);
    std::cout << (format == "dot" ? to_dot(h.graph()) : text_graph(h.graph()));
  });

  try {
    apply_env_cap();
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (UsageError const& e) {
    std::cerr << "freecomm: " << e.what() << '\n';
    return kUsage;
  } catch (Error const& e) {
    std::cerr << "freecomm: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}
