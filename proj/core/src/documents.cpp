#include "freecomm/documents.hpp"

#include <set>

#include "freecomm/error.hpp"
#include "json.hpp"

namespace freecomm {

using json = nlohmann::ordered_json;

namespace {

json graph_json(Subgroup const& h) {
  json edges = json::array();
  for (auto const& e : h.graph().edges()) {
    edges.push_back({e.source, e.target, e.label});
  }
  return json{{"rank", h.rank()}, {"basepoint", 0}, {"edges", edges}};
}

template <class T>
T field(json const& j, char const* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw DocumentError(std::string("missing field \"") + name + "\"");
  }
  try {
    return j.at(name).get<T>();
  } catch (json::exception const&) {
    throw DocumentError(std::string("field \"") + name +
                        "\" has the wrong type");
  }
}

Subgroup graph_from_json(json const& j) {
  auto const rank = field<std::int64_t>(j, "rank");
  if (rank < 1) throw DocumentError("rank must be a positive integer");
  auto const basepoint = field<std::int64_t>(j, "basepoint");
  auto const raw = field<json>(j, "edges");
  if (!raw.is_array()) throw DocumentError("\"edges\" must be an array");
  std::vector<Edge> edges;
  std::set<std::int64_t> vertices{basepoint};
  for (auto const& e : raw) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number_integer()) {
      throw DocumentError("each edge must be [source, target, label]");
    }
    auto const s = e[0].get<std::int64_t>();
    auto const t = e[1].get<std::int64_t>();
    auto const l = e[2].get<std::int64_t>();
    if (s < 0 || t < 0 || s > INT32_MAX || t > INT32_MAX) {
      throw DocumentError("vertices must be non-negative integers");
    }
    if (l < 1 || l > rank) {
      throw DocumentError("edge label " + std::to_string(l) +
                          " outside [1, rank]");
    }
    vertices.insert(s);
    vertices.insert(t);
    edges.push_back({static_cast<std::int32_t>(s),
                     static_cast<std::int32_t>(t),
                     static_cast<std::uint32_t>(l)});
  }
  if (basepoint < 0 || basepoint > INT32_MAX) {
    throw DocumentError("basepoint must be a non-negative integer");
  }
  auto graph = CoreGraph::from_edges(static_cast<std::size_t>(rank),
                                     static_cast<std::int32_t>(basepoint),
                                     edges);
  if (graph.vertex_count() != vertices.size() ||
      graph.edge_count() != edges.size()) {
    throw DocumentError(
        "graph is not a connected core graph (unreachable vertices, "
        "duplicate edges or hanging trees away from the basepoint)");
  }
  return Subgroup(std::move(graph));
}

json iso_json(PartialIso const& f) {
  json images = json::array();
  for (auto const& w : f.images()) images.push_back(to_string(w));
  return json{{"rank", f.rank()},
              {"domain", graph_json(f.domain())},
              {"codomain", graph_json(f.codomain())},
              {"images", images}};
}

PartialIso iso_from_json(json const& j) {
  auto const rank = field<std::int64_t>(j, "rank");
  auto domain = graph_from_json(field<json>(j, "domain"));
  auto codomain = graph_from_json(field<json>(j, "codomain"));
  if (static_cast<std::int64_t>(domain.rank()) != rank ||
      static_cast<std::int64_t>(codomain.rank()) != rank) {
    throw DocumentError("domain/codomain rank differs from the iso rank");
  }
  auto const raw = field<std::vector<std::string>>(j, "images");
  std::vector<Word> images;
  images.reserve(raw.size());
  for (auto const& s : raw) {
    try {
      images.push_back(parse_word(s, static_cast<std::size_t>(rank)));
    } catch (Error const& e) {
      throw DocumentError(std::string("bad image word: ") + e.what());
    }
  }
  try {
    return make_iso(std::move(domain), std::move(codomain), std::move(images));
  } catch (InvalidIso const& e) {
    throw DocumentError(std::string("invalid iso: ") + e.what());
  }
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (json::parse_error const& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string to_document(Subgroup const& h) { return graph_json(h).dump(); }

Subgroup subgroup_from_document(std::string_view text) {
  return graph_from_json(parse(text));
}

std::string to_document(PartialIso const& f) { return iso_json(f).dump(); }

PartialIso iso_from_document(std::string_view text) {
  return iso_from_json(parse(text));
}

void validate_report_document(std::string_view text) {
  auto const j = parse(text);
  auto const objects = field<json>(j, "objects");
  if (!objects.is_array()) throw DocumentError("\"objects\" must be an array");
  for (auto const& o : objects) {
    auto const kind = field<std::string>(o, "kind");
    auto const doc = field<json>(o, "document");
    if (kind == "subgroup") {
      (void)graph_from_json(doc);
    } else if (kind == "iso") {
      (void)iso_from_json(doc);
    } else if (kind != "data") {
      throw DocumentError("unknown object kind \"" + kind + "\"");
    }
  }
}

}  // namespace freecomm
