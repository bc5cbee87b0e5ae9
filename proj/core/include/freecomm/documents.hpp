#pragma once

#include <string>
#include <string_view>

#include "freecomm/partial_iso.hpp"
#include "freecomm/subgroup.hpp"

namespace freecomm {

// Graph document (JSON): {"rank", "basepoint", "edges": [[src, tgt, label]]}.
// Loading rejects unfolded, disconnected or non-core graphs with a
// DocumentError that names the violated invariant.
std::string to_document(Subgroup const& h);
Subgroup subgroup_from_document(std::string_view text);

// Iso document (JSON): {"rank", "domain": graph, "codomain": graph,
// "images": [word, ...]} with one image per canonical basis element of the
// domain, in basis order. Loading re-validates the iso.
std::string to_document(PartialIso const& f);
PartialIso iso_from_document(std::string_view text);

// Re-loads every subgroup and iso object embedded in a scenario report
// document and re-validates it. Throws DocumentError on failure.
void validate_report_document(std::string_view text);

}  // namespace freecomm
