#pragma once

#include "freecomm/partial_iso.hpp"

namespace freecomm {

// Builds without validation. Callers construct isos whose invariants hold
// by construction (inverses, composites, restrictions).
PartialIso unchecked_iso(Subgroup domain, Subgroup codomain,
                         std::vector<Word> images);

}  // namespace freecomm
