#pragma once

#include <variant>

#include "pgt/analysis.hpp"
#include "pgt/berge.hpp"

namespace pgt {

// Tagged witness attached to decision answers so a third party can re-check
// the verdict without re-running the search.
using Certificate =
    std::variant<CliqueWitness, StableWitness, Coloring, HoleCertificate, ImperfectionWitness>;

} // namespace pgt
