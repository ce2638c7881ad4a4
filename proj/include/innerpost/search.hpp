#pragma once

#include "innerpost/lie_obstruction.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace innerpost {

/// Named small Lie algebras used by the scan and the property generators.
struct NamedLieAlgebra {
    std::string name;
    LieAlgebra lie;
};

/// abelian-1..3, r2, heisenberg, r2+k, r3-scalar, sl2.
std::vector<NamedLieAlgebra> small_lie_algebras();

struct SearchFinding {
    std::string base;
    LinearMap phi;
    LieTwoCochain kappa;
};

struct SearchSummary {
    std::size_t candidates = 0;  // maps phi tried
    std::size_t postlie = 0;     // of those, x |> y = [phi x, y] satisfies the axioms
    std::size_t induced = 0;
    std::size_t nontrivial = 0;
    std::vector<SearchFinding> findings;  // first few nontrivial classes
};

struct SearchOptions {
    /// Grid scan when unset; otherwise `samples` draws per base algebra.
    std::optional<std::uint64_t> seed;
    std::size_t samples = 500;
    std::size_t max_findings = 4;
    std::vector<std::string> bases = {"heisenberg", "r2+k"};
};

/// Scans phi with entries in {-1, -1/2, 0, 1/2, 1} on the rows outside the
/// center's pivot coordinates (phi modulo maps into the center), keeps the
/// maps for which [phi x, y] is a post-Lie product, and runs the
/// obstruction pipeline on each. Reports what it finds without judging it.
SearchSummary search_obstructions(const SearchOptions& options);

}  // namespace innerpost
