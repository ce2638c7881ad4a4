#include "innerpost/search.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace innerpost {

namespace {

LieAlgebra make(std::size_t n, std::initializer_list<std::pair<std::pair<std::size_t, std::size_t>, Vector>> rows) {
    LieAlgebra::BracketTable t;
    for (const auto& [k, v] : rows)
        t[k] = v;
    return LieAlgebra(n, t);
}

Vector vec(std::initializer_list<GaussianRational> xs) { return Vector(xs); }

}  // namespace

std::vector<NamedLieAlgebra> small_lie_algebras() {
    const GaussianRational o(1), z(0);
    return {
        {"abelian-1", LieAlgebra(1)},
        {"abelian-2", LieAlgebra(2)},
        {"abelian-3", LieAlgebra(3)},
        {"r2", make(2, {{{0, 1}, vec({z, o})}})},
        {"heisenberg", make(3, {{{0, 1}, vec({z, z, o})}})},
        {"r2+k", make(3, {{{0, 1}, vec({z, o, z})}})},
        {"r3-scalar", make(3, {{{2, 0}, vec({o, z, z})}, {{2, 1}, vec({z, o, z})}})},
        {"sl2", make(3, {{{0, 1}, vec({z, z, o})}, {{1, 2}, vec({o, z, z})}, {{2, 0}, vec({z, o, z})}})},
    };
}

SearchSummary search_obstructions(const SearchOptions& options) {
    const std::vector<GaussianRational> grid = {GaussianRational(-1), GaussianRational(mpq_class(-1, 2)),
                                                GaussianRational(0), GaussianRational(mpq_class(1, 2)),
                                                GaussianRational(1)};
    std::vector<NamedLieAlgebra> bases;
    for (const auto& name : options.bases) {
        bool found = false;
        for (auto& b : small_lie_algebras())
            if (b.name == name) {
                bases.push_back(b);
                found = true;
            }
        if (!found)
            throw std::invalid_argument("unknown base algebra '" + name + "'");
    }

    SearchSummary summary;
    std::mt19937_64 rng(options.seed.value_or(0));
    for (const auto& base : bases) {
        const std::size_t n = base.lie.dim();
        const Subspace z = center(base.lie);
        std::set<std::size_t> central_rows;
        for (const auto& v : z.basis())
            for (std::size_t r = 0; r < n; ++r)
                if (!v[r].is_zero()) {
                    central_rows.insert(r);
                    break;
                }
        // Entries (row, col) of phi that are scanned.
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < n; ++r)
            if (!central_rows.count(r))
                for (std::size_t c = 0; c < n; ++c)
                    slots.emplace_back(r, c);

        auto visit = [&](const std::vector<std::size_t>& choice) {
            ExactMatrix m(n, n);
            for (std::size_t s = 0; s < slots.size(); ++s)
                m(slots[s].first, slots[s].second) = grid[choice[s]];
            const LinearMap phi(std::move(m));
            ++summary.candidates;
            const PostLieAlgebra post = from_adjoint_map(base.lie, phi);
            if (!check_postlie_axioms(post).valid())
                return;
            ++summary.postlie;
            const LieObstructionResult res = construct_rb_from_obstruction(post);
            if (res.status == ObstructionStatus::induced) {
                ++summary.induced;
            } else if (res.status == ObstructionStatus::nontrivial_class) {
                ++summary.nontrivial;
                if (summary.findings.size() < options.max_findings)
                    summary.findings.push_back({base.name, *res.witness, *res.kappa});
            }
        };

        std::vector<std::size_t> choice(slots.size(), 0);
        if (options.seed) {
            std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
            for (std::size_t s = 0; s < options.samples; ++s) {
                for (auto& c : choice)
                    c = pick(rng);
                visit(choice);
            }
            continue;
        }
        for (;;) {
            visit(choice);
            std::size_t pos = 0;
            while (pos < choice.size() && ++choice[pos] == grid.size())
                choice[pos++] = 0;
            if (pos == choice.size())
                break;
        }
    }
    return summary;
}

}  // namespace innerpost
