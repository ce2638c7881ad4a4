#include "innerpost/group_obstruction.hpp"

#include "innerpost/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace innerpost {

GroupTwoCocycle::GroupTwoCocycle(const FiniteGroup& g, std::vector<Element> values)
    : order_(g.order()), identity_(g.identity()), values_(std::move(values)) {
    if (values_.size() != order_ * order_)
        throw std::invalid_argument("cocycle table must have order^2 entries");
    const std::vector<Element> z = center_group(g);
    center_ = abelian_decomposition(g, z);
    for (Element a = 0; a < order_; ++a)
        for (Element b = 0; b < order_; ++b)
            if (!center_.contains(value(a, b)))
                throw std::invalid_argument("cocycle value at (" + g.name(a) + ", " + g.name(b) +
                                            ") is not central");
    for (Element a = 0; a < order_; ++a)
        if (value(identity_, a) != identity_ || value(a, identity_) != identity_)
            throw std::invalid_argument("cocycle is not normalized at " + g.name(a));
}

GroupTwoCocycle GroupTwoCocycle::trivial(const FiniteGroup& g) {
    return GroupTwoCocycle(g, std::vector<Element>(g.order() * g.order(), g.identity()));
}

bool GroupTwoCocycle::is_trivial() const {
    for (Element x : values_)
        if (x != identity_)
            return false;
    return true;
}

GroupTwoCocycle obstruction_cocycle_group(const PostGroup& pg, const GroupMap& phi) {
    if (!is_inner_witness_group(pg, phi))
        throw std::invalid_argument("map is not a normalized inner witness: Ad_{Phi(a)} differs from L(a)");
    const FiniteGroup& g = pg.base();
    const FiniteGroup circ = sub_adjacent_group(pg);
    const std::size_t n = g.order();
    std::vector<Element> values(n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            values[a * n + b] = g.mul(g.mul(g.inverse(phi[b]), g.inverse(phi[a])), phi[circ.mul(a, b)]);
    return GroupTwoCocycle(g, std::move(values));
}

std::optional<std::array<Element, 3>> find_group_2cocycle_violation(const GroupTwoCocycle& omega,
                                                                    const FiniteGroup& circ) {
    const std::size_t n = omega.order();
    if (circ.order() != n)
        throw std::invalid_argument("cocycle and group orders differ");
    const AbelianDecomposition& z = omega.decomposition();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c) {
                const auto lhs = z.add(z.to_coords(omega.value(b, c)), z.to_coords(omega.value(a, circ.mul(b, c))));
                const auto rhs = z.add(z.to_coords(omega.value(a, b)), z.to_coords(omega.value(circ.mul(a, b), c)));
                if (lhs != rhs)
                    return std::array<Element, 3>{a, b, c};
            }
    return std::nullopt;
}

bool verify_group_2cocycle(const GroupTwoCocycle& omega, const FiniteGroup& circ) {
    return !find_group_2cocycle_violation(omega, circ).has_value();
}

bool is_group_coboundary_of(const GroupTwoCocycle& omega, const FiniteGroup& circ, const GroupMap& zeta) {
    const std::size_t n = omega.order();
    const AbelianDecomposition& z = omega.decomposition();
    if (zeta.size() != n || circ.order() != n)
        return false;
    for (Element x : zeta)
        if (!z.contains(x))
            return false;
    if (zeta[omega.identity()] != omega.identity())
        return false;
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const auto rhs = z.add(z.add(z.to_coords(zeta[a]), z.to_coords(zeta[b])),
                                   z.negate(z.to_coords(zeta[circ.mul(a, b)])));
            if (z.to_coords(omega.value(a, b)) != rhs)
                return false;
        }
    return true;
}

std::optional<GroupMap> coboundary_solve_group(const GroupTwoCocycle& omega, const FiniteGroup& circ) {
    const std::size_t n = omega.order();
    if (circ.order() != n)
        throw std::invalid_argument("cocycle and group orders differ");
    const Element e = omega.identity();
    const AbelianDecomposition& z = omega.decomposition();
    const auto& factors = z.invariant_factors();
    if (factors.empty())
        return GroupMap(n, e);

    // Unknowns: zeta(a) for a != e.
    std::vector<Element> unknowns;
    std::map<Element, std::size_t> column;
    for (Element a = 0; a < n; ++a)
        if (a != e) {
            column[a] = unknowns.size();
            unknowns.push_back(a);
        }
    const std::size_t m = unknowns.size();
    if (m == 0)
        return GroupMap(n, e);

    IntMatrix system(m * m, m);
    std::vector<std::pair<Element, Element>> pairs;
    std::size_t row = 0;
    for (Element a : unknowns)
        for (Element b : unknowns) {
            system(row, column[a]) += 1;
            system(row, column[b]) += 1;
            const Element ab = circ.mul(a, b);
            if (ab != e)
                system(row, column[ab]) -= 1;
            pairs.emplace_back(a, b);
            ++row;
        }

    std::vector<AbelianDecomposition::Coords> coords(n, AbelianDecomposition::Coords(factors.size(), 0));
    for (std::size_t j = 0; j < factors.size(); ++j) {
        std::vector<mpz_class> rhs;
        rhs.reserve(pairs.size());
        for (const auto& [a, b] : pairs)
            rhs.emplace_back(static_cast<unsigned long>(z.to_coords(omega.value(a, b))[j]));
        const auto sol = solve_congruences(system, rhs, mpz_class(static_cast<unsigned long>(factors[j])));
        if (!sol)
            return std::nullopt;
        for (std::size_t k = 0; k < m; ++k)
            coords[unknowns[k]][j] = (*sol)[k].get_ui();
    }
    GroupMap zeta(n);
    for (Element a = 0; a < n; ++a)
        zeta[a] = z.from_coords(coords[a]);
    if (!is_group_coboundary_of(omega, circ, zeta))
        throw std::logic_error("congruence solution does not trivialize the cocycle");
    return zeta;
}

const char* to_string(GroupObstructionStatus status) {
    switch (status) {
    case GroupObstructionStatus::induced:
        return "induced";
    case GroupObstructionStatus::not_inner:
        return "not-inner";
    case GroupObstructionStatus::nontrivial_class:
        return "class-nontrivial";
    }
    return "unknown";
}

GroupObstructionResult construct_rb_from_obstruction_group(const PostGroup& pg,
                                                           const std::optional<GroupMap>& witness) {
    GroupObstructionResult result;
    if (witness) {
        if (!is_inner_witness_group(pg, *witness))
            throw std::invalid_argument("supplied witness is not a normalized inner witness");
        result.witness = witness;
    } else {
        result.outer_element = first_outer_element(pg);
        if (result.outer_element)
            return result;
        result.witness = innerness_witness_group(pg);
    }
    const FiniteGroup& g = pg.base();
    const FiniteGroup circ = sub_adjacent_group(pg);
    result.omega = obstruction_cocycle_group(pg, *result.witness);
    result.zeta = coboundary_solve_group(*result.omega, circ);
    if (!result.zeta) {
        result.status = GroupObstructionStatus::nontrivial_class;
        return result;
    }
    GroupMap b(g.order());
    for (Element a = 0; a < g.order(); ++a)
        b[a] = g.mul((*result.witness)[a], (*result.zeta)[a]);
    if (!check_rb_group(g, b) || !(from_rb_group(g, b) == pg))
        throw std::logic_error("reconstructed operator failed verification");
    result.rota_baxter = std::move(b);
    result.status = GroupObstructionStatus::induced;
    return result;
}

PullbackGroup pullback_group(const PostGroup& pg) {
    if (first_outer_element(pg))
        throw std::invalid_argument("pullback requires an inner post-group");
    const FiniteGroup& g = pg.base();
    const FiniteGroup circ = sub_adjacent_group(pg);
    const std::size_t n = g.order();

    std::vector<GroupMap> ads;
    for (Element c = 0; c < n; ++c)
        ads.push_back(inner_automorphism(g, c));
    PullbackGroup out;
    std::map<std::pair<Element, Element>, Element> index;
    for (Element a = 0; a < n; ++a) {
        const GroupMap l = pg.left_multiplication(a);
        for (Element b = 0; b < n; ++b)
            if (ads[b] == l) {
                index[{a, b}] = out.pairs.size();
                out.pairs.emplace_back(a, b);
            }
    }
    const std::size_t m = out.pairs.size();
    std::vector<Element> table(m * m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            const auto [a1, b1] = out.pairs[x];
            const auto [a2, b2] = out.pairs[y];
            const auto it = index.find({circ.mul(a1, a2), g.mul(b1, b2)});
            if (it == index.end())
                throw std::logic_error("pullback is not closed under the product");
            table[x * m + y] = it->second;
        }
    std::vector<std::string> names;
    for (const auto& [a, b] : out.pairs)
        names.push_back("(" + g.name(a) + "," + g.name(b) + ")");
    out.group = FiniteGroup(m, std::move(table), std::move(names));
    return out;
}

GroupDifference rb_difference_cocycle_group(const FiniteGroup& g, const GroupMap& b1, const GroupMap& b2) {
    if (!check_rb_group(g, b1))
        return {std::nullopt, "first operator is not Rota-Baxter"};
    if (!check_rb_group(g, b2))
        return {std::nullopt, "second operator is not Rota-Baxter"};
    const PostGroup p1 = from_rb_group(g, b1);
    const PostGroup p2 = from_rb_group(g, b2);
    const std::size_t n = g.order();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (p1.act(a, b) != p2.act(a, b))
                return {std::nullopt, "operators induce different products: " + g.name(a) + " |> " + g.name(b) +
                                          " = " + g.name(p1.act(a, b)) + " vs " + g.name(p2.act(a, b))};
    GroupMap zeta(n);
    for (Element a = 0; a < n; ++a)
        zeta[a] = g.mul(g.inverse(b1[a]), b2[a]);
    const std::vector<Element> z = center_group(g);
    for (Element a = 0; a < n; ++a)
        if (!std::binary_search(z.begin(), z.end(), zeta[a]))
            throw std::logic_error("difference of operators leaves the center");
    const FiniteGroup circ = sub_adjacent_group(p1);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (zeta[circ.mul(a, b)] != g.mul(zeta[a], zeta[b]))
                throw std::logic_error("difference of operators is not multiplicative");
    return {zeta, "same product; difference is a 1-cocycle into the center"};
}

bool GroupTower::certified() const {
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const GroupLevelReport& r = reports[i];
        if (!r.is_group || !r.rota_baxter)
            return false;
        if (i > 0 && (!r.b_hom || !r.tilde_level_hom))
            return false;
    }
    return true;
}

GroupTower group_tower(const FiniteGroup& g, const GroupMap& b, std::size_t depth) {
    if (!check_group(g))
        throw std::invalid_argument("tower requires a valid group");
    if (!check_rb_group(g, b))
        throw std::invalid_argument("map is not a Rota-Baxter operator");
    const std::size_t n = g.order();
    GroupTower tower;
    tower.b = b;
    tower.levels.push_back(g);
    tower.reports.push_back({true, true, false, false, false});
    for (std::size_t i = 1; i <= depth; ++i) {
        const FiniteGroup& prev = tower.levels.back();
        std::vector<Element> table(n * n);
        for (Element x = 0; x < n; ++x) {
            const Element bx = b[x], bxi = prev.inverse(bx);
            for (Element y = 0; y < n; ++y)
                table[x * n + y] = prev.mul(x, prev.mul(prev.mul(bx, y), bxi));
        }
        FiniteGroup level(n, std::move(table), g.names());
        GroupLevelReport r;
        r.is_group = check_group(level);
        r.rota_baxter = r.is_group && check_rb_group(level, b);
        r.b_hom = is_group_homomorphism(level, prev, b);
        GroupMap tilde_level(n), tilde_literal(n);
        for (Element x = 0; x < n; ++x) {
            tilde_level[x] = prev.mul(x, b[x]);
            tilde_literal[x] = g.mul(x, b[x]);
        }
        r.tilde_level_hom = is_group_homomorphism(level, prev, tilde_level);
        r.tilde_literal_hom = is_group_homomorphism(level, prev, tilde_literal);
        tower.levels.push_back(std::move(level));
        tower.reports.push_back(r);
        if (!r.is_group)
            break;
    }
    return tower;
}

}  // namespace innerpost
