#include "support.hpp"

#include <stdexcept>

#ifndef INNERPOST_DATA_DIR
#error "INNERPOST_DATA_DIR must be defined"
#endif

namespace innerpost::testing {

std::string data_path(const std::string& name) { return std::string(INNERPOST_DATA_DIR) + "/" + name; }

GaussianRational q(long num, long den) { return GaussianRational(mpq_class(num, den)); }
GaussianRational qi(long num, long den) { return GaussianRational(0, mpq_class(num, den)); }

LinearMap map_from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
    std::vector<Vector> vs(rows.begin(), rows.end());
    return LinearMap(ExactMatrix::from_rows(vs));
}

namespace {

LieAlgebra algebra(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Vector>>& entries) {
    LieAlgebra::BracketTable t;
    for (const auto& [i, j, v] : entries)
        t[{i, j}] = v;
    return LieAlgebra(n, t);
}

Vector v3(GaussianRational a, GaussianRational b, GaussianRational c) { return {a, b, c}; }

}  // namespace

LieAlgebra sl2() {
    return algebra(3, {{0, 1, v3(0, 0, 1)}, {1, 2, v3(1, 0, 0)}, {2, 0, v3(0, 1, 0)}});
}

LinearMap sl2_p() {
    return map_from_rows({{1, 0, 0}, {0, q(-1, 2), qi(-1, 2)}, {0, qi(1, 2), q(-1, 2)}});
}

std::vector<Vector> sl2_products() {
    return {
        v3(0, 0, 0),        v3(0, 0, 1),         v3(0, -1, 0),         // e1 |> e1, e2, e3
        v3(0, qi(1, 2), q(1, 2)), v3(qi(-1, 2), 0, 0), v3(q(-1, 2), 0, 0),  // e2 |> ...
        v3(0, q(-1, 2), qi(1, 2)), v3(q(1, 2), 0, 0),  v3(qi(-1, 2), 0, 0),  // e3 |> ...
    };
}

LieAlgebra solvable() { return algebra(3, {{0, 1, v3(0, 1, 0)}}); }

LinearMap solvable_phi(const GaussianRational& alpha, const GaussianRational& beta, const GaussianRational& gamma) {
    return map_from_rows({{1, 0, 0}, {0, -1, 0}, {alpha, beta, gamma}});
}

LieAlgebra heisenberg() { return algebra(3, {{0, 1, v3(0, 0, 1)}}); }

namespace {

// r^k s^m with index k + n m; s r s = r^{-1}.
FiniteGroup dihedral(std::size_t n) {
    const std::size_t order = 2 * n;
    std::vector<Element> table(order * order);
    for (Element x = 0; x < order; ++x)
        for (Element y = 0; y < order; ++y) {
            const std::size_t a = x % n, m = x / n, b = y % n, k = y / n;
            const std::size_t rot = m == 0 ? (a + b) % n : (a + n - b) % n;
            table[x * order + y] = rot + n * ((m + k) % 2);
        }
    return FiniteGroup(order, std::move(table));
}

}  // namespace

FiniteGroup s3() { return dihedral(3); }
FiniteGroup d4() { return dihedral(4); }
FiniteGroup z2() { return FiniteGroup::cyclic(2); }
FiniteGroup z4() { return FiniteGroup::cyclic(4); }

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t n = a.order() * b.order();
    std::vector<Element> table(n * n);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            table[x * n + y] = a.mul(x / b.order(), y / b.order()) * b.order() + b.mul(x % b.order(), y % b.order());
    return FiniteGroup(n, std::move(table));
}

std::vector<GroupMap> brute_force_rb(const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<GroupMap> out;
    GroupMap b(n, 0);
    for (;;) {
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x) {
            const Element bx = b[x];
            for (Element y = 0; y < n && ok; ++y) {
                const Element conj = g.mul(g.mul(bx, y), g.inverse(bx));
                ok = g.mul(bx, b[y]) == b[g.mul(x, conj)];
            }
        }
        if (ok)
            out.push_back(b);
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++b[pos] < n)
                break;
            b[pos] = 0;
            if (pos == 0) {
                return out;
            }
        }
    }
}

std::vector<GroupMap> brute_force_coboundaries(const FiniteGroup& g, const FiniteGroup& circ,
                                               const std::vector<Element>& omega) {
    const std::size_t n = g.order();
    const std::vector<Element> z = center_group(g);
    const Element e = g.identity();
    std::vector<Element> others;
    for (Element a = 0; a < n; ++a)
        if (a != e)
            others.push_back(a);
    std::vector<std::size_t> choice(others.size(), 0);
    std::vector<GroupMap> out;
    for (;;) {
        GroupMap zeta(n, e);
        for (std::size_t k = 0; k < others.size(); ++k)
            zeta[others[k]] = z[choice[k]];
        bool ok = true;
        for (Element a = 0; a < n && ok; ++a)
            for (Element b = 0; b < n && ok; ++b)
                ok = omega[a * n + b] == g.mul(g.mul(zeta[a], zeta[b]), g.inverse(zeta[circ.mul(a, b)]));
        if (ok)
            out.push_back(zeta);
        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == z.size())
            choice[pos++] = 0;
        if (pos == choice.size())
            return out;
    }
}

GaussianRational random_rational(std::mt19937_64& rng, long range) {
    std::uniform_int_distribution<long> num(-range, range), den(1, range);
    return GaussianRational(mpq_class(num(rng), den(rng)));
}

GaussianRational random_gaussian(std::mt19937_64& rng, long range) {
    return random_rational(rng, range) + random_rational(rng, range) * GaussianRational::i();
}

namespace {

struct Family {
    std::string name;
    LieAlgebra lie;
};

std::vector<Family> families() {
    auto e = [](std::size_t n, std::size_t k) { return basis_vector(n, k); };
    return {
        {"abelian-1", LieAlgebra(1)},
        {"abelian-2", LieAlgebra(2)},
        {"abelian-3", LieAlgebra(3)},
        {"abelian-4", LieAlgebra(4)},
        {"r2", algebra(2, {{0, 1, e(2, 1)}})},
        {"heisenberg", heisenberg()},
        {"r2+k", solvable()},
        {"r3-scalar", algebra(3, {{2, 0, e(3, 0)}, {2, 1, e(3, 1)}})},
        {"r3-minus", algebra(3, {{2, 0, e(3, 0)}, {2, 1, GaussianRational(-1) * e(3, 1)}})},
        {"heisenberg+k", algebra(4, {{0, 1, e(4, 2)}})},
        {"r2+r2", algebra(4, {{0, 1, e(4, 1)}, {2, 3, e(4, 3)}})},
        {"filiform-4", algebra(4, {{0, 1, e(4, 2)}, {0, 2, e(4, 3)}})},
        {"r2+k2", algebra(4, {{0, 1, e(4, 1)}})},
    };
}

bool coordinate_subalgebra(const LieAlgebra& lie, unsigned mask) {
    const std::size_t n = lie.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask >> i & 1) || !(mask >> j & 1))
                continue;
            const Vector& v = lie.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!v[k].is_zero() && !(mask >> k & 1))
                    return false;
        }
    return true;
}

// [Rx, y] + [x, Ry] + [x, y] on basis vectors, computed from the brackets.
Vector r_bracket(const LieAlgebra& lie, const ExactMatrix& r, std::size_t i, std::size_t j) {
    const std::size_t n = lie.dim();
    return lie.bracket(r.column(i), basis_vector(n, j)) + lie.bracket(basis_vector(n, i), r.column(j)) +
           lie.bracket_basis(i, j);
}

}  // namespace

LinearMap random_central_map(std::mt19937_64& rng, const LieAlgebra& lie) {
    const std::size_t n = lie.dim();
    const auto zb = center(lie).basis();
    ExactMatrix t(n, n);
    for (std::size_t m = 0; m < n; ++m)
        for (const auto& z : zb) {
            const GaussianRational c = random_rational(rng, 2);
            for (std::size_t r = 0; r < n; ++r)
                t(r, m) += c * z[r];
        }
    return LinearMap(std::move(t));
}

RandomRb random_rb(std::mt19937_64& rng) {
    const auto fams = families();
    const Family& fam = fams[std::uniform_int_distribution<std::size_t>(0, fams.size() - 1)(rng)];
    const LieAlgebra& lie = fam.lie;
    const std::size_t n = lie.dim();

    ExactMatrix r(n, n);
    bool abelian = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            abelian = abelian && is_zero(lie.bracket_basis(i, j));
    if (abelian) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) = random_rational(rng);
    } else {
        std::vector<unsigned> splits;
        for (unsigned mask = 0; mask < (1u << n); ++mask)
            if (coordinate_subalgebra(lie, mask) && coordinate_subalgebra(lie, ((1u << n) - 1) & ~mask))
                splits.push_back(mask);
        const unsigned mask = splits[std::uniform_int_distribution<std::size_t>(0, splits.size() - 1)(rng)];
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                r(i, i) = -1;
        if (rng() & 1)
            r = GaussianRational(-1) * ExactMatrix::identity(n) - r;
    }

    // Add t: g -> Z(g) vanishing on [x, y]_R; such t keeps R Rota-Baxter.
    const auto zb = center(lie).basis();
    const std::size_t dz = zb.size();
    if (dz > 0 && (rng() & 1)) {
        ExactMatrix cond(std::max<std::size_t>(n * n * dz, 1), n * dz);
        std::size_t row = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Vector s = r_bracket(lie, r, i, j);
                for (std::size_t k = 0; k < dz; ++k, ++row)
                    for (std::size_t m = 0; m < n; ++m)
                        cond(row, m * dz + k) = s[m];
            }
        for (const auto& tau : nullspace(cond)) {
            const GaussianRational c = random_rational(rng, 2);
            for (std::size_t m = 0; m < n; ++m)
                for (std::size_t k = 0; k < dz; ++k)
                    for (std::size_t rr = 0; rr < n; ++rr)
                        r(rr, m) += c * tau[m * dz + k] * zb[k][rr];
        }
    }

    ExactMatrix basis = ExactMatrix::identity(n);
    if (rng() % 4 != 0) {
        std::uniform_int_distribution<long> entry(-2, 2);
        do {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    basis(i, j) = GaussianRational(entry(rng));
        } while (determinant(basis).is_zero());
    }
    const ExactMatrix inv = *inverse(basis);
    RandomRb out{fam.name, change_basis(lie, basis), LinearMap(inv * r * basis)};
    if (!check_rota_baxter(out.lie, out.r))
        throw std::logic_error("generator produced a non Rota-Baxter operator on " + fam.name);
    return out;
}

}  // namespace innerpost::testing
