#include "innerpost/lie_obstruction.hpp"

#include <stdexcept>

namespace innerpost {

LieTwoCochain::LieTwoCochain(Subspace values_in, const std::vector<Vector>& upper)
    : dim_(0), values_in_(std::move(values_in)) {
    const std::size_t n = values_in_.ambient_dim();
    dim_ = n;
    if (upper.size() != (n < 2 ? 0 : n * (n - 1) / 2))
        throw std::invalid_argument("cochain needs one value per pair i < j");
    table_.assign(n * n, Vector(n));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++idx) {
            if (!values_in_.contains(upper[idx]))
                throw std::invalid_argument("cochain value on (e" + std::to_string(i + 1) + ",e" +
                                            std::to_string(j + 1) + ") lies outside the center");
            table_[i * n + j] = upper[idx];
            table_[j * n + i] = GaussianRational(-1) * upper[idx];
        }
}

LieTwoCochain LieTwoCochain::zero(Subspace values_in) {
    const std::size_t n = values_in.ambient_dim();
    return LieTwoCochain(std::move(values_in), std::vector<Vector>((n < 2 ? 0 : n * (n - 1) / 2), Vector(n)));
}

Vector LieTwoCochain::evaluate(const Vector& x, const Vector& y) const {
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero() || i == j)
                continue;
            out = out + (x[i] * y[j]) * value(i, j);
        }
    }
    return out;
}

Vector LieTwoCochain::coordinates(std::size_t i, std::size_t j) const {
    return *values_in_.coordinates(value(i, j));
}

bool LieTwoCochain::is_zero() const {
    for (const auto& v : table_)
        if (!innerpost::is_zero(v))
            return false;
    return true;
}

LieTwoCochain obstruction_cocycle(const PostLieAlgebra& post, const LinearMap& phi) {
    if (!is_inner_witness(post, phi))
        throw std::invalid_argument("map is not an inner witness: [phi(x), y] differs from x |> y");
    const LieAlgebra& g = post.base();
    const LieAlgebra sub = sub_adjacent(post);
    const std::size_t n = g.dim();
    std::vector<Vector> upper;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            upper.push_back(g.bracket(phi.image(i), phi.image(j)) - phi(sub.bracket_basis(i, j)));
    return LieTwoCochain(center(g), upper);
}

bool verify_lie_2cocycle(const LieTwoCochain& kappa, const LieAlgebra& sub) {
    const std::size_t n = sub.dim();
    if (kappa.dim() != n)
        throw std::invalid_argument("cochain and algebra dimensions differ");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector ei = basis_vector(n, i), ej = basis_vector(n, j), ek = basis_vector(n, k);
                const Vector sum = kappa.evaluate(sub.bracket_basis(i, j), ek) +
                                   kappa.evaluate(sub.bracket_basis(j, k), ei) +
                                   kappa.evaluate(sub.bracket_basis(k, i), ej);
                if (!is_zero(sum))
                    return false;
            }
    return true;
}

std::optional<LinearMap> coboundary_solve(const LieTwoCochain& kappa, const LieAlgebra& sub) {
    const std::size_t n = sub.dim();
    if (kappa.dim() != n)
        throw std::invalid_argument("cochain and algebra dimensions differ");
    const auto& zbasis = kappa.values_in().basis();
    const std::size_t dz = zbasis.size();
    if (dz == 0)
        return kappa.is_zero() ? std::optional<LinearMap>(LinearMap::zero(n)) : std::nullopt;

    // Unknown tau[m][k]: coefficient of z_k in t(e_m), at index m * dz + k.
    const std::size_t pairs = n * (n - 1) / 2;
    ExactMatrix system(std::max<std::size_t>(pairs * dz, 1), n * dz);
    Vector rhs(system.rows());
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector coords = kappa.coordinates(i, j);
            for (std::size_t k = 0; k < dz; ++k, ++row) {
                for (std::size_t m = 0; m < n; ++m)
                    system(row, m * dz + k) = -sub.constant(i, j, m);
                rhs[row] = coords[k];
            }
        }
    const auto sol = solve_affine(system, rhs);
    if (!sol)
        return std::nullopt;
    ExactMatrix t(n, n);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < dz; ++k) {
            const GaussianRational& tau = sol->particular[m * dz + k];
            if (tau.is_zero())
                continue;
            for (std::size_t r = 0; r < n; ++r)
                t(r, m) += tau * zbasis[k][r];
        }
    return LinearMap(std::move(t));
}

const char* to_string(ObstructionStatus status) {
    switch (status) {
    case ObstructionStatus::induced:
        return "induced";
    case ObstructionStatus::not_inner:
        return "not-inner";
    case ObstructionStatus::nontrivial_class:
        return "class-nontrivial";
    }
    return "unknown";
}

LieObstructionResult construct_rb_from_obstruction(const PostLieAlgebra& post,
                                                   const std::optional<LinearMap>& witness) {
    LieObstructionResult result;
    if (witness) {
        if (!is_inner_witness(post, *witness))
            throw std::invalid_argument("supplied witness does not satisfy [phi(x), y] = x |> y");
        result.witness = witness;
    } else {
        result.outer_index = first_outer_index(post);
        if (result.outer_index)
            return result;
        result.witness = innerness_witness(post);
    }
    const LieAlgebra sub = sub_adjacent(post);
    result.kappa = obstruction_cocycle(post, *result.witness);
    result.t = coboundary_solve(*result.kappa, sub);
    if (!result.t) {
        result.status = ObstructionStatus::nontrivial_class;
        return result;
    }
    result.rota_baxter = *result.witness - *result.t;
    if (!check_rota_baxter(post.base(), *result.rota_baxter) ||
        !(from_adjoint_map(post.base(), *result.rota_baxter) == post))
        throw std::logic_error("reconstructed operator failed verification");
    result.status = ObstructionStatus::induced;
    return result;
}

PullbackAlgebra pullback_algebra(const PostLieAlgebra& post) {
    if (first_outer_index(post))
        throw std::invalid_argument("pullback requires an inner post-Lie algebra");
    const LieAlgebra& g = post.base();
    const LieAlgebra sub = sub_adjacent(post);
    const std::size_t n = g.dim();
    if (n == 0)
        return {LieAlgebra(0), {}};

    ExactMatrix condition(n * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vector left = post.left_multiplication(basis_vector(n, i)).flatten();
        const Vector ad = ad_matrix(g, basis_vector(n, i)).flatten();
        for (std::size_t r = 0; r < n * n; ++r) {
            condition(r, i) = left[r];
            condition(r, n + i) = -ad[r];
        }
    }
    const Subspace space(2 * n, nullspace(condition));
    const std::size_t expected = n + center(g).dim();
    if (space.dim() != expected)
        throw std::logic_error("pullback has unexpected dimension");

    auto split = [n](const Vector& v) {
        return std::pair{Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)),
                         Vector(v.begin() + static_cast<std::ptrdiff_t>(n), v.end())};
    };
    LieAlgebra::BracketTable brackets;
    const auto& basis = space.basis();
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            const auto [x1, y1] = split(basis[a]);
            const auto [x2, y2] = split(basis[b]);
            Vector product = sub.bracket(x1, x2);
            const Vector second = g.bracket(y1, y2);
            product.insert(product.end(), second.begin(), second.end());
            auto coords = space.coordinates(product);
            if (!coords)
                throw std::logic_error("pullback is not closed under the bracket");
            brackets[{a, b}] = std::move(*coords);
        }
    return {LieAlgebra(basis.size(), brackets), basis};
}

LieDifference rb_difference_cocycle(const LieAlgebra& lie, const LinearMap& r1, const LinearMap& r2) {
    if (!check_rota_baxter(lie, r1))
        return {std::nullopt, "first operator is not Rota-Baxter"};
    if (!check_rota_baxter(lie, r2))
        return {std::nullopt, "second operator is not Rota-Baxter"};
    const PostLieAlgebra p1 = from_adjoint_map(lie, r1);
    const PostLieAlgebra p2 = from_adjoint_map(lie, r2);
    const std::size_t n = lie.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p1.product_basis(i, j) != p2.product_basis(i, j))
                return {std::nullopt, "operators induce different products: e" + std::to_string(i + 1) + " |> e" +
                                          std::to_string(j + 1) + " = " + to_string(p1.product_basis(i, j)) +
                                          " vs " + to_string(p2.product_basis(i, j))};
    const LinearMap t = r2 - r1;
    const Subspace z = center(lie);
    for (std::size_t i = 0; i < n; ++i)
        if (!z.contains(t.image(i)))
            throw std::logic_error("difference of operators leaves the center");
    const LieAlgebra sub = sub_adjacent(p1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!is_zero(t(sub.bracket_basis(i, j))))
                throw std::logic_error("difference of operators is not a 1-cocycle");
    return {t, "same product; difference is a 1-cocycle into the center"};
}

}  // namespace innerpost
