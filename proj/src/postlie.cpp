#include "innerpost/postlie.hpp"

#include <stdexcept>

namespace innerpost {

LinearMap::LinearMap(ExactMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols())
        throw std::invalid_argument("linear map must be square");
}

PostLieAlgebra::PostLieAlgebra(LieAlgebra base, std::vector<Vector> products)
    : base_(std::move(base)), products_(std::move(products)) {
    const std::size_t n = base_.dim();
    if (products_.size() != n * n)
        throw std::invalid_argument("product table has wrong size");
    for (const auto& v : products_)
        if (v.size() != n)
            throw std::invalid_argument("product value has wrong length");
}

Vector PostLieAlgebra::product(const Vector& x, const Vector& y) const {
    const std::size_t n = dim();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero())
                continue;
            const GaussianRational s = x[i] * y[j];
            const Vector& p = product_basis(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!p[k].is_zero())
                    out[k] += s * p[k];
        }
    }
    return out;
}

ExactMatrix PostLieAlgebra::left_multiplication(const Vector& x) const {
    const std::size_t n = dim();
    ExactMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vector col = product(x, basis_vector(n, j));
        for (std::size_t k = 0; k < n; ++k)
            m(k, j) = col[k];
    }
    return m;
}

PostLieReport check_postlie_axioms(const PostLieAlgebra& post) {
    const LieAlgebra& g = post.base();
    const std::size_t n = post.dim();
    PostLieReport report;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Vector x = basis_vector(n, a), y = basis_vector(n, b), z = basis_vector(n, c);
                // x |> [y,z] = [x |> y, z] + [y, x |> z]
                Vector r1 = post.product(x, g.bracket_basis(b, c)) -
                            g.bracket(post.product_basis(a, b), z) - g.bracket(y, post.product_basis(a, c));
                if (!is_zero(r1))
                    report.violations.push_back({1, a, b, c, std::move(r1)});
                // ([x,y] + x |> y - y |> x) |> z = x |> (y |> z) - y |> (x |> z)
                const Vector lhs_arg = g.bracket_basis(a, b) + post.product_basis(a, b) - post.product_basis(b, a);
                Vector r2 = post.product(lhs_arg, z) - post.product(x, post.product_basis(b, c)) +
                            post.product(y, post.product_basis(a, c));
                if (!is_zero(r2))
                    report.violations.push_back({2, a, b, c, std::move(r2)});
            }
    return report;
}

LieAlgebra sub_adjacent(const PostLieAlgebra& post) {
    const std::size_t n = post.dim();
    LieAlgebra::BracketTable brackets;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            brackets[{i, j}] = post.product_basis(i, j) - post.product_basis(j, i) + post.base().bracket_basis(i, j);
    return LieAlgebra(n, brackets);
}

bool check_rota_baxter(const LieAlgebra& lie, const LinearMap& r) {
    const std::size_t n = lie.dim();
    if (r.dim() != n)
        throw std::invalid_argument("operator dimension does not match the algebra");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector x = basis_vector(n, i), y = basis_vector(n, j);
            const Vector rx = r.image(i), ry = r.image(j);
            const Vector lhs = lie.bracket(rx, ry);
            const Vector rhs = r(lie.bracket(rx, y) + lie.bracket(x, ry) + lie.bracket_basis(i, j));
            if (lhs != rhs)
                return false;
        }
    return true;
}

PostLieAlgebra from_adjoint_map(const LieAlgebra& lie, const LinearMap& phi) {
    const std::size_t n = lie.dim();
    if (phi.dim() != n)
        throw std::invalid_argument("map dimension does not match the algebra");
    std::vector<Vector> products;
    products.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vector image = phi.image(i);
        for (std::size_t j = 0; j < n; ++j)
            products.push_back(lie.bracket(image, basis_vector(n, j)));
    }
    return PostLieAlgebra(lie, std::move(products));
}

PostLieAlgebra from_rota_baxter(const LieAlgebra& lie, const LinearMap& r) {
    if (!check_rota_baxter(lie, r))
        throw std::invalid_argument("operator is not a Rota-Baxter operator of weight 1");
    return from_adjoint_map(lie, r);
}

std::optional<std::size_t> first_outer_index(const PostLieAlgebra& post) {
    const std::size_t n = post.dim();
    const Subspace inner = inner_derivations(post.base());
    for (std::size_t i = 0; i < n; ++i)
        if (!inner.contains(post.left_multiplication(basis_vector(n, i)).flatten()))
            return i;
    return std::nullopt;
}

std::optional<LinearMap> innerness_witness(const PostLieAlgebra& post) {
    const std::size_t n = post.dim();
    if (first_outer_index(post))
        return std::nullopt;
    std::vector<Vector> ads;
    for (std::size_t k = 0; k < n; ++k)
        ads.push_back(ad_matrix(post.base(), basis_vector(n, k)).flatten());
    const ExactMatrix system = ExactMatrix::from_columns(ads, n * n);
    ExactMatrix phi(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto sol = solve_affine(system, post.left_multiplication(basis_vector(n, i)).flatten());
        if (!sol)
            return std::nullopt;
        for (std::size_t k = 0; k < n; ++k)
            phi(k, i) = sol->particular[k];
    }
    return LinearMap(std::move(phi));
}

bool is_inner_witness(const PostLieAlgebra& post, const LinearMap& phi) {
    const std::size_t n = post.dim();
    if (phi.dim() != n)
        return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vector image = phi.image(i);
        for (std::size_t j = 0; j < n; ++j)
            if (post.base().bracket(image, basis_vector(n, j)) != post.product_basis(i, j))
                return false;
    }
    return true;
}

}  // namespace innerpost
