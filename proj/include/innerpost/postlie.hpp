#pragma once

#include "innerpost/lie.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace innerpost {

/// Square matrix acting on a Lie algebra; column j is the image of e_j.
class LinearMap {
public:
    LinearMap() = default;
    /// Throws std::invalid_argument unless the matrix is square.
    explicit LinearMap(ExactMatrix matrix);

    static LinearMap identity(std::size_t n) { return LinearMap(ExactMatrix::identity(n)); }
    static LinearMap zero(std::size_t n) { return LinearMap(ExactMatrix(n, n)); }

    std::size_t dim() const { return matrix_.rows(); }
    const ExactMatrix& matrix() const { return matrix_; }
    Vector image(std::size_t j) const { return matrix_.column(j); }
    Vector operator()(const Vector& x) const { return matrix_.apply(x); }

    friend LinearMap operator+(const LinearMap& a, const LinearMap& b) { return LinearMap(a.matrix_ + b.matrix_); }
    friend LinearMap operator-(const LinearMap& a, const LinearMap& b) { return LinearMap(a.matrix_ - b.matrix_); }
    friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
    ExactMatrix matrix_;
};

/// A Lie algebra with a second product e_i |> e_j = sum_k t[i][j][k] e_k.
class PostLieAlgebra {
public:
    /// `products[i * dim + j]` is e_i |> e_j. Throws on shape mismatch.
    PostLieAlgebra(LieAlgebra base, std::vector<Vector> products);

    const LieAlgebra& base() const { return base_; }
    std::size_t dim() const { return base_.dim(); }
    const Vector& product_basis(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
    Vector product(const Vector& x, const Vector& y) const;
    /// Matrix of y -> x |> y.
    ExactMatrix left_multiplication(const Vector& x) const;

    friend bool operator==(const PostLieAlgebra&, const PostLieAlgebra&) = default;

private:
    LieAlgebra base_;
    std::vector<Vector> products_;
};

struct PostLieViolation {
    int axiom;  // 1: derivation identity, 2: weighted associativity
    std::size_t i, j, k;
    Vector residual;
};

struct PostLieReport {
    std::vector<PostLieViolation> violations;
    bool valid() const { return violations.empty(); }
};

/// Every violated basis triple for both post-Lie identities.
PostLieReport check_postlie_axioms(const PostLieAlgebra& post);

/// [x,y] = x |> y - y |> x + [x,y]_g.
LieAlgebra sub_adjacent(const PostLieAlgebra& post);

/// [Rx,Ry] = R([Rx,y] + [x,Ry] + [x,y]) on all basis pairs.
bool check_rota_baxter(const LieAlgebra& lie, const LinearMap& r);

/// x |> y = [R x, y]. Throws std::invalid_argument if R is not Rota-Baxter.
PostLieAlgebra from_rota_baxter(const LieAlgebra& lie, const LinearMap& r);

/// x |> y = [phi x, y], with no Rota-Baxter requirement on phi.
PostLieAlgebra from_adjoint_map(const LieAlgebra& lie, const LinearMap& phi);

/// First basis index whose left multiplication is not an inner derivation.
std::optional<std::size_t> first_outer_index(const PostLieAlgebra& post);

/// Canonical phi with ad_{phi(e_i)} = L(e_i) (free variables zero), or
/// nullopt when some L(e_i) is outer.
std::optional<LinearMap> innerness_witness(const PostLieAlgebra& post);

/// [phi x, y] == x |> y on all basis pairs.
bool is_inner_witness(const PostLieAlgebra& post, const LinearMap& phi);

}  // namespace innerpost
