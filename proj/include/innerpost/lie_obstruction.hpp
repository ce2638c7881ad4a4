#pragma once

#include "innerpost/postlie.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace innerpost {

/// Antisymmetric bilinear map on basis pairs with values in a fixed
/// subspace (the center of the ambient Lie algebra).
class LieTwoCochain {
public:
    /// `upper[k]` is the value on the k-th pair (i, j), i < j, in
    /// lexicographic order. Throws std::invalid_argument when a value lies
    /// outside `values_in`.
    LieTwoCochain(Subspace values_in, const std::vector<Vector>& upper);

    static LieTwoCochain zero(Subspace values_in);

    std::size_t dim() const { return dim_; }
    const Subspace& values_in() const { return values_in_; }
    const Vector& value(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    Vector evaluate(const Vector& x, const Vector& y) const;
    /// Coordinates of value(i, j) against values_in().basis().
    Vector coordinates(std::size_t i, std::size_t j) const;
    bool is_zero() const;

    friend bool operator==(const LieTwoCochain&, const LieTwoCochain&) = default;

private:
    std::size_t dim_;
    Subspace values_in_;
    std::vector<Vector> table_;
};

/// kappa(x, y) = [phi x, phi y] - phi([x, y]_sub). Throws
/// std::invalid_argument if phi is not an inner witness for `post` or a
/// value falls outside the center.
LieTwoCochain obstruction_cocycle(const PostLieAlgebra& post, const LinearMap& phi);

/// Cyclic sum kappa([x,y],z) + kappa([y,z],x) + kappa([z,x],y) == 0 on
/// basis triples, brackets taken in `sub`.
bool verify_lie_2cocycle(const LieTwoCochain& kappa, const LieAlgebra& sub);

/// Canonical t: g -> Z with kappa(x, y) = -t([x, y]_sub) for all pairs,
/// or nullopt when the class of kappa is nontrivial.
std::optional<LinearMap> coboundary_solve(const LieTwoCochain& kappa, const LieAlgebra& sub);

enum class ObstructionStatus { induced, not_inner, nontrivial_class };

const char* to_string(ObstructionStatus status);

struct LieObstructionResult {
    ObstructionStatus status = ObstructionStatus::not_inner;
    std::optional<std::size_t> outer_index;  // set when not inner
    std::optional<LinearMap> witness;
    std::optional<LieTwoCochain> kappa;
    std::optional<LinearMap> t;
    std::optional<LinearMap> rota_baxter;  // phi - t
};

/// Runs witness -> kappa -> coboundary solve -> R = phi - t. A supplied
/// witness replaces the canonical one (it must satisfy [phi x, y] = x |> y).
LieObstructionResult construct_rb_from_obstruction(const PostLieAlgebra& post,
                                                   const std::optional<LinearMap>& witness = std::nullopt);

/// Fiber product {(x, y) : L(x) = ad_y} inside g_sub (+) g.
struct PullbackAlgebra {
    LieAlgebra algebra;
    std::vector<Vector> basis;  // vectors of length 2n: (x, y)
};

/// Throws std::invalid_argument when `post` is not inner.
PullbackAlgebra pullback_algebra(const PostLieAlgebra& post);

struct LieDifference {
    std::optional<LinearMap> t;
    std::string diagnostic;
};

/// t = R2 - R1 when both operators induce the same product; t is checked
/// to land in the center and to vanish on sub-adjacent brackets.
LieDifference rb_difference_cocycle(const LieAlgebra& lie, const LinearMap& r1, const LinearMap& r2);

}  // namespace innerpost
