#pragma once

#include "innerpost/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace innerpost {

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k (0-based indices).
///
/// Antisymmetry is enforced at construction: only one of (i, j), (j, i)
/// has to be supplied and the other is derived. The Jacobi identity is
/// not enforced here; see check_jacobi().
class LieAlgebra {
public:
    using BracketTable = std::map<std::pair<std::size_t, std::size_t>, Vector>;

    /// Abelian algebra of the given dimension.
    explicit LieAlgebra(std::size_t dim);

    /// Throws std::invalid_argument on out-of-range indices, a nonzero
    /// [e_i, e_i], or inconsistent values for (i, j) and (j, i).
    LieAlgebra(std::size_t dim, const BracketTable& brackets);

    /// Full table indexed [(i * dim + j) * dim + k]; must be antisymmetric.
    static LieAlgebra from_structure_constants(std::size_t dim, const std::vector<GaussianRational>& sc);

    std::size_t dim() const { return dim_; }
    const Vector& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    const GaussianRational& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[i * dim_ + j][k];
    }
    Vector bracket(const Vector& x, const Vector& y) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) = default;

private:
    std::size_t dim_;
    std::vector<Vector> table_;
};

/// A linear subspace of K^n kept as an rref basis, so that equal subspaces
/// have identical bases.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim);
    Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning);

    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates against basis(), or nullopt if v is not in the subspace.
    std::optional<Vector> coordinates(const Vector& v) const;

    Subspace operator+(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

struct JacobiViolation {
    std::size_t i, j, k;
    Vector residual;
};

std::vector<JacobiViolation> jacobi_violations(const LieAlgebra& lie);
bool check_jacobi(const LieAlgebra& lie);

/// Matrix of y -> [x, y].
ExactMatrix ad_matrix(const LieAlgebra& lie, const Vector& x);
Subspace center(const LieAlgebra& lie);

/// Derivations as a subspace of n x n matrices, flattened column-major
/// (see ExactMatrix::flatten).
Subspace derivations(const LieAlgebra& lie);
Subspace inner_derivations(const LieAlgebra& lie);

struct KillingForm {
    ExactMatrix form;
    bool semisimple;
};

/// Cartan's criterion: semisimple iff the Killing form is nondegenerate.
KillingForm killing_semisimple(const LieAlgebra& lie);
bool is_complete(const LieAlgebra& lie);

/// Span of [a, b] for a in `left`, b in `right`.
Subspace bracket_span(const LieAlgebra& lie, const Subspace& left, const Subspace& right);

/// Isomorphism invariants; equal fingerprints are evidence, not proof.
struct Fingerprint {
    std::size_t dim = 0;
    std::size_t center_dim = 0;
    std::size_t killing_rank = 0;
    std::vector<std::size_t> derived_series;
    std::vector<std::size_t> lower_central_series;
    std::size_t derivation_dim = 0;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    std::string to_string() const;
};

Fingerprint invariant_fingerprint(const LieAlgebra& lie);

/// True iff f([x, y]_from) == [f x, f y]_to on all basis pairs.
bool is_lie_homomorphism(const LieAlgebra& from, const LieAlgebra& to, const ExactMatrix& f);

/// Structure constants after the change of basis whose columns are the
/// new basis vectors written in the old basis.
LieAlgebra change_basis(const LieAlgebra& lie, const ExactMatrix& basis);

}  // namespace innerpost
