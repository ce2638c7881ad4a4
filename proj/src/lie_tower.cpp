#include "innerpost/lie_tower.hpp"

#include <stdexcept>

namespace innerpost {

LieAlgebra next_bracket(const LieAlgebra& lie, const LinearMap& r) {
    if (!check_rota_baxter(lie, r))
        throw std::invalid_argument("operator is not Rota-Baxter on this level");
    const std::size_t n = lie.dim();
    LieAlgebra::BracketTable brackets;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            brackets[{i, j}] = lie.bracket(r.image(i), basis_vector(n, j)) +
                               lie.bracket(basis_vector(n, i), r.image(j)) + lie.bracket_basis(i, j);
    return LieAlgebra(n, brackets);
}

LieTower build_tower(const LieAlgebra& lie, const LinearMap& r, std::size_t depth) {
    LieTower tower{{lie}, r};
    const ExactMatrix r_plus_id = r.matrix() + ExactMatrix::identity(lie.dim());
    for (std::size_t i = 1; i <= depth; ++i) {
        tower.levels.push_back(next_bracket(tower.levels.back(), r));
        const LieAlgebra& upper = tower.levels[i];
        const LieAlgebra& lower = tower.levels[i - 1];
        if (!is_lie_homomorphism(upper, lower, r.matrix()))
            throw std::logic_error("R is not a homomorphism from level " + std::to_string(i) + " to level " +
                                   std::to_string(i - 1));
        if (!is_lie_homomorphism(upper, lower, r_plus_id))
            throw std::logic_error("R + id is not a homomorphism from level " + std::to_string(i) +
                                   " to level " + std::to_string(i - 1));
    }
    return tower;
}

const char* to_string(IsomorphismCertificate c) {
    switch (c) {
    case IsomorphismCertificate::none:
        return "none";
    case IsomorphismCertificate::r:
        return "R";
    case IsomorphismCertificate::r_plus_id:
        return "R+id";
    }
    return "unknown";
}

namespace {

Subspace image_of(const ExactMatrix& m) {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        cols.push_back(m.column(c));
    return Subspace(m.rows(), cols);
}

Subspace kernel_of(const ExactMatrix& m) { return Subspace(m.cols(), nullspace(m)); }

ExactMatrix power(const ExactMatrix& m, std::size_t k) {
    ExactMatrix out = ExactMatrix::identity(m.rows());
    for (std::size_t i = 0; i < k; ++i)
        out = out * m;
    return out;
}

}  // namespace

LieTowerReport tower_report(const LieTower& tower) {
    LieTowerReport report;
    if (tower.levels.empty())
        return report;
    const std::size_t n = tower.levels.front().dim();
    const ExactMatrix& r = tower.r.matrix();
    const ExactMatrix r_plus_id = r + ExactMatrix::identity(n);

    // These only depend on R, so they are the same at every level.
    const bool images_span = (image_of(r) + image_of(r_plus_id)).dim() == n;
    const bool kernels_trivial = kernel_of(r).intersect(kernel_of(r_plus_id)).dim() == 0;
    const bool intersection_identity = image_of(r).intersect(image_of(r_plus_id)) == image_of(r * r_plus_id);
    const bool r_invertible = rank(r) == n;
    const bool r_plus_id_invertible = rank(r_plus_id) == n;

    for (std::size_t i = 0; i < tower.levels.size(); ++i) {
        const LieAlgebra& level = tower.levels[i];
        LieLevelReport lr;
        lr.fingerprint = invariant_fingerprint(level);
        lr.semisimple = killing_semisimple(level).semisimple;
        lr.jacobi = check_jacobi(level);
        lr.rank_r_power = rank(power(r, i));
        lr.rank_r_plus_id_power = rank(power(r_plus_id, i));
        lr.images_span = images_span;
        lr.kernels_meet_trivially = kernels_trivial;
        lr.image_intersection_identity = intersection_identity;
        if (i > 0) {
            const LieAlgebra& lower = tower.levels[i - 1];
            if (r_invertible && is_lie_homomorphism(level, lower, r))
                lr.certificate = IsomorphismCertificate::r;
            else if (r_plus_id_invertible && is_lie_homomorphism(level, lower, r_plus_id))
                lr.certificate = IsomorphismCertificate::r_plus_id;
        }
        report.levels.push_back(std::move(lr));
    }
    report.fingerprints_agree = true;
    for (const auto& lr : report.levels)
        if (!(lr.fingerprint == report.levels.front().fingerprint))
            report.fingerprints_agree = false;
    return report;
}

}  // namespace innerpost
