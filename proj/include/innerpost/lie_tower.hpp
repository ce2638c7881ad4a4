#pragma once

#include "innerpost/postlie.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace innerpost {

/// [x,y]' = [Rx,y] + [x,Ry] + [x,y]. Throws std::invalid_argument when R
/// is not a Rota-Baxter operator on `lie`.
LieAlgebra next_bracket(const LieAlgebra& lie, const LinearMap& r);

/// Brackets g_0, g_1, ..., g_depth on one vector space, each obtained from
/// the previous one by next_bracket with the same R.
struct LieTower {
    std::vector<LieAlgebra> levels;
    LinearMap r;
};

/// Builds the tower and checks, for every level i >= 1, that R and R + id
/// are homomorphisms g_i -> g_{i-1}; a failed check throws std::logic_error.
LieTower build_tower(const LieAlgebra& lie, const LinearMap& r, std::size_t depth);

enum class IsomorphismCertificate { none, r, r_plus_id };

const char* to_string(IsomorphismCertificate c);

struct LieLevelReport {
    Fingerprint fingerprint;
    bool semisimple = false;
    bool jacobi = false;
    std::size_t rank_r_power = 0;          // rank of R^i : g_i -> g_0
    std::size_t rank_r_plus_id_power = 0;  // rank of (R + id)^i
    bool images_span = false;              // im R + im(R + id) = g
    bool kernels_meet_trivially = false;   // ker R and ker(R + id) intersect in 0
    bool image_intersection_identity = false;  // im R meet im(R+id) = im R(R+id)
    IsomorphismCertificate certificate = IsomorphismCertificate::none;  // g_i -> g_{i-1}
};

struct LieTowerReport {
    std::vector<LieLevelReport> levels;
    bool fingerprints_agree = false;
};

LieTowerReport tower_report(const LieTower& tower);

}  // namespace innerpost
