#pragma once

#include "innerpost/group.hpp"
#include "innerpost/postlie.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace innerpost::testing {

std::string data_path(const std::string& name);

GaussianRational q(long num, long den = 1);
GaussianRational qi(long num, long den = 1);  // (num/den) * i

LinearMap map_from_rows(const std::vector<std::vector<GaussianRational>>& rows);

/// [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
LieAlgebra sl2();
LinearMap sl2_p();
/// The nine products of the sl2 example, index i * 3 + j.
std::vector<Vector> sl2_products();

/// [e1,e2] = e2 on a 3-dimensional space.
LieAlgebra solvable();
LinearMap solvable_phi(const GaussianRational& alpha, const GaussianRational& beta, const GaussianRational& gamma);

LieAlgebra heisenberg();

FiniteGroup s3();
FiniteGroup d4();
FiniteGroup z2();
FiniteGroup z4();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// All maps B with B(a)B(b) = B(a Ad_{B(a)} b), by plain odometer over
/// order^order maps with early exit per map.
std::vector<GroupMap> brute_force_rb(const FiniteGroup& g);

/// Every zeta: G -> Z(G) with zeta(e) = e, tested against
/// omega(a,b) = zeta(a) zeta(b) zeta(a o b)^{-1} directly.
std::vector<GroupMap> brute_force_coboundaries(const FiniteGroup& g, const FiniteGroup& circ,
                                               const std::vector<Element>& omega);

GaussianRational random_rational(std::mt19937_64& rng, long range = 3);
GaussianRational random_gaussian(std::mt19937_64& rng, long range = 3);

struct RandomRb {
    std::string family;
    LieAlgebra lie;
    LinearMap r;
};

/// Rota-Baxter operators over Q on solvable or nilpotent algebras of
/// dimension <= 4: minus the projection onto one summand of a splitting
/// into two coordinate subalgebras (or -id minus that), any map on an
/// abelian algebra, plus a random central 1-cocycle, all conjugated by a
/// random invertible integer matrix.
RandomRb random_rb(std::mt19937_64& rng);

/// Random linear map g -> Z(g).
LinearMap random_central_map(std::mt19937_64& rng, const LieAlgebra& lie);

}  // namespace innerpost::testing
