#pragma once

#include "innerpost/postgroup.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace innerpost {

/// Map G x G -> Z(G), normalized at the identity.
class GroupTwoCocycle {
public:
    /// `values[a * order + b]` is omega(a, b). Throws std::invalid_argument
    /// when a value is not central in `g` or omega(e, b), omega(a, e) != e.
    GroupTwoCocycle(const FiniteGroup& g, std::vector<Element> values);

    static GroupTwoCocycle trivial(const FiniteGroup& g);

    std::size_t order() const { return order_; }
    Element identity() const { return identity_; }
    Element value(Element a, Element b) const { return values_[a * order_ + b]; }
    const std::vector<Element>& values() const { return values_; }
    const std::vector<Element>& center() const { return center_.elements(); }
    const AbelianDecomposition& decomposition() const { return center_; }
    bool is_trivial() const;

    friend bool operator==(const GroupTwoCocycle& a, const GroupTwoCocycle& b) {
        return a.order_ == b.order_ && a.values_ == b.values_;
    }

private:
    std::size_t order_ = 0;
    Element identity_ = 0;
    std::vector<Element> values_;
    AbelianDecomposition center_;
};

/// omega(a, b) = Phi(b)^{-1} Phi(a)^{-1} Phi(a o b). Throws
/// std::invalid_argument when phi is not a normalized inner witness.
GroupTwoCocycle obstruction_cocycle_group(const PostGroup& pg, const GroupMap& phi);

/// First triple with omega(b,c) omega(a, b o c) != omega(a,b) omega(a o b, c).
std::optional<std::array<Element, 3>> find_group_2cocycle_violation(const GroupTwoCocycle& omega,
                                                                    const FiniteGroup& circ);
bool verify_group_2cocycle(const GroupTwoCocycle& omega, const FiniteGroup& circ);

/// zeta with central values, zeta(e) = e and
/// omega(a, b) = zeta(a) zeta(b) zeta(a o b)^{-1}, or nullopt when the class
/// of omega is nontrivial. Solved per invariant factor of Z(G) as integer
/// congruences.
std::optional<GroupMap> coboundary_solve_group(const GroupTwoCocycle& omega, const FiniteGroup& circ);

/// Same equation checked for a given zeta.
bool is_group_coboundary_of(const GroupTwoCocycle& omega, const FiniteGroup& circ, const GroupMap& zeta);

enum class GroupObstructionStatus { induced, not_inner, nontrivial_class };

const char* to_string(GroupObstructionStatus status);

struct GroupObstructionResult {
    GroupObstructionStatus status = GroupObstructionStatus::not_inner;
    std::optional<Element> outer_element;
    std::optional<GroupMap> witness;
    std::optional<GroupTwoCocycle> omega;
    std::optional<GroupMap> zeta;
    std::optional<GroupMap> rota_baxter;  // B(a) = Phi(a) zeta(a)
};

/// Runs witness -> omega -> coboundary solve -> B = Phi zeta; the result is
/// checked to be Rota-Baxter and to reproduce the product exactly.
GroupObstructionResult construct_rb_from_obstruction_group(const PostGroup& pg,
                                                           const std::optional<GroupMap>& witness = std::nullopt);

/// {(a, b) : L(a) = Ad_b} inside (G, o) x (G, .).
struct PullbackGroup {
    FiniteGroup group;
    std::vector<std::pair<Element, Element>> pairs;
};

/// Throws std::invalid_argument when `pg` is not inner.
PullbackGroup pullback_group(const PostGroup& pg);

struct GroupDifference {
    std::optional<GroupMap> zeta;
    std::string diagnostic;
};

/// zeta(a) = B1(a)^{-1} B2(a) when both operators induce the same product;
/// zeta is checked to be central and multiplicative on (G, o).
GroupDifference rb_difference_cocycle_group(const FiniteGroup& g, const GroupMap& b1, const GroupMap& b2);

/// a o_{i+1} b = a o_i (B(a) o_i b o_i B(a)^{-1}), inverse taken in level i.
struct GroupLevelReport {
    bool is_group = false;
    bool rota_baxter = false;       // B is Rota-Baxter on this level
    bool b_hom = false;             // B : G_i -> G_{i-1}
    bool tilde_level_hom = false;   // a -> a o_{i-1} B(a) : G_i -> G_{i-1}
    bool tilde_literal_hom = false; // a -> a . B(a) : G_i -> G_{i-1}
};

struct GroupTower {
    std::vector<FiniteGroup> levels;
    std::vector<GroupLevelReport> reports;
    GroupMap b;

    /// Everything required on every level; the literal tilde reading is
    /// reported but not required.
    bool certified() const;
};

/// Throws std::invalid_argument if B is not Rota-Baxter on `g`. Stops early
/// if a level fails to be a group.
GroupTower group_tower(const FiniteGroup& g, const GroupMap& b, std::size_t depth);

}  // namespace innerpost
