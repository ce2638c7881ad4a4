#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace innerpost {

using Element = std::size_t;

/// Total map on the element indices of a finite group.
using GroupMap = std::vector<Element>;

/// Finite group (or candidate group) given by its Cayley table.
///
/// Construction only validates the table shape and that entries are in
/// range; check_group() decides the group axioms. identity() and inverse()
/// are meaningful only when the table has an identity and inverses.
class FiniteGroup {
public:
    FiniteGroup() = default;
    /// `table[a * order + b]` is a * b. Throws std::invalid_argument on bad
    /// shape, out-of-range entries or a wrong number of names.
    FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> names = {});

    static FiniteGroup cyclic(std::size_t n);

    std::size_t order() const { return order_; }
    Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
    const std::vector<Element>& table() const { return table_; }

    bool has_identity() const { return identity_.has_value(); }
    Element identity() const { return identity_.value(); }
    bool has_inverses() const { return inverses_ok_; }
    Element inverse(Element a) const { return inverse_[a]; }

    const std::vector<std::string>& names() const { return names_; }
    std::string name(Element a) const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.order_ == b.order_ && a.table_ == b.table_ && a.names_ == b.names_;
    }

private:
    std::size_t order_ = 0;
    std::vector<Element> table_;
    std::optional<Element> identity_;
    std::vector<Element> inverse_;
    bool inverses_ok_ = false;
    std::vector<std::string> names_;
};

struct GroupViolation {
    std::string what;
    Element a = 0, b = 0, c = 0;
};

/// Associativity on all triples plus identity and two-sided inverses;
/// returns the first failure found, or nullopt for a valid group.
std::optional<GroupViolation> find_group_violation(const FiniteGroup& g);
bool check_group(const FiniteGroup& g);

/// Elements commuting with everything, in index order.
std::vector<Element> center_group(const FiniteGroup& g);

/// b -> c b c^{-1}.
GroupMap inner_automorphism(const FiniteGroup& g, Element c);

bool is_group_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const GroupMap& f);
bool is_bijection(const GroupMap& f, std::size_t order);

/// A finite abelian subgroup presented as Z/d_1 + ... + Z/d_k with
/// d_1 | d_2 | ... | d_k and every d_j > 1.
class AbelianDecomposition {
public:
    using Coords = std::vector<std::size_t>;

    const std::vector<std::size_t>& invariant_factors() const { return factors_; }
    const std::vector<Element>& elements() const { return elements_; }
    Element identity() const { return identity_; }
    bool contains(Element x) const { return coords_.count(x) != 0; }

    /// Throws std::out_of_range for elements outside the subgroup.
    const Coords& to_coords(Element x) const { return coords_.at(x); }
    Element from_coords(const Coords& c) const;

    Coords add(const Coords& a, const Coords& b) const;
    Coords negate(const Coords& a) const;

private:
    friend AbelianDecomposition abelian_decomposition(const FiniteGroup& g, std::span<const Element> subset);

    std::vector<std::size_t> factors_;
    std::vector<Element> elements_;
    Element identity_ = 0;
    std::map<Element, Coords> coords_;
    std::map<Coords, Element> elements_by_coords_;
};

/// Invariant factor decomposition via Smith normal form of the relation
/// lattice. Throws std::invalid_argument if `subset` is not a commutative
/// subgroup of `g`.
AbelianDecomposition abelian_decomposition(const FiniteGroup& g, std::span<const Element> subset);

}  // namespace innerpost
