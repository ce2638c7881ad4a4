#pragma once

#include "innerpost/group.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace innerpost {

/// A group with a second product a |> b given as a table.
class PostGroup {
public:
    PostGroup() = default;
    /// `triangle[a * order + b]` is a |> b. Throws std::invalid_argument on
    /// shape mismatch or out-of-range entries.
    PostGroup(FiniteGroup base, std::vector<Element> triangle);

    const FiniteGroup& base() const { return base_; }
    std::size_t order() const { return base_.order(); }
    Element act(Element a, Element b) const { return triangle_[a * order() + b]; }
    const std::vector<Element>& triangle() const { return triangle_; }
    /// b -> a |> b.
    GroupMap left_multiplication(Element a) const;

    friend bool operator==(const PostGroup&, const PostGroup&) = default;

private:
    FiniteGroup base_;
    std::vector<Element> triangle_;
};

struct PostGroupViolation {
    int axiom;  // 0: L(a) not bijective, 1: a |> (bc) = (a |> b)(a |> c), 2: weighted associativity
    Element a = 0, b = 0, c = 0;
};

struct PostGroupReport {
    std::vector<PostGroupViolation> violations;
    bool valid() const { return violations.empty(); }
};

PostGroupReport check_postgroup_axioms(const PostGroup& pg);

/// a o b = a (a |> b).
FiniteGroup sub_adjacent_group(const PostGroup& pg);

/// B(a) B(b) = B(a Ad_{B(a)} b) on all pairs.
bool check_rb_group(const FiniteGroup& g, const GroupMap& b);

/// a |> b = Ad_{B(a)} b. Throws std::invalid_argument if B is not Rota-Baxter.
PostGroup from_rb_group(const FiniteGroup& g, const GroupMap& b);

/// a |> b = Ad_{phi(a)} b, with no Rota-Baxter requirement on phi.
PostGroup from_adjoint_map_group(const FiniteGroup& g, const GroupMap& phi);

/// First element whose left multiplication is not an inner automorphism.
std::optional<Element> first_outer_element(const PostGroup& pg);

/// Phi(a) = smallest index c with Ad_c = L(a), and Phi(e) = e; nullopt
/// when some L(a) is outer.
std::optional<GroupMap> innerness_witness_group(const PostGroup& pg);

/// Ad_{phi(a)} == L(a) for every a and phi(e) == e.
bool is_inner_witness_group(const PostGroup& pg, const GroupMap& phi);

class EnumerationCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All Rota-Baxter operators on g in lexicographic order of their image
/// tables. Backtracking with forced assignments; `cap` bounds the number of
/// branch attempts and EnumerationCapExceeded is thrown past it.
std::vector<GroupMap> enumerate_rb_operators(const FiniteGroup& g, std::size_t cap);

}  // namespace innerpost
