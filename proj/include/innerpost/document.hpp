#pragma once

#include "innerpost/group.hpp"
#include "innerpost/postgroup.hpp"
#include "innerpost/postlie.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace innerpost {

class ParseError : public std::runtime_error {
public:
    enum class Category { syntax, dimension, invariant };

    ParseError(Category category, std::size_t line, const std::string& message);

    Category category() const { return category_; }
    std::size_t line() const { return line_; }
    const std::string& message() const { return message_; }

private:
    Category category_;
    std::size_t line_;
    std::string message_;
};

const char* to_string(ParseError::Category c);

struct LieDocument {
    LieAlgebra lie;
};

struct PostLieDocument {
    PostLieAlgebra post;
    std::optional<LinearMap> phi;
};

struct RbLieDocument {
    LieAlgebra lie;
    LinearMap r;
};

struct GroupDocument {
    FiniteGroup group;
};

struct PostGroupDocument {
    PostGroup post;
    std::optional<GroupMap> phi;
};

struct RbGroupDocument {
    FiniteGroup group;
    GroupMap b;
};

using Document =
    std::variant<LieDocument, PostLieDocument, RbLieDocument, GroupDocument, PostGroupDocument, RbGroupDocument>;

/// "lie", "postlie", "rb-lie", "group", "postgroup" or "rb-group".
const char* kind_name(const Document& doc);

/// Throws ParseError. Groups are checked against the group axioms here;
/// Lie brackets only for antisymmetry.
Document parse_document(std::string_view text);

/// Reads and parses a file. Throws std::runtime_error if it can't be read.
Document load_document(const std::string& path);

/// Canonical text; parse_document(render_document(d)) == d.
std::string render_document(const Document& doc);

/// Linear combination such as `e1 - 1/2*i*e3`, or `0`.
std::string render_vector(const Vector& v);

/// Parses the right-hand side of a bracket or map line in dimension `dim`.
/// Throws std::invalid_argument (syntax) or std::out_of_range (index).
Vector parse_vector(std::string_view text, std::size_t dim);

/// Closure of permutations of {0..degree-1} (one-line notation) by
/// breadth-first right multiplication, starting from the identity. The
/// table follows discovery order and a b means "apply b, then a". Throws
/// std::invalid_argument for malformed permutations and std::length_error
/// once more than `cap` elements appear.
FiniteGroup expand_permutation_generators(std::size_t degree, const std::vector<std::vector<std::size_t>>& gens,
                                          std::size_t cap = 4096);

}  // namespace innerpost
