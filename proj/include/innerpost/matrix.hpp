#pragma once

#include "innerpost/scalar.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace innerpost {

using Vector = std::vector<GaussianRational>;

Vector zero_vector(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const GaussianRational> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const GaussianRational& s, const Vector& v);
std::string to_string(std::span<const GaussianRational> v);

/// Dense row-major matrix over Q(i).
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_rows(const std::vector<Vector>& rows);
    static ExactMatrix from_columns(const std::vector<Vector>& cols, std::size_t height);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    Vector apply(const Vector& x) const;
    ExactMatrix transpose() const;
    bool is_zero() const;

    /// Column-major flattening; the coordinate order used for spaces of maps.
    Vector flatten() const;
    static ExactMatrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& m);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

struct RowEchelon {
    ExactMatrix reduced;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RowEchelon rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
GaussianRational determinant(const ExactMatrix& m);
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/// Nullspace basis read off the rref: one vector per free column, with
/// that column set to 1 and the other free columns set to 0.
std::vector<Vector> nullspace(const ExactMatrix& m);

struct AffineSolution {
    Vector particular;             // free variables set to zero
    std::vector<Vector> nullspace;
};

/// Solves A x = b. Returns nullopt when the system is inconsistent.
/// Throws std::invalid_argument if b has the wrong length.
std::optional<AffineSolution> solve_affine(const ExactMatrix& a, const Vector& b);

/// Dense row-major matrix over the integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_diagonal() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

mpz_class determinant(const IntMatrix& m);

/// U * A * V == D with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
struct SmithForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    std::vector<mpz_class> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Solves A x = b (mod modulus) for x in [0, modulus)^cols, free
/// coordinates in the Smith basis set to zero. nullopt when unsolvable.
std::optional<std::vector<mpz_class>> solve_congruences(const IntMatrix& a,
                                                        const std::vector<mpz_class>& b,
                                                        const mpz_class& modulus);

}  // namespace innerpost
