#include "innerpost/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace innerpost {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector basis_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(std::span<const GaussianRational> v) {
    return std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector length mismatch");
    Vector out(a);
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector length mismatch");
    Vector out(a);
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    return out;
}

Vector operator*(const GaussianRational& s, const Vector& v) {
    Vector out(v);
    for (auto& x : out)
        x *= s;
    return out;
}

std::string to_string(std::span<const GaussianRational> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty())
        return {};
    ExactMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<Vector>& cols, std::size_t height) {
    ExactMatrix m(height, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != height)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < height; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

Vector ExactMatrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector ExactMatrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Vector ExactMatrix::apply(const Vector& x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!x[c].is_zero() && !(*this)(r, c).is_zero())
                y[r] += (*this)(r, c) * x[c];
    return y;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool ExactMatrix::is_zero() const { return innerpost::is_zero(data_); }

Vector ExactMatrix::flatten() const {
    Vector v;
    v.reserve(data_.size());
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t r = 0; r < rows_; ++r)
            v.push_back((*this)(r, c));
    return v;
}

ExactMatrix ExactMatrix::unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols)
        throw std::invalid_argument("unflatten: size mismatch");
    ExactMatrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = v[c * rows + r];
    return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    ExactMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(r, k);
            if (x.is_zero())
                continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero())
                    out(r, c) += x * b(k, c);
        }
    return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum dimension mismatch");
    ExactMatrix out(a);
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] += b.data_[i];
    return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference dimension mismatch");
    ExactMatrix out(a);
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] -= b.data_[i];
    return out;
}

ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& m) {
    ExactMatrix out(m);
    for (auto& x : out.data_)
        x *= s;
    return out;
}

RowEchelon rref(const ExactMatrix& m) {
    RowEchelon result{m, {}};
    ExactMatrix& a = result.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == a.rows())
            continue;
        if (pivot != row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a(pivot, c), a(row, c));
        const GaussianRational inv = GaussianRational(1) / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c)
            a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero())
                continue;
            const GaussianRational factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (!a(row, c).is_zero())
                    a(r, c) -= factor * a(row, c);
        }
        result.pivots.push_back(col);
        ++row;
    }
    return result;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank(); }

GaussianRational determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    ExactMatrix a(m);
    GaussianRational det = 1;
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(pivot, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        const GaussianRational inv = GaussianRational(1) / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero())
                continue;
            const GaussianRational factor = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c)
                a(r, c) -= factor * a(col, c);
        }
    }
    return det;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    ExactMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    RowEchelon e = rref(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    ExactMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = e.reduced(r, n + c);
    return inv;
}

std::vector<Vector> nullspace(const ExactMatrix& m) {
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolution> solve_affine(const ExactMatrix& a, const Vector& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_affine: right-hand side has length " + std::to_string(b.size()) +
                                    ", expected " + std::to_string(a.rows()));
    ExactMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const RowEchelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols())
        return std::nullopt;
    AffineSolution sol{Vector(a.cols()), {}};
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        sol.particular[e.pivots[r]] = e.reduced(r, a.cols());
    sol.nullspace = nullspace(a);
    return sol;
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty())
        return {};
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && (*this)(r, c) != 0)
                return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(r, k) == 0)
                continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                out(r, c) += a(r, k) * b(k, c);
        }
    return out;
}

mpz_class determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a(m);
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(k, c), a(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<mpz_class> SmithForm::diagonal() const {
    std::vector<mpz_class> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        out.push_back(d(i, i));
    return out;
}

namespace {

struct SmithWork {
    IntMatrix& u;
    IntMatrix& d;
    IntMatrix& v;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t c = 0; c < d.cols(); ++c)
            std::swap(d(a, c), d(b, c));
        for (std::size_t c = 0; c < u.cols(); ++c)
            std::swap(u(a, c), u(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t r = 0; r < d.rows(); ++r)
            std::swap(d(r, a), d(r, b));
        for (std::size_t r = 0; r < v.rows(); ++r)
            std::swap(v(r, a), v(r, b));
    }
    // row[target] += q * row[source]
    void add_row(std::size_t target, std::size_t source, const mpz_class& q) {
        for (std::size_t c = 0; c < d.cols(); ++c)
            d(target, c) += q * d(source, c);
        for (std::size_t c = 0; c < u.cols(); ++c)
            u(target, c) += q * u(source, c);
    }
    // col[target] += q * col[source]
    void add_col(std::size_t target, std::size_t source, const mpz_class& q) {
        for (std::size_t r = 0; r < d.rows(); ++r)
            d(r, target) += q * d(r, source);
        for (std::size_t r = 0; r < v.rows(); ++r)
            v(r, target) += q * v(r, source);
    }
    void negate_row(std::size_t r) {
        for (std::size_t c = 0; c < d.cols(); ++c)
            d(r, c) = -d(r, c);
        for (std::size_t c = 0; c < u.cols(); ++c)
            u(r, c) = -u(r, c);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    SmithForm out{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    SmithWork w{out.u, out.d, out.v};
    IntMatrix& d = out.d;
    const std::size_t m = d.rows(), n = d.cols();

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t pr = m, pc = n;
        for (std::size_t r = t; r < m; ++r)
            for (std::size_t c = t; c < n; ++c)
                if (d(r, c) != 0 && (pr == m || abs(d(r, c)) < abs(d(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
        if (pr == m)
            break;
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);

        for (;;) {
            bool clean = true;
            for (std::size_t r = t + 1; r < m; ++r) {
                if (d(r, t) == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d(r, t).get_mpz_t(), d(t, t).get_mpz_t());
                w.add_row(r, t, -q);
                if (d(r, t) != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (d(t, c) == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d(t, c).get_mpz_t(), d(t, t).get_mpz_t());
                w.add_col(c, t, -q);
                if (d(t, c) != 0)
                    clean = false;
            }
            if (!clean) {
                // A remainder is smaller than the pivot; promote it and retry.
                std::size_t br = t, bc = t;
                for (std::size_t r = t + 1; r < m; ++r)
                    if (d(r, t) != 0 && abs(d(r, t)) < abs(d(br, bc))) {
                        br = r;
                        bc = t;
                    }
                for (std::size_t c = t + 1; c < n; ++c)
                    if (d(t, c) != 0 && abs(d(t, c)) < abs(d(br, bc))) {
                        br = t;
                        bc = c;
                    }
                w.swap_rows(t, br);
                w.swap_cols(t, bc);
                continue;
            }
            // Pivot must divide the whole trailing block.
            std::size_t bad = m;
            for (std::size_t r = t + 1; r < m && bad == m; ++r)
                for (std::size_t c = t + 1; c < n; ++c)
                    if (!mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
                        bad = r;
                        break;
                    }
            if (bad == m)
                break;
            w.add_row(t, bad, 1);
        }
        if (d(t, t) < 0)
            w.negate_row(t);
    }
    return out;
}

std::optional<std::vector<mpz_class>> solve_congruences(const IntMatrix& a,
                                                        const std::vector<mpz_class>& b,
                                                        const mpz_class& modulus) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_congruences: right-hand side length mismatch");
    if (modulus <= 0)
        throw std::invalid_argument("solve_congruences: modulus must be positive");
    const SmithForm snf = smith_normal_form(a);
    const std::size_t m = a.rows(), n = a.cols();

    std::vector<mpz_class> c(m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k < m; ++k)
            c[r] += snf.u(r, k) * b[k];

    std::vector<mpz_class> y(n);
    for (std::size_t r = 0; r < m; ++r) {
        const mpz_class s = r < n ? snf.d(r, r) : mpz_class(0);
        if (s == 0) {
            if (!mpz_divisible_p(c[r].get_mpz_t(), modulus.get_mpz_t()))
                return std::nullopt;
            continue;
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), modulus.get_mpz_t());
        if (!mpz_divisible_p(c[r].get_mpz_t(), g.get_mpz_t()))
            return std::nullopt;
        const mpz_class reduced_mod = modulus / g;
        if (reduced_mod == 1)
            continue;
        mpz_class inv;
        const mpz_class unit = s / g;
        mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), reduced_mod.get_mpz_t());
        mpz_class val = (c[r] / g) * inv;
        mpz_fdiv_r(y[r].get_mpz_t(), val.get_mpz_t(), reduced_mod.get_mpz_t());
    }

    std::vector<mpz_class> x(n);
    for (std::size_t r = 0; r < n; ++r) {
        mpz_class acc = 0;
        for (std::size_t k = 0; k < n; ++k)
            acc += snf.v(r, k) * y[k];
        mpz_fdiv_r(x[r].get_mpz_t(), acc.get_mpz_t(), modulus.get_mpz_t());
    }
    return x;
}

}  // namespace innerpost
