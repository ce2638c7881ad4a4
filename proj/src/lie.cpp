#include "innerpost/lie.hpp"

#include <sstream>
#include <stdexcept>

namespace innerpost {

LieAlgebra::LieAlgebra(std::size_t dim) : dim_(dim), table_(dim * dim, Vector(dim)) {}

LieAlgebra::LieAlgebra(std::size_t dim, const BracketTable& brackets) : LieAlgebra(dim) {
    std::vector<bool> given(dim * dim, false);
    for (const auto& [key, value] : brackets) {
        const auto [i, j] = key;
        if (i >= dim || j >= dim)
            throw std::invalid_argument("bracket index out of range");
        if (value.size() != dim)
            throw std::invalid_argument("bracket value has wrong length");
        if (i == j) {
            if (!is_zero(value))
                throw std::invalid_argument("[e" + std::to_string(i + 1) + ",e" + std::to_string(i + 1) +
                                            "] must vanish");
            continue;
        }
        const Vector negated = GaussianRational(-1) * value;
        if (given[j * dim + i] && table_[j * dim + i] != negated)
            throw std::invalid_argument("antisymmetry violated for [e" + std::to_string(i + 1) + ",e" +
                                        std::to_string(j + 1) + "]");
        table_[i * dim + j] = value;
        table_[j * dim + i] = negated;
        given[i * dim + j] = true;
    }
}

LieAlgebra LieAlgebra::from_structure_constants(std::size_t dim, const std::vector<GaussianRational>& sc) {
    if (sc.size() != dim * dim * dim)
        throw std::invalid_argument("structure constant table has wrong size");
    BracketTable brackets;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Vector v(sc.begin() + static_cast<std::ptrdiff_t>((i * dim + j) * dim),
                     sc.begin() + static_cast<std::ptrdiff_t>((i * dim + j + 1) * dim));
            brackets[{i, j}] = std::move(v);
        }
    return LieAlgebra(dim, brackets);
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("bracket argument has wrong length");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero() || i == j)
                continue;
            const GaussianRational s = x[i] * y[j];
            const Vector& b = table_[i * dim_ + j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!b[k].is_zero())
                    out[k] += s * b[k];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning) : ambient_(ambient_dim) {
    if (spanning.empty())
        return;
    for (const auto& v : spanning)
        if (v.size() != ambient_dim)
            throw std::invalid_argument("spanning vector has wrong length");
    const RowEchelon e = rref(ExactMatrix::from_rows(spanning));
    for (std::size_t r = 0; r < e.rank(); ++r)
        basis_.push_back(e.reduced.row(r));
    pivots_ = e.pivots;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < ambient_dim; ++i)
        basis.push_back(basis_vector(ambient_dim, i));
    return Subspace(ambient_dim, basis);
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("vector has wrong ambient dimension");
    Vector coords(basis_.size());
    Vector rest(v);
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        coords[r] = v[pivots_[r]];
        if (coords[r].is_zero())
            continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!basis_[r][c].is_zero())
                rest[c] -= coords[r] * basis_[r][c];
    }
    if (!is_zero(rest))
        return std::nullopt;
    return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        return false;
    for (const auto& v : other.basis_)
        if (!contains(v))
            return false;
    return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("subspace sum: ambient mismatch");
    std::vector<Vector> all(basis_);
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return Subspace(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("subspace intersection: ambient mismatch");
    if (basis_.empty() || other.basis_.empty())
        return Subspace(ambient_);
    // Solve sum a_r b_r - sum c_s o_s = 0.
    const std::size_t p = basis_.size(), q = other.basis_.size();
    ExactMatrix m(ambient_, p + q);
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < ambient_; ++c)
            m(c, r) = basis_[r][c];
    for (std::size_t s = 0; s < q; ++s)
        for (std::size_t c = 0; c < ambient_; ++c)
            m(c, p + s) = -other.basis_[s][c];
    std::vector<Vector> common;
    for (const auto& kernel : nullspace(m)) {
        Vector v(ambient_);
        for (std::size_t r = 0; r < p; ++r)
            if (!kernel[r].is_zero())
                v = v + kernel[r] * basis_[r];
        common.push_back(std::move(v));
    }
    return Subspace(ambient_, common);
}

// ---------------------------------------------------------------------------

std::vector<JacobiViolation> jacobi_violations(const LieAlgebra& lie) {
    const std::size_t n = lie.dim();
    std::vector<JacobiViolation> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector ei = basis_vector(n, i), ej = basis_vector(n, j), ek = basis_vector(n, k);
                Vector sum = lie.bracket(lie.bracket_basis(i, j), ek) + lie.bracket(lie.bracket_basis(j, k), ei) +
                             lie.bracket(lie.bracket_basis(k, i), ej);
                if (!is_zero(sum))
                    out.push_back({i, j, k, std::move(sum)});
            }
    return out;
}

bool check_jacobi(const LieAlgebra& lie) { return jacobi_violations(lie).empty(); }

ExactMatrix ad_matrix(const LieAlgebra& lie, const Vector& x) {
    const std::size_t n = lie.dim();
    ExactMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vector col = lie.bracket(x, basis_vector(n, j));
        for (std::size_t k = 0; k < n; ++k)
            m(k, j) = col[k];
    }
    return m;
}

Subspace center(const LieAlgebra& lie) {
    const std::size_t n = lie.dim();
    if (n == 0)
        return Subspace(0);
    ExactMatrix stacked(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const ExactMatrix ad = ad_matrix(lie, basis_vector(n, i));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                stacked(i * n + r, c) = ad(r, c);
    }
    return Subspace(n, nullspace(stacked));
}

Subspace derivations(const LieAlgebra& lie) {
    const std::size_t n = lie.dim();
    if (n == 0)
        return Subspace(0);
    // Unknown D_{k,j} (coefficient of e_k in D e_j) sits at index j*n + k.
    const std::size_t pairs = n * (n - 1) / 2;
    ExactMatrix eqs(std::max<std::size_t>(pairs * n, 1), n * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m, ++row) {
                for (std::size_t l = 0; l < n; ++l)
                    eqs(row, l * n + m) += lie.constant(i, j, l);
                for (std::size_t k = 0; k < n; ++k) {
                    eqs(row, i * n + k) -= lie.constant(k, j, m);
                    eqs(row, j * n + k) -= lie.constant(i, k, m);
                }
            }
    return Subspace(n * n, nullspace(eqs));
}

Subspace inner_derivations(const LieAlgebra& lie) {
    const std::size_t n = lie.dim();
    std::vector<Vector> ads;
    for (std::size_t i = 0; i < n; ++i)
        ads.push_back(ad_matrix(lie, basis_vector(n, i)).flatten());
    return Subspace(n * n, ads);
}

KillingForm killing_semisimple(const LieAlgebra& lie) {
    const std::size_t n = lie.dim();
    std::vector<ExactMatrix> ads;
    for (std::size_t i = 0; i < n; ++i)
        ads.push_back(ad_matrix(lie, basis_vector(n, i)));
    ExactMatrix form(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const ExactMatrix prod = ads[i] * ads[j];
            GaussianRational trace;
            for (std::size_t k = 0; k < n; ++k)
                trace += prod(k, k);
            form(i, j) = trace;
            form(j, i) = trace;
        }
    const bool semisimple = n > 0 && !determinant(form).is_zero();
    return {std::move(form), semisimple};
}

bool is_complete(const LieAlgebra& lie) {
    return center(lie).dim() == 0 && derivations(lie).dim() == inner_derivations(lie).dim();
}

Subspace bracket_span(const LieAlgebra& lie, const Subspace& left, const Subspace& right) {
    std::vector<Vector> products;
    for (const auto& a : left.basis())
        for (const auto& b : right.basis()) {
            Vector p = lie.bracket(a, b);
            if (!is_zero(p))
                products.push_back(std::move(p));
        }
    return Subspace(lie.dim(), products);
}

namespace {

template <typename Next>
std::vector<std::size_t> series_dims(const Subspace& start, Next next) {
    std::vector<std::size_t> dims;
    Subspace current = start;
    for (;;) {
        Subspace following = next(current);
        if (!dims.empty() && following.dim() == current.dim())
            break;
        dims.push_back(following.dim());
        if (following.dim() == current.dim())
            break;
        current = std::move(following);
    }
    return dims;
}

}  // namespace

Fingerprint invariant_fingerprint(const LieAlgebra& lie) {
    Fingerprint fp;
    fp.dim = lie.dim();
    fp.center_dim = center(lie).dim();
    fp.killing_rank = rank(killing_semisimple(lie).form);
    const Subspace whole = Subspace::full(lie.dim());
    fp.derived_series = series_dims(whole, [&](const Subspace& s) { return bracket_span(lie, s, s); });
    fp.lower_central_series = series_dims(whole, [&](const Subspace& s) { return bracket_span(lie, whole, s); });
    fp.derivation_dim = derivations(lie).dim();
    return fp;
}

std::string Fingerprint::to_string() const {
    auto list = [](const std::vector<std::size_t>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s + "]";
    };
    std::ostringstream os;
    os << "(dim=" << dim << ", center=" << center_dim << ", killing_rank=" << killing_rank
       << ", derived=" << list(derived_series) << ", lower_central=" << list(lower_central_series)
       << ", der=" << derivation_dim << ")";
    return os.str();
}

bool is_lie_homomorphism(const LieAlgebra& from, const LieAlgebra& to, const ExactMatrix& f) {
    const std::size_t n = from.dim();
    if (f.cols() != n || f.rows() != to.dim())
        throw std::invalid_argument("homomorphism matrix has wrong shape");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (f.apply(from.bracket_basis(i, j)) != to.bracket(f.column(i), f.column(j)))
                return false;
    return true;
}

LieAlgebra change_basis(const LieAlgebra& lie, const ExactMatrix& basis) {
    const std::size_t n = lie.dim();
    const auto inv = inverse(basis);
    if (!inv)
        throw std::invalid_argument("change of basis matrix is singular");
    LieAlgebra::BracketTable brackets;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            brackets[{a, b}] = inv->apply(lie.bracket(basis.column(a), basis.column(b)));
    return LieAlgebra(n, brackets);
}

}  // namespace innerpost
