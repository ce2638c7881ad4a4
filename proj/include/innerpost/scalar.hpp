#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace innerpost {

/// An exact element a + b*i of the Gaussian rationals Q(i).
///
/// Both parts are GMP rationals kept in canonical form (reduced, positive
/// denominator), so equality is structural.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational i() { return {0, 1}; }

    /// Parses literals such as `3`, `-1/2`, `1/2*i`, `i/2`, `-i`,
    /// `1/2+1/2*i`. Throws std::invalid_argument on malformed input.
    static GaussianRational parse(std::string_view text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_integer() const;

    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    /// Throws std::domain_error on division by zero.
    GaussianRational& operator/=(const GaussianRational& rhs);

    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Literal form accepted by parse(): `a/b`, `c/d*i` or `a/b+c/d*i`.
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

}  // namespace innerpost
