#include "innerpost/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace innerpost {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

bool GaussianRational::is_integer() const {
    return is_real() && re_.get_den() == 1;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    if (is_real() && rhs.is_real()) {
        re_ *= rhs.re_;
        return *this;
    }
    mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
    mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
    if (rhs.is_zero())
        throw std::domain_error("division by zero in Q(i)");
    if (rhs.is_real()) {
        re_ /= rhs.re_;
        im_ /= rhs.re_;
        return *this;
    }
    mpq_class norm = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
    mpq_class re = (re_ * rhs.re_ + im_ * rhs.im_) / norm;
    mpq_class im = (im_ * rhs.re_ - re_ * rhs.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

namespace {

std::string imaginary_literal(const mpq_class& im) {
    if (im == 1)
        return "i";
    if (im == -1)
        return "-i";
    return im.get_str() + "*i";
}

class LiteralParser {
public:
    explicit LiteralParser(std::string_view text) : text_(text) {}

    GaussianRational parse() {
        skip_space();
        if (at_end())
            fail("empty literal");
        mpq_class re = 0, im = 0;
        bool have_re = false, have_im = false;
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [value, imaginary] = term();
            if (imaginary) {
                if (have_im)
                    fail("two imaginary parts");
                im = sign * value;
                have_im = true;
            } else {
                if (have_re)
                    fail("two real parts");
                re = sign * value;
                have_re = true;
            }
            first = false;
            skip_space();
        }
        return {re, im};
    }

private:
    std::pair<mpq_class, bool> term() {
        if (peek() == 'i') {
            ++pos_;
            mpq_class value = 1;
            skip_space();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_space();
                mpz_class den(integer());
                if (den == 0)
                    fail("zero denominator");
                value = mpq_class(1, 1) / mpq_class(den);
            }
            return {value, true};
        }
        mpq_class value = rational();
        skip_space();
        if (!at_end() && peek() == '*') {
            ++pos_;
            skip_space();
            if (at_end() || peek() != 'i')
                fail("expected 'i' after '*'");
            ++pos_;
            return {value, true};
        }
        return {value, false};
    }

    mpq_class rational() {
        mpz_class num(integer());
        skip_space();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_space();
            mpz_class den(integer());
            if (den == 0)
                fail("zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return q;
        }
        return mpq_class(num);
    }

    std::string integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    char peek() const { return text_[pos_]; }
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("bad scalar literal '" + std::string(text_) + "': " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
    return LiteralParser(text).parse();
}

std::string GaussianRational::to_string() const {
    if (is_real())
        return re_.get_str();
    if (sgn(re_) == 0)
        return imaginary_literal(im_);
    std::string out = re_.get_str();
    if (sgn(im_) > 0)
        out += '+';
    return out + imaginary_literal(im_);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) {
    return os << value.to_string();
}

}  // namespace innerpost
