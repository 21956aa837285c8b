#ifndef NOC_RATFUN_HPP
#define NOC_RATFUN_HPP

#include <stdexcept>
#include <string>

#include "noc/poly.hpp"

namespace noc {

// Rational function num/den in canonical form: zero is 0/1, a polynomial is
// p/1, coefficients are integer and content-free in both parts, and the
// denominator's leading coefficient (graded-lex) is positive. No multivariate
// gcd: reduction polynomializes when the denominator divides the numerator
// exactly; equality is decided by cross-multiplication.
class RatFun {
  public:
    RatFun() = default;
    explicit RatFun(const Poly& num)
        : num_(num), den_(Poly::constant(num.table(), Rational(1))) {
        canonicalize();
    }
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("RatFun: zero denominator");
        if (!same_table(num_.table(), den_.table()))
            throw std::invalid_argument("RatFun: table mismatch");
        canonicalize();
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    Poly as_polynomial() const {
        if (!is_polynomial()) throw std::invalid_argument("RatFun: not a polynomial");
        return num_ * den_.constant_value().inv();
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::invalid_argument("RatFun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    // a/b == c/d iff ad == cb
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    std::string str() const {
        if (is_polynomial()) return as_polynomial().str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

  private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Poly::constant(den_.table(), Rational(1));
            return;
        }
        if (auto q = try_divide(num_, den_)) {
            num_ = std::move(*q);
            den_ = Poly::constant(num_.table(), Rational(1));
        }
        // num/den = (cn/cd) * nhat/dhat with nhat,dhat integer content-free;
        // with cn/cd = p/q in lowest terms the canonical pair is (p*nhat, q*dhat)
        Rational cn = num_.coefficient_content();
        Rational cd = den_.coefficient_content();
        Rational ratio = cn / cd;
        Rational p{ratio.num()}, q{ratio.den()};
        num_ = num_ * (p / cn);
        den_ = den_ * (q / cd);
        if (den_.leading_coefficient().sign() < 0) {
            num_ = num_ * Rational(-1);
            den_ = den_ * Rational(-1);
        }
    }

    Poly num_, den_;
};

inline RatFun ratfun_reduce(const RatFun& f) { return f; } // constructor canonicalizes

} // namespace noc

#endif
