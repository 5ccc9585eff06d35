#ifndef COXMUT_QUADFIELD_HPP
#define COXMUT_QUADFIELD_HPP

// Exact arithmetic in Q(sqrt2, sqrt3): a + b*sqrt2 + c*sqrt3 + e*sqrt6.

#include "bigint.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace coxmut {

class QuadField {
public:
    QuadField() : a_(0), b_(0), c_(0), e_(0) {}
    QuadField(long v) : a_(v), b_(0), c_(0), e_(0) {} // NOLINT(google-explicit-constructor)
    QuadField(Rational a, Rational b, Rational c, Rational e)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), e_(std::move(e))
    {
    }

    static QuadField sqrt2() { return {0, 1, 0, 0}; }
    static QuadField sqrt3() { return {0, 0, 1, 0}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& e() const { return e_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(e_) == 0; }
    bool is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(e_) == 0; }

    friend QuadField operator+(const QuadField& x, const QuadField& y)
    {
        return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.e_ + y.e_};
    }
    friend QuadField operator-(const QuadField& x, const QuadField& y)
    {
        return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.e_ - y.e_};
    }
    QuadField operator-() const { return {-a_, -b_, -c_, -e_}; }

    friend QuadField operator*(const QuadField& x, const QuadField& y)
    {
        if (x.is_rational()) return {x.a_ * y.a_, x.a_ * y.b_, x.a_ * y.c_, x.a_ * y.e_};
        if (y.is_rational()) return y * x;
        // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2, sqrt6^2 = 6.
        return {x.a_ * y.a_ + 2 * x.b_ * y.b_ + 3 * x.c_ * y.c_ + 6 * x.e_ * y.e_,
                x.a_ * y.b_ + x.b_ * y.a_ + 3 * (x.c_ * y.e_ + x.e_ * y.c_),
                x.a_ * y.c_ + x.c_ * y.a_ + 2 * (x.b_ * y.e_ + x.e_ * y.b_),
                x.a_ * y.e_ + x.e_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_};
    }

    QuadField inverse() const
    {
        if (is_zero()) throw std::domain_error("QuadField: division by zero");
        if (is_rational()) return {1 / a_, 0, 0, 0};
        // x = X + Y sqrt3 with X, Y in Q(sqrt2); 1/x = (X - Y sqrt3) / (X^2 - 3 Y^2).
        const QuadField conj3{a_, b_, -c_, -e_};
        const QuadField n1 = *this * conj3; // lies in Q(sqrt2)
        const QuadField conj2{n1.a_, -n1.b_, 0, 0};
        const QuadField n2 = n1 * conj2; // rational
        const Rational inv = 1 / n2.a_;
        return conj3 * conj2 * QuadField{inv, 0, 0, 0};
    }

    friend QuadField operator/(const QuadField& x, const QuadField& y) { return x * y.inverse(); }

    QuadField& operator+=(const QuadField& y) { return *this = *this + y; }
    QuadField& operator-=(const QuadField& y) { return *this = *this - y; }
    QuadField& operator*=(const QuadField& y) { return *this = *this * y; }

    friend bool operator==(const QuadField& x, const QuadField& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.e_ == y.e_;
    }

    double to_double() const
    {
        return a_.get_d() + b_.get_d() * std::sqrt(2.0) + c_.get_d() * std::sqrt(3.0) + e_.get_d() * std::sqrt(6.0);
    }

    /// Exact sign; a floating fast path is taken only when it cannot be wrong.
    int sign() const
    {
        if (is_rational()) return sgn(a_);
        const double approx = to_double();
        const double scale = std::fabs(a_.get_d()) + 1.5 * std::fabs(b_.get_d()) + 1.8 * std::fabs(c_.get_d()) +
                             2.5 * std::fabs(e_.get_d());
        if (std::fabs(approx) > 1e-9 * scale + 1e-300) return approx > 0 ? 1 : -1;
        return exact_sign();
    }

    std::string to_string() const
    {
        std::string s = a_.get_str();
        if (sgn(b_) != 0) s += " + " + b_.get_str() + "*sqrt2";
        if (sgn(c_) != 0) s += " + " + c_.get_str() + "*sqrt3";
        if (sgn(e_) != 0) s += " + " + e_.get_str() + "*sqrt6";
        return s;
    }

    int exact_sign() const
    {
        // x = X + sqrt3*Y, X = a + b sqrt2, Y = c + e sqrt2.
        const int sx = sign_sqrt2(a_, b_);
        const int sy = sign_sqrt2(c_, e_);
        if (sy == 0) return sx;
        if (sx == 0) return sy;
        if (sx == sy) return sx;
        // Opposite signs: compare X^2 with 3 Y^2 inside Q(sqrt2).
        const Rational p = a_ * a_ + 2 * b_ * b_ - 3 * (c_ * c_ + 2 * e_ * e_);
        const Rational q = 2 * a_ * b_ - 3 * 2 * c_ * e_;
        const int d = sign_sqrt2(p, q);
        return d == 0 ? 0 : (d > 0 ? sx : sy);
    }

private:
    // Sign of p + q sqrt2.
    static int sign_sqrt2(const Rational& p, const Rational& q)
    {
        const int sp = sgn(p);
        const int sq = sgn(q);
        if (sq == 0) return sp;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        const int cmp = ::cmp(p * p, 2 * q * q);
        return cmp == 0 ? 0 : (cmp > 0 ? sp : sq);
    }

    Rational a_, b_, c_, e_;
};

} // namespace coxmut

#endif // COXMUT_QUADFIELD_HPP
