#include "coarse/quad.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "coarse/errors.hpp"

namespace coarse
{

int sign_of(const BigInt& x, const BigInt& y)
{
    const int sx = x.sign();
    const int sy = y.sign();
    if (sx >= 0 && sy >= 0)
        return (sx || sy) ? 1 : 0;
    if (sx <= 0 && sy <= 0)
        return -1;
    // Opposite signs: compare x^2 with 2 y^2. Equality is impossible because
    // sqrt(2) is irrational and both are nonzero here.
    const BigInt lhs = x * x;
    const BigInt rhs = 2 * y * y;
    if (sx > 0)
        return lhs > rhs ? 1 : -1;
    return rhs > lhs ? 1 : -1;
}

BigInt floor_sqrt2_times(const BigInt& y)
{
    if (y == 0)
        return 0;
    const BigInt root = boost::multiprecision::sqrt(BigInt(2 * y * y));
    // 2 y^2 is never a perfect square for y != 0.
    return y > 0 ? root : BigInt(-root - 1);
}

BigInt floor_div(const BigInt& a, const BigInt& d)
{
    BigInt q = a / d;
    if ((a % d != 0) && ((a < 0) != (d < 0)))
        --q;
    return q;
}

QuadNumber::QuadNumber(BigInt a, BigInt b, BigInt den)
    : a_(std::move(a)), b_(std::move(b)), den_(std::move(den))
{
    if (den_ == 0)
        throw InputError("quadratic number with zero denominator");
    if (den_ < 0) {
        a_ = -a_;
        b_ = -b_;
        den_ = -den_;
    }
    if (den_ != 1) {
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(a_, b_), den_);
        if (g > 1) {
            a_ /= g;
            b_ /= g;
            den_ /= g;
        }
    }
}

BigInt QuadNumber::floor() const
{
    // a + b sqrt2 lies in [a + fl, a + fl + 1) with fl = floor(b sqrt2).
    const BigInt base = a_ + floor_sqrt2_times(b_);
    BigInt k = floor_div(base, den_);
    if (sign_of(a_ - (k + 1) * den_, b_) >= 0)
        ++k;
    return k;
}

QuadNumber QuadNumber::frac() const
{
    return *this - QuadNumber::integer(floor());
}

double QuadNumber::to_double() const
{
    using Float = boost::multiprecision::cpp_bin_float_50;
    const Float v = (Float(a_) + Float(b_) * boost::multiprecision::sqrt(Float(2))) / Float(den_);
    return static_cast<double>(v);
}

std::string QuadNumber::to_string() const
{
    std::string num;
    if (b_ == 0) {
        num = a_.str();
        return den_ == 1 ? num : num + "/" + den_.str();
    }
    num = a_.str() + (b_ < 0 ? "-" : "+") + BigInt(abs(b_)).str() + "*sqrt2";
    return den_ == 1 ? num : "(" + num + ")/" + den_.str();
}

QuadNumber operator+(const QuadNumber& x, const QuadNumber& y)
{
    if (x.den_ == y.den_)
        return QuadNumber(x.a_ + y.a_, x.b_ + y.b_, x.den_);
    return QuadNumber(x.a_ * y.den_ + y.a_ * x.den_, x.b_ * y.den_ + y.b_ * x.den_,
                      x.den_ * y.den_);
}

QuadNumber operator-(const QuadNumber& x) { return QuadNumber(-x.a_, -x.b_, x.den_); }

QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) { return x + (-y); }

QuadNumber operator*(const QuadNumber& x, const BigInt& k)
{
    return QuadNumber(x.a_ * k, x.b_ * k, x.den_);
}

std::strong_ordering operator<=>(const QuadNumber& x, const QuadNumber& y)
{
    // Denominators are positive, so the sign of x - y is the sign of the
    // cross-multiplied numerator.
    const int s = sign_of(x.a_ * y.den_ - y.a_ * x.den_, x.b_ * y.den_ - y.b_ * x.den_);
    if (s < 0)
        return std::strong_ordering::less;
    if (s > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace coarse
