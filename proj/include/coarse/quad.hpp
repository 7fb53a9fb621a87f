#ifndef COARSE_QUAD_HPP
#define COARSE_QUAD_HPP

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace coarse
{

using BigInt = boost::multiprecision::cpp_int;

// Sign of x + y * sqrt(2), decided with integer arithmetic only.
int sign_of(const BigInt& x, const BigInt& y);

// floor(y * sqrt(2)).
BigInt floor_sqrt2_times(const BigInt& y);

// Floor division with a positive divisor.
BigInt floor_div(const BigInt& a, const BigInt& d);

// Exact element (a + b sqrt(2)) / den of Q(sqrt 2), den > 0, stored in lowest
// terms. All comparisons are exact.
class QuadNumber
{
  public:
    QuadNumber() : a_(0), b_(0), den_(1) {}
    QuadNumber(BigInt a, BigInt b, BigInt den = 1);
    static QuadNumber rational(BigInt p, BigInt q) { return QuadNumber(std::move(p), 0, std::move(q)); }
    static QuadNumber integer(BigInt p) { return QuadNumber(std::move(p), 0, 1); }

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& den() const { return den_; }

    bool is_rational() const { return b_ == 0; }
    int sign() const { return sign_of(a_, b_); }

    BigInt floor() const;
    // this - floor(this), in [0, 1).
    QuadNumber frac() const;

    // Approximation for human-readable output only.
    double to_double() const;
    // "a+b*sqrt2" or "(a+b*sqrt2)/den", or "p/q" for rationals.
    std::string to_string() const;

    friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y);
    friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y);
    friend QuadNumber operator-(const QuadNumber& x);
    friend QuadNumber operator*(const QuadNumber& x, const BigInt& k);

    friend bool operator==(const QuadNumber& x, const QuadNumber& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const QuadNumber& x, const QuadNumber& y);

  private:
    BigInt a_, b_, den_;
};

} // namespace coarse

#endif
