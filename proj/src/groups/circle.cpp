#include "coarse/circle.hpp"

namespace coarse
{

CirclePoint CirclePoint::rational(std::int64_t p, std::int64_t q)
{
    return CirclePoint(QuadNumber::rational(p, q));
}

std::optional<BigInt> CirclePoint::exponent() const
{
    // value_ is in lowest terms, so den | a and den | b means den == 1; then
    // a + b sqrt2 = b alpha + (a + b) and the integer part vanishes mod 1.
    if (value_.den() != 1)
        return std::nullopt;
    return value_.b();
}

CirclePoint circle_point(const BigInt& n)
{
    return CirclePoint(QuadNumber(-floor_sqrt2_times(n), n));
}

QuadNumber circle_distance(const CirclePoint& x, const CirclePoint& y)
{
    const QuadNumber d = (x.value() - y.value()).frac();
    const QuadNumber other = QuadNumber::integer(1) - d;
    return d <= other ? d : other;
}

bool closer_than(const CirclePoint& x, const CirclePoint& y, const QuadNumber& t)
{
    return circle_distance(x, y) < t;
}

std::optional<LimitPoint> certify_outside_subgroup(const CirclePoint& h)
{
    if (h.in_subgroup())
        return std::nullopt;
    const QuadNumber& v = h.value();
    std::string note;
    if (v.is_rational()) {
        note = v.to_string() + " is rational and nonzero mod 1, while n*(sqrt2-1) mod 1 is "
                               "irrational for every n != 0";
    } else {
        note = v.to_string() + " has denominator " + v.den().str() +
               " in lowest terms; G = Z[sqrt2] mod 1 contains only denominator 1";
    }
    return LimitPoint{h, std::move(note)};
}

} // namespace coarse
