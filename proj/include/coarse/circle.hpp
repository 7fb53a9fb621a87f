#ifndef COARSE_CIRCLE_HPP
#define COARSE_CIRCLE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "coarse/quad.hpp"

namespace coarse
{

// A point of the circle R/Z with an exact representative in Q(sqrt 2), kept
// reduced to [0, 1). The group G is the subgroup generated by
// alpha = sqrt2 - 1; G equals Z[sqrt 2] mod 1, and n * alpha has the reduced
// form n sqrt2 - floor(n sqrt2).
class CirclePoint
{
  public:
    CirclePoint() = default;
    // Reduces q modulo 1.
    explicit CirclePoint(const QuadNumber& q) : value_(q.frac()) {}

    static CirclePoint rational(std::int64_t p, std::int64_t q);

    const QuadNumber& value() const { return value_; }

    // Exponent n with this == n * alpha, when the point lies in G.
    std::optional<BigInt> exponent() const;
    bool in_subgroup() const { return exponent().has_value(); }

    friend CirclePoint operator+(const CirclePoint& x, const CirclePoint& y)
    {
        return CirclePoint(x.value_ + y.value_);
    }
    friend CirclePoint operator-(const CirclePoint& x, const CirclePoint& y)
    {
        return CirclePoint(x.value_ - y.value_);
    }
    friend CirclePoint operator-(const CirclePoint& x) { return CirclePoint(-x.value_); }
    friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

    std::string to_string() const { return value_.to_string(); }

  private:
    QuadNumber value_;
};

// n * (sqrt2 - 1) mod 1.
CirclePoint circle_point(const BigInt& n);
inline CirclePoint circle_point(std::int64_t n) { return circle_point(BigInt(n)); }

// min(d, 1 - d) for d = (x - y) mod 1, in [0, 1/2].
QuadNumber circle_distance(const CirclePoint& x, const CirclePoint& y);

// circle_distance(x, y) < t, decided exactly.
bool closer_than(const CirclePoint& x, const CirclePoint& y, const QuadNumber& t);

// A candidate limit point h together with the reason it lies outside G.
struct LimitPoint
{
    CirclePoint value;
    std::string note;
};

// Certifies h outside G: (a + b sqrt2) / den mod 1 lies in G exactly when den
// divides both a and b. Returns nothing for points of G.
std::optional<LimitPoint> certify_outside_subgroup(const CirclePoint& h);

} // namespace coarse

#endif
