#ifndef COARSE_SEQUENCE_HPP
#define COARSE_SEQUENCE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "coarse/circle.hpp"
#include "coarse/window.hpp"

namespace coarse
{

// Injective sequence a_k = e_k * alpha in G converging to a limit h outside G,
// with dist(a_k, h) < bounds[k] for every k.
struct SequenceSubspace
{
    std::string name;
    LimitPoint limit;
    std::vector<std::int64_t> exponents;
    std::vector<QuadNumber> bounds;

    std::size_t size() const { return exponents.size(); }
    CirclePoint point(std::size_t k) const { return circle_point(exponents[k]); }
    // First n points, labeled by their exponents. Throws if n > size().
    Window window(std::size_t n) const;
};

// (num / den) * 2^-k for k < steps.
std::vector<QuadNumber> halving_schedule(std::int64_t num, std::int64_t den, std::size_t steps);
// 1 / (offset + k) for k < steps.
std::vector<QuadNumber> harmonic_schedule(std::int64_t offset, std::size_t steps);

constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

struct SequenceSearch
{
    std::string name = "a";
    // Exponents newly scanned per schedule step before giving up.
    std::uint64_t budget = kDefaultSearchBudget;
    // Extra admissibility test for a candidate exponent given those already
    // chosen; used to keep exponent sums distinct across several sequences.
    std::function<bool(std::int64_t, const std::vector<std::int64_t>&)> admissible;
};

// For each tolerance t_k, picks the least exponent e >= 1 not yet used with
// circle distance |e alpha - h| < t_k (and admissible, if a test is given).
// Requires h outside G and a strictly decreasing positive schedule. Throws
// SearchBudgetExceeded when a step scans more than `budget` new exponents.
SequenceSubspace find_convergent_sequence(const CirclePoint& h,
                                          const std::vector<QuadNumber>& schedule,
                                          const SequenceSearch& options = {});

// Exact test |e alpha - h| < t on the circle.
bool rotation_within(std::int64_t e, const CirclePoint& h, const QuadNumber& t);

// Rational text "p/q" (or "p").
std::string write_rational(const QuadNumber& q);
QuadNumber parse_rational(std::string_view s);

namespace text
{

//   seq alpha=sqrt2-1 h=<p>/<q> name=<name>
//   # format 1
//   k: e_k t_num/t_den
std::string write_sequence(const SequenceSubspace& s);
SequenceSubspace parse_sequence(std::string_view doc);

} // namespace text

} // namespace coarse

#endif
