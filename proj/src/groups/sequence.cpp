#include "coarse/sequence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

#include "coarse/errors.hpp"
#include "coarse/text_format.hpp"

namespace coarse
{

namespace
{

using Wide = __int128;

Wide isqrt_wide(Wide v)
{
    auto r = static_cast<Wide>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v)
        --r;
    while ((r + 1) * (r + 1) <= v)
        ++r;
    return r;
}

Wide floor_sqrt2_wide(Wide y)
{
    if (y == 0)
        return 0;
    const Wide root = isqrt_wide(2 * y * y);
    return y > 0 ? root : -root - 1;
}

int sign_wide(Wide x, Wide y)
{
    if (x >= 0 && y >= 0)
        return (x || y) ? 1 : 0;
    if (x <= 0 && y <= 0)
        return -1;
    const Wide lhs = x * x;
    const Wide rhs = 2 * y * y;
    if (x > 0)
        return lhs > rhs ? 1 : -1;
    return rhs > lhs ? 1 : -1;
}

Wide floor_div_wide(Wide a, Wide d)
{
    Wide q = a / d;
    if ((a % d != 0) && ((a < 0) != (d < 0)))
        --q;
    return q;
}

int bits(std::uint64_t v) { return 64 - std::countl_zero(v); }

// Same decision as the generic path, with h = p/q and t = tp/tq rational and
// all intermediates inside 128 bits.
bool within_rational(Wide e, Wide p, Wide q, Wide tp, Wide tq)
{
    // e alpha - h = (X + Y sqrt2) / q.
    const Wide X = -floor_sqrt2_wide(e) * q - p;
    const Wide Y = q * e;
    Wide k = floor_div_wide(X + floor_sqrt2_wide(Y), q);
    if (sign_wide(X - (k + 1) * q, Y) >= 0)
        ++k;
    // d = (Xr + Y sqrt2) / q in [0, 1).
    const Wide Xr = X - k * q;
    if (sign_wide(tq * Xr - tp * q, tq * Y) < 0)
        return true;
    return sign_wide(tq * Xr - (tq - tp) * q, tq * Y) > 0;
}

bool within_generic(std::int64_t e, const CirclePoint& h, const QuadNumber& t)
{
    return closer_than(circle_point(e), h, t);
}

// Stateless predicate for one (h, t) pair, picking the 128-bit route when the
// magnitudes allow it.
class NearTest
{
  public:
    NearTest(const CirclePoint& h, const QuadNumber& t) : h_(h), t_(t)
    {
        const QuadNumber& v = h.value();
        if (v.is_rational() && t.is_rational() && v.den() < (BigInt(1) << 20) &&
            t.den() < (BigInt(1) << 30) && t.a() < t.den()) {
            p_ = static_cast<std::int64_t>(v.a());
            q_ = static_cast<std::int64_t>(v.den());
            tp_ = static_cast<std::int64_t>(t.a());
            tq_ = static_cast<std::int64_t>(t.den());
            fast_ = true;
        }
    }

    bool operator()(std::int64_t e) const
    {
        if (fast_ && bits(static_cast<std::uint64_t>(e)) + bits(q_) + bits(tq_) <= 60)
            return within_rational(e, p_, q_, tp_, tq_);
        return within_generic(e, h_, t_);
    }

  private:
    CirclePoint h_;
    QuadNumber t_;
    bool fast_ = false;
    std::int64_t p_ = 0, q_ = 1, tp_ = 0, tq_ = 1;
};

constexpr std::int64_t kChunk = 4096;

} // namespace

bool rotation_within(std::int64_t e, const CirclePoint& h, const QuadNumber& t)
{
    return NearTest(h, t)(e);
}

Window SequenceSubspace::window(std::size_t n) const
{
    if (n > size())
        throw InputError("sequence '" + name + "' has " + std::to_string(size()) +
                         " points, window of " + std::to_string(n) + " requested");
    return Window(n, std::vector<Label>(exponents.begin(), exponents.begin() + n));
}

std::vector<QuadNumber> halving_schedule(std::int64_t num, std::int64_t den, std::size_t steps)
{
    std::vector<QuadNumber> out;
    BigInt d = den;
    for (std::size_t k = 0; k < steps; ++k, d *= 2)
        out.push_back(QuadNumber::rational(num, d));
    return out;
}

std::vector<QuadNumber> harmonic_schedule(std::int64_t offset, std::size_t steps)
{
    std::vector<QuadNumber> out;
    for (std::size_t k = 0; k < steps; ++k)
        out.push_back(QuadNumber::rational(1, offset + static_cast<std::int64_t>(k)));
    return out;
}

SequenceSubspace find_convergent_sequence(const CirclePoint& h,
                                          const std::vector<QuadNumber>& schedule,
                                          const SequenceSearch& options)
{
    auto limit = certify_outside_subgroup(h);
    if (!limit)
        throw PreconditionError("limit point " + h.to_string() +
                                " lies in G; no certification that h is outside G");
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        if (schedule[k].sign() <= 0)
            throw PreconditionError("schedule tolerances must be positive");
        if (k > 0 && !(schedule[k] < schedule[k - 1]))
            throw PreconditionError("schedule must be strictly decreasing (step " +
                                    std::to_string(k) + ")");
    }

    SequenceSubspace seq{options.name, *limit, {}, {}};
    // Invariant: pool holds, in increasing order, every unused exponent in
    // [1, scanned] within the current tolerance of h.
    std::vector<std::int64_t> pool;
    std::int64_t scanned = 0;
    std::vector<char> hit(kChunk);

    auto admissible = [&](std::int64_t e) {
        return !options.admissible || options.admissible(e, seq.exponents);
    };

    for (std::size_t k = 0; k < schedule.size(); ++k) {
        const NearTest near(h, schedule[k]);
        std::erase_if(pool, [&](std::int64_t e) { return !near(e); });
        auto pick = std::find_if(pool.begin(), pool.end(), admissible);
        const std::int64_t step_start = scanned;
        while (pick == pool.end()) {
            if (static_cast<std::uint64_t>(scanned - step_start) >= options.budget) {
                // Report the closest exponent met during this step.
                std::vector<std::int64_t> seen(pool);
                for (std::int64_t e = step_start + 1; e <= scanned; ++e)
                    seen.push_back(e);
                std::int64_t best = seen.empty() ? 0 : seen.front();
                QuadNumber best_d = seen.empty() ? QuadNumber::integer(1)
                                                 : circle_distance(circle_point(best), h);
                for (std::int64_t e : seen) {
                    auto d = circle_distance(circle_point(e), h);
                    if (d < best_d) {
                        best_d = d;
                        best = e;
                    }
                }
                throw SearchBudgetExceeded("search budget of " + std::to_string(options.budget) +
                                               " exponents exhausted at step " +
                                               std::to_string(k) + " (tolerance " +
                                               write_rational(schedule[k]) + "); best exponent " +
                                               std::to_string(best),
                                           best);
            }
            const std::int64_t lo = scanned + 1;
            const std::int64_t len =
                std::min<std::int64_t>(kChunk, step_start + static_cast<std::int64_t>(options.budget) - scanned);
#pragma omp parallel for schedule(static)
            for (std::int64_t i = 0; i < len; ++i)
                hit[i] = near(lo + i) ? 1 : 0;
            const std::size_t before = pool.size();
            for (std::int64_t i = 0; i < len; ++i) {
                if (hit[i])
                    pool.push_back(lo + i);
            }
            scanned += len;
            pick = std::find_if(pool.begin() + static_cast<std::ptrdiff_t>(before), pool.end(),
                                admissible);
        }
        seq.exponents.push_back(*pick);
        seq.bounds.push_back(schedule[k]);
        pool.erase(pick);
    }
    return seq;
}

std::string write_rational(const QuadNumber& q)
{
    if (!q.is_rational())
        throw InputError("value " + q.to_string() + " is not rational");
    return q.a().str() + "/" + q.den().str();
}

QuadNumber parse_rational(std::string_view s)
{
    const auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return QuadNumber::integer(text::parse_int(s, "rational"));
    const auto p = text::parse_int(s.substr(0, slash), "numerator");
    const auto q = text::parse_int(s.substr(slash + 1), "denominator");
    if (q == 0)
        throw InputError("rational with zero denominator: '" + std::string(s) + "'");
    return QuadNumber::rational(p, q);
}

namespace text
{

std::string write_sequence(const SequenceSubspace& s)
{
    std::string out = "seq alpha=sqrt2-1 h=" + write_rational(s.limit.value.value()) +
                      " name=" + s.name + "\n";
    out += kFormatTag;
    out += '\n';
    for (std::size_t k = 0; k < s.size(); ++k)
        out += std::to_string(k) + ": " + std::to_string(s.exponents[k]) + ' ' +
               write_rational(s.bounds[k]) + '\n';
    return out;
}

SequenceSubspace parse_sequence(std::string_view doc)
{
    const auto ls = lines(doc);
    if (ls.empty())
        throw InputError("empty sequence document");
    const auto head = tokens(ls.front());
    if (head.size() < 3 || head[0] != "seq" || head[1] != "alpha=sqrt2-1" ||
        !head[2].starts_with("h="))
        throw InputError("sequence header must be 'seq alpha=sqrt2-1 h=<p>/<q>'");
    const CirclePoint h(parse_rational(head[2].substr(2)));
    std::string name = "a";
    if (head.size() == 4) {
        if (!head[3].starts_with("name="))
            throw InputError("unexpected header token '" + std::string(head[3]) + "'");
        name = std::string(head[3].substr(5));
    } else if (head.size() > 4) {
        throw InputError("unexpected tokens in sequence header");
    }
    auto limit = certify_outside_subgroup(h);
    if (!limit)
        throw InputError("sequence limit " + h.to_string() + " lies in G");

    SequenceSubspace s{name, *limit, {}, {}};
    std::unordered_set<std::int64_t> seen;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        if (is_comment(ls[i]))
            continue;
        auto t = tokens(ls[i]);
        if (t.size() != 3 || t[0] != std::to_string(s.size()) + ":")
            throw InputError("sequence line " + std::to_string(i + 1) + ": expected '" +
                             std::to_string(s.size()) + ": e_k t_num/t_den'");
        const auto e = parse_int(t[1], "exponent");
        if (!seen.insert(e).second)
            throw InputError("sequence line " + std::to_string(i + 1) + ": exponent " +
                             std::to_string(e) + " repeats");
        s.exponents.push_back(e);
        s.bounds.push_back(parse_rational(t[2]));
    }
    return s;
}

} // namespace text

} // namespace coarse
