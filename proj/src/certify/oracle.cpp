#include "coarse/oracle.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <string>

#include "coarse/errors.hpp"

namespace coarse
{

namespace
{

using Mask = std::uint64_t;
constexpr std::size_t kMaxPoints = 64;

struct Tables
{
    std::size_t n = 0;
    std::array<Mask, kMaxPoints> ball{};    // E[p]
    std::array<Mask, kMaxPoints> coball{};  // {q : p in E[q]}
    std::array<Mask, kMaxPoints> centers{}; // {x : p in H[x]}
};

struct Block
{
    Mask points = 0;
    Mask centers = 0;
    std::uint8_t color = 0;
};

struct State
{
    std::array<Block, kMaxPoints> blocks{};
    std::uint8_t block_count = 0;
    std::int16_t max_color = -1;
    std::uint8_t next = 0;
};

Tables make_tables(const Relation& e, const Relation& h)
{
    Tables t;
    t.n = e.size();
    for (Index p = 0; p < t.n; ++p) {
        for (Index q : e.row(p)) {
            t.ball[p] |= Mask{1} << q;
            t.coball[q] |= Mask{1} << p;
        }
        for (Index q : h.row(p))
            t.centers[q] |= Mask{1} << p;
    }
    return t;
}

bool compatible(const Tables& t, const State& s, Index p, std::uint8_t color, int skip)
{
    const Mask reach = t.ball[p] | t.coball[p];
    for (int b = 0; b < s.block_count; ++b) {
        if (b == skip || s.blocks[b].color != color)
            continue;
        if (reach & s.blocks[b].points)
            return false;
    }
    return true;
}

// Calls visit(child) for each legal extension of s by point s.next, in search
// order; stops early when visit returns true.
template <typename Visit>
bool expand(const Tables& t, const State& s, std::size_t families, Visit&& visit)
{
    const Index p = s.next;
    const Mask bit = Mask{1} << p;
    for (int b = 0; b < s.block_count; ++b) {
        const Block& blk = s.blocks[b];
        const Mask c = blk.centers & t.centers[p];
        if (!c || !compatible(t, s, p, blk.color, b))
            continue;
        State child = s;
        child.blocks[b].points |= bit;
        child.blocks[b].centers = c;
        child.next = static_cast<std::uint8_t>(p + 1);
        if (visit(child))
            return true;
    }
    if (!t.centers[p])
        return false;
    const int top = std::min<int>(s.max_color + 1, static_cast<int>(families) - 1);
    for (int color = 0; color <= top; ++color) {
        if (!compatible(t, s, p, static_cast<std::uint8_t>(color), -1))
            continue;
        State child = s;
        child.blocks[s.block_count] = {bit, t.centers[p], static_cast<std::uint8_t>(color)};
        child.block_count = static_cast<std::uint8_t>(s.block_count + 1);
        child.max_color = static_cast<std::int16_t>(std::max<int>(s.max_color, color));
        child.next = static_cast<std::uint8_t>(p + 1);
        if (visit(child))
            return true;
    }
    return false;
}

bool search(const Tables& t, const State& s, std::size_t families, State& found)
{
    if (s.next == t.n) {
        found = s;
        return true;
    }
    return expand(t, s, families,
                  [&](const State& child) { return search(t, child, families, found); });
}

std::optional<State> solve_serial(const Tables& t, std::size_t families)
{
    State found;
    if (search(t, State{}, families, found))
        return found;
    return std::nullopt;
}

std::optional<State> solve_parallel(const Tables& t, std::size_t families)
{
    // Breadth-first expansion keeps prefixes in search order, so the first
    // prefix (by position) that completes holds the canonical witness.
    std::vector<State> prefixes{State{}};
    while (prefixes.size() < 256 && !prefixes.empty() && prefixes.front().next < t.n) {
        std::vector<State> next;
        for (const auto& s : prefixes)
            expand(t, s, families, [&](const State& child) {
                next.push_back(child);
                return false;
            });
        prefixes = std::move(next);
    }
    if (prefixes.empty())
        return std::nullopt;

    const auto count = static_cast<std::ptrdiff_t>(prefixes.size());
    std::vector<std::optional<State>> results(prefixes.size());
    std::atomic<std::ptrdiff_t> best{count};
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        if (i > best.load(std::memory_order_relaxed))
            continue;
        State found;
        if (search(t, prefixes[i], families, found)) {
            results[i] = found;
            std::ptrdiff_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
        }
    }
    const std::ptrdiff_t b = best.load();
    if (b == count)
        return std::nullopt;
    return results[b];
}

AsdimCertificate to_certificate(const State& s, const Relation& e, const Relation& h)
{
    std::vector<BlockFamily> families(static_cast<std::size_t>(s.max_color + 1));
    for (int b = 0; b < s.block_count; ++b) {
        IndexSet block;
        Mask m = s.blocks[b].points;
        while (m) {
            block.push_back(static_cast<Index>(std::countr_zero(m)));
            m &= m - 1;
        }
        families[s.blocks[b].color].blocks.push_back(std::move(block));
    }
    AsdimCertificate c{e.window(), e, h, std::move(families)};
    return c;
}

template <typename Solve>
OracleResult run(const Relation& e, const Relation& h, std::size_t cap, Solve solve)
{
    const std::size_t n = e.size();
    if (h.size() != n)
        throw InputError("brute_min_families: E and H live on different windows");
    if (n > cap)
        throw CapExceeded("window of size " + std::to_string(n) + " exceeds the brute-force cap " +
                          std::to_string(cap));
    if (n > kMaxPoints)
        throw CapExceeded("brute-force search supports at most 64 points");
    const Tables t = make_tables(e, h);
    for (std::size_t k = 1; k <= n; ++k) {
        if (auto s = solve(t, k))
            return {k - 1, to_certificate(*s, e, h)};
    }
    return {};
}

} // namespace

OracleResult brute_min_families(const Relation& e, const Relation& h, std::size_t cap)
{
    return run(e, h, cap, solve_parallel);
}

OracleResult brute_min_families_serial(const Relation& e, const Relation& h, std::size_t cap)
{
    return run(e, h, cap, solve_serial);
}

} // namespace coarse
