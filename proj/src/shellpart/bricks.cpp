#include "coarse/shellpart.hpp"

#include <string>

#include "coarse/errors.hpp"

namespace coarse
{

Relation linf_relation(const std::vector<std::size_t>& sides, std::size_t r)
{
    Relation out = chain_relation(Window(sides.front()), r);
    for (std::size_t a = 1; a < sides.size(); ++a)
        out = tensor(out, chain_relation(Window(sides[a]), r));
    return out;
}

namespace
{

struct Interval
{
    std::int64_t lo, hi; // inclusive
};

// Trimmed cores of the shifted one-dimensional grid, clipped to [0, side).
std::vector<Interval> cores(std::int64_t side, std::int64_t L, std::int64_t shift, std::int64_t trim)
{
    std::vector<Interval> out;
    for (std::int64_t k = shift > 0 ? -1 : 0; k * L + shift < side; ++k) {
        const std::int64_t lo = std::max<std::int64_t>(0, k * L + shift + trim);
        const std::int64_t hi = std::min<std::int64_t>(side - 1, (k + 1) * L + shift - 1 - trim);
        if (lo <= hi)
            out.push_back({lo, hi});
    }
    return out;
}

BlockFamily bricks_for_shift(std::size_t m, std::int64_t side, std::int64_t L, std::int64_t shift,
                             std::int64_t trim)
{
    const auto axis = cores(side, L, shift, trim);
    BlockFamily fam;
    if (axis.empty())
        return fam;
    // Odometer over the m axes; axis 0 is the most significant coordinate.
    std::vector<std::size_t> pick(m, 0);
    while (true) {
        IndexSet block{0};
        for (std::size_t a = 0; a < m; ++a) {
            IndexSet next;
            for (Index prefix : block) {
                for (std::int64_t x = axis[pick[a]].lo; x <= axis[pick[a]].hi; ++x)
                    next.push_back(static_cast<Index>(prefix * side + x));
            }
            block = std::move(next);
        }
        fam.blocks.push_back(std::move(block));
        std::size_t a = m;
        while (a > 0 && ++pick[a - 1] == axis.size())
            pick[--a] = 0;
        if (a == 0)
            break;
    }
    return fam;
}

} // namespace

AsdimCertificate brick_certificate(std::size_t m, std::size_t r, std::size_t L, std::size_t side)
{
    if (m < 1)
        throw PreconditionError("brick_certificate needs dimension m >= 1");
    if (side < 1)
        throw PreconditionError("brick_certificate needs a nonempty window");
    if (r == 0 ? L < 1 : L < 2 * (m + 1) * r + 1)
        throw PreconditionError("brick side L = " + std::to_string(L) + " is too small: need L >= " +
                                std::to_string(r == 0 ? 1 : 2 * (m + 1) * r + 1));
    const std::vector<std::size_t> sides(m, side);
    const Relation e = linf_relation(sides, r);
    const Relation h = linf_relation(sides, L);

    const std::size_t colors = r == 0 ? 1 : m + 1;
    std::vector<BlockFamily> families(colors);
    const auto count = static_cast<std::ptrdiff_t>(colors);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < count; ++c) {
        const auto shift = static_cast<std::int64_t>((c * L) / (m + 1));
        families[c] = bricks_for_shift(m, static_cast<std::int64_t>(side),
                                       static_cast<std::int64_t>(L), shift,
                                       static_cast<std::int64_t>(r));
    }
    return seal(AsdimCertificate{e.window(), e, h, std::move(families)});
}

} // namespace coarse
