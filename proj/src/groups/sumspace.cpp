#include "coarse/sumspace.hpp"

#include <algorithm>
#include <unordered_map>

#include "coarse/errors.hpp"

namespace coarse
{

std::size_t Grid::size() const
{
    std::size_t n = 1;
    for (auto s : sides)
        n *= s;
    return n;
}

Index Grid::index(const std::vector<Index>& coords) const
{
    if (coords.size() != sides.size())
        throw InputError("grid point has " + std::to_string(coords.size()) +
                         " coordinates, grid has " + std::to_string(sides.size()));
    std::size_t i = 0;
    for (std::size_t k = 0; k < sides.size(); ++k) {
        if (coords[k] >= sides[k])
            throw InputError("grid coordinate " + std::to_string(coords[k]) +
                             " outside side " + std::to_string(sides[k]));
        i = i * sides[k] + coords[k];
    }
    return static_cast<Index>(i);
}

std::vector<Index> Grid::coords(Index i) const
{
    std::vector<Index> out(sides.size());
    for (std::size_t k = sides.size(); k-- > 0;) {
        out[k] = static_cast<Index>(i % sides[k]);
        i = static_cast<Index>(i / sides[k]);
    }
    return out;
}

Label sum_label(const std::vector<SequenceRef>& seqs, const std::vector<Index>& coords)
{
    Label s = 0;
    for (std::size_t k = 0; k < seqs.size(); ++k)
        s += seqs[k]->exponents[coords[k]];
    return s;
}

namespace
{

void require_shape(const std::vector<SequenceRef>& seqs, const Grid& grid)
{
    if (seqs.empty())
        throw InputError("sum space needs at least one sequence");
    if (seqs.size() != grid.dimension())
        throw InputError("grid dimension " + std::to_string(grid.dimension()) + " but " +
                         std::to_string(seqs.size()) + " sequences");
    for (std::size_t k = 0; k < seqs.size(); ++k) {
        if (!seqs[k])
            throw InputError("missing sequence " + std::to_string(k));
        if (grid.sides[k] == 0 || seqs[k]->size() < grid.sides[k])
            throw InputError("sequence '" + seqs[k]->name + "' has " +
                             std::to_string(seqs[k]->size()) + " points, grid side " +
                             std::to_string(grid.sides[k]));
    }
}

std::string point_text(const std::vector<Index>& p)
{
    std::string out = "(";
    for (std::size_t k = 0; k < p.size(); ++k)
        out += (k ? "," : "") + std::to_string(p[k]);
    return out + ")";
}

} // namespace

InjectivityVerdict sum_injectivity_check(const std::vector<SequenceRef>& seqs, const Grid& grid)
{
    require_shape(seqs, grid);
    InjectivityVerdict v;
    std::unordered_map<Label, Index> seen;
    seen.reserve(grid.size());
    for (Index i = 0; i < grid.size(); ++i) {
        const auto c = grid.coords(i);
        auto [it, fresh] = seen.emplace(sum_label(seqs, c), i);
        if (!fresh)
            v.collisions.push_back({grid.coords(it->second), c});
    }
    return v;
}

SumSpace build_sum_space(std::vector<SequenceRef> seqs, Grid grid)
{
    const auto v = sum_injectivity_check(seqs, grid);
    if (!v.passed()) {
        const auto& c = v.collisions.front();
        throw PreconditionError("exponent sums collide at " + point_text(c.first) + " and " +
                                point_text(c.second) + " (" +
                                std::to_string(v.collisions.size()) + " collision(s))");
    }
    std::vector<Label> labels(grid.size());
    for (Index i = 0; i < grid.size(); ++i)
        labels[i] = sum_label(seqs, grid.coords(i));
    Window w(grid.size(), std::move(labels));
    return SumSpace{std::move(seqs), std::move(grid), std::move(w)};
}

std::unordered_set<Label> off_axis_differences(const SumSpace& s, std::size_t k)
{
    std::unordered_set<Label> acc{0};
    for (std::size_t i = 0; i < s.seqs.size(); ++i) {
        if (i == k)
            continue;
        const auto& e = s.seqs[i]->exponents;
        const std::size_t n = s.grid.sides[i];
        std::unordered_set<Label> next;
        next.reserve(acc.size() * n * n);
        for (Label base : acc) {
            for (std::size_t p = 0; p < n; ++p) {
                for (std::size_t q = 0; q < n; ++q)
                    next.insert(base + e[q] - e[p]);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

PhiGenerator build_phi_k(const std::vector<Label>& k_elements, const SumSpace& s, std::size_t k)
{
    if (k >= s.seqs.size())
        throw InputError("axis " + std::to_string(k) + " outside the sum space");
    if (std::find(k_elements.begin(), k_elements.end(), Label{0}) == k_elements.end())
        throw PreconditionError("K must contain 0");
    std::vector<Label> ks;
    for (Label x : k_elements) {
        ks.push_back(x);
        ks.push_back(-x);
    }
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    // a_kj + D = kappa + a_ks + D' has a solution iff e_kj - e_ks - kappa is a
    // difference of off-axis sums.
    const auto diffs = off_axis_differences(s, k);
    const auto& e = s.seqs[k]->exponents;
    const std::size_t n = s.grid.sides[k];
    std::vector<IndexSet> entries(n);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t t = 0; t < n; ++t) {
            const Label d = e[j] - e[t];
            for (Label kappa : ks) {
                if (diffs.count(d - kappa)) {
                    entries[j].push_back(static_cast<Index>(t));
                    break;
                }
            }
        }
    }
    return PhiGenerator::table(std::move(entries), "phi_" + std::to_string(k + 1));
}

ContainmentVerdict check_translate_containment(const std::vector<Label>& k_elements, const SumSpace& s,
                                    const std::vector<PhiGenerator>& phis)
{
    if (phis.size() != s.seqs.size())
        throw InputError("translate containment needs one phi per axis");
    ContainmentVerdict v;
    const Window& w = s.window;
    for (Index p = 0; p < w.size(); ++p) {
        const auto pc = s.f(p);
        for (Label kappa : k_elements) {
            const auto q = w.find_label(w.label(p) + kappa);
            if (!q)
                continue;
            ++v.checked;
            const auto qc = s.f(*q);
            for (std::size_t a = 0; a < pc.size(); ++a) {
                if (!sets::contains(phis[a](pc[a]), qc[a])) {
                    v.failures.push_back({p, kappa, *q, a});
                    break;
                }
            }
        }
    }
    return v;
}

IndependenceVerdict check_limit_independence(const std::vector<CirclePoint>& limits, const SumSpace* s)
{
    IndependenceVerdict v;
    const std::size_t m = limits.size();
    std::vector<int> coeff(m, -1);
    std::vector<CirclePoint> combos;
    // Odometer over {-1, 0, 1}^m.
    while (true) {
        if (std::any_of(coeff.begin(), coeff.end(), [](int c) { return c != 0; })) {
            CirclePoint c;
            for (std::size_t i = 0; i < m; ++i) {
                if (coeff[i] == 1)
                    c = c + limits[i];
                else if (coeff[i] == -1)
                    c = c - limits[i];
            }
            ++v.combinations;
            if (c.in_subgroup())
                v.in_subgroup.push_back(coeff);
            combos.push_back(c);
        }
        std::size_t i = 0;
        while (i < m && coeff[i] == 1)
            coeff[i++] = -1;
        if (i == m)
            break;
        ++coeff[i];
    }
    if (s) {
        for (Index p = 0; p < s->window.size(); ++p) {
            const CirclePoint x = circle_point(s->window.label(p));
            if (std::find(combos.begin(), combos.end(), x) != combos.end())
                v.hits.push_back(p);
        }
    }
    return v;
}

std::function<bool(std::int64_t, const std::vector<std::int64_t>&)>
distinct_sum_admissibility(const std::vector<SequenceRef>& earlier, std::size_t side)
{
    std::unordered_set<Label> diffs{0};
    for (const auto& seq : earlier) {
        if (!seq || seq->size() < side)
            throw InputError("earlier sequence shorter than the grid side");
        std::unordered_set<Label> next;
        for (Label base : diffs) {
            for (std::size_t p = 0; p < side; ++p) {
                for (std::size_t q = 0; q < side; ++q)
                    next.insert(base + seq->exponents[q] - seq->exponents[p]);
            }
        }
        diffs = std::move(next);
    }
    auto shared = std::make_shared<const std::unordered_set<Label>>(std::move(diffs));
    return [shared, side](std::int64_t e, const std::vector<std::int64_t>& chosen) {
        const std::size_t n = std::min(chosen.size(), side);
        for (std::size_t i = 0; i < n; ++i) {
            if (shared->count(e - chosen[i]))
                return false;
        }
        return true;
    };
}

} // namespace coarse
