#ifndef COARSE_SUMSPACE_HPP
#define COARSE_SUMSPACE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "coarse/circle.hpp"
#include "coarse/krule.hpp"
#include "coarse/phi.hpp"
#include "coarse/sequence.hpp"
#include "coarse/window.hpp"

namespace coarse
{

// Row-major grid [0, sides[0]) x ... x [0, sides[m-1]) of omega^m indices.
struct Grid
{
    std::vector<std::size_t> sides;

    std::size_t dimension() const { return sides.size(); }
    std::size_t size() const;
    Index index(const std::vector<Index>& coords) const;
    std::vector<Index> coords(Index i) const;

    static Grid cube(std::size_t m, std::size_t side) { return Grid{std::vector<std::size_t>(m, side)}; }
};

// Exponent sum e_(1 i1) + ... + e_(m im) at a grid point.
Label sum_label(const std::vector<SequenceRef>& seqs, const std::vector<Index>& coords);

struct SumCollision
{
    std::vector<Index> first;
    std::vector<Index> second;
};

struct InjectivityVerdict
{
    std::vector<SumCollision> collisions;
    bool passed() const { return collisions.empty(); }
};

// Distinctness of the exponent sums over the grid. Collisions are listed with
// `first` the earlier grid point in row-major order.
InjectivityVerdict sum_injectivity_check(const std::vector<SequenceRef>& seqs, const Grid& grid);

// Window over the grid labeled by the exponent sums, with the bijection f to
// grid points kept both ways.
struct SumSpace
{
    std::vector<SequenceRef> seqs;
    Grid grid;
    Window window;

    // f: the window point carrying a_(1 i1) + ... + a_(m im) to (i1, ..., im).
    std::vector<Index> f(Index point) const { return grid.coords(point); }
    Index f_inverse(const std::vector<Index>& coords) const { return grid.index(coords); }
};

// Throws PreconditionError listing the first collision when the sums are not
// distinct, and InputError when a sequence is shorter than its grid side.
SumSpace build_sum_space(std::vector<SequenceRef> seqs, Grid grid);

// Differences sum over i != k of (e_(i q_i) - e_(i p_i)) with p, q in the grid.
std::unordered_set<Label> off_axis_differences(const SumSpace& s, std::size_t k);

// phi_k over axis-k indices: s in phi_k(j) iff the sets
// (a_kj + sum of the other A_i) and (K + a_ks + sum of the other A_i) meet
// inside the grid, tested with K u -K. Requires 0 in K.
PhiGenerator build_phi_k(const std::vector<Label>& k_elements, const SumSpace& s, std::size_t k);

struct ContainmentFailure
{
    Index point;         // window point p
    Label kappa;         // element of K
    Index image;         // window point q with label(q) = label(p) + kappa
    std::size_t axis;    // first axis with q_axis outside phi_axis(p_axis)
};

struct ContainmentVerdict
{
    std::size_t checked = 0;
    std::vector<ContainmentFailure> failures;
    bool passed() const { return failures.empty(); }
};

// A n (K + label(p)) is contained in phi_1(p_1) + ... + phi_m(p_m) for every
// grid point p, restricted to the grid.
ContainmentVerdict check_translate_containment(const std::vector<Label>& k_elements, const SumSpace& s,
                                    const std::vector<PhiGenerator>& phis);

struct IndependenceVerdict
{
    // Nonzero coefficient vectors in {-1, 0, 1}^m whose combination lies in G.
    std::vector<std::vector<int>> in_subgroup;
    // Window points whose label equals such a combination.
    std::vector<Index> hits;
    std::size_t combinations = 0;
    bool passed() const { return in_subgroup.empty() && hits.empty(); }
};

// Exact test that no nonzero {-1, 0, 1} combination of the limits lies in G,
// plus the windowed consequence that none equals a grid label.
IndependenceVerdict check_limit_independence(const std::vector<CirclePoint>& limits, const SumSpace* s = nullptr);

// Admissibility test for the search of the last sequence: e is accepted when
// e - e' avoids every difference of the earlier sequences' sums, for each
// exponent e' already chosen. Keeps the exponent sums distinct on the grid.
std::function<bool(std::int64_t, const std::vector<std::int64_t>&)>
distinct_sum_admissibility(const std::vector<SequenceRef>& earlier, std::size_t side);

} // namespace coarse

#endif
