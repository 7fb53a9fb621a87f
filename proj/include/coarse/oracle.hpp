#ifndef COARSE_ORACLE_HPP
#define COARSE_ORACLE_HPP

#include <cstddef>
#include <optional>

#include "coarse/certify.hpp"

namespace coarse
{

constexpr std::size_t kDefaultBruteForceCap = 9;

struct OracleResult
{
    // Least n such that the window has an H-bounded covering split into n + 1
    // E-disjoint families; empty when no H-bounded covering exists at all.
    std::optional<std::size_t> min_n;
    // The first witness in search order (see below).
    std::optional<AsdimCertificate> witness;
};

// Exhaustive search over coverings. Points are assigned in increasing order,
// each to an existing block (in order of creation) or to a new block whose
// family index is at most one more than the largest used so far. The first
// feasible assignment in this order is the returned witness, independent of
// how the search is split across threads.
//
// Centers for H-boundedness range over the window only. Throws CapExceeded
// when the window is larger than `cap`.
OracleResult brute_min_families(const Relation& e, const Relation& h,
                                std::size_t cap = kDefaultBruteForceCap);

// Single-threaded reference of the same search.
OracleResult brute_min_families_serial(const Relation& e, const Relation& h,
                                       std::size_t cap = kDefaultBruteForceCap);

} // namespace coarse

#endif
