#ifndef COARSE_SHELLPART_HPP
#define COARSE_SHELLPART_HPP

#include <cstddef>
#include <vector>

#include "coarse/certify.hpp"
#include "coarse/phi.hpp"
#include "coarse/relation.hpp"

namespace coarse
{

// E -> E u E^-1 u {(i, i+1)} u {(i+1, i)} u diagonal. Certificates at the
// augmented scale are certificates at E as well.
Relation augment(const Relation& e);

// Layers P0 = F[base], P(n+1) = F[Pn] \ (P0 u ... u Pn) until the window is
// exhausted. No empty shells are stored.
struct ShellDecomposition
{
    Window window;
    Relation F;
    std::vector<IndexSet> shells;
};

// Requires F symmetric, reflexive and containing every (i, i+1); throws
// PreconditionError naming the first offending pair otherwise.
ShellDecomposition shell_partition(const Relation& f, Index base = 0);

// Even shells form family 0, odd shells family 1 (a single shell gives one
// family). E is F and H is shells_to_phi(d). The result is sealed.
AsdimCertificate parity_certificate(const ShellDecomposition& d);

// Table generator with phi(n) = Pn u {n} for n indexing shells, phi(n) = {n}
// otherwise, over the whole window.
PhiGenerator shells_to_phi(const ShellDecomposition& d);

// Blocks A x B on the row-major product window, family (i, j) at position
// i * (families of cy) + j; E and H are the componentwise products. Both
// inputs must be verified; the result is sealed.
AsdimCertificate product_certificate(const AsdimCertificate& cx, const AsdimCertificate& cy);

// l-infinity relation of radius r on the row-major grid with the given sides.
Relation linf_relation(const std::vector<std::size_t>& sides, std::size_t r);

// m + 1 families of axis-aligned bricks on the cube [0, side)^m: family c is
// the grid of side L shifted by floor(c L / (m + 1)) along every axis, each
// brick trimmed by r on every face. E is the l-infinity relation of
// radius r, H the one of radius L. With r = 0 the untrimmed grid forms a
// single family. Requires m >= 1 and L >= 2 (m + 1) r + 1 (L >= 1 when r = 0).
AsdimCertificate brick_certificate(std::size_t m, std::size_t r, std::size_t L, std::size_t side);

} // namespace coarse

#endif
