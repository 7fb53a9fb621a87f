#ifndef COARSE_CERTIFY_HPP
#define COARSE_CERTIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coarse/phi.hpp"
#include "coarse/relation.hpp"

namespace coarse
{

// One family M_i of a covering; its position in the certificate is its color.
struct BlockFamily
{
    std::vector<IndexSet> blocks;
};

// Boundedness scale: an explicit relation or a phi generator materialized on
// the certificate window.
using Scale = std::variant<Relation, PhiGenerator>;

Relation materialize(const Scale& s, const Window& w);

// Witness that the window admits an H-bounded covering split into
// families.size() families, each E-disjoint: asdim <= families.size() - 1 at
// the scale pair (E, H).
struct AsdimCertificate
{
    Window window;
    Relation E;
    Scale H;
    std::vector<BlockFamily> families;
    // Set only by seal() after verify_certificate passes.
    bool verified = false;

    std::size_t dimension_bound() const { return families.empty() ? 0 : families.size() - 1; }
};

struct DisjointnessResult
{
    bool disjoint = true;
    // Block indices (within the family) and the point of E[A] that lies in B.
    std::size_t block_a = 0;
    std::size_t block_b = 0;
    Index point = 0;
};

// True iff E[A] and B are disjoint for all distinct blocks A, B.
DisjointnessResult is_disjoint_family(const BlockFamily& f, const Relation& e);

struct BoundednessResult
{
    bool bounded = true;
    // Least center x with A subset of H[x], per block (when bounded).
    std::vector<Index> centers;
    // First block with no center (when not bounded).
    std::size_t offending_block = 0;
};

BoundednessResult is_bounded_family(const BlockFamily& f, const Relation& h);

struct CertificateFailure
{
    enum class Clause
    {
        Malformed,
        Coverage,
        Disjointness,
        Boundedness,
    };
    Clause clause;
    std::string message;
    std::optional<std::size_t> family;
    std::vector<Index> witness;
};

struct VerdictReport
{
    std::vector<CertificateFailure> failures;

    bool passed() const { return failures.empty(); }
    std::string to_text() const;
};

VerdictReport verify_certificate(const AsdimCertificate& c);

// Verifies and returns the certificate flagged as verified; throws
// PreconditionError carrying the report text otherwise.
AsdimCertificate seal(AsdimCertificate c);

std::string clause_name(CertificateFailure::Clause c);

} // namespace coarse

#endif
