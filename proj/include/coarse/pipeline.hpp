#ifndef COARSE_PIPELINE_HPP
#define COARSE_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coarse/certify.hpp"
#include "coarse/krule.hpp"
#include "coarse/maps.hpp"
#include "coarse/sequence.hpp"
#include "coarse/sumspace.hpp"

namespace coarse
{

// A named output file and its exact bytes.
struct Document
{
    std::string name;
    std::string content;
};

// Outcome of a seeded batch of checks. `log` holds one line per notable
// event and is part of the deterministic output.
struct SuiteResult
{
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> log;
    std::vector<Document> documents;
    bool passed() const { return cases > 0 && failures == 0; }
};

// augment -> shell_partition -> parity_certificate -> verify.
struct Thm1Result
{
    std::size_t shells = 0;
    AsdimCertificate certificate;
    VerdictReport report;
    bool passed() const { return report.passed(); }
};

Thm1Result run_thm1(const Relation& base);

// Random relation triples checked against the algebra identities.
SuiteResult axioms_suite(std::size_t count, std::uint64_t seed, std::size_t max_n = 24);

// Shell partition and parity certificate on seeded random phi tables of
// width at most 8. Records the slowest run in milliseconds in `slowest_ms` when given.
SuiteResult thm1_random_suite(std::size_t count, std::size_t n, std::uint64_t seed,
                              double* slowest_ms = nullptr);

// Chain E on every window up to max_n against a set of H with proper balls,
// and against the shell entourage.
SuiteResult chain_obstruction_suite(std::size_t max_n = 9);

// Random (E, H) pairs; every verified candidate certificate with n + 1
// families must satisfy oracle <= n.
SuiteResult oracle_consistency_suite(std::size_t count, std::size_t max_n, std::uint64_t seed);

struct Thm2Config
{
    std::int64_t h_num = 1;
    std::int64_t h_den = 3;
    // Head schedule: (num / den) 2^-k for k < head_steps.
    std::int64_t head_num = 1;
    std::int64_t head_den = 10;
    std::size_t head_steps = 15;
    // Ladder sequence schedule 1 / (ladder_offset + k).
    std::int64_t ladder_offset = 10;
    std::vector<std::size_t> ladder{256, 1024, 4096};
    std::size_t phi_rules = 5;
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultSearchBudget;
};

struct Thm2Result
{
    SequenceSubspace head;
    SequenceSubspace sequence;
    std::vector<std::string> convergence;
    std::size_t convergence_failures = 0;
    AsymorphismReport asymorphism;
    UniversalProbeReport probe;
    std::vector<Document> documents;
    bool passed() const;
};

Thm2Result run_thm2(const Thm2Config& c);

struct Thm3Config
{
    std::size_t m = 2;
    // Side of the grid for the injectivity check.
    std::size_t injectivity_side = 64;
    // Side of the grid for the phi, containment and asymorphism checks.
    std::size_t side = 16;
    std::size_t krules = 10;
    std::int64_t ladder_offset = 10;
    std::uint64_t seed = 1;
};

struct Thm3Result
{
    std::vector<CirclePoint> limits;
    IndependenceVerdict independence;
    InjectivityVerdict injectivity;
    std::size_t phi_failures = 0;
    std::size_t containment_failures = 0;
    std::size_t containment_checked = 0;
    bool product_ok = false;
    std::size_t product_families = 0;
    bool bricks_ok = false;
    std::size_t brick_families = 0;
    AsymorphismReport asymorphism;
    std::vector<std::string> log;
    std::vector<Document> documents;
    bool passed() const;
};

// Limit points k / (2k + 1) for k = 1..m.
std::vector<CirclePoint> default_limits(std::size_t m);

Thm3Result run_thm3(const Thm3Config& c);

} // namespace coarse

#endif
