#ifndef COARSE_RULES_HPP
#define COARSE_RULES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coarse/certify.hpp"
#include "coarse/krule.hpp"
#include "coarse/phi.hpp"
#include "coarse/rng.hpp"

namespace coarse
{

// phi(i) = {i} plus each j != i with |i - j| <= width, kept with probability
// 1/2, for i < n. Columns are bounded by 2 width + 1.
PhiGenerator random_phi(std::size_t n, std::size_t width, Rng& rng);

// Relation with every pair kept independently with probability num / den.
Relation random_relation(const Window& w, std::uint64_t num, std::uint64_t den, Rng& rng);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// Mini-language for entourage rules on the command line:
//   chain:r       {(i, j) : |i - j| <= r}
//   interval:r    phi(n) = [n - r, n + r]
//   phi:<file>    phi table document
//   krule:<file>  KRule document; needs the sequences it names (translate
//                 entourage on a sequence window)
//   random:w      seeded random phi table of width w (see random_phi)
//   full, diag
struct RuleContext
{
    std::uint64_t seed = 0;
    std::vector<SequenceRef> sequences;
};

Relation materialize_rule(std::string_view spec, const Window& w, const RuleContext& ctx = {});

// Generator form of interval, phi and random rules over n points.
PhiGenerator phi_from_rule(std::string_view spec, std::size_t n, const RuleContext& ctx = {});

// Generator when the rule has one, relation otherwise.
Scale scale_from_rule(std::string_view spec, const Window& w, const RuleContext& ctx = {});

} // namespace coarse

#endif
