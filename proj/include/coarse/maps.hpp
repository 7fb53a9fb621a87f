#ifndef COARSE_MAPS_HPP
#define COARSE_MAPS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coarse/phi.hpp"
#include "coarse/relation.hpp"

namespace coarse
{

// {(f(x), f(y)) : (x, y) in E}. Throws InputError naming the first source
// point whose image escapes the target window.
Relation induced_relation(const std::vector<Index>& f, const Relation& e, const Window& target);

// A map restricted to one ladder window.
struct WindowMap
{
    Window source;
    Window target;
    std::vector<Index> image;
};

using MapFamily = std::function<WindowMap(std::size_t n)>;

// One entourage E of the source and the claimed witness E' of the target,
// both materialized for a particular window map.
struct ScaleInstance
{
    std::string name;
    Relation source;
    Relation witness;
};

using ScaleFactory = std::function<std::vector<ScaleInstance>(const WindowMap&)>;

enum class Verdict
{
    Refuted,
    ValidatedOnLadder,
};

std::string verdict_name(Verdict v);

struct ScaleOutcome
{
    std::string name;
    std::size_t source_pairs = 0;
    std::size_t witness_pairs = 0;
    // (x, y) in E with (f(x), f(y)) outside E'.
    std::optional<Pair> counterexample;
    std::optional<Pair> image;
    bool passed() const { return !counterexample.has_value(); }
};

struct WindowSection
{
    std::size_t n = 0;
    std::vector<ScaleOutcome> scales;
    bool passed() const;
};

struct MacroUniformReport
{
    std::string direction;
    std::vector<WindowSection> windows;
    Verdict verdict() const;
    std::string to_text() const;
};

// First (x, y) in E with (f(x), f(y)) not in E', scanning pairs in order.
std::optional<Pair> first_violation(const std::vector<Index>& f, const Relation& e,
                                    const Relation& witness);

// f(E[x]) within E'[f(x)] for every x, for each scale and ladder window. A
// pass everywhere is reported as validated on the ladder, never as proved.
MacroUniformReport check_macro_uniform(const MapFamily& f, const ScaleFactory& scales,
                                       const std::vector<std::size_t>& ladder,
                                       std::string direction = "forward");

// Inverse of a bijective window map. Throws InputError with a witness point
// when the map is not a bijection.
WindowMap invert(const WindowMap& m);

struct AsymorphismReport
{
    MacroUniformReport forward;
    MacroUniformReport backward;
    Verdict verdict() const;
    std::string to_text() const;
};

// Checks bijectivity on each ladder window, then macro-uniformity of f with
// the forward scales and of f^-1 with the backward scales.
AsymorphismReport check_asymorphism(const MapFamily& f, const ScaleFactory& forward,
                                    const ScaleFactory& backward,
                                    const std::vector<std::size_t>& ladder);

// psi(k) = {g(y) : y in E[g^-1(k)]} u {k} on the target window, as a table.
PhiGenerator canonical_witness(const std::vector<Index>& g, const Relation& e, const Window& target);

// Source entourages to probe, materialized on a source window.
struct ProbeRule
{
    std::string name;
    std::function<Relation(const Window&)> materialize;
};

struct ProbeRow
{
    std::string rule;
    // Largest column of psi per ladder window, in ladder order.
    std::vector<std::size_t> column_bounds;
    bool witness_valid = true;
    bool inclusion = true;
    bool stable() const;
};

struct UniversalProbeReport
{
    std::vector<std::size_t> ladder;
    std::vector<ProbeRow> rows;
    // Column bounds constant across the ladder for every rule.
    bool boundedness_evidence() const;
    bool passed() const;
    std::string to_text() const;
};

// For every probe rule and ladder window: builds the canonical witness for
// the injection g, validates it as a phi generator, confirms the inclusion,
// and records the column bound profile.
UniversalProbeReport universal_property_probe(const std::vector<ProbeRule>& rules, const MapFamily& g,
                                              const std::vector<std::size_t>& ladder);

// Scale factory built from the probe rules, each paired with its canonical
// witness.
ScaleFactory canonical_scales(std::vector<ProbeRule> rules);

} // namespace coarse

#endif
