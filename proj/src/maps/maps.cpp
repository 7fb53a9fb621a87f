#include "coarse/maps.hpp"

#include <algorithm>

#include "coarse/errors.hpp"
#include "coarse/text_format.hpp"

namespace coarse
{

Relation induced_relation(const std::vector<Index>& f, const Relation& e, const Window& target)
{
    if (f.size() != e.size())
        throw InputError("map defined on " + std::to_string(f.size()) + " points, relation on " +
                         std::to_string(e.size()));
    for (Index x = 0; x < f.size(); ++x) {
        if (!target.contains(f[x]))
            throw InputError("image of " + std::to_string(x) + " is " + std::to_string(f[x]) +
                             ", outside the target window of size " +
                             std::to_string(target.size()));
    }
    std::vector<Pair> pairs;
    pairs.reserve(e.pair_count());
    for (const auto& p : e.pairs())
        pairs.push_back({f[p.first], f[p.second]});
    return Relation::from_pairs(target, std::move(pairs));
}

std::string verdict_name(Verdict v)
{
    return v == Verdict::Refuted ? "refuted" : "validated-on-ladder";
}

bool WindowSection::passed() const
{
    return std::all_of(scales.begin(), scales.end(), [](const ScaleOutcome& s) { return s.passed(); });
}

Verdict MacroUniformReport::verdict() const
{
    for (const auto& w : windows) {
        if (!w.passed())
            return Verdict::Refuted;
    }
    return Verdict::ValidatedOnLadder;
}

std::string MacroUniformReport::to_text() const
{
    std::string out = "report macro-uniform direction=" + direction + "\n";
    out += text::kFormatTag;
    out += '\n';
    for (const auto& w : windows) {
        out += "window " + std::to_string(w.n) + " " + (w.passed() ? "pass" : "fail") + "\n";
        for (const auto& s : w.scales) {
            out += "  scale " + s.name + " pairs=" + std::to_string(s.source_pairs) +
                   " witness-pairs=" + std::to_string(s.witness_pairs);
            if (s.counterexample) {
                out += " counterexample (" + std::to_string(s.counterexample->first) + "," +
                       std::to_string(s.counterexample->second) + ") -> (" +
                       std::to_string(s.image->first) + "," + std::to_string(s.image->second) + ")";
            } else {
                out += " ok";
            }
            out += '\n';
        }
    }
    out += "verdict " + verdict_name(verdict()) + "\n";
    return out;
}

std::optional<Pair> first_violation(const std::vector<Index>& f, const Relation& e,
                                    const Relation& witness)
{
    for (Index x = 0; x < e.size(); ++x) {
        for (Index y : e.row(x)) {
            if (!witness.contains(f[x], f[y]))
                return Pair{x, y};
        }
    }
    return std::nullopt;
}

MacroUniformReport check_macro_uniform(const MapFamily& f, const ScaleFactory& scales,
                                       const std::vector<std::size_t>& ladder, std::string direction)
{
    MacroUniformReport report{std::move(direction), {}};
    for (std::size_t n : ladder) {
        const WindowMap m = f(n);
        WindowSection section{n, {}};
        for (auto& s : scales(m)) {
            if (!(s.source.window() == m.source) || !(s.witness.window() == m.target))
                throw InputError("scale '" + s.name + "' is not materialized on the map's windows");
            ScaleOutcome o{s.name, s.source.pair_count(), s.witness.pair_count(), std::nullopt,
                           std::nullopt};
            if (auto v = first_violation(m.image, s.source, s.witness)) {
                o.counterexample = v;
                o.image = Pair{m.image[v->first], m.image[v->second]};
            }
            section.scales.push_back(std::move(o));
        }
        report.windows.push_back(std::move(section));
    }
    return report;
}

WindowMap invert(const WindowMap& m)
{
    if (m.image.size() != m.source.size())
        throw InputError("map is not total on its source window");
    if (m.source.size() != m.target.size())
        throw InputError("map between windows of sizes " + std::to_string(m.source.size()) +
                         " and " + std::to_string(m.target.size()) + " is not a bijection");
    std::vector<Index> inv(m.target.size(), static_cast<Index>(-1));
    for (Index x = 0; x < m.image.size(); ++x) {
        const Index y = m.image[x];
        if (!m.target.contains(y))
            throw InputError("image of " + std::to_string(x) + " escapes the target window");
        if (inv[y] != static_cast<Index>(-1))
            throw InputError("map is not injective: " + std::to_string(inv[y]) + " and " +
                             std::to_string(x) + " both map to " + std::to_string(y));
        inv[y] = x;
    }
    return WindowMap{m.target, m.source, std::move(inv)};
}

Verdict AsymorphismReport::verdict() const
{
    return forward.verdict() == Verdict::ValidatedOnLadder &&
                   backward.verdict() == Verdict::ValidatedOnLadder
               ? Verdict::ValidatedOnLadder
               : Verdict::Refuted;
}

std::string AsymorphismReport::to_text() const
{
    return forward.to_text() + backward.to_text() + "asymorphism " + verdict_name(verdict()) + "\n";
}

AsymorphismReport check_asymorphism(const MapFamily& f, const ScaleFactory& forward,
                                    const ScaleFactory& backward,
                                    const std::vector<std::size_t>& ladder)
{
    for (std::size_t n : ladder)
        invert(f(n));
    MapFamily g = [&f](std::size_t n) { return invert(f(n)); };
    return AsymorphismReport{check_macro_uniform(f, forward, ladder, "forward"),
                             check_macro_uniform(g, backward, ladder, "backward")};
}

PhiGenerator canonical_witness(const std::vector<Index>& g, const Relation& e, const Window& target)
{
    const Relation pushed = induced_relation(g, e, target);
    std::vector<IndexSet> entries(target.size());
    for (Index k = 0; k < target.size(); ++k) {
        IndexSet row = pushed.row(k);
        entries[k] = sets::unite(row, IndexSet{k});
    }
    return PhiGenerator::table(std::move(entries), "canonical");
}

bool ProbeRow::stable() const
{
    return std::adjacent_find(column_bounds.begin(), column_bounds.end(),
                              std::not_equal_to<>()) == column_bounds.end();
}

bool UniversalProbeReport::boundedness_evidence() const
{
    return std::all_of(rows.begin(), rows.end(), [](const ProbeRow& r) { return r.stable(); });
}

bool UniversalProbeReport::passed() const
{
    return boundedness_evidence() &&
           std::all_of(rows.begin(), rows.end(),
                       [](const ProbeRow& r) { return r.witness_valid && r.inclusion; });
}

std::string UniversalProbeReport::to_text() const
{
    std::string out = "report universal-property\n";
    out += text::kFormatTag;
    out += "\nladder";
    for (auto n : ladder)
        out += ' ' + std::to_string(n);
    out += '\n';
    for (const auto& r : rows) {
        out += "rule " + r.rule + " columns";
        for (auto c : r.column_bounds)
            out += ' ' + std::to_string(c);
        out += std::string(" witness=") + (r.witness_valid ? "valid" : "invalid") +
               " inclusion=" + (r.inclusion ? "ok" : "fail") +
               " bounds=" + (r.stable() ? "constant" : "growing") + '\n';
    }
    out += std::string("boundedness-evidence ") + (boundedness_evidence() ? "ok" : "failed") + "\n";
    return out;
}

UniversalProbeReport universal_property_probe(const std::vector<ProbeRule>& rules, const MapFamily& g,
                                              const std::vector<std::size_t>& ladder)
{
    UniversalProbeReport report{ladder, {}};
    for (const auto& rule : rules)
        report.rows.push_back({rule.name, {}, true, true});
    for (std::size_t n : ladder) {
        const WindowMap m = g(n);
        for (std::size_t r = 0; r < rules.size(); ++r) {
            const Relation e = rules[r].materialize(m.source);
            const PhiGenerator psi = canonical_witness(m.image, e, m.target);
            const auto valid = validate_phi(psi, m.target);
            auto& row = report.rows[r];
            row.column_bounds.push_back(valid.max_column);
            row.witness_valid = row.witness_valid && valid.valid();
            row.inclusion =
                row.inclusion && !first_violation(m.image, e, materialize(psi, m.target));
        }
    }
    return report;
}

ScaleFactory canonical_scales(std::vector<ProbeRule> rules)
{
    return [rules = std::move(rules)](const WindowMap& m) {
        std::vector<ScaleInstance> out;
        for (const auto& r : rules) {
            Relation e = r.materialize(m.source);
            Relation w = materialize(canonical_witness(m.image, e, m.target), m.target);
            out.push_back({r.name, std::move(e), std::move(w)});
        }
        return out;
    };
}

} // namespace coarse
