#include "coarse/krule.hpp"

#include <algorithm>
#include <cstdlib>

#include "coarse/text_format.hpp"

namespace coarse
{

KRule KRule::finite(std::vector<Label> elements)
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    KRule k;
    k.primitives_.push_back({std::move(elements), std::nullopt, nullptr});
    return k;
}

KRule KRule::tail(PhiGenerator phi, SequenceRef sequence)
{
    if (!sequence)
        throw InputError("tail primitive needs a sequence");
    KRule k;
    k.primitives_.push_back({{}, std::move(phi), std::move(sequence)});
    return k;
}

KRule operator|(const KRule& a, const KRule& b)
{
    KRule k = a;
    k.primitives_.insert(k.primitives_.end(), b.primitives_.begin(), b.primitives_.end());
    return k;
}

std::vector<Label> KRule::elements(std::size_t horizon) const
{
    std::vector<Label> out;
    for (const auto& p : primitives_) {
        if (!p.sequence) {
            out.insert(out.end(), p.elements.begin(), p.elements.end());
            continue;
        }
        const auto& e = p.sequence->exponents;
        const std::size_t n = std::min(horizon, e.size());
        for (Index i = 0; i < n; ++i) {
            for (Index m : (*p.phi)(i)) {
                if (m < n)
                    out.push_back(e[m] - e[i]);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool KRule::contains_identity(std::size_t horizon) const
{
    const auto xs = elements(horizon);
    return std::binary_search(xs.begin(), xs.end(), Label{0});
}

ConvergenceReport check_convergence(const PhiGenerator& phi, const SequenceSubspace& s,
                                    std::size_t horizon)
{
    ConvergenceReport report;
    const std::size_t n = std::min(horizon, s.size());
    const CirclePoint zero;
    const QuadNumber tail_bound =
        n >= 4 ? s.bounds[n / 4] * BigInt(2) : QuadNumber::integer(1);
    for (Index i = 0; i < n; ++i) {
        for (Index m : phi(i)) {
            if (m >= n)
                continue;
            const std::int64_t d = std::abs(s.exponents[m] - s.exponents[i]);
            if (!rotation_within(d, zero, s.bounds[m] + s.bounds[i])) {
                report.offenders.push_back(
                    {i, m, "|a_m - a_n| is not below t_m + t_n; the sequence data is inconsistent"});
            } else if (n >= 4 && i >= n / 2 && !rotation_within(d, zero, tail_bound)) {
                report.offenders.push_back(
                    {i, m, "difference from the upper half of the window is not below 2 t_(N/4) = " +
                               write_rational(tail_bound)});
            }
        }
    }
    return report;
}

KRule compact_rule_from_phi(const PhiGenerator& phi, SequenceRef s)
{
    if (!s)
        throw InputError("compact_rule_from_phi needs a sequence");
    const auto valid = validate_phi(phi, Window(s->size()));
    if (!valid.valid())
        throw PreconditionError("phi '" + phi.name() + "' is not valid on the sequence window: " +
                                describe(valid.violations.front()));
    auto report = check_convergence(phi, *s, s->size());
    if (!report.passed()) {
        const auto& o = report.offenders.front();
        throw NonConvergent("tail of phi '" + phi.name() + "' does not converge to 0: pair (" +
                                std::to_string(o.n) + ", " + std::to_string(o.m) + "): " +
                                o.reason + " (" + std::to_string(report.offenders.size()) +
                                " offending pair(s))",
                            std::move(report));
    }
    return KRule::tail(phi, std::move(s));
}

Relation translate_entourage(const GroupTranslate& a, const Window& w)
{
    Translate t{{}, a.direction};
    for (const auto& x : a.elements) {
        auto e = x.exponent();
        if (!e)
            throw InputError("translate element " + x.to_string() + " is not in G");
        t.offsets.push_back(static_cast<Label>(*e));
    }
    return materialize(t, w);
}

Relation translate_entourage(const KRule& k, std::size_t horizon, const Window& w,
                             TranslateDirection direction)
{
    return materialize(Translate{k.elements(horizon), direction}, w);
}

namespace text
{

std::string write_krule(const KRule& k)
{
    std::string out = "krule " + std::to_string(k.primitives().size()) + "\n";
    out += kFormatTag;
    out += '\n';
    for (const auto& p : k.primitives()) {
        if (!p.sequence) {
            out += "explicit:";
            for (Label x : p.elements)
                out += ' ' + std::to_string(x);
            out += '\n';
            continue;
        }
        const PhiGenerator table =
            p.phi->is_table() ? *p.phi : p.phi->tabulate(Window(p.sequence->size()));
        out += "tail: " + p.sequence->name + ' ' + std::to_string(table.domain()) + '\n';
        for (Index n = 0; n < table.domain(); ++n) {
            out += std::to_string(n) + ':';
            for (Index x : table.entries()[n])
                out += ' ' + std::to_string(x);
            out += '\n';
        }
    }
    return out;
}

KRule parse_krule(std::string_view doc, const std::vector<SequenceRef>& sequences)
{
    std::vector<std::string_view> ls;
    for (auto l : lines(doc)) {
        if (!is_comment(l))
            ls.push_back(l);
    }
    if (ls.empty())
        throw InputError("empty krule document");
    auto head = tokens(ls[0]);
    if (head.size() != 2 || head[0] != "krule")
        throw InputError("krule header must be 'krule P'");
    const auto count = parse_uint(head[1], "primitive count");
    std::optional<KRule> rule;
    std::size_t pos = 1;
    for (std::size_t p = 0; p < count; ++p) {
        if (pos >= ls.size())
            throw InputError("krule document ended before primitive " + std::to_string(p));
        auto t = tokens(ls[pos++]);
        KRule prim;
        if (!t.empty() && t[0] == "explicit:") {
            std::vector<Label> xs;
            for (std::size_t j = 1; j < t.size(); ++j)
                xs.push_back(parse_int(t[j], "explicit element"));
            prim = KRule::finite(std::move(xs));
        } else if (t.size() == 3 && t[0] == "tail:") {
            auto it = std::find_if(sequences.begin(), sequences.end(),
                                   [&](const SequenceRef& s) { return s && s->name == t[1]; });
            if (it == sequences.end())
                throw InputError("krule tail references unknown sequence '" + std::string(t[1]) + "'");
            const auto d = parse_uint(t[2], "tail table size");
            std::vector<IndexSet> entries(d);
            for (std::size_t n = 0; n < d; ++n) {
                if (pos >= ls.size())
                    throw InputError("krule tail table ended early");
                auto row = tokens(ls[pos++]);
                if (row.empty() || row[0] != std::to_string(n) + ":")
                    throw InputError("krule tail table: expected '" + std::to_string(n) + ": ...'");
                for (std::size_t j = 1; j < row.size(); ++j)
                    entries[n].push_back(static_cast<Index>(parse_uint(row[j], "phi value")));
            }
            prim = KRule::tail(PhiGenerator::table(std::move(entries)), *it);
        } else {
            throw InputError("krule primitive must start with 'explicit:' or 'tail:'");
        }
        rule = rule ? (*rule | prim) : prim;
    }
    if (pos != ls.size())
        throw InputError("trailing content in krule document");
    if (!rule)
        return KRule::finite({});
    return *rule;
}

} // namespace text

} // namespace coarse
