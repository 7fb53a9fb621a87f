#include "coarse/rules.hpp"

#include <fstream>
#include <sstream>

#include "coarse/errors.hpp"
#include "coarse/expr.hpp"
#include "coarse/text_format.hpp"

namespace coarse
{

PhiGenerator random_phi(std::size_t n, std::size_t width, Rng& rng)
{
    std::vector<IndexSet> entries(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= width ? i - width : 0;
        const std::size_t hi = std::min(n - 1, i + width);
        for (std::size_t j = lo; j <= hi; ++j) {
            if (j == i || rng.chance(1, 2))
                entries[i].push_back(static_cast<Index>(j));
        }
    }
    return PhiGenerator::table(std::move(entries), "random:" + std::to_string(width));
}

Relation random_relation(const Window& w, std::uint64_t num, std::uint64_t den, Rng& rng)
{
    std::vector<Pair> pairs;
    for (Index i = 0; i < w.size(); ++i) {
        for (Index j = 0; j < w.size(); ++j) {
            if (rng.chance(num, den))
                pairs.push_back({i, j});
        }
    }
    return Relation::from_pairs(w, std::move(pairs));
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw InputError("write to '" + path + "' failed");
}

namespace
{

struct Parsed
{
    std::string_view kind;
    std::string_view arg;
};

Parsed split(std::string_view spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        return {spec, {}};
    return {spec.substr(0, colon), spec.substr(colon + 1)};
}

std::uint64_t seed_for(const RuleContext& ctx, std::size_t n)
{
    return ctx.seed * 0x9E3779B97F4A7C15ULL + n;
}

} // namespace

PhiGenerator phi_from_rule(std::string_view spec, std::size_t n, const RuleContext& ctx)
{
    const auto [kind, arg] = split(spec);
    if (kind == "interval")
        return PhiGenerator::interval(text::parse_uint(arg, "interval radius"));
    if (kind == "phi")
        return text::parse_phi(read_file(std::string(arg)));
    if (kind == "random") {
        Rng rng(seed_for(ctx, n));
        return random_phi(n, text::parse_uint(arg, "random width"), rng);
    }
    throw InputError("rule '" + std::string(spec) + "' has no generator form");
}

Relation materialize_rule(std::string_view spec, const Window& w, const RuleContext& ctx)
{
    const auto [kind, arg] = split(spec);
    if (kind == "chain")
        return chain_relation(w, text::parse_uint(arg, "chain radius"));
    if (kind == "full" && arg.empty())
        return Relation::full(w);
    if (kind == "diag" && arg.empty())
        return Relation::diagonal(w);
    if (kind == "krule") {
        const KRule k = text::parse_krule(read_file(std::string(arg)), ctx.sequences);
        std::size_t horizon = 0;
        for (const auto& s : ctx.sequences)
            horizon = std::max(horizon, s->size());
        return translate_entourage(k, horizon, w, TranslateDirection::Forward);
    }
    if (kind == "interval" || kind == "phi" || kind == "random")
        return materialize(phi_from_rule(spec, w.size(), ctx), w);
    throw InputError("unknown rule '" + std::string(spec) +
                     "' (expected chain:r, interval:r, phi:<file>, krule:<file>, random:w, full, diag)");
}

Scale scale_from_rule(std::string_view spec, const Window& w, const RuleContext& ctx)
{
    const auto kind = split(spec).kind;
    if (kind == "interval" || kind == "phi" || kind == "random")
        return phi_from_rule(spec, w.size(), ctx);
    return materialize_rule(spec, w, ctx);
}

} // namespace coarse
