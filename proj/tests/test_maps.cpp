#include <doctest.h>

#include <numeric>
#include <random>

#include "coarse/errors.hpp"
#include "coarse/maps.hpp"

using namespace coarse;

namespace
{

std::vector<Index> iota(std::size_t n)
{
    std::vector<Index> v(n);
    std::iota(v.begin(), v.end(), Index{0});
    return v;
}

MapFamily identity_map()
{
    return [](std::size_t n) { return WindowMap{Window(n), Window(n), iota(n)}; };
}

MapFamily square_map()
{
    return [](std::size_t n) {
        std::vector<Index> img(n);
        for (Index x = 0; x < n; ++x)
            img[x] = x * x;
        return WindowMap{Window(n), Window(n * n), img};
    };
}

ScaleFactory chain_scales(std::size_t r, std::size_t witness_r)
{
    return [=](const WindowMap& m) {
        return std::vector<ScaleInstance>{
            {"chain:" + std::to_string(r), chain_relation(m.source, r),
             chain_relation(m.target, witness_r)}};
    };
}

// Independent check of a reported counterexample.
void recheck(const MacroUniformReport& rep, const MapFamily& f, const ScaleFactory& scales)
{
    for (const auto& w : rep.windows) {
        const auto m = f(w.n);
        const auto inst = scales(m);
        REQUIRE(inst.size() == w.scales.size());
        for (std::size_t i = 0; i < inst.size(); ++i) {
            const auto& o = w.scales[i];
            if (!o.counterexample)
                continue;
            const auto [x, y] = *o.counterexample;
            CHECK(inst[i].source.contains(x, y));
            CHECK(o.image == Pair{m.image[x], m.image[y]});
            CHECK_FALSE(inst[i].witness.contains(m.image[x], m.image[y]));
        }
    }
}

} // namespace

TEST_CASE("induced relations")
{
    const Window w(4);
    const auto e = chain_relation(w, 1);
    CHECK(induced_relation(iota(4), e, w) == e);

    const std::vector<Index> dbl{0, 2, 4, 6};
    const auto d = induced_relation(dbl, e, Window(8));
    CHECK(d.pairs() == std::vector<Pair>{{0, 0}, {0, 2}, {2, 0}, {2, 2}, {2, 4}, {4, 2},
                                         {4, 4}, {4, 6}, {6, 4}, {6, 6}});
    CHECK(induced_relation({0, 0, 0, 0}, e, w).pairs() == std::vector<Pair>{{0, 0}});
    CHECK_THROWS_AS(induced_relation(dbl, e, w), InputError);
}

TEST_CASE("induced relations compose")
{
    std::mt19937_64 g(17);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + g() % 12;
        std::vector<Pair> pairs;
        for (int k = 0; k < 20; ++k)
            pairs.push_back({static_cast<Index>(g() % n), static_cast<Index>(g() % n)});
        const auto e = Relation::from_pairs(Window(n), pairs);
        std::vector<Index> f(n), h(n);
        for (auto& x : f)
            x = g() % n;
        for (auto& x : h)
            x = g() % n;
        std::vector<Index> hf(n);
        for (Index x = 0; x < n; ++x)
            hf[x] = h[f[x]];
        const Window w(n);
        CHECK(induced_relation(hf, e, w) == induced_relation(h, induced_relation(f, e, w), w));
    }
}

TEST_CASE("macro-uniform maps")
{
    const std::vector<std::size_t> ladder{8, 32};
    const auto id = check_macro_uniform(identity_map(), chain_scales(1, 1), ladder);
    CHECK(id.verdict() == Verdict::ValidatedOnLadder);
    CHECK(verdict_name(id.verdict()) == "validated-on-ladder");
    CHECK(id.to_text().find("verdict validated-on-ladder") != std::string::npos);

    const auto sq = check_macro_uniform(square_map(), chain_scales(1, 1), ladder);
    REQUIRE(sq.verdict() == Verdict::Refuted);
    REQUIRE(sq.windows[0].scales[0].counterexample.has_value());
    CHECK(*sq.windows[0].scales[0].counterexample == Pair{1, 2});
    CHECK(sq.to_text().find("counterexample (1,2) -> (1,4)") != std::string::npos);
    recheck(sq, square_map(), chain_scales(1, 1));

    const auto loose = check_macro_uniform(square_map(), chain_scales(1, 15), {8});
    CHECK(loose.verdict() == Verdict::ValidatedOnLadder);
    CHECK(check_macro_uniform(square_map(), chain_scales(1, 15), {8, 32}).verdict() ==
          Verdict::Refuted);
}

TEST_CASE("first violation")
{
    const Window w(5);
    CHECK_FALSE(first_violation(iota(5), chain_relation(w, 1), chain_relation(w, 1)));
    const auto v = first_violation(iota(5), chain_relation(w, 2), chain_relation(w, 1));
    REQUIRE(v);
    CHECK(*v == Pair{0, 2});
}

TEST_CASE("asymorphisms and inverses")
{
    const auto rep = check_asymorphism(identity_map(), chain_scales(2, 2), chain_scales(3, 3), {16, 64});
    CHECK(rep.verdict() == Verdict::ValidatedOnLadder);
    CHECK(rep.to_text().find("asymorphism validated-on-ladder") != std::string::npos);

    const WindowMap rev{Window(4), Window(4), {3, 1, 0, 2}};
    const auto inv = invert(rev);
    for (Index x = 0; x < 4; ++x)
        CHECK(inv.image[rev.image[x]] == x);
    CHECK_THROWS_AS(invert(WindowMap{Window(3), Window(3), {0, 0, 1}}), InputError);
    CHECK_THROWS_AS(invert(WindowMap{Window(2), Window(3), {0, 1}}), InputError);
    CHECK_THROWS_AS(check_asymorphism(square_map(), chain_scales(1, 1), chain_scales(1, 1), {4}),
                    InputError);
}

TEST_CASE("canonical witness")
{
    const Window w(6);
    const std::vector<Index> g{0, 2, 4};
    const auto psi = canonical_witness(g, chain_relation(Window(3), 1), w);
    CHECK(psi(0) == IndexSet{0, 2});
    CHECK(psi(2) == IndexSet{0, 2, 4});
    CHECK(psi(1) == IndexSet{1});
    CHECK(validate_phi(psi, w).valid());
}

TEST_CASE("universal property probes")
{
    const std::vector<std::size_t> ladder{8, 16, 32};
    const std::vector<ProbeRule> rules{
        {"diag", [](const Window& w) { return Relation::diagonal(w); }},
        {"chain:1", [](const Window& w) { return chain_relation(w, 1); }}};
    const auto ok = universal_property_probe(rules, identity_map(), ladder);
    CHECK(ok.passed());
    CHECK(ok.rows[0].column_bounds == std::vector<std::size_t>{1, 1, 1});
    CHECK(ok.rows[1].column_bounds == std::vector<std::size_t>{3, 3, 3});

    const std::vector<ProbeRule> full{{"full", [](const Window& w) { return Relation::full(w); }}};
    const auto bad = universal_property_probe(full, identity_map(), ladder);
    CHECK_FALSE(bad.boundedness_evidence());
    CHECK_FALSE(bad.passed());
    CHECK(bad.to_text().find("boundedness-evidence failed") != std::string::npos);

    const auto rep = check_macro_uniform(identity_map(), canonical_scales(rules), ladder);
    CHECK(rep.verdict() == Verdict::ValidatedOnLadder);
}
