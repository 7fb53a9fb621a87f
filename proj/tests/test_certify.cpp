#include <doctest.h>

#include <functional>
#include <random>

#include "coarse/certificate_document.hpp"
#include "coarse/certify.hpp"
#include "coarse/errors.hpp"
#include "coarse/oracle.hpp"
#include "coarse/shellpart.hpp"

using namespace coarse;

namespace
{

Relation random_relation(std::mt19937_64& g, std::size_t n, unsigned density, bool reflexive)
{
    std::vector<Pair> v;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if ((reflexive && i == j) || g() % 100 < density)
                v.push_back({i, j});
    return Relation::from_pairs(Window(n), v);
}

// Calls f with every set partition of {0, ..., n-1}, as restricted growth
// strings turned into block lists.
void for_each_partition(std::size_t n, const std::function<void(const std::vector<IndexSet>&)>& f)
{
    std::vector<std::size_t> a(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
        if (i == n) {
            std::vector<IndexSet> blocks(used);
            for (Index x = 0; x < n; ++x)
                blocks[a[x]].push_back(x);
            f(blocks);
            return;
        }
        for (std::size_t b = 0; b <= used; ++b) {
            a[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
}

// Least number of colors for the blocks with same-colored blocks E-disjoint.
std::size_t min_colors(const std::vector<IndexSet>& blocks, const Relation& e)
{
    const std::size_t k = blocks.size();
    std::vector<std::vector<bool>> clash(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j && !sets::intersect(ball(e, blocks[i]), blocks[j]).empty())
                clash[i][j] = clash[j][i] = true;
    for (std::size_t c = 1; c <= k; ++c) {
        std::vector<std::size_t> color(k, 0);
        std::function<bool(std::size_t)> place = [&](std::size_t i) {
            if (i == k)
                return true;
            for (std::size_t col = 0; col < c; ++col) {
                bool ok = true;
                for (std::size_t j = 0; j < i && ok; ++j)
                    ok = !(clash[i][j] && color[j] == col);
                if (ok) {
                    color[i] = col;
                    if (place(i + 1))
                        return true;
                }
            }
            return false;
        };
        if (place(0))
            return c;
    }
    return k;
}

// Independent oracle: minimum over H-bounded partitions of (colors - 1).
std::optional<std::size_t> naive_min(const Relation& e, const Relation& h)
{
    std::optional<std::size_t> best;
    for_each_partition(e.size(), [&](const std::vector<IndexSet>& blocks) {
        for (const auto& b : blocks) {
            bool centered = false;
            for (Index x = 0; x < h.size() && !centered; ++x)
                centered = sets::subset(b, h.row(x));
            if (!centered)
                return;
        }
        const std::size_t n = min_colors(blocks, e) - 1;
        if (!best || n < *best)
            best = n;
    });
    return best;
}

} // namespace

TEST_CASE("disjoint families")
{
    const auto chain = chain_relation(Window(5), 1);
    CHECK(is_disjoint_family({{{0, 1}, {3}}}, chain).disjoint);
    const auto r = is_disjoint_family({{{0}, {1}}}, chain);
    CHECK_FALSE(r.disjoint);
    CHECK(r.block_a == 0);
    CHECK(r.block_b == 1);
    CHECK(r.point == 1);
    CHECK(is_disjoint_family({{{0, 1, 2, 3, 4}}}, Relation::full(Window(5))).disjoint);
}

TEST_CASE("bounded families")
{
    const auto h = chain_relation(Window(12), 1);
    const auto r = is_bounded_family({{{0, 1, 2}, {4, 5, 6}, {9, 10}}}, h);
    REQUIRE(r.bounded);
    CHECK(r.centers == std::vector<Index>{1, 5, 9});
    const auto whole = is_bounded_family({{sets::range(0, 4)}}, Relation::diagonal(Window(4)));
    CHECK_FALSE(whole.bounded);
    CHECK(whole.offending_block == 0);
    CHECK(is_bounded_family({}, Relation::diagonal(Window(3))).bounded);
}

TEST_CASE("certificate verification clauses")
{
    const auto d = shell_partition(chain_relation(Window(100), 1));
    CHECK(verify_certificate(parity_certificate(d)).passed());

    const Window w(10);
    const auto chain = chain_relation(w, 1);
    BlockFamily f0, f1;
    for (Index x = 0; x < 10; ++x) {
        if (x == 7)
            continue;
        (x % 2 ? f1 : f0).blocks.push_back({x});
    }
    const auto missing = verify_certificate({w, Relation::diagonal(w), chain, {f0, f1}});
    REQUIRE_FALSE(missing.passed());
    CHECK(missing.failures[0].clause == CertificateFailure::Clause::Coverage);
    CHECK(missing.failures[0].witness == std::vector<Index>{7});

    BlockFamily adjacent{{{0}, {1}}};
    BlockFamily rest{{sets::range(2, 10)}};
    const auto clash = verify_certificate({w, chain, Relation::full(w), {adjacent, rest}});
    REQUIRE_FALSE(clash.passed());
    CHECK(clash.failures[0].clause == CertificateFailure::Clause::Disjointness);
    CHECK(clash.failures[0].family == std::size_t{0});

    const auto unbounded =
        verify_certificate({w, Relation::diagonal(w), Relation::diagonal(w), {rest, adjacent}});
    REQUIRE_FALSE(unbounded.passed());
    CHECK(unbounded.failures[0].clause == CertificateFailure::Clause::Boundedness);

    CHECK_THROWS_AS(seal({w, chain, Relation::full(w), {adjacent, rest}}), PreconditionError);
}

TEST_CASE("oracle on the documented instances")
{
    const Window six(6);
    CHECK(brute_min_families(chain_relation(six, 1), chain_relation(six, 2)).min_n == std::size_t{1});
    for (std::size_t n = 1; n <= 9; ++n) {
        const Window w(n);
        CHECK(brute_min_families(Relation::diagonal(w), chain_relation(w, 1)).min_n ==
              std::size_t{0});
        CHECK(brute_min_families(chain_relation(w, 1), Relation::full(w)).min_n == std::size_t{0});
    }
    CHECK_THROWS_AS(brute_min_families(Relation::diagonal(Window(10)), Relation::full(Window(10))),
                    CapExceeded);
    CHECK_FALSE(brute_min_families(Relation::diagonal(Window(3)), Relation::empty(Window(3)))
                    .min_n.has_value());
}

TEST_CASE("oracle agrees with an independent partition search")
{
    std::mt19937_64 g(71);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + g() % 6;
        const auto e = random_relation(g, n, 25, false);
        const auto h = random_relation(g, n, 35, g() % 4 != 0);
        const auto r = brute_min_families(e, h);
        CHECK(r.min_n == naive_min(e, h));
        if (r.witness) {
            CHECK(verify_certificate(*r.witness).passed());
            CHECK(r.witness->families.size() == *r.min_n + 1);
        }
    }
}

TEST_CASE("oracle is deterministic and matches the serial search")
{
    std::mt19937_64 g(73);
    for (int t = 0; t < 25; ++t) {
        const std::size_t n = 1 + g() % 8;
        const auto e = random_relation(g, n, 20, true);
        const auto h = random_relation(g, n, 40, true);
        const auto a = brute_min_families(e, h);
        const auto b = brute_min_families(e, h);
        const auto s = brute_min_families_serial(e, h);
        CHECK(a.min_n == s.min_n);
        REQUIRE(a.witness.has_value() == s.witness.has_value());
        if (a.witness) {
            CHECK(text::write_certificate(*a.witness) == text::write_certificate(*s.witness));
            CHECK(text::write_certificate(*a.witness) == text::write_certificate(*b.witness));
        }
    }
}

TEST_CASE("oracle is monotone in both scales")
{
    auto value = [](const OracleResult& r) { return r.min_n ? *r.min_n : 1000; };
    std::mt19937_64 g(79);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + g() % 7;
        const auto e = random_relation(g, n, 15, false);
        const auto e_big = unite(e, random_relation(g, n, 15, false));
        const auto h = random_relation(g, n, 30, true);
        const auto h_big = unite(h, random_relation(g, n, 30, false));
        CHECK(value(brute_min_families(e, h)) <= value(brute_min_families(e_big, h)));
        CHECK(value(brute_min_families(e, h_big)) <= value(brute_min_families(e, h)));
    }
}

TEST_CASE("verified certificates bound the oracle")
{
    std::mt19937_64 g(83);
    std::size_t verified = 0;
    for (int t = 0; t < 80; ++t) {
        const std::size_t n = 1 + g() % 7;
        const Window w(n);
        const auto e = random_relation(g, n, 20, false);
        const auto h = random_relation(g, n, 40, true);
        std::vector<IndexSet> blocks(1 + g() % n);
        for (Index x = 0; x < n; ++x)
            blocks[g() % blocks.size()].push_back(x);
        std::vector<BlockFamily> fams(1 + g() % 3);
        for (auto& b : blocks)
            if (!b.empty())
                fams[g() % fams.size()].blocks.push_back(b);
        std::erase_if(fams, [](const BlockFamily& f) { return f.blocks.empty(); });
        const AsdimCertificate c{w, e, h, fams};
        if (!verify_certificate(c).passed())
            continue;
        ++verified;
        const auto r = brute_min_families(e, h);
        REQUIRE(r.min_n.has_value());
        CHECK(*r.min_n <= c.dimension_bound());
    }
    CHECK(verified > 0);
}

TEST_CASE("a single disjoint family covering a chain is one block")
{
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto chain = chain_relation(Window(n), 1);
        for_each_partition(n, [&](const std::vector<IndexSet>& blocks) {
            if (is_disjoint_family({blocks}, chain).disjoint)
                CHECK(blocks.size() == 1);
        });
    }
}

TEST_CASE("certificate documents round-trip")
{
    const auto d = shell_partition(chain_relation(Window(30), 2));
    const auto c = parity_certificate(d);
    const auto doc = text::write_certificate(c);
    const auto back = text::parse_certificate(doc);
    CHECK(text::write_certificate(back) == doc);
    CHECK(back.E == c.E);
    CHECK(back.families.size() == c.families.size());
    CHECK(verify_certificate(back).passed());

    const Window w(12);
    const AsdimCertificate rule{w, chain_relation(w, 1), PhiGenerator::interval(3),
                                {{{{0, 1, 2}, {6, 7}}}, {{{3, 4, 5}, {8, 9, 10, 11}}}}};
    const auto rdoc = text::write_certificate(rule);
    CHECK(rdoc.find("H rule interval:3\n") != std::string::npos);
    CHECK(text::write_certificate(text::parse_certificate(rdoc)) == rdoc);

    CHECK_THROWS_AS(text::parse_certificate("certificate 2\nE pairs 1\n0 9\n"), InputError);
    CHECK_THROWS_AS(text::parse_certificate("certificate 2\nE pairs 0\nH pairs 0\n"), InputError);
}
