#include <doctest.h>

#include <random>

#include "coarse/certify.hpp"
#include "coarse/errors.hpp"
#include "coarse/shellpart.hpp"

using namespace coarse;

namespace
{

std::vector<IndexSet> blocks_of(const AsdimCertificate& c, std::size_t i)
{
    return c.families.at(i).blocks;
}

// Random symmetric reflexive F containing the path edges.
Relation random_f(std::mt19937_64& g, std::size_t n)
{
    std::vector<Pair> v;
    const std::size_t extra = g() % (2 * n + 1);
    for (std::size_t t = 0; t < extra; ++t) {
        const Index a = g() % n;
        const Index b = g() % n;
        v.push_back({a, b});
    }
    return augment(Relation::from_pairs(Window(n), v));
}

} // namespace

TEST_CASE("chain shells")
{
    const auto d = shell_partition(chain_relation(Window(10), 1));
    REQUIRE(d.shells.size() == 9);
    CHECK(d.shells[0] == IndexSet{0, 1});
    for (Index i = 1; i < 9; ++i)
        CHECK(d.shells[i] == IndexSet{i + 1});

    const auto c = parity_certificate(d);
    CHECK(c.verified);
    CHECK(blocks_of(c, 0) == std::vector<IndexSet>{{0, 1}, {3}, {5}, {7}, {9}});
    CHECK(blocks_of(c, 1) == std::vector<IndexSet>{{2}, {4}, {6}, {8}});
}

TEST_CASE("radius two shells")
{
    const auto d = shell_partition(chain_relation(Window(10), 2));
    CHECK(d.shells == std::vector<IndexSet>{{0, 1, 2}, {3, 4}, {5, 6}, {7, 8}, {9}});
    const auto c = parity_certificate(d);
    CHECK(c.families.size() == 2);
    CHECK(c.dimension_bound() == 1);
}

TEST_CASE("single shell gives one family")
{
    const auto d = shell_partition(Relation::full(Window(6)));
    REQUIRE(d.shells.size() == 1);
    CHECK(parity_certificate(d).families.size() == 1);
}

TEST_CASE("augment adds the required pairs")
{
    const Window w(5);
    const auto a = augment(Relation::from_pairs(w, {{0, 3}}));
    CHECK(a.contains(3, 0));
    CHECK(a.contains(2, 2));
    CHECK(a.contains(1, 2));
    CHECK(a.contains(2, 1));
    CHECK_FALSE(a.contains(0, 2));
}

TEST_CASE("shell recurrence and parity certificates on random F")
{
    std::mt19937_64 g(101);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + g() % 60;
        const auto f = random_f(g, n);
        const auto d = shell_partition(f);

        std::vector<std::size_t> shell_of(n, SIZE_MAX);
        for (std::size_t s = 0; s < d.shells.size(); ++s) {
            CHECK_FALSE(d.shells[s].empty());
            for (Index x : d.shells[s]) {
                CHECK(shell_of[x] == SIZE_MAX);
                shell_of[x] = s;
            }
        }
        for (std::size_t s : shell_of)
            CHECK(s != SIZE_MAX);
        CHECK(d.shells[0] == f.row(0));
        for (std::size_t s = 0; s < d.shells.size(); ++s)
            for (Index y : ball(f, d.shells[s])) {
                const std::size_t sy = shell_of[y];
                CHECK(sy + 1 >= s);
                CHECK(sy <= s + 1);
            }

        const auto phi = shells_to_phi(d);
        const auto report = validate_phi(phi, Window(n));
        CHECK(report.valid());
        CHECK(report.max_column <= 2);

        const auto c = parity_certificate(d);
        CHECK(verify_certificate(c).passed());
        CHECK(c.families.size() == (d.shells.size() > 1 ? 2u : 1u));
    }
}

TEST_CASE("shell partition preconditions")
{
    const Window w(4);
    CHECK_THROWS_AS(shell_partition(Relation::diagonal(w)), PreconditionError);
    CHECK_THROWS_AS(shell_partition(Relation::from_pairs(w, {{0, 1}, {1, 2}, {2, 3}})),
                    PreconditionError);
    CHECK_THROWS_AS(shell_partition(chain_relation(w, 1), 4), PreconditionError);
}

TEST_CASE("shells from another base")
{
    const auto d = shell_partition(chain_relation(Window(7), 1), 3);
    CHECK(d.shells == std::vector<IndexSet>{{2, 3, 4}, {1, 5}, {0, 6}});
    CHECK(verify_certificate(parity_certificate(d)).passed());
}

TEST_CASE("product certificates")
{
    const auto c = parity_certificate(shell_partition(chain_relation(Window(8), 1)));
    const auto p = product_certificate(c, c);
    CHECK(p.verified);
    CHECK(p.families.size() == 4);
    CHECK(p.window.size() == 64);
    std::vector<int> covered(64, 0);
    for (const auto& f : p.families)
        for (const auto& b : f.blocks)
            for (Index x : b)
                ++covered[x];
    for (int k : covered)
        CHECK(k == 1);

    const auto one = parity_certificate(shell_partition(Relation::full(Window(3))));
    CHECK(product_certificate(one, one).families.size() == 1);

    AsdimCertificate raw = c;
    raw.verified = false;
    CHECK_THROWS_AS(product_certificate(raw, c), PreconditionError);
}

TEST_CASE("l-infinity relation")
{
    const auto e = linf_relation({3, 4}, 1);
    CHECK(e.size() == 12);
    CHECK(e.contains(0, 5));
    CHECK_FALSE(e.contains(0, 2));
    CHECK(e.row(5).size() == 9);
}

TEST_CASE("brick certificates")
{
    const auto a = brick_certificate(1, 1, 5, 20);
    CHECK(a.verified);
    CHECK(a.families.size() == 2);

    const auto b = brick_certificate(2, 1, 7, 21);
    CHECK(b.families.size() == 3);
    CHECK(verify_certificate(b).passed());

    const auto c = brick_certificate(2, 0, 4, 8);
    CHECK(c.families.size() == 1);
    CHECK(c.families[0].blocks.size() == 4);

    CHECK_THROWS_AS(brick_certificate(2, 1, 6, 12), PreconditionError);
    CHECK_THROWS_AS(brick_certificate(0, 1, 6, 12), PreconditionError);
}
