#include "coarse/pipeline.hpp"

#include <chrono>
#include <map>
#include <memory>

#include "coarse/certificate_document.hpp"
#include "coarse/errors.hpp"
#include "coarse/oracle.hpp"
#include "coarse/rng.hpp"
#include "coarse/rules.hpp"
#include "coarse/shellpart.hpp"
#include "coarse/text_format.hpp"

namespace coarse
{

namespace
{

std::string join_lines(const std::vector<std::string>& lines)
{
    std::string out;
    for (const auto& l : lines)
        out += l + '\n';
    return out;
}

IndexSet random_subset(std::size_t n, Rng& rng)
{
    IndexSet s;
    for (Index i = 0; i < n; ++i) {
        if (rng.chance(1, 2))
            s.push_back(i);
    }
    return s;
}

} // namespace

Thm1Result run_thm1(const Relation& base)
{
    const Relation f = augment(base);
    const ShellDecomposition d = shell_partition(f);
    AsdimCertificate c = parity_certificate(d);
    VerdictReport report = verify_certificate(c);
    return Thm1Result{d.shells.size(), std::move(c), std::move(report)};
}

SuiteResult axioms_suite(std::size_t count, std::uint64_t seed, std::size_t max_n)
{
    SuiteResult s;
    Rng rng(seed);
    auto fail = [&](std::size_t i, const std::string& what) {
        ++s.failures;
        s.log.push_back("case " + std::to_string(i) + ": " + what);
    };
    for (std::size_t i = 0; i < count; ++i) {
        const Window w(1 + rng.below(max_n));
        const std::uint64_t den = 2 + rng.below(6);
        StoragePolicy policy;
        policy.force = rng.chance(1, 2) ? Storage::Dense : Storage::Sparse;
        const Relation e = random_relation(w, 1, den, rng).with_storage(*policy.force);
        const Relation e2 = random_relation(w, 1, den, rng);
        const Relation e3 = random_relation(w, 1, den, rng);
        const Relation delta = Relation::diagonal(w, policy);
        ++s.cases;

        if (!(inverse(compose(e, e2)) == compose(inverse(e2), inverse(e))))
            fail(i, "(E o E2)^-1 != E2^-1 o E^-1");
        if (!(compose(delta, e) == e) || !(compose(e, delta) == e))
            fail(i, "diagonal is not an identity for composition");
        const Relation ee2 = compose(e, e2);
        for (Index x = 0; x < w.size(); ++x) {
            if (ball(ee2, x) != ball(e2, ball(e, IndexSet{x}))) {
                fail(i, "ball(E o E2, " + std::to_string(x) + ") != E2[E[x]]");
                break;
            }
        }
        const Relation bigger = unite(e, e3);
        const IndexSet b = random_subset(w.size(), rng);
        IndexSet a;
        for (Index x : b) {
            if (rng.chance(1, 2))
                a.push_back(x);
        }
        if (!sets::subset(ball(e, a), ball(bigger, a)))
            fail(i, "ball not monotone in E");
        if (!sets::subset(ball(e, a), ball(e, b)))
            fail(i, "ball not monotone in A");
    }
    s.log.insert(s.log.begin(), "axioms cases=" + std::to_string(s.cases) +
                                    " failures=" + std::to_string(s.failures));
    s.documents.push_back({"axioms.txt", join_lines(s.log)});
    return s;
}

SuiteResult thm1_random_suite(std::size_t count, std::size_t n, std::uint64_t seed, double* slowest_ms)
{
    SuiteResult s;
    double slowest = 0;
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng(seed + i);
        const std::size_t width = 1 + rng.below(8);
        const Window w(n);
        const Relation base = materialize(random_phi(n, width, rng), w);
        const auto t0 = std::chrono::steady_clock::now();
        const Thm1Result r = run_thm1(base);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        slowest = std::max(slowest, ms);
        ++s.cases;
        if (!r.passed()) {
            ++s.failures;
            s.log.push_back("case " + std::to_string(i) + " failed: " + r.report.to_text());
        }
        s.log.push_back("case " + std::to_string(i) + " width=" + std::to_string(width) +
                        " shells=" + std::to_string(r.shells) +
                        " families=" + std::to_string(r.certificate.families.size()) +
                        " verdict=" + (r.passed() ? "pass" : "fail"));
        s.documents.push_back({"thm1-" + std::to_string(i) + ".txt",
                               text::write_certificate(r.certificate)});
    }
    if (slowest_ms)
        *slowest_ms = slowest;
    s.documents.push_back({"thm1-suite.txt", join_lines(s.log)});
    return s;
}

SuiteResult chain_obstruction_suite(std::size_t max_n)
{
    SuiteResult s;
    Rng rng(0xC4A1);
    auto proper = [](const Relation& h) {
        for (Index x = 0; x < h.size(); ++x) {
            if (h.row_size(x) == h.size())
                return false;
        }
        return true;
    };
    for (std::size_t n = 2; n <= max_n; ++n) {
        const Window w(n);
        const Relation e = chain_relation(w, 1);
        std::vector<std::pair<std::string, Relation>> hs;
        hs.emplace_back("diag", Relation::diagonal(w));
        for (std::size_t r = 1; 2 * r < n - 1; ++r)
            hs.emplace_back("chain:" + std::to_string(r), chain_relation(w, r));
        for (int k = 0; k < 3; ++k) {
            Relation h = reflexive_closure(random_relation(w, 1, 3, rng));
            if (proper(h))
                hs.emplace_back("random-" + std::to_string(k), std::move(h));
        }
        for (const auto& [name, h] : hs) {
            ++s.cases;
            const auto r = brute_min_families(e, h);
            const bool ok = !r.min_n || *r.min_n >= 1;
            if (!ok)
                ++s.failures;
            s.log.push_back("N=" + std::to_string(n) + " H=" + name + " oracle=" +
                            (r.min_n ? std::to_string(*r.min_n) : "none") + (ok ? "" : " VIOLATION"));
        }
        const ShellDecomposition d = shell_partition(e);
        const Relation hs_rel = materialize(shells_to_phi(d), w);
        const auto r = brute_min_families(e, hs_rel);
        ++s.cases;
        // With balls covering the window (N <= 2) one family suffices.
        const std::size_t expect = proper(hs_rel) ? 1 : 0;
        const bool ok = r.min_n && *r.min_n == expect;
        if (!ok)
            ++s.failures;
        s.log.push_back("N=" + std::to_string(n) + " H=shells oracle=" +
                        (r.min_n ? std::to_string(*r.min_n) : "none") + " expected=" +
                        std::to_string(expect) + (ok ? "" : " VIOLATION"));
    }
    s.documents.push_back({"chain-obstruction.txt", join_lines(s.log)});
    return s;
}

SuiteResult oracle_consistency_suite(std::size_t count, std::size_t max_n, std::uint64_t seed)
{
    SuiteResult s;
    Rng rng(seed);
    std::size_t verified = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 1 + rng.below(max_n);
        const Window w(n);
        const Relation e = random_relation(w, 1, 2 + rng.below(5), rng);
        Relation h = random_relation(w, 1, 2 + rng.below(4), rng);
        if (rng.chance(3, 4))
            h = reflexive_closure(h);
        const auto oracle = brute_min_families(e, h);
        ++s.cases;

        std::vector<std::vector<BlockFamily>> candidates;
        {
            std::vector<BlockFamily> fams;
            for (Index x = 0; x < n; ++x)
                fams.push_back({{IndexSet{x}}});
            candidates.push_back(std::move(fams));
            BlockFamily one;
            for (Index x = 0; x < n; ++x)
                one.blocks.push_back({x});
            candidates.push_back({one});
            candidates.push_back({BlockFamily{{sets::range(0, static_cast<Index>(n))}}});
        }
        for (int k = 0; k < 6; ++k) {
            const std::size_t blocks = 1 + rng.below(n);
            const std::size_t colors = 1 + rng.below(3);
            std::vector<IndexSet> b(blocks);
            for (Index x = 0; x < n; ++x)
                b[rng.below(blocks)].push_back(x);
            std::vector<BlockFamily> fams(colors);
            for (auto& blk : b) {
                if (!blk.empty())
                    fams[rng.below(colors)].blocks.push_back(std::move(blk));
            }
            std::erase_if(fams, [](const BlockFamily& f) { return f.blocks.empty(); });
            candidates.push_back(std::move(fams));
        }
        if (oracle.witness)
            candidates.push_back(oracle.witness->families);

        for (const auto& fams : candidates) {
            const AsdimCertificate c{w, e, h, fams};
            if (!verify_certificate(c).passed())
                continue;
            ++verified;
            const std::size_t bound = fams.size() - 1;
            if (!oracle.min_n || *oracle.min_n > bound) {
                ++s.failures;
                s.log.push_back("case " + std::to_string(i) + ": verified certificate with " +
                                std::to_string(fams.size()) + " families but oracle=" +
                                (oracle.min_n ? std::to_string(*oracle.min_n) : "none"));
            }
        }
    }
    s.log.insert(s.log.begin(), "oracle-consistency pairs=" + std::to_string(s.cases) +
                                    " verified-certificates=" + std::to_string(verified) +
                                    " violations=" + std::to_string(s.failures));
    if (verified == 0)
        ++s.failures;
    s.documents.push_back({"oracle-consistency.txt", join_lines(s.log)});
    return s;
}

bool Thm2Result::passed() const
{
    return convergence_failures == 0 &&
           asymorphism.verdict() == Verdict::ValidatedOnLadder && probe.passed();
}

Thm2Result run_thm2(const Thm2Config& c)
{
    Thm2Result r;
    const CirclePoint h = CirclePoint::rational(c.h_num, c.h_den);
    std::size_t top = 0;
    for (auto n : c.ladder)
        top = std::max(top, n);

    SequenceSearch head_search{"head", c.budget, {}};
    r.head = find_convergent_sequence(
        h, halving_schedule(c.head_num, c.head_den, c.head_steps), head_search);
    SequenceSearch ladder_search{"a", c.budget, {}};
    r.sequence = find_convergent_sequence(h, harmonic_schedule(c.ladder_offset, top), ladder_search);
    const auto seq = std::make_shared<const SequenceSubspace>(r.sequence);
    const std::size_t horizon = seq->size();

    Rng rng(c.seed);
    for (std::size_t i = 0; i < c.phi_rules; ++i) {
        const std::size_t width = 1 + rng.below(4);
        const PhiGenerator phi = random_phi(horizon, width, rng);
        try {
            const KRule k = compact_rule_from_phi(phi, seq);
            r.convergence.push_back("phi " + std::to_string(i) + " random:" + std::to_string(width) +
                                    " converges elements=" +
                                    std::to_string(k.elements(horizon).size()));
        } catch (const NonConvergent& e) {
            ++r.convergence_failures;
            r.convergence.push_back("phi " + std::to_string(i) + " refused: " + e.what());
        }
    }

    MapFamily f = [seq](std::size_t n) {
        std::vector<Index> id(n);
        for (Index i = 0; i < n; ++i)
            id[i] = i;
        return WindowMap{Window(n), seq->window(n), std::move(id)};
    };

    const std::uint64_t seed = c.seed;
    ScaleFactory forward = [seq, horizon, seed](const WindowMap& m) {
        const std::size_t n = m.source.size();
        std::vector<PhiGenerator> phis{PhiGenerator::interval(1), PhiGenerator::interval(2),
                                       PhiGenerator::interval(4)};
        Rng local(seed * 1000003 + n);
        for (int t = 0; t < 2; ++t)
            phis.push_back(random_phi(n, 1 + local.below(4), local));
        std::vector<ScaleInstance> out;
        for (std::size_t t = 0; t < phis.size(); ++t) {
            const KRule k = compact_rule_from_phi(phis[t], seq);
            out.push_back({phis[t].name() + (t >= 3 ? "#" + std::to_string(t - 3) : ""),
                           materialize(phis[t], m.source),
                           translate_entourage(k, horizon, m.target, TranslateDirection::Inverse)});
        }
        return out;
    };

    std::vector<std::pair<std::string, KRule>> sampled;
    {
        std::vector<Label> finite{0};
        for (int t = 0; t < 3; ++t) {
            const auto i = rng.below(8);
            const auto j = rng.below(8);
            finite.push_back(seq->exponents[j] - seq->exponents[i]);
        }
        sampled.emplace_back("finite", KRule::finite(finite));
        sampled.emplace_back("tail-interval:1", compact_rule_from_phi(PhiGenerator::interval(1), seq));
        sampled.emplace_back(
            "tail-random:2+finite",
            compact_rule_from_phi(random_phi(horizon, 2, rng), seq) |
                KRule::finite({seq->exponents[5] - seq->exponents[2]}));
    }
    std::vector<ProbeRule> probes;
    for (const auto& [name, k] : sampled) {
        probes.push_back({"krule-" + name, [k = k, horizon](const Window& w) {
                              return translate_entourage(k, horizon, w, TranslateDirection::Forward);
                          }});
    }

    r.asymorphism = check_asymorphism(f, forward, canonical_scales(probes), c.ladder);
    MapFamily g = [f](std::size_t n) { return invert(f(n)); };
    r.probe = universal_property_probe(probes, g, c.ladder);

    r.documents.push_back({"thm2-sequence-head.txt", text::write_sequence(r.head)});
    r.documents.push_back({"thm2-sequence-a.txt", text::write_sequence(r.sequence)});
    for (std::size_t i = 0; i < sampled.size(); ++i)
        r.documents.push_back({"thm2-krule-" + std::to_string(i) + ".txt",
                               text::write_krule(sampled[i].second)});
    r.documents.push_back({"thm2-convergence.txt", join_lines(r.convergence)});
    r.documents.push_back({"thm2-asymorphism.txt", r.asymorphism.to_text()});
    r.documents.push_back({"thm2-universal-property.txt", r.probe.to_text()});
    return r;
}

std::vector<CirclePoint> default_limits(std::size_t m)
{
    std::vector<CirclePoint> out;
    for (std::size_t k = 1; k <= m; ++k)
        out.push_back(CirclePoint::rational(static_cast<std::int64_t>(k),
                                            static_cast<std::int64_t>(2 * k + 1)));
    return out;
}

bool Thm3Result::passed() const
{
    return independence.passed() && injectivity.passed() && phi_failures == 0 &&
           containment_failures == 0 && product_ok && product_families == 4 && bricks_ok &&
           asymorphism.verdict() == Verdict::ValidatedOnLadder;
}

namespace
{

Relation tensor_all(const std::vector<Relation>& rs)
{
    Relation out = rs.front();
    for (std::size_t i = 1; i < rs.size(); ++i)
        out = tensor(out, rs[i]);
    return out;
}

std::size_t power(std::size_t b, std::size_t e)
{
    std::size_t out = 1;
    while (e--)
        out *= b;
    return out;
}

} // namespace

Thm3Result run_thm3(const Thm3Config& c)
{
    if (c.m < 1)
        throw InputError("m must be at least 1");
    if (c.side < 2 || c.side % 2)
        throw InputError("grid side must be even and at least 2");
    Thm3Result r;
    r.limits = default_limits(c.m);
    r.independence = check_limit_independence(r.limits);
    if (!r.independence.passed())
        throw PreconditionError("the default limit points are not independent over G");

    const std::size_t length = std::max(c.injectivity_side, c.side);
    std::vector<SequenceRef> seqs;
    for (std::size_t k = 0; k < c.m; ++k) {
        SequenceSearch search{"a" + std::to_string(k + 1), kDefaultSearchBudget, {}};
        if (k > 0)
            search.admissible = distinct_sum_admissibility(seqs, length);
        seqs.push_back(std::make_shared<const SequenceSubspace>(find_convergent_sequence(
            r.limits[k], harmonic_schedule(c.ladder_offset, length), search)));
        r.documents.push_back({"thm3-sequence-a" + std::to_string(k + 1) + ".txt",
                               text::write_sequence(*seqs.back())});
    }

    const Grid big = Grid::cube(c.m, c.injectivity_side);
    r.injectivity = sum_injectivity_check(seqs, big);
    r.log.push_back("sum injectivity: " + std::to_string(big.size()) + " grid points, " +
                    std::to_string(r.injectivity.collisions.size()) + " collisions");
    if (r.injectivity.passed()) {
        const SumSpace s = build_sum_space(seqs, big);
        r.independence = check_limit_independence(r.limits, &s);
    }
    r.log.push_back("limit independence: " + std::to_string(r.independence.combinations) +
                    " combinations, " + std::to_string(r.independence.in_subgroup.size()) +
                    " in G, " + std::to_string(r.independence.hits.size()) + " label hits");

    std::map<std::size_t, SumSpace> spaces;
    for (std::size_t side : {c.side / 2, c.side})
        spaces.emplace(power(side, c.m), build_sum_space(seqs, Grid::cube(c.m, side)));
    const SumSpace& space = spaces.at(power(c.side, c.m));
    const std::size_t horizon = length;

    Rng rng(c.seed);
    std::vector<std::vector<Label>> ks;
    for (std::size_t i = 0; i < c.krules; ++i) {
        KRule k = KRule::finite({0});
        const std::size_t axis = i % c.m;
        switch (i % 3) {
        case 0: {
            std::vector<Label> xs{0};
            for (int t = 0; t < 3; ++t) {
                const auto p = static_cast<Index>(rng.below(space.window.size()));
                const auto q = static_cast<Index>(rng.below(space.window.size()));
                xs.push_back(space.window.label(q) - space.window.label(p));
            }
            k = KRule::finite(xs);
            break;
        }
        case 1:
            k = compact_rule_from_phi(random_phi(horizon, 1 + rng.below(3), rng), seqs[axis]) | k;
            break;
        default: {
            const auto p = static_cast<Index>(rng.below(space.window.size()));
            const auto q = static_cast<Index>(rng.below(space.window.size()));
            k = compact_rule_from_phi(PhiGenerator::interval(1), seqs.front()) |
                compact_rule_from_phi(PhiGenerator::interval(1), seqs.back()) |
                KRule::finite({0, space.window.label(q) - space.window.label(p)});
            break;
        }
        }
        r.documents.push_back({"thm3-krule-" + std::to_string(i) + ".txt", text::write_krule(k)});
        ks.push_back(k.elements(horizon));
    }

    for (std::size_t i = 0; i < ks.size(); ++i) {
        std::vector<PhiGenerator> phis;
        std::string line = "K" + std::to_string(i) + " |K|=" + std::to_string(ks[i].size());
        for (std::size_t a = 0; a < c.m; ++a) {
            phis.push_back(build_phi_k(ks[i], space, a));
            const auto v = validate_phi(phis.back(), Window(c.side));
            if (!v.valid())
                ++r.phi_failures;
            line += " phi" + std::to_string(a + 1) + "-max-column=" + std::to_string(v.max_column);
            r.documents.push_back({"thm3-phi-" + std::to_string(i) + "-" + std::to_string(a + 1) +
                                       ".txt",
                                   text::write_phi(phis.back())});
        }
        const auto v4 = check_translate_containment(ks[i], space, phis);
        r.containment_checked += v4.checked;
        r.containment_failures += v4.failures.size();
        line += " containment-checked=" + std::to_string(v4.checked) +
                " failures=" + std::to_string(v4.failures.size());
        r.log.push_back(line);
    }

    {
        const Window axis(c.side);
        const Thm1Result t = run_thm1(chain_relation(axis, 1));
        try {
            const AsdimCertificate p = product_certificate(t.certificate, t.certificate);
            r.product_ok = p.verified;
            r.product_families = p.families.size();
            r.documents.push_back({"thm3-product-certificate.txt", text::write_certificate(p)});
        } catch (const PreconditionError& e) {
            r.log.push_back(std::string("product certificate refused: ") + e.what());
        }
    }
    {
        const std::size_t L = 2 * (c.m + 1) + 1;
        try {
            const AsdimCertificate b = brick_certificate(c.m, 1, L, 3 * L);
            r.bricks_ok = b.verified;
            r.brick_families = b.families.size();
            r.documents.push_back({"thm3-brick-certificate.txt", text::write_certificate(b)});
        } catch (const PreconditionError& e) {
            r.log.push_back(std::string("brick certificate refused: ") + e.what());
        }
    }
    r.log.push_back("product families=" + std::to_string(r.product_families) +
                    " verified=" + (r.product_ok ? "yes" : "no"));
    r.log.push_back("brick families=" + std::to_string(r.brick_families) +
                    " verified=" + (r.bricks_ok ? "yes" : "no"));

    MapFamily f = [&spaces](std::size_t n) {
        const SumSpace& s = spaces.at(n);
        std::vector<Index> id(n);
        for (Index i = 0; i < n; ++i)
            id[i] = i;
        return WindowMap{s.window, Window(n), std::move(id)};
    };
    const std::size_t m = c.m;
    ScaleFactory forward = [&spaces, &ks, m](const WindowMap& wm) {
        const SumSpace& s = spaces.at(wm.source.size());
        std::vector<ScaleInstance> out;
        for (std::size_t i = 0; i < ks.size(); ++i) {
            std::vector<Relation> parts;
            for (std::size_t a = 0; a < m; ++a)
                parts.push_back(
                    materialize(build_phi_k(ks[i], s, a), Window(s.grid.sides[a])));
            out.push_back({"krule-" + std::to_string(i),
                           materialize(Translate{ks[i], TranslateDirection::Inverse}, wm.source),
                           tensor_all(parts)});
        }
        return out;
    };
    const std::uint64_t seed = c.seed;
    ScaleFactory backward = [&spaces, &seqs, m, seed, horizon](const WindowMap& wm) {
        const SumSpace& s = spaces.at(wm.target.size());
        const std::size_t side = s.grid.sides.front();
        const std::vector<std::vector<std::string>> specs{
            {"interval:1", "interval:1"}, {"interval:2", "random:2"}, {"random:1", "random:3"}};
        std::vector<ScaleInstance> out;
        for (std::size_t t = 0; t < specs.size(); ++t) {
            std::vector<Relation> parts;
            std::vector<Label> sum{0};
            std::string name;
            for (std::size_t a = 0; a < m; ++a) {
                const std::string& spec = specs[t][a % 2];
                const PhiGenerator phi =
                    phi_from_rule(spec, side, RuleContext{seed * 7919 + t * 31 + a, {}});
                name += (a ? "x" : "") + spec;
                parts.push_back(materialize(phi, Window(side)));
                const auto k = compact_rule_from_phi(phi, seqs[a]).elements(horizon);
                std::unordered_set<Label> next;
                for (Label x : sum) {
                    for (Label y : k)
                        next.insert(x + y);
                }
                sum.assign(next.begin(), next.end());
            }
            std::sort(sum.begin(), sum.end());
            out.push_back({name, tensor_all(parts),
                           materialize(Translate{sum, TranslateDirection::Inverse}, wm.target)});
        }
        return out;
    };
    r.asymorphism = check_asymorphism(
        f, forward, backward, {power(c.side / 2, c.m), power(c.side, c.m)});

    std::string conditions = join_lines(r.log);
    conditions += "asymorphism " + verdict_name(r.asymorphism.verdict()) + "\n";
    r.documents.push_back({"thm3-conditions.txt", conditions});
    r.documents.push_back({"thm3-asymorphism.txt", r.asymorphism.to_text()});
    return r;
}

} // namespace coarse
