#include "coarse/certify.hpp"

#include <sstream>

#include "coarse/errors.hpp"

namespace coarse
{

Relation materialize(const Scale& s, const Window& w)
{
    if (const auto* r = std::get_if<Relation>(&s)) {
        if (!(r->window() == w))
            return r->on_window(w);
        return *r;
    }
    return materialize(std::get<PhiGenerator>(s), w);
}

DisjointnessResult is_disjoint_family(const BlockFamily& f, const Relation& e)
{
    const std::size_t n = e.size();
    std::vector<std::vector<std::size_t>> owners(n);
    for (std::size_t b = 0; b < f.blocks.size(); ++b) {
        for (Index x : f.blocks[b]) {
            if (x >= n)
                throw InputError("block point " + std::to_string(x) + " lies outside the window");
            owners[x].push_back(b);
        }
    }
    for (std::size_t a = 0; a < f.blocks.size(); ++a) {
        for (Index y : ball(e, f.blocks[a])) {
            for (std::size_t b : owners[y]) {
                if (b != a)
                    return {false, a, b, y};
            }
        }
    }
    return {};
}

BoundednessResult is_bounded_family(const BlockFamily& f, const Relation& h)
{
    BoundednessResult out;
    if (f.blocks.empty())
        return out;
    const Relation hinv = inverse(h);
    for (std::size_t b = 0; b < f.blocks.size(); ++b) {
        const IndexSet& block = f.blocks[b];
        std::optional<Index> center;
        if (!block.empty()) {
            for (Index x : hinv.row(block.front())) {
                bool ok = true;
                for (Index a : block) {
                    if (!h.contains(x, a)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    center = x;
                    break;
                }
            }
        } else {
            center = 0;
        }
        if (!center) {
            out.bounded = false;
            out.centers.clear();
            out.offending_block = b;
            return out;
        }
        out.centers.push_back(*center);
    }
    return out;
}

std::string clause_name(CertificateFailure::Clause c)
{
    switch (c) {
    case CertificateFailure::Clause::Malformed:
        return "malformed";
    case CertificateFailure::Clause::Coverage:
        return "coverage";
    case CertificateFailure::Clause::Disjointness:
        return "disjointness";
    case CertificateFailure::Clause::Boundedness:
        return "boundedness";
    }
    return {};
}

std::string VerdictReport::to_text() const
{
    std::ostringstream os;
    os << "verdict " << (passed() ? "pass" : "fail") << '\n';
    for (const auto& f : failures) {
        os << "failed " << clause_name(f.clause);
        if (f.family)
            os << " family " << *f.family;
        os << ": " << f.message;
        if (!f.witness.empty()) {
            os << " [witness";
            for (Index x : f.witness)
                os << ' ' << x;
            os << ']';
        }
        os << '\n';
    }
    return os.str();
}

VerdictReport verify_certificate(const AsdimCertificate& c)
{
    using Clause = CertificateFailure::Clause;
    VerdictReport report;
    const std::size_t n = c.window.size();

    if (c.E.size() != n) {
        report.failures.push_back({Clause::Malformed, "E is defined on a window of size " +
                                                          std::to_string(c.E.size()),
                                   std::nullopt, {}});
        return report;
    }
    if (c.families.empty()) {
        report.failures.push_back({Clause::Malformed, "certificate has no families", std::nullopt, {}});
        return report;
    }
    for (std::size_t i = 0; i < c.families.size(); ++i) {
        for (const auto& block : c.families[i].blocks) {
            if (block.empty()) {
                report.failures.push_back({Clause::Malformed, "empty block", i, {}});
                return report;
            }
            for (Index x : block) {
                if (x >= n) {
                    report.failures.push_back(
                        {Clause::Malformed, "block point outside the window", i, {x}});
                    return report;
                }
            }
        }
    }

    std::vector<bool> covered(n, false);
    for (const auto& fam : c.families) {
        for (const auto& block : fam.blocks) {
            for (Index x : block)
                covered[x] = true;
        }
    }
    std::vector<Index> missing;
    for (Index x = 0; x < n; ++x) {
        if (!covered[x])
            missing.push_back(x);
    }
    if (!missing.empty())
        report.failures.push_back({Clause::Coverage,
                                   std::to_string(missing.size()) + " point(s) not covered",
                                   std::nullopt, missing});

    for (std::size_t i = 0; i < c.families.size(); ++i) {
        const auto d = is_disjoint_family(c.families[i], c.E);
        if (!d.disjoint) {
            report.failures.push_back(
                {Clause::Disjointness,
                 "E[block " + std::to_string(d.block_a) + "] meets block " +
                     std::to_string(d.block_b) + " at " + std::to_string(d.point),
                 i, {d.point}});
        }
    }

    const Relation h = materialize(c.H, c.window);
    BlockFamily all;
    for (const auto& fam : c.families)
        all.blocks.insert(all.blocks.end(), fam.blocks.begin(), fam.blocks.end());
    const auto b = is_bounded_family(all, h);
    if (!b.bounded) {
        report.failures.push_back({Clause::Boundedness,
                                   "block " + std::to_string(b.offending_block) +
                                       " (in covering order) lies in no H-ball",
                                   std::nullopt, all.blocks[b.offending_block]});
    }
    return report;
}

AsdimCertificate seal(AsdimCertificate c)
{
    const auto report = verify_certificate(c);
    if (!report.passed())
        throw PreconditionError("certificate does not verify:\n" + report.to_text());
    c.verified = true;
    return c;
}

} // namespace coarse
