#include "coarse/shellpart.hpp"

#include <string>

#include "coarse/errors.hpp"

namespace coarse
{

Relation augment(const Relation& e)
{
    const Window& w = e.window();
    Relation chain = chain_relation(w, 1, StoragePolicy{.force = e.storage()});
    return unite(unite(e, inverse(e)), chain);
}

ShellDecomposition shell_partition(const Relation& f, Index base)
{
    const Window& w = f.window();
    const std::size_t n = w.size();
    if (base >= n)
        throw PreconditionError("base point " + std::to_string(base) + " lies outside the window");
    if (auto i = f.first_non_reflexive())
        throw PreconditionError("F is not reflexive: missing (" + std::to_string(*i) + ", " +
                                std::to_string(*i) + ")");
    if (auto p = f.first_asymmetric())
        throw PreconditionError("F is not symmetric: (" + std::to_string(p->first) + ", " +
                                std::to_string(p->second) + ") has no transpose");
    for (Index i = 0; i + 1 < n; ++i) {
        if (!f.contains(i, i + 1))
            throw PreconditionError("F misses the chain pair (" + std::to_string(i) + ", " +
                                    std::to_string(i + 1) + "); augment F first");
    }

    ShellDecomposition d{w, f, {}};
    std::vector<bool> seen(n, false);
    std::size_t covered = 0;
    IndexSet current = f.row(base);
    while (!current.empty()) {
        for (Index x : current)
            seen[x] = true;
        covered += current.size();
        d.shells.push_back(current);
        if (covered == n)
            break;
        IndexSet next;
        for (Index x : ball(f, current)) {
            if (!seen[x])
                next.push_back(x);
        }
        current = std::move(next);
    }
    return d;
}

PhiGenerator shells_to_phi(const ShellDecomposition& d)
{
    std::vector<IndexSet> entries(d.window.size());
    for (Index n = 0; n < entries.size(); ++n) {
        if (n < d.shells.size())
            entries[n] = sets::unite(d.shells[n], {n});
        else
            entries[n] = {n};
    }
    return PhiGenerator::table(std::move(entries), "shells");
}

AsdimCertificate parity_certificate(const ShellDecomposition& d)
{
    std::vector<BlockFamily> families(d.shells.size() > 1 ? 2 : 1);
    for (std::size_t k = 0; k < d.shells.size(); ++k)
        families[k % 2].blocks.push_back(d.shells[k]);
    return seal(AsdimCertificate{d.window, d.F, shells_to_phi(d), std::move(families)});
}

AsdimCertificate product_certificate(const AsdimCertificate& cx, const AsdimCertificate& cy)
{
    if (!cx.verified || !cy.verified)
        throw PreconditionError("product_certificate needs verified certificates");
    const std::size_t ny = cy.window.size();
    const Relation hx = materialize(cx.H, cx.window);
    const Relation hy = materialize(cy.H, cy.window);
    const Relation e = tensor(cx.E, cy.E);
    const Relation h = tensor(hx, hy);

    std::vector<BlockFamily> families(cx.families.size() * cy.families.size());
    for (std::size_t i = 0; i < cx.families.size(); ++i) {
        for (std::size_t j = 0; j < cy.families.size(); ++j) {
            auto& fam = families[i * cy.families.size() + j];
            for (const auto& a : cx.families[i].blocks) {
                for (const auto& b : cy.families[j].blocks) {
                    IndexSet block;
                    block.reserve(a.size() * b.size());
                    for (Index x : a) {
                        for (Index y : b)
                            block.push_back(static_cast<Index>(x * ny + y));
                    }
                    fam.blocks.push_back(std::move(block));
                }
            }
        }
    }
    return seal(AsdimCertificate{e.window(), e, h, std::move(families)});
}

} // namespace coarse
