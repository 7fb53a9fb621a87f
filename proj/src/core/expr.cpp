#include "coarse/expr.hpp"

#include <unordered_set>
#include <variant>

#include "coarse/errors.hpp"

namespace coarse
{

namespace expr_detail
{

struct DiagonalLeaf
{
};

struct ComposeNode
{
    EntourageExpr a, b;
};

struct InverseNode
{
    EntourageExpr a;
};

struct UnionNode
{
    EntourageExpr a, b;
};

} // namespace expr_detail

using namespace expr_detail;

struct EntourageExpr::Node
{
    std::variant<Relation, PhiGenerator, Translate, DiagonalLeaf, ComposeNode, InverseNode,
                 UnionNode>
        value;
};

EntourageExpr EntourageExpr::leaf(Relation r)
{
    return EntourageExpr(std::make_shared<const Node>(Node{std::move(r)}));
}

EntourageExpr EntourageExpr::leaf(PhiGenerator g)
{
    return EntourageExpr(std::make_shared<const Node>(Node{std::move(g)}));
}

EntourageExpr EntourageExpr::leaf(Translate t)
{
    return EntourageExpr(std::make_shared<const Node>(Node{std::move(t)}));
}

EntourageExpr EntourageExpr::diagonal()
{
    return EntourageExpr(std::make_shared<const Node>(Node{DiagonalLeaf{}}));
}

EntourageExpr EntourageExpr::compose(EntourageExpr a, EntourageExpr b)
{
    return EntourageExpr(std::make_shared<const Node>(Node{ComposeNode{std::move(a), std::move(b)}}));
}

EntourageExpr EntourageExpr::inverse(EntourageExpr a)
{
    return EntourageExpr(std::make_shared<const Node>(Node{InverseNode{std::move(a)}}));
}

EntourageExpr EntourageExpr::unite(EntourageExpr a, EntourageExpr b)
{
    return EntourageExpr(std::make_shared<const Node>(Node{UnionNode{std::move(a), std::move(b)}}));
}

Relation materialize(const Translate& t, const Window& w, StoragePolicy policy)
{
    if (!w.labeled())
        throw InputError("translate entourage needs a labeled window");
    const auto& labels = w.labels();
    std::vector<IndexSet> rows(w.size());
    const auto n = static_cast<std::ptrdiff_t>(w.size());
    const bool forward = t.direction == TranslateDirection::Forward;
    // label(x) - label(y) in A (forward) or label(y) - label(x) in A (inverse):
    // the partner of x carries label(x) -/+ a.
    if (t.offsets.size() <= w.size()) {
#pragma omp parallel for schedule(dynamic, 64)
        for (std::ptrdiff_t x = 0; x < n; ++x) {
            auto& row = rows[x];
            row.push_back(static_cast<Index>(x));
            for (Label a : t.offsets) {
                const Label target = forward ? labels[x] - a : labels[x] + a;
                if (auto y = w.find_label(target))
                    row.push_back(*y);
            }
        }
    } else {
        const std::unordered_set<Label> offsets(t.offsets.begin(), t.offsets.end());
#pragma omp parallel for schedule(dynamic, 64)
        for (std::ptrdiff_t x = 0; x < n; ++x) {
            auto& row = rows[x];
            row.push_back(static_cast<Index>(x));
            for (std::ptrdiff_t y = 0; y < n; ++y) {
                const Label d = forward ? labels[x] - labels[y] : labels[y] - labels[x];
                if (offsets.contains(d))
                    row.push_back(static_cast<Index>(y));
            }
        }
    }
    return Relation::from_rows(w, std::move(rows), policy);
}

Relation materialize(const EntourageExpr& expr, const Window& w, StoragePolicy policy)
{
    return std::visit(
        [&](const auto& v) -> Relation {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Relation>) {
                return v.on_window(w).with_storage(policy.choose(w.size()));
            } else if constexpr (std::is_same_v<T, PhiGenerator>) {
                return materialize(v, w, policy);
            } else if constexpr (std::is_same_v<T, Translate>) {
                return materialize(v, w, policy);
            } else if constexpr (std::is_same_v<T, DiagonalLeaf>) {
                return Relation::diagonal(w, policy);
            } else if constexpr (std::is_same_v<T, ComposeNode>) {
                return compose(materialize(v.a, w, policy), materialize(v.b, w, policy));
            } else if constexpr (std::is_same_v<T, InverseNode>) {
                return inverse(materialize(v.a, w, policy));
            } else {
                return unite(materialize(v.a, w, policy), materialize(v.b, w, policy));
            }
        },
        expr.node_->value);
}

} // namespace coarse
