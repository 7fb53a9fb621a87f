#ifndef COARSE_EXPR_HPP
#define COARSE_EXPR_HPP

#include <memory>
#include <vector>

#include "coarse/phi.hpp"
#include "coarse/relation.hpp"

namespace coarse
{

enum class TranslateDirection
{
    // {(x, y) : label(x) in A + label(y)}
    Forward,
    // {(x, y) : label(y) in A + label(x)}
    Inverse,
};

// Base entourage of a group ideal member A, in additive notation over the
// integer labels of a window, always united with the diagonal.
struct Translate
{
    std::vector<Label> offsets;
    TranslateDirection direction = TranslateDirection::Forward;
};

Relation materialize(const Translate& t, const Window& w, StoragePolicy policy = {});

// Finite expression tree over entourage leaves, evaluated on a window.
class EntourageExpr
{
  public:
    static EntourageExpr leaf(Relation r);
    static EntourageExpr leaf(PhiGenerator g);
    static EntourageExpr leaf(Translate t);
    static EntourageExpr diagonal();

    static EntourageExpr compose(EntourageExpr a, EntourageExpr b);
    static EntourageExpr inverse(EntourageExpr a);
    static EntourageExpr unite(EntourageExpr a, EntourageExpr b);

    struct Node;

  private:
    explicit EntourageExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;

    friend Relation materialize(const EntourageExpr&, const Window&, StoragePolicy);
};

// Bottom-up evaluation. Relation leaves are truncated to the window; phi
// leaves contribute {(n, k) : k in phi(n)} inside w x w.
Relation materialize(const EntourageExpr& expr, const Window& w, StoragePolicy policy = {});

} // namespace coarse

#endif
