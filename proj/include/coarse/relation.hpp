#ifndef COARSE_RELATION_HPP
#define COARSE_RELATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "coarse/kernels.hpp"
#include "coarse/window.hpp"

namespace coarse
{

enum class Storage
{
    Dense,
    Sparse
};

constexpr std::size_t kDefaultDenseThreshold = 4096;

// Chooses the representation of a freshly built relation. Dense bit matrices
// are used up to `dense_threshold` points unless a storage is forced.
struct StoragePolicy
{
    std::size_t dense_threshold = kDefaultDenseThreshold;
    std::optional<Storage> force;

    Storage choose(std::size_t n) const
    {
        if (force)
            return *force;
        return n <= dense_threshold ? Storage::Dense : Storage::Sparse;
    }
};

// A finite entourage: a set of ordered pairs over a window. Immutable once
// built; dense and sparse storage compare equal when they hold the same pairs.
class Relation
{
  public:
    static Relation from_pairs(const Window& w, std::vector<Pair> pairs, StoragePolicy policy = {});
    // rows[i] is E[i]; rows need not be sorted.
    static Relation from_rows(const Window& w, std::vector<IndexSet> rows, StoragePolicy policy = {});
    static Relation empty(const Window& w, StoragePolicy policy = {});
    static Relation diagonal(const Window& w, StoragePolicy policy = {});
    static Relation full(const Window& w, StoragePolicy policy = {});

    const Window& window() const { return window_; }
    std::size_t size() const { return window_.size(); }
    Storage storage() const { return storage_; }

    bool contains(Index i, Index j) const;
    // E[i], sorted.
    IndexSet row(Index i) const;
    std::size_t row_size(Index i) const;
    std::size_t pair_count() const;
    // All pairs in lexicographic order.
    std::vector<Pair> pairs() const;

    bool is_reflexive() const;
    bool is_symmetric() const;
    // First (i, i) missing, if any.
    std::optional<Index> first_non_reflexive() const;
    // First (i, j) whose transpose is missing, if any.
    std::optional<Pair> first_asymmetric() const;

    Relation with_storage(Storage s) const;
    Relation on_window(const Window& w) const;

    friend bool operator==(const Relation& a, const Relation& b);

  private:
    Relation(Window w, Storage s);

    friend Relation compose(const Relation&, const Relation&);
    friend Relation inverse(const Relation&);
    friend Relation unite(const Relation&, const Relation&);

    const kernels::Word* dense_row(Index i) const { return bits_.data() + i * words_; }

    Window window_;
    Storage storage_;
    std::size_t words_ = 0;
    std::vector<kernels::Word> bits_;
    std::vector<IndexSet> rows_;
};

// E o E2 = {(x, y) : exists z, (x, z) in E and (z, y) in E2}. The result keeps
// the storage of E. Throws InputError on window mismatch.
Relation compose(const Relation& e, const Relation& e2);
Relation inverse(const Relation& e);
Relation unite(const Relation& e, const Relation& e2);

// E[A] = union of E[a] over a in A.
IndexSet ball(const Relation& e, const IndexSet& a);
inline IndexSet ball(const Relation& e, Index x) { return e.row(x); }

bool is_subrelation(const Relation& e, const Relation& e2);

Relation reflexive_closure(const Relation& e);

// {(i, j) : |i - j| <= r}: the chain relation of radius r with the diagonal.
Relation chain_relation(const Window& w, std::size_t r, StoragePolicy policy = {});

// Componentwise product on the row-major product window Nx * Ny:
// ((i, j), (i', j')) is a pair iff (i, i') in ex and (j, j') in ey.
Relation tensor(const Relation& ex, const Relation& ey, StoragePolicy policy = {});

} // namespace coarse

#endif
