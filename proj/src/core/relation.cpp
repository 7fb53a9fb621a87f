#include "coarse/relation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "coarse/errors.hpp"

namespace coarse
{

Window::Window(std::size_t size) : size_(size)
{
    if (size == 0)
        throw InputError("window size must be at least 1");
}

Window::Window(std::size_t size, std::vector<Label> labels) : Window(size)
{
    if (labels.size() != size)
        throw InputError("window label count " + std::to_string(labels.size()) +
                         " does not match size " + std::to_string(size));
    lookup_.reserve(size);
    for (Index i = 0; i < size; ++i) {
        if (!lookup_.emplace(labels[i], i).second)
            throw InputError("window labels are not injective: label " +
                             std::to_string(labels[i]) + " repeats");
    }
    labels_ = std::move(labels);
}

const std::vector<Label>& Window::labels() const
{
    if (!labels_)
        throw InputError("window is not labeled");
    return *labels_;
}

std::optional<Index> Window::find_label(Label l) const
{
    auto it = lookup_.find(l);
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

namespace
{

void require_same_window(const Relation& a, const Relation& b, const char* op)
{
    if (!(a.window() == b.window()))
        throw InputError(std::string(op) + ": window mismatch (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
}

void check_pair(const Window& w, Index i, Index j)
{
    if (!w.contains(i) || !w.contains(j))
        throw InputError("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") lies outside window of size " + std::to_string(w.size()));
}

} // namespace

Relation::Relation(Window w, Storage s) : window_(std::move(w)), storage_(s)
{
    if (storage_ == Storage::Dense) {
        words_ = kernels::words_for(window_.size());
        bits_.assign(window_.size() * words_, 0);
    } else {
        rows_.resize(window_.size());
    }
}

Relation Relation::from_rows(const Window& w, std::vector<IndexSet> rows, StoragePolicy policy)
{
    if (rows.size() != w.size())
        throw InputError("row count does not match window size");
    Relation r(w, policy.choose(w.size()));
    for (Index i = 0; i < rows.size(); ++i) {
        for (Index j : rows[i])
            check_pair(w, i, j);
    }
    if (r.storage_ == Storage::Dense) {
        for (Index i = 0; i < rows.size(); ++i) {
            for (Index j : rows[i])
                r.bits_[i * r.words_ + j / 64] |= kernels::Word{1} << (j % 64);
        }
    } else {
        for (auto& row : rows)
            row = sets::normalized(std::move(row));
        r.rows_ = std::move(rows);
    }
    return r;
}

Relation Relation::from_pairs(const Window& w, std::vector<Pair> pairs, StoragePolicy policy)
{
    std::vector<IndexSet> rows(w.size());
    for (const auto& p : pairs) {
        check_pair(w, p.first, p.second);
        rows[p.first].push_back(p.second);
    }
    return from_rows(w, std::move(rows), policy);
}

Relation Relation::empty(const Window& w, StoragePolicy policy)
{
    return Relation(w, policy.choose(w.size()));
}

Relation Relation::diagonal(const Window& w, StoragePolicy policy)
{
    std::vector<IndexSet> rows(w.size());
    for (Index i = 0; i < w.size(); ++i)
        rows[i] = {i};
    return from_rows(w, std::move(rows), policy);
}

Relation Relation::full(const Window& w, StoragePolicy policy)
{
    std::vector<IndexSet> rows(w.size(), sets::range(0, static_cast<Index>(w.size())));
    return from_rows(w, std::move(rows), policy);
}

bool Relation::contains(Index i, Index j) const
{
    if (!window_.contains(i) || !window_.contains(j))
        return false;
    if (storage_ == Storage::Dense)
        return (dense_row(i)[j / 64] >> (j % 64)) & 1u;
    return sets::contains(rows_[i], j);
}

IndexSet Relation::row(Index i) const
{
    if (storage_ == Storage::Sparse)
        return rows_[i];
    IndexSet out;
    const kernels::Word* r = dense_row(i);
    for (std::size_t w = 0; w < words_; ++w) {
        kernels::Word bits = r[w];
        while (bits) {
            out.push_back(static_cast<Index>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::size_t Relation::row_size(Index i) const
{
    if (storage_ == Storage::Sparse)
        return rows_[i].size();
    std::size_t c = 0;
    const kernels::Word* r = dense_row(i);
    for (std::size_t w = 0; w < words_; ++w)
        c += std::popcount(r[w]);
    return c;
}

std::size_t Relation::pair_count() const
{
    std::size_t c = 0;
    for (Index i = 0; i < size(); ++i)
        c += row_size(i);
    return c;
}

std::vector<Pair> Relation::pairs() const
{
    std::vector<Pair> out;
    for (Index i = 0; i < size(); ++i) {
        for (Index j : row(i))
            out.push_back({i, j});
    }
    return out;
}

std::optional<Index> Relation::first_non_reflexive() const
{
    for (Index i = 0; i < size(); ++i) {
        if (!contains(i, i))
            return i;
    }
    return std::nullopt;
}

std::optional<Pair> Relation::first_asymmetric() const
{
    for (Index i = 0; i < size(); ++i) {
        for (Index j : row(i)) {
            if (!contains(j, i))
                return Pair{i, j};
        }
    }
    return std::nullopt;
}

bool Relation::is_reflexive() const { return !first_non_reflexive(); }

bool Relation::is_symmetric() const { return !first_asymmetric(); }

Relation Relation::with_storage(Storage s) const
{
    if (s == storage_)
        return *this;
    std::vector<IndexSet> rows(size());
    for (Index i = 0; i < size(); ++i)
        rows[i] = row(i);
    return from_rows(window_, std::move(rows), StoragePolicy{.force = s});
}

Relation Relation::on_window(const Window& w) const
{
    std::vector<IndexSet> rows(w.size());
    const Index limit = static_cast<Index>(std::min(w.size(), size()));
    for (Index i = 0; i < limit; ++i) {
        for (Index j : row(i)) {
            if (j < w.size())
                rows[i].push_back(j);
        }
    }
    return from_rows(w, std::move(rows));
}

bool operator==(const Relation& a, const Relation& b)
{
    if (!(a.window_ == b.window_))
        return false;
    if (a.storage_ == Storage::Dense && b.storage_ == Storage::Dense)
        return a.bits_ == b.bits_;
    if (a.storage_ == Storage::Sparse && b.storage_ == Storage::Sparse)
        return a.rows_ == b.rows_;
    for (Index i = 0; i < a.size(); ++i) {
        if (a.row(i) != b.row(i))
            return false;
    }
    return true;
}

Relation compose(const Relation& e, const Relation& e2)
{
    require_same_window(e, e2, "compose");
    Relation out(e.window_, e.storage_);
    if (e.storage_ == Storage::Dense) {
        const Relation rhs = e2.with_storage(Storage::Dense);
        kernels::compose_dense(e.bits_, rhs.bits_, out.bits_, e.size(), e.words_);
    } else {
        const Relation rhs = e2.with_storage(Storage::Sparse);
        out.rows_ = kernels::compose_sparse(e.rows_, rhs.rows_, e.size());
    }
    return out;
}

Relation inverse(const Relation& e)
{
    Relation out(e.window_, e.storage_);
    if (e.storage_ == Storage::Dense) {
        kernels::transpose_dense(e.bits_, out.bits_, e.size(), e.words_);
    } else {
        for (Index i = 0; i < e.size(); ++i) {
            for (Index j : e.rows_[i])
                out.rows_[j].push_back(i);
        }
    }
    return out;
}

Relation unite(const Relation& e, const Relation& e2)
{
    require_same_window(e, e2, "union");
    Relation out(e.window_, e.storage_);
    if (e.storage_ == Storage::Dense) {
        const Relation rhs = e2.with_storage(Storage::Dense);
        for (std::size_t k = 0; k < out.bits_.size(); ++k)
            out.bits_[k] = e.bits_[k] | rhs.bits_[k];
    } else {
        const Relation rhs = e2.with_storage(Storage::Sparse);
        for (Index i = 0; i < e.size(); ++i)
            out.rows_[i] = sets::unite(e.rows_[i], rhs.rows_[i]);
    }
    return out;
}

IndexSet ball(const Relation& e, const IndexSet& a)
{
    IndexSet out;
    for (Index x : a) {
        if (!e.window().contains(x))
            throw InputError("ball center " + std::to_string(x) + " lies outside the window");
        auto r = e.row(x);
        out.insert(out.end(), r.begin(), r.end());
    }
    return sets::normalized(std::move(out));
}

bool is_subrelation(const Relation& e, const Relation& e2)
{
    require_same_window(e, e2, "subrelation");
    for (Index i = 0; i < e.size(); ++i) {
        if (!sets::subset(e.row(i), e2.row(i)))
            return false;
    }
    return true;
}

Relation reflexive_closure(const Relation& e)
{
    return unite(e, Relation::diagonal(e.window(), StoragePolicy{.force = e.storage()}));
}

Relation chain_relation(const Window& w, std::size_t r, StoragePolicy policy)
{
    std::vector<IndexSet> rows(w.size());
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= r ? i - r : 0;
        const std::size_t hi = std::min(n - 1, i + r);
        for (std::size_t j = lo; j <= hi; ++j)
            rows[i].push_back(static_cast<Index>(j));
    }
    return Relation::from_rows(w, std::move(rows), policy);
}

Relation tensor(const Relation& ex, const Relation& ey, StoragePolicy policy)
{
    const std::size_t nx = ex.size();
    const std::size_t ny = ey.size();
    Window w(nx * ny);
    std::vector<IndexSet> rows(nx * ny);
    std::vector<IndexSet> ry(ny);
    for (Index j = 0; j < ny; ++j)
        ry[j] = ey.row(j);
    for (Index i = 0; i < nx; ++i) {
        const IndexSet rx = ex.row(i);
        for (Index j = 0; j < ny; ++j) {
            auto& row = rows[i * ny + j];
            row.reserve(rx.size() * ry[j].size());
            for (Index i2 : rx) {
                for (Index j2 : ry[j])
                    row.push_back(static_cast<Index>(i2 * ny + j2));
            }
        }
    }
    return Relation::from_rows(w, std::move(rows), policy);
}

} // namespace coarse
