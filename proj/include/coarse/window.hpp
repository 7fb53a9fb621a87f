#ifndef COARSE_WINDOW_HPP
#define COARSE_WINDOW_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace coarse
{

using Index = std::uint32_t;

// Sorted, duplicate-free list of window indices.
using IndexSet = std::vector<Index>;

// Integer tag attached to a window point. For the circle model the tag is the
// exponent n of the group element n * (sqrt2 - 1); for the integer model it is
// the integer itself.
using Label = std::int64_t;

struct Pair
{
    Index first;
    Index second;

    friend auto operator<=>(const Pair&, const Pair&) = default;
};

// Finite ground set {0, ..., N-1}, optionally labeled injectively by group
// elements.
class Window
{
  public:
    explicit Window(std::size_t size);
    Window(std::size_t size, std::vector<Label> labels);

    std::size_t size() const { return size_; }
    bool labeled() const { return labels_.has_value(); }
    const std::vector<Label>& labels() const;
    Label label(Index i) const { return labels()[i]; }

    // Index carrying the label, if any.
    std::optional<Index> find_label(Label l) const;

    bool contains(Index i) const { return i < size_; }

    friend bool operator==(const Window& a, const Window& b)
    {
        return a.size_ == b.size_ && a.labels_ == b.labels_;
    }

  private:
    std::size_t size_;
    std::optional<std::vector<Label>> labels_;
    std::unordered_map<Label, Index> lookup_;
};

namespace sets
{

inline IndexSet normalized(IndexSet s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool contains(const IndexSet& s, Index i)
{
    return std::binary_search(s.begin(), s.end(), i);
}

inline bool subset(const IndexSet& a, const IndexSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline IndexSet unite(const IndexSet& a, const IndexSet& b)
{
    IndexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IndexSet minus(const IndexSet& a, const IndexSet& b)
{
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IndexSet intersect(const IndexSet& a, const IndexSet& b)
{
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IndexSet range(Index lo, Index hi)
{
    IndexSet out;
    for (Index i = lo; i < hi; ++i)
        out.push_back(i);
    return out;
}

} // namespace sets

} // namespace coarse

#endif
