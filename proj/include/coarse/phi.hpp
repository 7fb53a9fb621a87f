#ifndef COARSE_PHI_HPP
#define COARSE_PHI_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coarse/relation.hpp"
#include "coarse/window.hpp"

namespace coarse
{

// A rule n -> phi(n), a finite subset of omega. The induced entourage
// {(n, k) : k in phi(n)} is one member of the structure F on omega when
// n in phi(n) and every column {m : k in phi(m)} is finite.
//
// Table form lists phi(n) for n < domain(); beyond the table phi(n) = {n}.
// Rule form wraps a callable and must declare a column bound k -> bound(k),
// with std::nullopt standing for "unbounded".
class PhiGenerator
{
  public:
    using Rule = std::function<IndexSet(Index)>;
    using ColumnBound = std::function<std::optional<std::size_t>(Index)>;

    static PhiGenerator table(std::vector<IndexSet> entries, std::string name = "table");
    // `spec` is the serializable rule name (e.g. "interval:3"); empty if the
    // rule cannot be written to a document.
    static PhiGenerator rule(std::string spec, Rule rule, ColumnBound bound);
    // n -> [max(0, n - r), n + r].
    static PhiGenerator interval(std::size_t r);

    bool is_table() const { return !rule_; }
    const std::string& name() const { return name_; }

    // phi(n), sorted. Throws GeneratorError if the rule fails.
    IndexSet operator()(Index n) const;

    std::optional<std::size_t> column_bound(Index k) const;

    // Table form only.
    std::size_t domain() const { return table_->size(); }
    const std::vector<IndexSet>& entries() const { return *table_; }

    // Explicit table of phi(n) for n < w.size(), for either form.
    PhiGenerator tabulate(const Window& w) const;

  private:
    PhiGenerator() = default;

    std::string name_;
    std::shared_ptr<const std::vector<IndexSet>> table_;
    Rule rule_;
    ColumnBound bound_;
};

struct PhiViolation
{
    enum class Kind
    {
        MissingSelf,        // n not in phi(n)
        UnboundedColumn,    // declared bound is "unbounded"
        ColumnExceedsBound, // observed column larger than the declared bound
    };
    Kind kind;
    Index point;
    std::size_t observed = 0;
    std::optional<std::size_t> declared;
};

struct PhiReport
{
    std::vector<PhiViolation> violations;
    // Largest column {m in window : k in phi(m)} over k in the window.
    std::size_t max_column = 0;

    bool valid() const { return violations.empty(); }
};

PhiReport validate_phi(const PhiGenerator& g, const Window& w);

// {(n, k) : k in phi(n)} restricted to w x w.
Relation materialize(const PhiGenerator& g, const Window& w, StoragePolicy policy = {});

std::string describe(const PhiViolation& v);

} // namespace coarse

#endif
