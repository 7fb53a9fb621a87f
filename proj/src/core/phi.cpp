#include "coarse/phi.hpp"

#include <exception>
#include <string>

#include "coarse/errors.hpp"

namespace coarse
{

PhiGenerator PhiGenerator::table(std::vector<IndexSet> entries, std::string name)
{
    for (auto& e : entries)
        e = sets::normalized(std::move(e));
    PhiGenerator g;
    g.name_ = std::move(name);
    g.table_ = std::make_shared<const std::vector<IndexSet>>(std::move(entries));
    return g;
}

PhiGenerator PhiGenerator::rule(std::string spec, Rule rule, ColumnBound bound)
{
    if (!rule || !bound)
        throw InputError("rule-form generator needs both a rule and a column bound");
    PhiGenerator g;
    g.name_ = std::move(spec);
    g.rule_ = std::move(rule);
    g.bound_ = std::move(bound);
    return g;
}

PhiGenerator PhiGenerator::interval(std::size_t r)
{
    return rule(
        "interval:" + std::to_string(r),
        [r](Index n) {
            const Index lo = n >= r ? static_cast<Index>(n - r) : 0;
            return sets::range(lo, static_cast<Index>(n + r + 1));
        },
        [r](Index) -> std::optional<std::size_t> { return 2 * r + 1; });
}

IndexSet PhiGenerator::operator()(Index n) const
{
    if (!rule_) {
        if (n < table_->size())
            return (*table_)[n];
        return {n};
    }
    try {
        return sets::normalized(rule_(n));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& ex) {
        throw GeneratorError("generator '" + name_ + "' failed at n = " + std::to_string(n) +
                             ": " + ex.what());
    }
}

std::optional<std::size_t> PhiGenerator::column_bound(Index k) const
{
    if (rule_)
        return bound_(k);
    // A finite table has finite columns: at most one hit per entry plus the
    // identity extension beyond the table.
    return table_->size() + 1;
}

PhiGenerator PhiGenerator::tabulate(const Window& w) const
{
    std::vector<IndexSet> entries(w.size());
    for (Index n = 0; n < w.size(); ++n)
        entries[n] = (*this)(n);
    return table(std::move(entries), name_);
}

PhiReport validate_phi(const PhiGenerator& g, const Window& w)
{
    PhiReport report;
    std::vector<std::size_t> column(w.size(), 0);
    for (Index n = 0; n < w.size(); ++n) {
        const IndexSet image = g(n);
        if (!sets::contains(image, n))
            report.violations.push_back({PhiViolation::Kind::MissingSelf, n, 0, std::nullopt});
        for (Index k : image) {
            if (k < w.size())
                ++column[k];
        }
    }
    for (Index k = 0; k < w.size(); ++k) {
        report.max_column = std::max(report.max_column, column[k]);
        if (g.is_table())
            continue;
        const auto bound = g.column_bound(k);
        if (!bound) {
            if (column[k] > 0)
                report.violations.push_back(
                    {PhiViolation::Kind::UnboundedColumn, k, column[k], std::nullopt});
        } else if (column[k] > *bound) {
            report.violations.push_back(
                {PhiViolation::Kind::ColumnExceedsBound, k, column[k], bound});
        }
    }
    return report;
}

Relation materialize(const PhiGenerator& g, const Window& w, StoragePolicy policy)
{
    std::vector<IndexSet> rows(w.size());
    for (Index n = 0; n < w.size(); ++n) {
        for (Index k : g(n)) {
            if (k < w.size())
                rows[n].push_back(k);
        }
    }
    return Relation::from_rows(w, std::move(rows), policy);
}

std::string describe(const PhiViolation& v)
{
    const std::string p = std::to_string(v.point);
    switch (v.kind) {
    case PhiViolation::Kind::MissingSelf:
        return p + " is not in phi(" + p + ")";
    case PhiViolation::Kind::UnboundedColumn:
        return "column of " + p + " is not finitely bounded (declared bound: unbounded)";
    case PhiViolation::Kind::ColumnExceedsBound:
        return "column of " + p + " has " + std::to_string(v.observed) +
               " entries, above the declared bound " + std::to_string(*v.declared);
    }
    return {};
}

} // namespace coarse
