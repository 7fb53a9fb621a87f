#include "coarse/text_format.hpp"

#include <charconv>
#include <string>

#include "coarse/errors.hpp"

namespace coarse::text
{

std::vector<std::string_view> lines(std::string_view doc)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < doc.size()) {
        std::size_t end = doc.find('\n', pos);
        if (end == std::string_view::npos)
            end = doc.size();
        std::string_view line = doc.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        out.push_back(line);
        pos = end + 1;
    }
    return out;
}

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
            ++pos;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t')
            ++end;
        if (end > pos)
            out.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

bool is_comment(std::string_view line)
{
    auto t = tokens(line);
    return t.empty() || t.front().front() == '#';
}

std::uint64_t parse_uint(std::string_view s, std::string_view what)
{
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw InputError("expected a non-negative integer for " + std::string(what) + ", got '" +
                         std::string(s) + "'");
    return v;
}

std::int64_t parse_int(std::string_view s, std::string_view what)
{
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw InputError("expected an integer for " + std::string(what) + ", got '" +
                         std::string(s) + "'");
    return v;
}

namespace
{

std::size_t parse_header(const std::vector<std::string_view>& ls, std::string_view keyword)
{
    if (ls.empty())
        throw InputError("empty document, expected '" + std::string(keyword) + " N'");
    auto t = tokens(ls.front());
    if (t.size() != 2 || t[0] != keyword)
        throw InputError("first line must be '" + std::string(keyword) + " N', got '" +
                         std::string(ls.front()) + "'");
    const auto n = parse_uint(t[1], "window size");
    if (n == 0)
        throw InputError("window size must be at least 1");
    return n;
}

} // namespace

std::string write_index_set(const IndexSet& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(s[i]);
    }
    return out;
}

std::string write_relation(const Relation& r)
{
    std::string out = "relation " + std::to_string(r.size()) + "\n";
    out += kFormatTag;
    out += '\n';
    for (Index i = 0; i < r.size(); ++i) {
        for (Index j : r.row(i))
            out += std::to_string(i) + ' ' + std::to_string(j) + '\n';
    }
    return out;
}

Relation parse_relation(std::string_view doc)
{
    const auto ls = lines(doc);
    const std::size_t n = parse_header(ls, "relation");
    Window w(n);
    std::vector<Pair> pairs;
    for (std::size_t k = 1; k < ls.size(); ++k) {
        if (is_comment(ls[k]))
            continue;
        auto t = tokens(ls[k]);
        if (t.size() != 2)
            throw InputError("relation line " + std::to_string(k + 1) + ": expected 'i j'");
        const auto i = parse_uint(t[0], "pair index");
        const auto j = parse_uint(t[1], "pair index");
        if (i >= n || j >= n)
            throw InputError("relation line " + std::to_string(k + 1) + ": pair outside window");
        pairs.push_back({static_cast<Index>(i), static_cast<Index>(j)});
    }
    return Relation::from_pairs(w, std::move(pairs));
}

std::string write_phi(const PhiGenerator& g)
{
    if (!g.is_table())
        throw InputError("only table generators can be written as phi documents");
    std::string out = "phi " + std::to_string(g.domain()) + "\n";
    out += kFormatTag;
    out += '\n';
    for (Index n = 0; n < g.domain(); ++n) {
        out += std::to_string(n) + ':';
        for (Index k : g.entries()[n])
            out += ' ' + std::to_string(k);
        out += '\n';
    }
    return out;
}

PhiGenerator parse_phi(std::string_view doc)
{
    const auto ls = lines(doc);
    const std::size_t n = parse_header(ls, "phi");
    std::vector<IndexSet> entries(n);
    std::vector<bool> seen(n, false);
    for (std::size_t k = 1; k < ls.size(); ++k) {
        if (is_comment(ls[k]))
            continue;
        auto t = tokens(ls[k]);
        if (t.empty() || t[0].back() != ':')
            throw InputError("phi line " + std::to_string(k + 1) + ": expected 'n: k1 k2 ...'");
        const auto idx = parse_uint(t[0].substr(0, t[0].size() - 1), "phi argument");
        if (idx >= n)
            throw InputError("phi line " + std::to_string(k + 1) + ": argument outside table");
        if (seen[idx])
            throw InputError("phi line " + std::to_string(k + 1) + ": duplicate entry for " +
                             std::to_string(idx));
        seen[idx] = true;
        for (std::size_t j = 1; j < t.size(); ++j)
            entries[idx].push_back(static_cast<Index>(parse_uint(t[j], "phi value")));
    }
    // Entries not listed keep the identity extension.
    for (Index i = 0; i < n; ++i) {
        if (!seen[i])
            entries[i] = {i};
    }
    return PhiGenerator::table(std::move(entries));
}

} // namespace coarse::text
