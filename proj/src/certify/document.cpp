#include "coarse/certificate_document.hpp"

#include "coarse/errors.hpp"
#include "coarse/text_format.hpp"

namespace coarse::text
{

namespace
{

void write_pairs(std::string& out, const Relation& r)
{
    out += "pairs " + std::to_string(r.pair_count()) + '\n';
    for (Index i = 0; i < r.size(); ++i) {
        for (Index j : r.row(i))
            out += std::to_string(i) + ' ' + std::to_string(j) + '\n';
    }
}

// Cursor over the non-comment lines of a document.
class Reader
{
  public:
    explicit Reader(std::string_view doc)
    {
        for (auto l : lines(doc)) {
            ++number_;
            if (!is_comment(l))
                lines_.push_back({l, number_});
        }
    }

    bool done() const { return pos_ >= lines_.size(); }

    std::vector<std::string_view> next(std::string_view what)
    {
        if (done())
            throw InputError("certificate ended early, expected " + std::string(what));
        line_ = lines_[pos_].number;
        return tokens(lines_[pos_++].text);
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw InputError("certificate line " + std::to_string(line_) + ": " + msg);
    }

  private:
    struct Line
    {
        std::string_view text;
        std::size_t number;
    };
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
    std::size_t number_ = 0;
    std::size_t line_ = 0;
};

Relation read_pairs(Reader& r, const Window& w, std::size_t count)
{
    std::vector<Pair> pairs;
    pairs.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        auto t = r.next("pair line");
        if (t.size() != 2)
            r.fail("expected 'i j'");
        const auto i = parse_uint(t[0], "pair index");
        const auto j = parse_uint(t[1], "pair index");
        if (i >= w.size() || j >= w.size())
            r.fail("pair outside the window");
        pairs.push_back({static_cast<Index>(i), static_cast<Index>(j)});
    }
    return Relation::from_pairs(w, std::move(pairs));
}

} // namespace

std::string write_certificate(const AsdimCertificate& c)
{
    std::string out = "certificate " + std::to_string(c.window.size()) + '\n';
    out += kFormatTag;
    out += '\n';
    out += "E ";
    write_pairs(out, c.E);
    out += "H ";
    if (const auto* h = std::get_if<Relation>(&c.H)) {
        write_pairs(out, *h);
    } else {
        const auto& g = std::get<PhiGenerator>(c.H);
        if (g.is_table()) {
            out += "phi " + std::to_string(g.domain()) + '\n';
            for (Index n = 0; n < g.domain(); ++n) {
                out += std::to_string(n) + ':';
                for (Index k : g.entries()[n])
                    out += ' ' + std::to_string(k);
                out += '\n';
            }
        } else if (g.name().starts_with("interval:")) {
            out += "rule " + g.name() + '\n';
        } else {
            throw InputError("generator '" + g.name() + "' has no document form");
        }
    }
    out += "families " + std::to_string(c.families.size()) + '\n';
    for (std::size_t i = 0; i < c.families.size(); ++i) {
        out += "family " + std::to_string(i) + ' ' +
               std::to_string(c.families[i].blocks.size()) + '\n';
        for (const auto& b : c.families[i].blocks)
            out += write_index_set(b) + '\n';
    }
    return out;
}

AsdimCertificate parse_certificate(std::string_view doc)
{
    Reader r(doc);
    auto t = r.next("header");
    if (t.size() != 2 || t[0] != "certificate")
        r.fail("expected 'certificate N'");
    const auto n = parse_uint(t[1], "window size");
    if (n == 0)
        r.fail("window size must be at least 1");
    const Window w(n);

    t = r.next("E section");
    if (t.size() != 3 || t[0] != "E" || t[1] != "pairs")
        r.fail("expected 'E pairs P'");
    Relation e = read_pairs(r, w, parse_uint(t[2], "pair count"));

    t = r.next("H section");
    if (t.size() != 3 || t[0] != "H")
        r.fail("expected 'H pairs P', 'H phi D' or 'H rule <spec>'");
    Scale h = Relation::empty(w);
    if (t[1] == "pairs") {
        h = read_pairs(r, w, parse_uint(t[2], "pair count"));
    } else if (t[1] == "phi") {
        const auto d = parse_uint(t[2], "table size");
        std::vector<IndexSet> entries(d);
        for (std::size_t k = 0; k < d; ++k) {
            auto row = r.next("phi line");
            if (row.empty() || row[0] != std::to_string(k) + ":")
                r.fail("expected '" + std::to_string(k) + ": ...'");
            for (std::size_t j = 1; j < row.size(); ++j)
                entries[k].push_back(static_cast<Index>(parse_uint(row[j], "phi value")));
        }
        h = PhiGenerator::table(std::move(entries));
    } else if (t[1] == "rule") {
        const std::string_view spec = t[2];
        if (!spec.starts_with("interval:"))
            r.fail("unknown rule '" + std::string(spec) + "'");
        h = PhiGenerator::interval(parse_uint(spec.substr(9), "interval radius"));
    } else {
        r.fail("unknown H form '" + std::string(t[1]) + "'");
    }

    t = r.next("families section");
    if (t.size() != 2 || t[0] != "families")
        r.fail("expected 'families F'");
    const auto count = parse_uint(t[1], "family count");
    std::vector<BlockFamily> families(count);
    for (std::size_t i = 0; i < count; ++i) {
        t = r.next("family header");
        if (t.size() != 3 || t[0] != "family" || parse_uint(t[1], "family index") != i)
            r.fail("expected 'family " + std::to_string(i) + " B'");
        const auto blocks = parse_uint(t[2], "block count");
        for (std::size_t b = 0; b < blocks; ++b) {
            auto row = r.next("block line");
            IndexSet block;
            for (auto tok : row)
                block.push_back(static_cast<Index>(parse_uint(tok, "block point")));
            families[i].blocks.push_back(sets::normalized(std::move(block)));
        }
    }
    if (!r.done())
        r.next("end of document"), r.fail("trailing content after the last family");
    return AsdimCertificate{w, std::move(e), std::move(h), std::move(families)};
}

} // namespace coarse::text
