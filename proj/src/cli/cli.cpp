#include "coarse/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "coarse/certificate_document.hpp"
#include "coarse/errors.hpp"
#include "coarse/maps.hpp"
#include "coarse/oracle.hpp"
#include "coarse/pipeline.hpp"
#include "coarse/rules.hpp"
#include "coarse/shellpart.hpp"
#include "coarse/text_format.hpp"

namespace coarse::cli
{

namespace
{

std::string out_dir(const std::string& flag)
{
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv(kOutDirEnv); env && *env)
        return env;
    return ".";
}

void emit(const std::string& dir, const Document& d)
{
    std::filesystem::create_directories(dir);
    write_file((std::filesystem::path(dir) / d.name).string(), d.content);
}

std::vector<std::size_t> parse_ladder(const std::string& s)
{
    std::vector<std::size_t> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(text::parse_uint(item, "ladder size"));
    if (out.empty())
        throw InputError("empty ladder");
    return out;
}

// "halving:<p>/<q>:<steps>"
void parse_schedule(const std::string& s, Thm2Config& c)
{
    const auto parts = text::tokens([&] {
        std::string t = s;
        std::replace(t.begin(), t.end(), ':', ' ');
        return t;
    }());
    if (parts.size() != 3 || parts[0] != "halving")
        throw InputError("schedule must look like halving:1/10:15");
    const QuadNumber start = parse_rational(parts[1]);
    c.head_num = static_cast<std::int64_t>(start.a());
    c.head_den = static_cast<std::int64_t>(start.den());
    c.head_steps = text::parse_uint(parts[2], "schedule steps");
}

struct Options
{
    std::size_t n = 10;
    std::string rule = "chain:1";
    std::string e_rule = "chain:1";
    std::string h_rule = "interval:1";
    std::string witness = "interval:1";
    std::string map = "identity";
    std::string file;
    std::string out;
    std::string h = "1/3";
    std::string schedule = "halving:1/10:15";
    std::string ladder;
    std::vector<std::string> sequences;
    std::uint64_t seed = 1;
    std::size_t cap = kDefaultBruteForceCap;
    std::size_t m = 2;
    std::size_t grid = 16;
    std::size_t injectivity_grid = 64;
    std::size_t krules = 10;
    std::size_t count = 1000;
    std::size_t phi_rules = 5;
};

RuleContext context(const Options& o)
{
    RuleContext ctx{o.seed, {}};
    for (const auto& path : o.sequences)
        ctx.sequences.push_back(
            std::make_shared<const SequenceSubspace>(text::parse_sequence(read_file(path))));
    return ctx;
}

Window rule_window(const Options& o, const RuleContext& ctx)
{
    for (const auto& s : ctx.sequences) {
        if (o.e_rule.starts_with("krule:") || o.rule.starts_with("krule:"))
            return s->window(std::min(o.n, s->size()));
    }
    return Window(o.n);
}

int cmd_materialize(const Options& o, std::ostream& out)
{
    const RuleContext ctx = context(o);
    const Relation r = materialize_rule(o.rule, rule_window(o, ctx), ctx);
    const std::string doc = text::write_relation(r);
    if (o.out.empty())
        out << doc;
    else
        write_file(o.out, doc);
    return kExitOk;
}

int cmd_shells(const Options& o, std::ostream& out)
{
    const RuleContext ctx = context(o);
    const ShellDecomposition d = shell_partition(augment(materialize_rule(o.rule, Window(o.n), ctx)));
    for (std::size_t i = 0; i < d.shells.size(); ++i)
        out << "P" << i << ": " << text::write_index_set(d.shells[i]) << '\n';
    if (!o.out.empty())
        write_file(o.out, text::write_phi(shells_to_phi(d)));
    return kExitOk;
}

int cmd_certify(const Options& o, std::ostream& out)
{
    const AsdimCertificate c = text::parse_certificate(read_file(o.file));
    const VerdictReport r = verify_certificate(c);
    out << r.to_text();
    return r.passed() ? kExitOk : kExitRefuted;
}

int cmd_brute(const Options& o, std::ostream& out)
{
    const RuleContext ctx = context(o);
    const Window w(o.n);
    const auto r = brute_min_families(materialize_rule(o.e_rule, w, ctx),
                                      materialize_rule(o.h_rule, w, ctx), o.cap);
    out << (r.min_n ? std::to_string(*r.min_n) : "none") << '\n';
    if (!o.out.empty() && r.witness)
        write_file(o.out, text::write_certificate(*r.witness));
    return kExitOk;
}

int cmd_thm1(const Options& o, std::ostream& out)
{
    const RuleContext ctx = context(o);
    const Thm1Result r = run_thm1(materialize_rule(o.rule, Window(o.n), ctx));
    emit(out_dir(o.out), {"thm1-certificate.txt", text::write_certificate(r.certificate)});
    out << "shells " << r.shells << "\nfamilies " << r.certificate.families.size() << '\n'
        << r.report.to_text();
    return r.passed() ? kExitOk : kExitRefuted;
}

int cmd_thm2(const Options& o, std::ostream& out)
{
    Thm2Config c;
    const QuadNumber h = parse_rational(o.h);
    c.h_num = static_cast<std::int64_t>(h.a());
    c.h_den = static_cast<std::int64_t>(h.den());
    parse_schedule(o.schedule, c);
    if (!o.ladder.empty())
        c.ladder = parse_ladder(o.ladder);
    c.seed = o.seed;
    c.phi_rules = o.phi_rules;
    const Thm2Result r = run_thm2(c);
    const std::string dir = out_dir(o.out);
    for (const auto& d : r.documents)
        emit(dir, d);
    out << "head exponents";
    for (std::size_t k = 0; k < std::min<std::size_t>(4, r.head.size()); ++k)
        out << ' ' << r.head.exponents[k];
    out << "\nsequence points " << r.sequence.size() << '\n';
    for (const auto& l : r.convergence)
        out << l << '\n';
    out << "asymorphism " << verdict_name(r.asymorphism.verdict()) << '\n'
        << "boundedness-evidence " << (r.probe.boundedness_evidence() ? "ok" : "failed") << '\n';
    return r.passed() ? kExitOk : kExitRefuted;
}

int cmd_thm3(const Options& o, std::ostream& out)
{
    Thm3Config c;
    c.m = o.m;
    c.side = o.grid;
    c.injectivity_side = o.injectivity_grid;
    c.krules = o.krules;
    c.seed = o.seed;
    const Thm3Result r = run_thm3(c);
    const std::string dir = out_dir(o.out);
    for (const auto& d : r.documents)
        emit(dir, d);
    for (const auto& l : r.log)
        out << l << '\n';
    out << "asymorphism " << verdict_name(r.asymorphism.verdict()) << '\n';
    return r.passed() ? kExitOk : kExitRefuted;
}

int cmd_check_map(const Options& o, std::ostream& out)
{
    const RuleContext ctx = context(o);
    MapFamily f;
    if (o.map == "identity") {
        f = [](std::size_t n) {
            std::vector<Index> img(n);
            for (Index i = 0; i < n; ++i)
                img[i] = i;
            return WindowMap{Window(n), Window(n), std::move(img)};
        };
    } else if (o.map == "double") {
        f = [](std::size_t n) {
            std::vector<Index> img(n);
            for (Index i = 0; i < n; ++i)
                img[i] = 2 * i;
            return WindowMap{Window(n), Window(2 * n), std::move(img)};
        };
    } else if (o.map == "square") {
        f = [](std::size_t n) {
            if (n > 4096)
                throw InputError("square map limited to windows of at most 4096 points");
            std::vector<Index> img(n);
            for (Index i = 0; i < n; ++i)
                img[i] = i * i;
            return WindowMap{Window(n), Window((n - 1) * (n - 1) + 1), std::move(img)};
        };
    } else {
        throw InputError("unknown map '" + o.map + "' (expected identity, double, square)");
    }
    const std::string e_rule = o.e_rule;
    const std::string w_rule = o.witness;
    ScaleFactory scales = [&](const WindowMap& m) {
        return std::vector<ScaleInstance>{{e_rule + " -> " + w_rule,
                                           materialize_rule(e_rule, m.source, ctx),
                                           materialize_rule(w_rule, m.target, ctx)}};
    };
    const auto report =
        check_macro_uniform(f, scales, parse_ladder(o.ladder.empty() ? "256,1024" : o.ladder));
    out << report.to_text();
    if (!o.out.empty())
        write_file(o.out, report.to_text());
    return report.verdict() == Verdict::ValidatedOnLadder ? kExitOk : kExitRefuted;
}

int cmd_axioms(const Options& o, std::ostream& out)
{
    const SuiteResult s = axioms_suite(o.count, o.seed);
    for (const auto& l : s.log)
        out << l << '\n';
    return s.passed() ? kExitOk : kExitRefuted;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Coarse geometry toolkit: windows, certificates and constructive proofs"};
    // "-h" stays free for the boundedness rule of brute-dim.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Options o;

    auto* mat = app.add_subcommand("materialize", "Materialize a rule as a relation document");
    mat->add_option("--n", o.n, "Window size")->required();
    mat->add_option("--rule", o.rule, "Rule (chain:r, interval:r, phi:<file>, krule:<file>, random:w)");
    mat->add_option("--seq", o.sequences, "Sequence documents for krule rules");
    mat->add_option("--seed", o.seed, "Seed for random rules");
    mat->add_option("--out", o.out, "Output file (stdout when absent)");

    auto* sh = app.add_subcommand("shells", "Shell decomposition of an augmented rule");
    sh->add_option("--n", o.n, "Window size")->required();
    sh->add_option("--rule", o.rule, "Rule");
    sh->add_option("--seed", o.seed, "Seed for random rules");
    sh->add_option("--out", o.out, "Write the shell phi table here");

    auto* cert = app.add_subcommand("certify", "Verify a certificate document");
    cert->add_option("file", o.file, "Certificate document")->required();

    auto* brute = app.add_subcommand("brute-dim", "Exhaustive minimal family count");
    brute->add_option("--n", o.n, "Window size")->required();
    brute->add_option("--e", o.e_rule, "Disjointness rule");
    brute->add_option("--h", o.h_rule, "Boundedness rule");
    brute->add_option("--cap", o.cap, "Largest window searched");
    brute->add_option("--seed", o.seed, "Seed for random rules");
    brute->add_option("--out", o.out, "Write the witness certificate here");

    auto* t1 = app.add_subcommand("thm1-demo", "Shell partition and parity certificate");
    t1->add_option("--n", o.n, "Window size")->required();
    t1->add_option("--rule", o.rule, "Base rule, augmented before partitioning");
    t1->add_option("--seed", o.seed, "Seed for random rules");
    t1->add_option("--out", o.out, "Output directory");

    auto* t2 = app.add_subcommand("thm2-demo", "Convergent sequence subspace asymorphic to omega");
    t2->add_option("--h", o.h, "Rational limit point p/q");
    t2->add_option("--schedule", o.schedule, "Head schedule halving:<p/q>:<steps>");
    t2->add_option("--ladder", o.ladder, "Comma-separated window sizes");
    t2->add_option("--phi-rules", o.phi_rules, "Number of seeded phi rules");
    t2->add_option("--seed", o.seed, "Seed");
    t2->add_option("--out", o.out, "Output directory");

    auto* t3 = app.add_subcommand("thm3-demo", "Sum of m sequences and its grid asymorphism");
    t3->add_option("--m", o.m, "Number of sequences");
    t3->add_option("--grid", o.grid, "Grid side for the phi, containment and map checks");
    t3->add_option("--injectivity-grid", o.injectivity_grid, "Grid side for the sum injectivity check");
    t3->add_option("--krules", o.krules, "Number of sampled KRules");
    t3->add_option("--seed", o.seed, "Seed");
    t3->add_option("--out", o.out, "Output directory");

    auto* cm = app.add_subcommand("check-map", "Macro-uniformity of a map on a ladder");
    cm->add_option("--map", o.map, "identity, double or square");
    cm->add_option("--e", o.e_rule, "Source rule");
    cm->add_option("--witness", o.witness, "Target witness rule");
    cm->add_option("--ladder", o.ladder, "Comma-separated window sizes");
    cm->add_option("--seed", o.seed, "Seed for random rules");
    cm->add_option("--out", o.out, "Write the report here");

    auto* ax = app.add_subcommand("axioms-suite", "Random checks of the relation algebra laws");
    ax->add_option("--count", o.count, "Number of relation triples");
    ax->add_option("--seed", o.seed, "Seed");

    std::vector<char*> argv;
    std::vector<std::string> owned = args;
    for (auto& a : owned)
        argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (mat->parsed())
            return cmd_materialize(o, out);
        if (sh->parsed())
            return cmd_shells(o, out);
        if (cert->parsed())
            return cmd_certify(o, out);
        if (brute->parsed())
            return cmd_brute(o, out);
        if (t1->parsed())
            return cmd_thm1(o, out);
        if (t2->parsed())
            return cmd_thm2(o, out);
        if (t3->parsed())
            return cmd_thm3(o, out);
        if (cm->parsed())
            return cmd_check_map(o, out);
        if (ax->parsed())
            return cmd_axioms(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

int run(int argc, char** argv)
{
    return run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

} // namespace coarse::cli
