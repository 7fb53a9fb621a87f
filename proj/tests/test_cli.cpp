#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coarse/cli.hpp"

namespace fs = std::filesystem;
using coarse::cli::run;

namespace
{

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args)
{
    args.insert(args.begin(), "coarse");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const fs::path p = fs::temp_directory_path() / ("coarse-cli-test-" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("exit codes")
{
    CHECK(call({"--help"}).code == coarse::cli::kExitOk);
    CHECK(call({}).code == coarse::cli::kExitInput);
    CHECK(call({"no-such-command"}).code == coarse::cli::kExitInput);
    const auto bad_rule = call({"materialize", "--n", "4", "--rule", "bogus:1"});
    CHECK(bad_rule.code == coarse::cli::kExitInput);
    CHECK(bad_rule.err.rfind("error: ", 0) == 0);
    CHECK(call({"certify", "/nonexistent/cert.txt"}).code == coarse::cli::kExitInput);
}

TEST_CASE("brute-dim and shells")
{
    const auto r = call({"brute-dim", "--n", "6", "--e", "chain:1", "--h", "interval:2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    CHECK(call({"brute-dim", "--n", "12", "--e", "diag", "--h", "full"}).code ==
          coarse::cli::kExitInput);

    const auto s = call({"shells", "--n", "10", "--rule", "chain:2"});
    CHECK(s.code == 0);
    CHECK(s.out.find("P0: 0 1 2\nP1: 3 4\n") != std::string::npos);
}

TEST_CASE("certify reports the uncovered point")
{
    const auto dir = scratch("certify");
    const auto good = dir / "good.txt";
    const auto bad = dir / "bad.txt";
    REQUIRE(call({"brute-dim", "--n", "6", "--e", "chain:1", "--h", "interval:2", "--out",
                  good.string()})
                .code == 0);
    CHECK(call({"certify", good.string()}).code == 0);

    std::string doc = slurp(good);
    // Drop the last block line, leaving its points uncovered.
    doc.erase(doc.find_last_of('\n', doc.size() - 2) + 1);
    const auto last_family = doc.rfind("family ");
    const auto eol = doc.find('\n', last_family);
    std::string header = doc.substr(last_family, eol - last_family);
    const auto space = header.rfind(' ');
    const int blocks = std::stoi(header.substr(space + 1));
    doc.replace(last_family, eol - last_family, header.substr(0, space + 1) + std::to_string(blocks - 1));
    std::ofstream(bad, std::ios::binary) << doc;

    const auto r = call({"certify", bad.string()});
    CHECK(r.code == coarse::cli::kExitRefuted);
    CHECK(r.out.find("failed coverage") != std::string::npos);
    CHECK(r.out.find("[witness") != std::string::npos);
}

TEST_CASE("check-map verdicts")
{
    const auto sq = call({"check-map", "--map", "square", "--e", "chain:1", "--witness", "chain:1"});
    CHECK(sq.code == coarse::cli::kExitRefuted);
    CHECK(sq.out.find("counterexample (1,2) -> (1,4)") != std::string::npos);
    const auto id = call({"check-map", "--map", "identity", "--e", "chain:1", "--witness", "chain:1"});
    CHECK(id.code == 0);
    CHECK(id.out.find("verdict validated-on-ladder") != std::string::npos);
}

TEST_CASE("demo outputs are byte-identical across runs")
{
    const auto a = scratch("det-a");
    const auto b = scratch("det-b");
    for (const auto& dir : {a, b}) {
        CHECK(call({"thm1-demo", "--n", "2000", "--rule", "random:4", "--seed", "9", "--out",
                    dir.string()})
                  .code == 0);
        CHECK(call({"thm3-demo", "--grid", "8", "--injectivity-grid", "16", "--krules", "3", "--out",
                    dir.string()})
                  .code == 0);
    }
    std::size_t compared = 0;
    for (const auto& e : fs::directory_iterator(a)) {
        const auto other = b / e.path().filename();
        REQUIRE(fs::exists(other));
        CHECK(slurp(e.path()) == slurp(other));
        ++compared;
    }
    CHECK(compared >= 2);
}

TEST_CASE("output directory from the environment")
{
    const auto dir = scratch("env");
    ::setenv(coarse::cli::kOutDirEnv, dir.string().c_str(), 1);
    const auto r = call({"thm1-demo", "--n", "50", "--rule", "chain:1"});
    ::unsetenv(coarse::cli::kOutDirEnv);
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "thm1-certificate.txt"));
    CHECK(call({"certify", (dir / "thm1-certificate.txt").string()}).code == 0);
}
