#ifndef COARSE_CLI_HPP
#define COARSE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace coarse::cli
{

// Exit statuses shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInput = 2;

// Output directory used when --out is absent.
constexpr const char* kOutDirEnv = "COARSE_OUT_DIR";

// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace coarse::cli

#endif
