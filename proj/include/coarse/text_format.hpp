#ifndef COARSE_TEXT_FORMAT_HPP
#define COARSE_TEXT_FORMAT_HPP

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "coarse/phi.hpp"
#include "coarse/relation.hpp"

// Line-oriented documents shared by the CLI and the tests.
//
//   relation N          phi N
//   # format 1          # format 1
//   i j                 n: k1 k2 ...
//
// Lines starting with '#' after the header are comments. Writers emit pairs in
// lexicographic order and one table line per n, so parse(write(x)) == x and
// write(parse(write(x))) == write(x) byte for byte.
namespace coarse::text
{

constexpr std::string_view kFormatTag = "# format 1";

std::string write_relation(const Relation& r);
Relation parse_relation(std::string_view doc);

// Table generators only; rule generators are referenced by name elsewhere.
std::string write_phi(const PhiGenerator& g);
PhiGenerator parse_phi(std::string_view doc);

std::string write_index_set(const IndexSet& s);

// Splits a document into lines, dropping the trailing newline.
std::vector<std::string_view> lines(std::string_view doc);
// Whitespace-separated tokens of one line.
std::vector<std::string_view> tokens(std::string_view line);

// Strict unsigned / signed integer parsing; throws InputError naming `what`.
std::uint64_t parse_uint(std::string_view s, std::string_view what);
std::int64_t parse_int(std::string_view s, std::string_view what);

bool is_comment(std::string_view line);

} // namespace coarse::text

#endif
