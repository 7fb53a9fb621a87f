#ifndef COARSE_KERNELS_HPP
#define COARSE_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "coarse/window.hpp"

// Inner loops of the relation algebra. Each kernel has a serial reference
// implementation, kept for the test suite and the benchmark, and an OpenMP
// version used by the library. Both produce identical output.
namespace coarse::kernels
{

using Word = std::uint64_t;

constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

// Boolean matrix product of row-major bit matrices: out[i] = OR_{k in a[i]} b[k].
// a, b and out hold n rows of `words` words each.
void compose_dense_serial(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
                          std::size_t n, std::size_t words);
void compose_dense(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
                   std::size_t n, std::size_t words);

// Same product on sorted adjacency rows.
std::vector<IndexSet> compose_sparse_serial(const std::vector<IndexSet>& a,
                                            const std::vector<IndexSet>& b, std::size_t n);
std::vector<IndexSet> compose_sparse(const std::vector<IndexSet>& a,
                                     const std::vector<IndexSet>& b, std::size_t n);

// Transpose of a bit matrix.
void transpose_dense_serial(std::span<const Word> a, std::span<Word> out, std::size_t n,
                            std::size_t words);
void transpose_dense(std::span<const Word> a, std::span<Word> out, std::size_t n,
                     std::size_t words);

} // namespace coarse::kernels

#endif
