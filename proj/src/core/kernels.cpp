#include "coarse/kernels.hpp"

#include <algorithm>
#include <bit>

namespace coarse::kernels
{

namespace
{

inline void compose_row(const Word* arow, std::span<const Word> b, Word* orow, std::size_t words)
{
    std::fill(orow, orow + words, Word{0});
    for (std::size_t w = 0; w < words; ++w) {
        Word bits = arow[w];
        while (bits) {
            const std::size_t k = w * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            const Word* brow = b.data() + k * words;
            for (std::size_t v = 0; v < words; ++v)
                orow[v] |= brow[v];
        }
    }
}

inline IndexSet compose_sparse_row(const IndexSet& arow, const std::vector<IndexSet>& b)
{
    IndexSet out;
    for (Index k : arow)
        out.insert(out.end(), b[k].begin(), b[k].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

void compose_dense_serial(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
                          std::size_t n, std::size_t words)
{
    for (std::size_t i = 0; i < n; ++i)
        compose_row(a.data() + i * words, b, out.data() + i * words, words);
}

void compose_dense(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
                   std::size_t n, std::size_t words)
{
    const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < rows; ++i)
        compose_row(a.data() + i * words, b, out.data() + i * words, words);
}

std::vector<IndexSet> compose_sparse_serial(const std::vector<IndexSet>& a,
                                            const std::vector<IndexSet>& b, std::size_t n)
{
    std::vector<IndexSet> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = compose_sparse_row(a[i], b);
    return out;
}

std::vector<IndexSet> compose_sparse(const std::vector<IndexSet>& a,
                                     const std::vector<IndexSet>& b, std::size_t n)
{
    std::vector<IndexSet> out(n);
    const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < rows; ++i)
        out[i] = compose_sparse_row(a[i], b);
    return out;
}

void transpose_dense_serial(std::span<const Word> a, std::span<Word> out, std::size_t n,
                            std::size_t words)
{
    std::fill(out.begin(), out.end(), Word{0});
    for (std::size_t i = 0; i < n; ++i) {
        const Word* row = a.data() + i * words;
        for (std::size_t w = 0; w < words; ++w) {
            Word bits = row[w];
            while (bits) {
                const std::size_t j = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                out[j * words + i / 64] |= Word{1} << (i % 64);
            }
        }
    }
}

void transpose_dense(std::span<const Word> a, std::span<Word> out, std::size_t n,
                     std::size_t words)
{
    // Each thread owns a band of output rows and scans the matching column
    // band of the input, so no two threads write the same word.
    std::fill(out.begin(), out.end(), Word{0});
    const auto bands = static_cast<std::ptrdiff_t>(words);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t w = 0; w < bands; ++w) {
        for (std::size_t i = 0; i < n; ++i) {
            Word bits = a[i * words + w];
            while (bits) {
                const std::size_t j = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                out[j * words + i / 64] |= Word{1} << (i % 64);
            }
        }
    }
}

} // namespace coarse::kernels
