#pragma once

#include <cstddef>
#include <vector>

#ifdef PCS_HAVE_OPENMP
#include <omp.h>
#endif

// Deterministic summation. Terms are reduced over a fixed binary tree
// anchored to the index order: blocks of PCS_REDUCE_BLOCK leaves are summed
// pairwise, then block sums are combined pairwise. The OpenMP path fills the
// block sums in parallel; because every partial sum is tied to indices, not
// to threads, parallel and serial results are bit-identical.

namespace pcs {

inline constexpr std::size_t reduce_block = 4096;

namespace detail {
template <class T, class F>
T pairwise_range(std::size_t lo, std::size_t hi, const F& term) {
    if (hi - lo <= 8) {
        T s = term(lo);
        for (std::size_t i = lo + 1; i < hi; ++i) s = s + term(i);
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_range<T>(lo, mid, term) + pairwise_range<T>(mid, hi, term);
}

template <class T>
T pairwise_combine(std::vector<T>& v) {
    std::size_t n = v.size();
    while (n > 1) {
        std::size_t m = 0;
        for (std::size_t i = 0; i + 1 < n; i += 2) v[m++] = v[i] + v[i + 1];
        if (n % 2) v[m++] = v[n - 1];
        n = m;
    }
    return v[0];
}
}  // namespace detail

// Sum of term(i) for i in [0, n) with the canonical tree; serial.
template <class T, class F>
T deterministic_sum_serial(std::size_t n, const F& term) {
    if (n == 0) return T{};
    std::size_t nblocks = (n + reduce_block - 1) / reduce_block;
    std::vector<T> partial(nblocks);
    for (std::size_t b = 0; b < nblocks; ++b) {
        std::size_t lo = b * reduce_block, hi = std::min(n, lo + reduce_block);
        partial[b] = detail::pairwise_range<T>(lo, hi, term);
    }
    return detail::pairwise_combine(partial);
}

// Same tree, block sums computed in parallel. Bit-identical to the serial path.
template <class T, class F>
T deterministic_sum(std::size_t n, const F& term) {
    if (n == 0) return T{};
    std::size_t nblocks = (n + reduce_block - 1) / reduce_block;
    std::vector<T> partial(nblocks);
#ifdef PCS_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (long long b = 0; b < (long long)nblocks; ++b) {
        std::size_t lo = (std::size_t)b * reduce_block, hi = std::min(n, lo + reduce_block);
        partial[b] = detail::pairwise_range<T>(lo, hi, term);
    }
    return detail::pairwise_combine(partial);
}

int max_threads();
void set_thread_cap(int n);

}  // namespace pcs
