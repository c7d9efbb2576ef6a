#pragma once

#include <cstdint>
#include <vector>

#include "raq/sparse_matrix.hpp"

namespace raq {

// Elementary divisors d_1 | d_2 | ... | d_r of an integer matrix, including
// the leading 1s; rank() is the number of divisors.
struct SmithForm {
    std::vector<Int> divisors;

    std::size_t rank() const { return divisors.size(); }
    // Divisors exceeding 1 (the torsion part of the cokernel restricted to
    // the column span).
    std::vector<Int> nontrivial() const;

    bool operator==(const SmithForm&) const = default;
};

enum class PivotPolicy {
    markowitz,    // fewest fill-in among smallest-magnitude candidates
    first_found,  // smallest (row, col) among smallest-magnitude candidates
};

// Sparse elimination SNF. Exact over arbitrary-precision integers; the pivot
// policy affects runtime only, never the result.
SmithForm smith_normal_form(const SparseIntMatrix& m,
                            PivotPolicy policy = PivotPolicy::markowitz);

// Normalizes a multiset of nonzero cyclic orders into an ascending
// divisibility chain via repeated (gcd, lcm) replacement.
std::vector<Int> divisor_chain(std::vector<Int> orders);

// Rank over the prime field F_p. Throws PreconditionError when p is not prime.
std::size_t fp_rank(const SparseIntMatrix& m, std::uint64_t p);

bool is_prime(std::uint64_t n);

// Dense SNF with unimodular transforms: row_inv · diag(divisors) · col_inv
// reconstructs the input, i.e. U·A·V = D with col = V, col_inv = V⁻¹ and
// row_inv = U⁻¹. Intended for small systems (cocycle representatives, tests).
struct SmithDecomposition {
    std::vector<Int> divisors;  // full SNF chain including leading 1s
    DenseIntMatrix col;         // V
    DenseIntMatrix col_inv;     // V⁻¹
    DenseIntMatrix row_inv;     // U⁻¹

    std::size_t rank() const { return divisors.size(); }
};

SmithDecomposition smith_with_transforms(const DenseIntMatrix& m);

}  // namespace raq
