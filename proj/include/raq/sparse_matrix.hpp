#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "raq/errors.hpp"

namespace raq {

using Int = mpz_class;

// Column-major sparse integer matrix. Stored entries are nonzero; columns
// are kept sorted by row index.
class SparseIntMatrix {
  public:
    using Entry = std::pair<std::uint32_t, Int>;  // (row, value)

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const;

    // Accumulating insert; an entry that cancels to zero is removed.
    void add(std::size_t row, std::size_t col, Int value);

    // Replaces a column wholesale; entries must be sorted, in range, nonzero.
    void set_column(std::size_t col, std::vector<Entry> entries);

    const std::vector<Entry>& column(std::size_t col) const { return data_[col]; }
    Int at(std::size_t row, std::size_t col) const;

    SparseIntMatrix transposed() const;

    // this * rhs; shapes must agree.
    SparseIntMatrix multiply(const SparseIntMatrix& rhs) const;

    bool is_zero() const;

    bool operator==(const SparseIntMatrix&) const = default;

  private:
    void check_indices(std::size_t row, std::size_t col) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> data_;
};

// Dense integer matrix, used for small systems and transform tracking.
struct DenseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;  // row-major

    DenseIntMatrix() = default;
    DenseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static DenseIntMatrix identity(std::size_t n);
    static DenseIntMatrix from_sparse(const SparseIntMatrix& m);

    DenseIntMatrix multiply(const DenseIntMatrix& rhs) const;
};

}  // namespace raq
