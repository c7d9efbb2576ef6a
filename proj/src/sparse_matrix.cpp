#include "raq/sparse_matrix.hpp"

#include <algorithm>

namespace raq {

std::size_t SparseIntMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& col : data_) n += col.size();
    return n;
}

void SparseIntMatrix::check_indices(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) throw StructureError("matrix index out of range");
}

void SparseIntMatrix::add(std::size_t row, std::size_t col, Int value) {
    check_indices(row, col);
    if (value == 0) return;
    auto& entries = data_[col];
    auto it = std::lower_bound(entries.begin(), entries.end(), row,
                               [](const Entry& e, std::size_t r) { return e.first < r; });
    if (it != entries.end() && it->first == row) {
        it->second += value;
        if (it->second == 0) entries.erase(it);
    } else {
        entries.insert(it, {static_cast<std::uint32_t>(row), std::move(value)});
    }
}

void SparseIntMatrix::set_column(std::size_t col, std::vector<Entry> entries) {
    if (col >= cols_) throw StructureError("matrix index out of range");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].first >= rows_) throw StructureError("matrix index out of range");
        if (entries[i].second == 0) throw StructureError("explicit zero entry");
        if (i && entries[i - 1].first >= entries[i].first)
            throw StructureError("column entries not sorted");
    }
    data_[col] = std::move(entries);
}

Int SparseIntMatrix::at(std::size_t row, std::size_t col) const {
    check_indices(row, col);
    const auto& entries = data_[col];
    auto it = std::lower_bound(entries.begin(), entries.end(), row,
                               [](const Entry& e, std::size_t r) { return e.first < r; });
    if (it != entries.end() && it->first == row) return it->second;
    return 0;
}

SparseIntMatrix SparseIntMatrix::transposed() const {
    SparseIntMatrix t(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (const auto& [r, v] : data_[c]) t.data_[r].push_back({static_cast<std::uint32_t>(c), v});
    return t;  // columns of t built in ascending row order already
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw StructureError("matrix shapes do not compose");
    SparseIntMatrix out(rows_, rhs.cols_);
    std::vector<Int> acc(rows_);
    std::vector<std::uint32_t> touched;
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
        touched.clear();
        for (const auto& [mid, v] : rhs.data_[c]) {
            for (const auto& [r, w] : data_[mid]) {
                if (acc[r] == 0) touched.push_back(r);  // may duplicate after cancellation; harmless
                acc[r] += v * w;
            }
        }
        std::sort(touched.begin(), touched.end());
        std::vector<Entry> entries;
        for (std::uint32_t r : touched) {
            if (acc[r] != 0) entries.push_back({r, std::move(acc[r])});
            acc[r] = 0;
        }
        out.set_column(c, std::move(entries));
    }
    return out;
}

bool SparseIntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& col) { return col.empty(); });
}

DenseIntMatrix DenseIntMatrix::identity(std::size_t n) {
    DenseIntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

DenseIntMatrix DenseIntMatrix::from_sparse(const SparseIntMatrix& m) {
    DenseIntMatrix d(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) d.at(r, c) = v;
    return d;
}

DenseIntMatrix DenseIntMatrix::multiply(const DenseIntMatrix& rhs) const {
    if (cols != rhs.rows) throw StructureError("matrix shapes do not compose");
    DenseIntMatrix out(rows, rhs.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < rhs.cols; ++j) out.at(i, j) += v * rhs.at(k, j);
        }
    return out;
}

}  // namespace raq
