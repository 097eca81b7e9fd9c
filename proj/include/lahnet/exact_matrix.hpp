#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lahnet/bigint.hpp"
#include "lahnet/errors.hpp"

namespace lahnet {

// Dense matrix of exact integers, row-major. Indices in the public
// interface are 1-based throughout the library.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, BigInt(0)) {}

    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) {
            throw DimensionError("ExactMatrix: got " + std::to_string(entries_.size()) +
                                 " entries for a " + std::to_string(rows_) + "x" +
                                 std::to_string(cols_) + " matrix");
        }
    }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
        return m;
    }

    static ExactMatrix from_rows(const std::vector<std::vector<BigInt>>& rows) {
        if (rows.empty() || rows.front().empty()) {
            throw DimensionError("ExactMatrix: no rows given");
        }
        const std::size_t r = rows.size();
        const std::size_t c = rows.front().size();
        std::vector<BigInt> entries;
        entries.reserve(r * c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) {
                throw DimensionError("ExactMatrix: row " + std::to_string(i + 1) +
                                     " has " + std::to_string(rows[i].size()) +
                                     " entries, expected " + std::to_string(c));
            }
            entries.insert(entries.end(), rows[i].begin(), rows[i].end());
        }
        return ExactMatrix(r, c, std::move(entries));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    // 1-based access.
    const BigInt& at(std::size_t i, std::size_t j) const {
        if (i < 1 || i > rows_) {
            throw IndexError("row index " + std::to_string(i) + " out of range for a " +
                             dims() + " matrix");
        }
        if (j < 1 || j > cols_) {
            throw IndexError("column index " + std::to_string(j) + " out of range for a " +
                             dims() + " matrix");
        }
        return entries_[(i - 1) * cols_ + (j - 1)];
    }

    const std::vector<BigInt>& entries() const { return entries_; }

    bool operator==(const ExactMatrix& other) const = default;

    std::string dims() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> entries_;
};

// Strictly increasing list of 1-based positions. The default-constructed
// set is the (explicitly allowed) empty set used by the 0x0 minor
// convention.
class IndexSet {
public:
    IndexSet() = default;

    explicit IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
        for (std::size_t t = 0; t < indices_.size(); ++t) {
            if (indices_[t] < 1) {
                throw IndexError("index " + std::to_string(indices_[t]) +
                                 " at position " + std::to_string(t + 1) + " is not 1-based");
            }
            if (t > 0 && indices_[t] <= indices_[t - 1]) {
                throw IndexError("index set not strictly increasing at position " +
                                 std::to_string(t + 1) + " (" + std::to_string(indices_[t - 1]) +
                                 " followed by " + std::to_string(indices_[t]) + ")");
            }
        }
    }

    static IndexSet full(std::size_t m) {
        std::vector<std::size_t> indices(m);
        for (std::size_t t = 0; t < m; ++t) indices[t] = t + 1;
        return IndexSet(std::move(indices));
    }

    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    std::size_t operator[](std::size_t t) const { return indices_[t]; }
    std::size_t max() const { return indices_.back(); }
    const std::vector<std::size_t>& indices() const { return indices_; }

    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }

    bool operator==(const IndexSet&) const = default;

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t t = 0; t < indices_.size(); ++t) {
            if (t) s += ",";
            s += std::to_string(indices_[t]);
        }
        return s + "}";
    }

private:
    std::vector<std::size_t> indices_;
};

// All size-p subsets of {1,...,m}, lexicographically.
inline std::vector<IndexSet> index_subsets(std::size_t m, std::size_t p) {
    std::vector<IndexSet> subsets;
    if (p > m) return subsets;
    std::vector<std::size_t> current(p);
    for (std::size_t t = 0; t < p; ++t) current[t] = t + 1;
    while (true) {
        subsets.push_back(IndexSet(current));
        if (p == 0) break;
        // advance the rightmost index that still has room
        std::size_t t = p;
        while (t > 0 && current[t - 1] == m - p + t) --t;
        if (t == 0) break;
        ++current[t - 1];
        for (std::size_t s = t; s < p; ++s) current[s] = current[s - 1] + 1;
    }
    return subsets;
}

inline ExactMatrix submatrix(const ExactMatrix& m, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size()) {
        throw DimensionError("submatrix: row set " + rows.to_string() + " and column set " +
                             cols.to_string() + " differ in size");
    }
    if (!rows.empty() && rows.max() > m.rows()) {
        throw IndexError("row index " + std::to_string(rows.max()) +
                         " out of range for a " + m.dims() + " matrix");
    }
    if (!cols.empty() && cols.max() > m.cols()) {
        throw IndexError("column index " + std::to_string(cols.max()) +
                         " out of range for a " + m.dims() + " matrix");
    }
    const std::size_t p = rows.size();
    std::vector<BigInt> entries;
    entries.reserve(p * p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) entries.push_back(m.at(rows[i], cols[j]));
    return ExactMatrix(p, p, std::move(entries));
}

namespace detail {

inline BigInt laplace_expand(const std::vector<BigInt>& a, std::size_t n) {
    if (n == 0) return 1;
    if (n == 1) return a[0];
    BigInt det = 0;
    std::vector<BigInt> minor((n - 1) * (n - 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t c_out = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[(r - 1) * (n - 1) + c_out++] = a[r * n + c];
            }
        }
        const BigInt cofactor = a[j] * laplace_expand(minor, n - 1);
        if (j % 2 == 0)
            det += cofactor;
        else
            det -= cofactor;
    }
    return det;
}

}  // namespace detail

// Cofactor expansion along the first row. Exponential; reference route for
// small matrices only.
inline BigInt determinant_laplace(const ExactMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("determinant: matrix is " + m.dims() + ", not square");
    }
    return detail::laplace_expand(m.entries(), m.rows());
}

// Fraction-free Bareiss elimination. Every intermediate value is an exact
// integer; the divisions by the previous pivot are exact. det of the 0x0
// matrix is 1.
inline BigInt determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("determinant: matrix is " + m.dims() + ", not square");
    }
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<BigInt> a = m.entries();
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot * n + k] == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t c = k; c < n; ++c) std::swap(a[k * n + c], a[pivot * n + c]);
            sign = -sign;
        }
        const BigInt& piv = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i * n + j] = (a[i * n + j] * piv - a[i * n + k] * a[k * n + j]) / prev;
            }
            a[i * n + k] = 0;
        }
        prev = piv;
    }
    return sign > 0 ? a[n * n - 1] : -a[n * n - 1];
}

// Minor of m selected by equal-size row and column sets; the empty minor
// is 1 by convention.
inline BigInt minor_value(const ExactMatrix& m, const IndexSet& rows, const IndexSet& cols) {
    return determinant(submatrix(m, rows, cols));
}

inline std::vector<BigInt> multiply(const ExactMatrix& m, const std::vector<BigInt>& x) {
    if (x.size() != m.cols()) {
        throw DimensionError("multiply: vector of length " + std::to_string(x.size()) +
                             " against a " + m.dims() + " matrix");
    }
    std::vector<BigInt> y(m.rows(), BigInt(0));
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        BigInt acc = 0;
        for (std::size_t j = 1; j <= m.cols(); ++j) acc += m.at(i, j) * x[j - 1];
        y[i - 1] = acc;
    }
    return y;
}

}  // namespace lahnet
