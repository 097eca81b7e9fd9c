#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lahnet/bigint.hpp"
#include "lahnet/combinatorics.hpp"
#include "lahnet/errors.hpp"
#include "lahnet/exact_matrix.hpp"
#include "lahnet/polynomial.hpp"

namespace lahnet {

inline constexpr std::size_t kEnumerationCap = 9;

// Triangular table of L_{n,k} for 0 <= k <= n <= max_n, built from
// L_{0,0} = 1 and the recurrence L_{n+1,k} = L_{n,k-1} + (n+k) L_{n,k}.
// Boundary: L_{n,0} = 0 for n >= 1 and L_{n,k} = 0 for k > n.
class LahTable {
public:
    explicit LahTable(std::size_t max_n) : rows_(max_n + 1) {
        rows_[0] = {BigInt(1)};
        for (std::size_t n = 0; n < max_n; ++n) {
            rows_[n + 1].assign(n + 2, BigInt(0));
            for (std::size_t k = 1; k <= n + 1; ++k) {
                BigInt value = rows_[n][k - 1];
                if (k <= n) value += BigInt(n + k) * rows_[n][k];
                rows_[n + 1][k] = value;
            }
        }
    }

    std::size_t max_n() const { return rows_.size() - 1; }

    const BigInt& at(std::size_t n, std::size_t k) const {
        if (n >= rows_.size()) {
            throw IndexError("Lah table holds rows up to n = " + std::to_string(max_n()) +
                             ", asked for n = " + std::to_string(n));
        }
        if (k > n) return kZero;
        return rows_[n][k];
    }

private:
    static inline const BigInt kZero{0};
    std::vector<std::vector<BigInt>> rows_;
};

inline LahTable lah_recurrence_table(std::size_t max_n) { return LahTable(max_n); }

// L_{m,k} = binom(m-1, k-1) * m!/k!, with the quotient m!/k! computed as
// the product (k+1)(k+2)...m so no division is involved. Extended by the
// boundary convention at k = 0.
inline BigInt lah_closed_form(std::size_t m, std::size_t k) {
    if (k > m) return 0;
    if (k == 0) return m == 0 ? BigInt(1) : BigInt(0);
    BigInt quotient = 1;
    for (std::size_t i = k + 1; i <= m; ++i) quotient *= i;
    return binomial(m - 1, k - 1) * quotient;
}

namespace detail {

// Product over the blocks of the number of linear orders of each block,
// with every order generated explicitly.
inline BigInt count_block_orders(const std::vector<std::vector<std::size_t>>& blocks) {
    BigInt product = 1;
    for (const auto& block : blocks) {
        std::vector<std::size_t> arrangement = block;
        std::sort(arrangement.begin(), arrangement.end());
        BigInt orders = 0;
        do {
            ++orders;
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        product *= orders;
    }
    return product;
}

inline void enumerate_partitions(std::size_t n, std::size_t k, std::size_t element,
                                 std::vector<std::vector<std::size_t>>& blocks,
                                 BigInt& total) {
    if (element == n + 1) {
        if (blocks.size() == k) total += count_block_orders(blocks);
        return;
    }
    if (blocks.size() > k) return;
    // remaining elements cannot open enough new blocks
    if (blocks.size() + (n + 1 - element) < k) return;
    // index-based: the recursion grows `blocks`, which may reallocate
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b].push_back(element);
        enumerate_partitions(n, k, element + 1, blocks, total);
        blocks[b].pop_back();
    }
    blocks.emplace_back(1, element);
    enumerate_partitions(n, k, element + 1, blocks, total);
    blocks.pop_back();
}

}  // namespace detail

// Independent enumeration oracle: walks every partition of {1,...,n} into
// k nonempty unlabeled blocks and generates each block's linear orders one
// by one. Shares no code with the recurrence or the closed form.
inline BigInt lah_enumerate(std::size_t n, std::size_t k, bool force = false) {
    if (n > kEnumerationCap && !force) {
        throw GuardError("lah_enumerate: n = " + std::to_string(n) + " exceeds the cap of " +
                         std::to_string(kEnumerationCap) +
                         "; use lah_closed_form, or pass force to enumerate anyway");
    }
    if (k > n) return 0;
    if (n == 0) return 1;  // k == 0 here; the empty partition
    if (k == 0) return 0;
    BigInt total = 0;
    std::vector<std::vector<std::size_t>> blocks;
    detail::enumerate_partitions(n, k, 1, blocks, total);
    return total;
}

// m x m lower-triangular matrix with (i, j) entry L_{i,j}.
class LahMatrix {
public:
    std::size_t m() const { return m_; }
    const ExactMatrix& matrix() const { return matrix_; }

private:
    LahMatrix(std::size_t m, ExactMatrix matrix) : m_(m), matrix_(std::move(matrix)) {}

    friend LahMatrix lah_matrix(std::size_t m);

    std::size_t m_;
    ExactMatrix matrix_;
};

// Entries come from the recurrence table and every one of them is checked
// against the closed form before the matrix is returned.
inline LahMatrix lah_matrix(std::size_t m) {
    if (m == 0) throw DimensionError("lah_matrix: dimension must be >= 1");
    const LahTable table(m);
    std::vector<BigInt> entries;
    entries.reserve(m * m);
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            const BigInt& value = table.at(i, j);
            const BigInt check = lah_closed_form(i, j);
            if (value != check) {
                throw InvariantViolation("lah_matrix: recurrence gives " + value.str() +
                                         " but closed form gives " + check.str() + " at (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
            }
            entries.push_back(value);
        }
    }
    return LahMatrix(m, ExactMatrix(m, m, std::move(entries)));
}

// Plain-text triangle, one row per n: "n: L_{n,1} ... L_{n,n}".
inline std::string format_triangle(const LahTable& table) {
    std::string out;
    for (std::size_t n = 1; n <= table.max_n(); ++n) {
        out += std::to_string(n) + ":";
        for (std::size_t k = 1; k <= n; ++k) out += " " + table.at(n, k).str();
        out += "\n";
    }
    return out;
}

struct CoefficientMismatch {
    std::size_t degree;
    BigInt lhs;
    BigInt rhs;
};

struct IdentityReport {
    std::size_t n;
    bool holds;
    std::optional<CoefficientMismatch> mismatch;
};

namespace detail {

inline std::optional<CoefficientMismatch> first_coefficient_mismatch(const IntPolynomial& lhs,
                                                                     const IntPolynomial& rhs) {
    const std::size_t top =
        static_cast<std::size_t>(std::max<std::ptrdiff_t>(lhs.degree(), rhs.degree()) + 1);
    for (std::size_t d = 0; d < top; ++d) {
        if (lhs.coefficient(d) != rhs.coefficient(d)) {
            return CoefficientMismatch{d, lhs.coefficient(d), rhs.coefficient(d)};
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Checks x(x+1)...(x+n-1) = sum_{k=0}^{n} L_{n,k} x(x-1)...(x-k+1) by full
// coefficient comparison.
inline IdentityReport verify_polynomial_identity(std::size_t n) {
    const IntPolynomial lhs = rising_factorial(n);
    const LahTable table(n);
    IntPolynomial rhs;
    for (std::size_t k = 0; k <= n; ++k) rhs = rhs + falling_factorial(k) * table.at(n, k);
    auto mismatch = detail::first_coefficient_mismatch(lhs, rhs);
    return IdentityReport{n, !mismatch.has_value(), std::move(mismatch)};
}

}  // namespace lahnet
