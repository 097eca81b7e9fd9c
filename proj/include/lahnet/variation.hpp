#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lahnet/bigint.hpp"
#include "lahnet/combinatorics.hpp"
#include "lahnet/errors.hpp"
#include "lahnet/exact_matrix.hpp"

namespace lahnet {

// Var^-(x): drop the zero entries, then count adjacent sign changes in what
// remains. Var^-() of an all-zero vector is 0; the empty vector is rejected.
inline std::size_t weak_variation(const std::vector<BigInt>& x) {
    if (x.empty()) throw DimensionError("weak_variation: empty vector");
    std::size_t changes = 0;
    int previous = 0;
    for (const BigInt& entry : x) {
        const int s = sign_of(entry);
        if (s == 0) continue;
        if (previous != 0 && s != previous) ++changes;
        previous = s;
    }
    return changes;
}

struct MinorWitness {
    IndexSet rows;
    IndexSet cols;
    BigInt value;
};

struct TnnReport {
    std::size_t rows = 0;
    std::size_t cols = 0;
    BigInt checked_minor_count = 0;
    bool is_tnn = false;
    std::optional<MinorWitness> witness;  // first negative minor, if any
};

inline constexpr std::size_t kTnnDimensionGuard = 12;

// Exhaustive total-nonnegativity test: every square minor, enumerated in
// lexicographic (size, I, J) order, stopping at the first negative one.
// The number of minors grows like binom(2m, m), hence the dimension guard.
inline TnnReport is_totally_nonnegative(const ExactMatrix& M, bool force = false,
                                        std::size_t dimension_guard = kTnnDimensionGuard) {
    const std::size_t max_dim = M.rows() > M.cols() ? M.rows() : M.cols();
    if (max_dim > dimension_guard && !force) {
        // Vandermonde: sum over p>=1 of C(r,p) C(c,p) = C(r+c, r) - 1
        const BigInt minor_count = binomial(M.rows() + M.cols(), M.rows()) - 1;
        throw GuardError("total-nonnegativity check on a " + M.dims() + " matrix enumerates " +
                         minor_count.str() + " minors (dimension guard: " +
                         std::to_string(dimension_guard) + "); pass force to proceed");
    }
    TnnReport report;
    report.rows = M.rows();
    report.cols = M.cols();
    const std::size_t max_size = M.rows() < M.cols() ? M.rows() : M.cols();
    for (std::size_t p = 1; p <= max_size; ++p) {
        for (const IndexSet& I : index_subsets(M.rows(), p)) {
            for (const IndexSet& J : index_subsets(M.cols(), p)) {
                const BigInt value = minor_value(M, I, J);
                ++report.checked_minor_count;
                if (value < 0) {
                    report.is_tnn = false;
                    report.witness = MinorWitness{I, J, value};
                    return report;
                }
            }
        }
    }
    report.is_tnn = true;
    return report;
}

namespace detail {

// splitmix64: tiny, seedable, reproducible across platforms. Fixed here so
// reports citing a seed stay replayable.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = (UINT64_MAX / bound) * bound;
        std::uint64_t draw;
        do {
            draw = next();
        } while (draw >= limit);
        return draw % bound;
    }

private:
    std::uint64_t state_;
};

}  // namespace detail

struct VariationViolation {
    std::vector<BigInt> input;
    std::size_t input_variation = 0;
    std::size_t output_variation = 0;
};

struct VariationReport {
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
    std::int64_t entry_bound = 0;
    std::string generator = "splitmix64";
    std::vector<VariationViolation> violations;
    // Largest Var^-(x) - Var^-(Mx) seen; how strongly the map smoothed the
    // worst sample.
    std::ptrdiff_t max_drop = 0;
};

// Samples nonzero integer vectors x with entries in [-entry_bound,
// entry_bound] and compares Var^-(Mx) against Var^-(x). Every sample with
// Var^-(Mx) > Var^-(x) is recorded. Deterministic for a fixed seed.
inline VariationReport check_variation_decreasing(const ExactMatrix& M, std::size_t samples,
                                                  std::uint64_t seed,
                                                  std::int64_t entry_bound = 9) {
    if (entry_bound < 1) throw DimensionError("entry bound must be >= 1");
    VariationReport report;
    report.sample_count = samples;
    report.seed = seed;
    report.entry_bound = entry_bound;

    detail::SplitMix64 rng(seed);
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(entry_bound) + 1;
    std::vector<BigInt> x(M.cols());
    for (std::size_t s = 0; s < samples; ++s) {
        bool all_zero = true;
        do {
            all_zero = true;
            for (std::size_t c = 0; c < M.cols(); ++c) {
                const std::int64_t value =
                    static_cast<std::int64_t>(rng.below(span)) - entry_bound;
                x[c] = value;
                if (value != 0) all_zero = false;
            }
        } while (all_zero);

        const std::vector<BigInt> y = multiply(M, x);
        const std::size_t var_in = weak_variation(x);
        const std::size_t var_out = weak_variation(y);
        if (var_out > var_in) {
            report.violations.push_back({x, var_in, var_out});
        }
        const std::ptrdiff_t drop =
            static_cast<std::ptrdiff_t>(var_in) - static_cast<std::ptrdiff_t>(var_out);
        if (drop > report.max_drop) report.max_drop = drop;
    }
    return report;
}

}  // namespace lahnet
