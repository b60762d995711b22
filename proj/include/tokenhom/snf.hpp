#ifndef TOKENHOM_SNF_HPP
#define TOKENHOM_SNF_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tokenhom {

/// Dense integer matrix. No floating point anywhere; 64-bit entries with
/// overflow-checked reduction (an arbitrary-precision fallback kicks in when
/// coefficients outgrow 64 bits).
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {
        if (r < 0 || c < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    }
    long long& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    static IntMatrix identity(int n);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision dense matrix; used for the SNF transforms, whose
/// entries routinely outgrow 64 bits even on small inputs.
struct BigMatrix {
    int rows = 0, cols = 0;
    std::vector<BigInt> data;

    BigMatrix() = default;
    BigMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {
        if (r < 0 || c < 0) throw std::invalid_argument("BigMatrix: negative dimension");
    }
    explicit BigMatrix(const IntMatrix& m)
        : rows(m.rows), cols(m.cols), data(m.data.begin(), m.data.end()) {}
    BigInt& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    friend bool operator==(const BigMatrix&, const BigMatrix&) = default;
};

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);

struct SnfResult {
    int rank = 0;
    /// Invariant factors d_1 | d_2 | ... | d_rank, all positive (1s included).
    std::vector<long long> factors;
    /// Unimodular transforms with U * M * V = diag(factors), when requested.
    std::optional<BigMatrix> u, v;

    /// Factors exceeding 1 (the torsion part).
    std::vector<long long> nontrivial_factors() const;
};

/// Smith normal form with deterministic minimum-absolute-value pivoting.
/// Without transforms, a sparse unit-pivot pass runs first; the dense core
/// handles whatever remains.
SnfResult smith_normal_form(const IntMatrix& m, bool want_transforms = false);

/// Rank over Q via fraction-free (Bareiss-style) elimination on exact
/// integers; independent of the SNF path.
int rational_rank(const IntMatrix& m);

}  // namespace tokenhom

#endif
