#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "charcount/errors.hpp"

namespace charcount {

/// Dense row-major integer matrix.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> data);

    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    /// Returns the matrix with an extra all-ones row appended (R -> R~).
    IntMatrix with_ones_row() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., all >= 0.
struct SmithNormalForm {
    IntMatrix U, D, V;
    std::vector<long long> diagonal() const;
};

SmithNormalForm smith_normal_form(const IntMatrix& M);

/// The solution set {v in (Z/m)^N : M v = 0 (mod m)} as a product of cyclic
/// factors: element(i) = sum_j a_j * generators[j] (mod m), where the mixed
/// radix digits a_j in [0, orders[j]) of i are taken with a_1 slowest. The
/// enumeration is duplicate-free and lexicographically ordered in the solved
/// parameter coordinates.
struct KernelEnumeration {
    long long modulus = 1;
    int dim = 0;
    std::vector<std::vector<long long>> generators;
    std::vector<long long> orders;
    long long size = 1;

    std::vector<long long> element(long long index) const;
    void element_into(long long index, std::span<long long> out) const;
};

KernelEnumeration kernel_mod(const IntMatrix& M, long long m);

} // namespace charcount
