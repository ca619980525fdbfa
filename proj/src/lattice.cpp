#include "charcount/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include <gmpxx.h>

namespace charcount {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> data) {
    int r = static_cast<int>(data.size());
    int c = r == 0 ? 0 : static_cast<int>(data.begin()->size());
    IntMatrix m(r, c);
    int i = 0;
    for (const auto& row : data) {
        if (static_cast<int>(row.size()) != c)
            throw Error(Errc::InvalidArgument, "ragged matrix initializer");
        int j = 0;
        for (long long x : row) m.at(i, j++) = x;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::with_ones_row() const {
    IntMatrix m(rows + 1, cols);
    std::copy(a.begin(), a.end(), m.a.begin());
    for (int j = 0; j < cols; ++j) m.at(rows, j) = 1;
    return m;
}

std::vector<long long> SmithNormalForm::diagonal() const {
    int n = std::min(D.rows, D.cols);
    std::vector<long long> d(n);
    for (int i = 0; i < n; ++i) d[i] = D.at(i, i);
    return d;
}

namespace {

// Smith normal form over Z. Entries are mpz so intermediate growth can never
// overflow; minimal-absolute-value pivoting keeps them small anyway.
struct ZMat {
    int rows, cols;
    std::vector<mpz_class> a;
    ZMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    mpz_class& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
};

ZMat zmat_identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void swap_rows(ZMat& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(ZMat& m, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void add_row_multiple(ZMat& m, int dst, int src, const mpz_class& f) {
    for (int c = 0; c < m.cols; ++c) m.at(dst, c) += f * m.at(src, c);
}

void add_col_multiple(ZMat& m, int dst, int src, const mpz_class& f) {
    for (int r = 0; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
}

void negate_row(ZMat& m, int i) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

IntMatrix to_int_matrix(const ZMat& m) {
    IntMatrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) {
        if (!m.a[i].fits_slong_p())
            throw Error(Errc::InvalidArgument, "Smith normal form entry exceeds 64 bits");
        out.a[i] = m.a[i].get_si();
    }
    return out;
}

} // namespace

SmithNormalForm smith_normal_form(const IntMatrix& M) {
    const int rows = M.rows, cols = M.cols;
    ZMat D(rows, cols);
    for (std::size_t i = 0; i < M.a.size(); ++i) D.a[i] = M.a[i];
    ZMat U = zmat_identity(rows);
    ZMat V = zmat_identity(cols);

    const int n = std::min(rows, cols);
    for (int s = 0; s < n; ++s) {
        for (;;) {
            // Move the smallest nonzero entry of the trailing block to (s,s).
            int pr = -1, pc = -1;
            mpz_class best;
            for (int i = s; i < rows; ++i)
                for (int j = s; j < cols; ++j) {
                    if (D.at(i, j) == 0) continue;
                    mpz_class v = abs(D.at(i, j));
                    if (pr < 0 || v < best) {
                        best = v;
                        pr = i;
                        pc = j;
                    }
                }
            if (pr < 0) break; // trailing block is zero
            swap_rows(D, s, pr);
            swap_rows(U, s, pr);
            swap_cols(D, s, pc);
            swap_cols(V, s, pc);

            bool clean = true;
            for (int i = s + 1; i < rows; ++i) {
                if (D.at(i, s) == 0) continue;
                mpz_class f = -(D.at(i, s) / D.at(s, s));
                add_row_multiple(D, i, s, f);
                add_row_multiple(U, i, s, f);
                if (D.at(i, s) != 0) clean = false;
            }
            for (int j = s + 1; j < cols; ++j) {
                if (D.at(s, j) == 0) continue;
                mpz_class f = -(D.at(s, j) / D.at(s, s));
                add_col_multiple(D, j, s, f);
                add_col_multiple(V, j, s, f);
                if (D.at(s, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the whole trailing block to keep d_s | d_{s+1}.
            bool divides = true;
            for (int i = s + 1; i < rows && divides; ++i)
                for (int j = s + 1; j < cols && divides; ++j)
                    if (D.at(i, j) % D.at(s, s) != 0) {
                        add_row_multiple(D, s, i, 1);
                        add_row_multiple(U, s, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (D.at(s, s) < 0) {
            negate_row(D, s);
            negate_row(U, s);
        }
    }

    SmithNormalForm out{to_int_matrix(U), to_int_matrix(D), to_int_matrix(V)};
    return out;
}

KernelEnumeration kernel_mod(const IntMatrix& M, long long m) {
    if (m < 1) throw Error(Errc::InvalidArgument, "modulus must be positive");
    SmithNormalForm snf = smith_normal_form(M);
    const int N = M.cols;

    KernelEnumeration ker;
    ker.modulus = m;
    ker.dim = N;
    ker.generators.reserve(N);
    ker.orders.reserve(N);

    // With U M V = D, v = V y solves M v = 0 (mod m) iff d_j y_j = 0 (mod m)
    // per coordinate; coordinate j then ranges over gcd(d_j, m) multiples of
    // m / gcd(d_j, m), and V carries them back.
    for (int j = 0; j < N; ++j) {
        long long d = j < std::min(M.rows, M.cols) ? snf.D.at(j, j) : 0;
        long long g = d == 0 ? m : std::gcd(d, m);
        long long step = m / g;
        std::vector<long long> gen(N);
        for (int i = 0; i < N; ++i) {
            long long v = ((snf.V.at(i, j) % m) + m) % m;
            gen[i] = (v * step) % m;
        }
        ker.generators.push_back(std::move(gen));
        ker.orders.push_back(g);
        if (ker.size > (1LL << 62) / g)
            throw Error(Errc::EnumerationTooLarge, "kernel size exceeds 2^62");
        ker.size *= g;
    }
    return ker;
}

std::vector<long long> KernelEnumeration::element(long long index) const {
    std::vector<long long> v(dim, 0);
    element_into(index, v);
    return v;
}

void KernelEnumeration::element_into(long long index, std::span<long long> out) const {
    std::fill(out.begin(), out.end(), 0LL);
    for (int j = static_cast<int>(orders.size()) - 1; j >= 0; --j) {
        long long a = index % orders[j];
        index /= orders[j];
        if (a == 0) continue;
        const auto& gen = generators[j];
        for (int i = 0; i < dim; ++i) {
            out[i] += a * gen[i] % modulus;
            if (out[i] >= modulus) out[i] -= modulus;
        }
    }
}

} // namespace charcount
