#pragma once

#include <complex>
#include <mutex>
#include <vector>

#include "charcount/field.hpp"

namespace charcount {

using Complex = std::complex<double>;

struct OrthogonalityReport {
    double additive_dev = 0.0;       // sum_w theta(wx) vs {q at x=0, 0 else}
    double multiplicative_dev = 0.0; // sum_x chi(x)   vs {q-1 at chi=eps, 0 else}
    double dual_dev = 0.0;           // sum_chi chi(x) vs {q-1 at x=1, 0 else}
    double max_dev() const;
};

/// Character data of a fixed field: the additive character
/// theta(x) = exp(2*pi*i * shift * Tr(x) / p) for a shift in F_p^x, the
/// multiplicative characters chi_k(g^a) = exp(2*pi*i * k * a / (q-1)) indexed
/// by k in Z/(q-1) (extended by chi(0) = 0), and the Gauss sums
/// G(chi_k) = sum over units of theta(x) chi_k(x).
///
/// Gauss sums are memoized: the full table is built on first use and shared
/// behind a once-flag, so const access is thread-safe. The referenced field
/// must outlive this object.
class CharacterSystem {
public:
    explicit CharacterSystem(const FieldDescriptor& field, long long theta_shift = 1);

    const FieldDescriptor& field() const { return *field_; }
    long long theta_shift() const { return shift_; }

    Complex theta(FieldElement x) const;
    Complex chi(long long k, FieldElement x) const;
    /// chi_k at a unit given by its discrete log; avoids the zero branch.
    Complex chi_at_dlog(long long k, long long dlog_x) const;
    /// Root-of-unity lookup: exp(2*pi*i * a / (q-1)) for any integer a.
    Complex unit_root(long long a) const;

    Complex gauss_sum(long long k) const;

    /// Multiplicative-character expansion of theta at a unit; agrees with
    /// theta() to ~1e-12. Throws ZeroArgument at x = 0.
    Complex theta_via_gauss(FieldElement x) const;

    OrthogonalityReport orthogonality_check() const;

private:
    const std::vector<Complex>& gauss_table() const;

    const FieldDescriptor* field_;
    long long shift_;
    std::vector<Complex> p_roots_;    // exp(2*pi*i * j / p)
    std::vector<Complex> unit_roots_; // exp(2*pi*i * a / (q-1))
    mutable std::once_flag gauss_once_;
    mutable std::vector<Complex> gauss_;
};

/// Compensated (Kahan) accumulator; keeps long character sums reproducible
/// and accurate in a fixed iteration order.
class KahanSum {
public:
    void add(Complex term);
    Complex value() const { return sum_; }

private:
    Complex sum_{0.0, 0.0};
    Complex comp_{0.0, 0.0};
};

} // namespace charcount
