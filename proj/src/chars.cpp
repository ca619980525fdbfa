#include "charcount/chars.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace charcount {

namespace {

std::vector<Complex> roots_of_unity(long long n) {
    std::vector<Complex> roots(static_cast<std::size_t>(n));
    for (long long j = 0; j < n; ++j) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        roots[j] = Complex(std::cos(angle), std::sin(angle));
    }
    return roots;
}

} // namespace

double OrthogonalityReport::max_dev() const {
    return std::max({additive_dev, multiplicative_dev, dual_dev});
}

void KahanSum::add(Complex term) {
    Complex y = term - comp_;
    Complex t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
}

CharacterSystem::CharacterSystem(const FieldDescriptor& field, long long theta_shift)
    : field_(&field) {
    long long p = field.p();
    shift_ = ((theta_shift % p) + p) % p;
    if (shift_ == 0)
        throw Error(Errc::InvalidArgument, "theta shift must be a unit of F_p");
    p_roots_ = roots_of_unity(p);
    unit_roots_ = roots_of_unity(field.q() - 1);
}

Complex CharacterSystem::theta(FieldElement x) const {
    long long t = (shift_ * field_->trace(x)) % field_->p();
    return p_roots_[t];
}

Complex CharacterSystem::unit_root(long long a) const {
    long long m = field_->q() - 1;
    return unit_roots_[((a % m) + m) % m];
}

Complex CharacterSystem::chi_at_dlog(long long k, long long dlog_x) const {
    long long m = field_->q() - 1;
    k = ((k % m) + m) % m;
    dlog_x = ((dlog_x % m) + m) % m;
    return unit_roots_[(k * dlog_x) % m];
}

Complex CharacterSystem::chi(long long k, FieldElement x) const {
    if (field_->is_zero(x)) return Complex(0.0, 0.0);
    return chi_at_dlog(k, field_->dlog(x));
}

const std::vector<Complex>& CharacterSystem::gauss_table() const {
    std::call_once(gauss_once_, [this] {
        const long long m = field_->q() - 1;
        // theta at every unit, indexed by discrete log.
        std::vector<Complex> theta_units(static_cast<std::size_t>(m));
        for (long long a = 0; a < m; ++a) theta_units[a] = theta(field_->gen_pow(a));
        gauss_.resize(static_cast<std::size_t>(m));
        for (long long k = 0; k < m; ++k) {
            KahanSum sum;
            for (long long a = 0; a < m; ++a) sum.add(theta_units[a] * unit_roots_[(k * a) % m]);
            gauss_[k] = sum.value();
        }
    });
    return gauss_;
}

Complex CharacterSystem::gauss_sum(long long k) const {
    long long m = field_->q() - 1;
    return gauss_table()[((k % m) + m) % m];
}

Complex CharacterSystem::theta_via_gauss(FieldElement x) const {
    if (field_->is_zero(x)) throw Error(Errc::ZeroArgument, "theta_via_gauss needs a unit");
    const long long m = field_->q() - 1;
    const auto& table = gauss_table();
    long long a = field_->dlog(x);
    KahanSum sum;
    for (long long k = 0; k < m; ++k)
        sum.add(table[(m - k) % m] * unit_roots_[(k * a) % m]);
    return sum.value() / static_cast<double>(m);
}

OrthogonalityReport CharacterSystem::orthogonality_check() const {
    const long long q = field_->q();
    const long long m = q - 1;
    OrthogonalityReport report;

    // (i) additive: sum over w in F_q of theta(w*x).
    for (long long xi = 0; xi < q; ++xi) {
        FieldElement x = field_->element(xi);
        KahanSum sum;
        for (long long wi = 0; wi < q; ++wi)
            sum.add(theta(field_->mul(field_->element(wi), x)));
        Complex expected(xi == 0 ? static_cast<double>(q) : 0.0, 0.0);
        report.additive_dev = std::max(report.additive_dev, std::abs(sum.value() - expected));
    }

    // (ii) multiplicative: sum over units of chi_k.
    for (long long k = 0; k < m; ++k) {
        KahanSum sum;
        for (long long a = 0; a < m; ++a) sum.add(unit_roots_[(k * a) % m]);
        Complex expected(k == 0 ? static_cast<double>(m) : 0.0, 0.0);
        report.multiplicative_dev =
            std::max(report.multiplicative_dev, std::abs(sum.value() - expected));
    }

    // (iii) dual: sum over all characters at a fixed unit.
    for (long long a = 0; a < m; ++a) {
        KahanSum sum;
        for (long long k = 0; k < m; ++k) sum.add(unit_roots_[(k * a) % m]);
        Complex expected(a == 0 ? static_cast<double>(m) : 0.0, 0.0);
        report.dual_dev = std::max(report.dual_dev, std::abs(sum.value() - expected));
    }
    return report;
}

} // namespace charcount
