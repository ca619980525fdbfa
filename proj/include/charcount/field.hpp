#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charcount/errors.hpp"

namespace charcount {

/// An element of F_q = F_p[t]/(h), stored as the base-p digit packing of its
/// coordinate vector (c_0, ..., c_{e-1}) w.r.t. 1, t, ..., t^{e-1}:
/// value = sum c_i p^i. Zero is value 0. Elements from different fields must
/// not be mixed; the owning FieldDescriptor performs all arithmetic.
struct FieldElement {
    std::uint32_t v = 0;
    friend bool operator==(FieldElement, FieldElement) = default;
    friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// Construction-time knobs. `generator_override` replaces the canonical
/// (lexicographically least) generator; it must have order exactly q-1.
struct FieldOptions {
    std::optional<std::vector<long long>> modulus; // coefficients c_0..c_e, low to high, monic
    std::optional<std::vector<long long>> generator_override;
    long long max_q = 1 << 16;
};

/// A concrete model of the finite field with q = p^e elements.
///
/// The modulus defaults to the first monic irreducible of degree e in
/// lexicographic coefficient order (c_0 compared first), and the generator to
/// the lexicographically least element of multiplicative order q-1, so that a
/// given (p, e) always produces bit-identical tables. Immutable once built;
/// concurrent readers need no synchronization.
class FieldDescriptor {
public:
    static FieldDescriptor make(long long p, int e, const FieldOptions& options = {});
    static FieldDescriptor make(long long p, int e, const std::vector<long long>& modulus);

    long long p() const { return p_; }
    int e() const { return e_; }
    long long q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }
    FieldElement generator() const { return gen_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return one_; }
    bool is_zero(FieldElement x) const { return x.v == 0; }

    /// Embeds an integer into the prime subfield (reduces mod p).
    FieldElement from_int(long long c) const;
    /// Packs a coordinate vector (length <= e, entries reduced mod p).
    FieldElement from_coeffs(const std::vector<long long>& coeffs) const;
    std::vector<int> coeffs(FieldElement x) const;

    FieldElement add(FieldElement x, FieldElement y) const;
    FieldElement sub(FieldElement x, FieldElement y) const;
    FieldElement neg(FieldElement x) const;
    FieldElement mul(FieldElement x, FieldElement y) const;
    FieldElement div(FieldElement x, FieldElement y) const; // DivisionByZero
    FieldElement inv(FieldElement x) const;                 // DivisionByZero
    /// x^k, with k arbitrary (negative k requires x != 0). pow(0,0) = 1.
    FieldElement pow(FieldElement x, long long k) const;

    /// Discrete log w.r.t. the generator, in [0, q-1). LogOfZero on 0.
    long long dlog(FieldElement x) const;
    /// generator^k for any integer k (reduced mod q-1).
    FieldElement gen_pow(long long k) const;

    /// Tr(x) = x + x^p + ... + x^{p^{e-1}}, as a residue in [0, p).
    long long trace(FieldElement x) const;

    /// Elements enumerated by packed value: element(0) = 0, element(i).v = i.
    FieldElement element(long long index) const { return {static_cast<std::uint32_t>(index)}; }

    /// Canonical CLI spec string: "q=p" for e = 1, else "q=p^e;mod=c0,...,1".
    std::string spec_string() const;

private:
    FieldDescriptor() = default;

    long long p_ = 0;
    long long q_ = 0;
    int e_ = 0;
    std::vector<int> modulus_; // length e+1, monic
    FieldElement gen_{0};
    FieldElement one_{0};
    std::vector<std::uint32_t> exp_; // exp_[k] = generator^k, k in [0, q-1)
    std::vector<long long> log_;     // log_[v] in [0, q-1); log_[0] = -1
    std::vector<long long> trace_;   // trace of every element
};

bool is_prime(long long n);

/// All prime powers p^e <= qmax in increasing order.
std::vector<long long> prime_powers_upto(long long qmax);

/// Factors a prime power; returns (p, e) or nothing if n is not one.
std::optional<std::pair<long long, int>> as_prime_power(long long n);

} // namespace charcount
