#pragma once

#include <vector>

#include "charcount/field.hpp"
#include "charcount/lattice.hpp"
#include "charcount/poly.hpp"

namespace charcount {

// Literal enumerations used as ground truth for the character-sum engines.
// They share the field arithmetic but none of the formula machinery: no
// characters, no Gauss sums, no Smith normal form.
namespace oracle {

inline constexpr long long default_torus_cap = 100'000'000;
inline constexpr long long default_projective_cap = 10'000'000;
inline constexpr long long default_kernel_cap = 10'000'000;

/// #{x in (F_q^x)^n : f(x) = 0} by walking the whole torus.
long long brute_torus_count(const FieldDescriptor& F, const SparsePoly& f,
                            long long cap = default_torus_cap);

/// Common projective zeros counted over canonical representatives (first
/// nonzero coordinate scaled to 1). An empty system counts all of P^{n}.
long long brute_projective_count(const FieldDescriptor& F, const std::vector<SparsePoly>& polys,
                                 int nvars, long long cap = default_projective_cap);

/// {v in (Z/m)^N : M v = 0 (mod m)} by scanning all m^N vectors; sorted.
std::vector<std::vector<long long>> brute_kernel(const IntMatrix& M, long long m,
                                                 long long cap = default_kernel_cap);

} // namespace oracle
} // namespace charcount
