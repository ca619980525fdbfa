#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charcount/field.hpp"
#include "charcount/lattice.hpp"

namespace charcount {

struct Monomial {
    std::vector<int> exps; // one exponent per variable; may be negative (Laurent)
    FieldElement coeff;    // never zero in a canonical polynomial
};

/// Sparse multivariate (Laurent) polynomial over a fixed field. Canonical
/// form: like terms merged, zero coefficients dropped, monomials sorted
/// lexicographically by exponent vector. The zero polynomial is the empty
/// term list. Coefficients belong to the field the polynomial was built
/// with; the field is passed to each operation rather than stored.
class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(int nvars) : nvars_(nvars) {}

    /// Builds a canonical polynomial from (exponents, integer coefficient)
    /// pairs; coefficients are reduced mod p and like terms merged.
    static SparsePoly from_terms(const FieldDescriptor& F, int nvars,
                                 const std::vector<std::pair<std::vector<int>, long long>>& terms);
    static SparsePoly from_monomials(const FieldDescriptor& F, int nvars,
                                     std::vector<Monomial> monomials);
    /// Takes monomials already in canonical form (sorted, merged, no zeros).
    static SparsePoly adopt_canonical(int nvars, std::vector<Monomial> monomials);

    int nvars() const { return nvars_; }
    bool is_zero() const { return monomials_.empty(); }
    int term_count() const { return static_cast<int>(monomials_.size()); }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    bool has_negative_exponent() const;

    friend bool operator==(const SparsePoly&, const SparsePoly&);

private:
    int nvars_ = 0;
    std::vector<Monomial> monomials_;
};

/// Grammar (whitespace ignored, variables 1-based):
///   poly   := ['-'] term (('+' | '-') term)*
///   term   := coeff ['*' factor ('*' factor)*] | coeff | factor ('*' factor)*
///   coeff  := integer | 'g' ['^' integer]      (g = field generator)
///   factor := 'x' index ['^' integer]          (integer may be negative)
/// Repeated variables multiply: "x1*x1" == "x1^2".
SparsePoly parse_poly(const FieldDescriptor& F, std::string_view text, int nvars);
/// Variant that infers nvars as the highest variable index used.
SparsePoly parse_poly(const FieldDescriptor& F, std::string_view text);

/// Canonical rendering; parse_poly(F, print_poly(F, f), f.nvars()) == f.
std::string print_poly(const FieldDescriptor& F, const SparsePoly& f);

SparsePoly multiply(const FieldDescriptor& F, const SparsePoly& f, const SparsePoly& g);

/// Drops every monomial with a positive exponent on a zeroed variable and
/// re-indexes the result over the surviving variables (in original order).
/// `zeroed_vars` holds 1-based variable indices. NegativeExponent if f is
/// not an ordinary polynomial.
SparsePoly restrict_to_stratum(const SparsePoly& f, const std::vector<int>& zeroed_vars);

/// Exponent matrix R (one column per monomial, canonical order) and matching
/// coefficients; EmptyPolynomial on the zero polynomial. Appending the
/// all-ones row (IntMatrix::with_ones_row) yields the torus-count matrix R~.
struct ExponentData {
    IntMatrix R; // nvars x N
    std::vector<FieldElement> coeffs;
};
ExponentData exponent_data(const SparsePoly& f);

/// degree is empty for the zero polynomial (homogeneous by convention) and
/// when the polynomial is not homogeneous.
struct HomogeneityInfo {
    bool homogeneous = false;
    std::optional<long long> degree;
};
HomogeneityInfo is_homogeneous(const SparsePoly& f);

/// Evaluates f at a point. Negative exponents require the corresponding
/// coordinate to be a unit (DivisionByZero otherwise).
FieldElement eval_poly(const FieldDescriptor& F, const SparsePoly& f,
                       std::span<const FieldElement> point);

} // namespace charcount
