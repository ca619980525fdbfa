#include "charcount/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace charcount {

namespace {

void canonicalize(const FieldDescriptor& F, std::vector<Monomial>& ms) {
    std::sort(ms.begin(), ms.end(),
              [](const Monomial& a, const Monomial& b) { return a.exps < b.exps; });
    std::vector<Monomial> merged;
    for (auto& mono : ms) {
        if (!merged.empty() && merged.back().exps == mono.exps) {
            merged.back().coeff = F.add(merged.back().coeff, mono.coeff);
        } else {
            merged.push_back(std::move(mono));
        }
    }
    std::erase_if(merged, [&](const Monomial& mono) { return F.is_zero(mono.coeff); });
    ms = std::move(merged);
}

} // namespace

bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.nvars_ != b.nvars_ || a.monomials_.size() != b.monomials_.size()) return false;
    for (std::size_t i = 0; i < a.monomials_.size(); ++i)
        if (a.monomials_[i].exps != b.monomials_[i].exps ||
            a.monomials_[i].coeff != b.monomials_[i].coeff)
            return false;
    return true;
}

bool SparsePoly::has_negative_exponent() const {
    for (const auto& mono : monomials_)
        for (int e : mono.exps)
            if (e < 0) return true;
    return false;
}

SparsePoly SparsePoly::from_monomials(const FieldDescriptor& F, int nvars,
                                      std::vector<Monomial> monomials) {
    if (nvars < 0) throw Error(Errc::InvalidArgument, "nvars must be nonnegative");
    for (const auto& mono : monomials)
        if (static_cast<int>(mono.exps.size()) != nvars)
            throw Error(Errc::InvalidArgument, "exponent vector length must equal nvars");
    SparsePoly f(nvars);
    f.monomials_ = std::move(monomials);
    canonicalize(F, f.monomials_);
    return f;
}

SparsePoly SparsePoly::adopt_canonical(int nvars, std::vector<Monomial> monomials) {
    SparsePoly f(nvars);
    f.monomials_ = std::move(monomials);
    return f;
}

SparsePoly SparsePoly::from_terms(
    const FieldDescriptor& F, int nvars,
    const std::vector<std::pair<std::vector<int>, long long>>& terms) {
    std::vector<Monomial> ms;
    ms.reserve(terms.size());
    for (const auto& [exps, c] : terms) ms.push_back(Monomial{exps, F.from_int(c)});
    return from_monomials(F, nvars, std::move(ms));
}

namespace {

struct Parser {
    const FieldDescriptor& F;
    std::string_view text;
    std::size_t pos = 0;
    int nvars;     // -1: infer
    int max_seen = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos;
        return true;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw Error(Errc::SyntaxError, what + " at position " + std::to_string(pos), pos);
    }

    long long parse_integer() {
        skip_ws();
        std::size_t start = pos;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer");
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            int digit = text[pos] - '0';
            if (value > (std::numeric_limits<long long>::max() - digit) / 10) {
                pos = start;
                fail("integer literal too large");
            }
            value = value * 10 + digit;
            ++pos;
        }
        return negative ? -value : value;
    }

    // factor := 'x' index ['^' int]; returns (variable index, exponent).
    std::pair<int, long long> parse_factor() {
        skip_ws();
        if (pos >= text.size() || text[pos] != 'x') fail("expected variable");
        ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected variable index");
        long long index = parse_integer();
        if (index < 1 || (nvars >= 0 && index > nvars))
            throw Error(Errc::VariableOutOfRange,
                        "variable x" + std::to_string(index) + " out of range", pos);
        max_seen = std::max(max_seen, static_cast<int>(index));
        long long exponent = 1;
        if (consume('^')) exponent = parse_integer();
        return {static_cast<int>(index), exponent};
    }

    // term := [sign already handled] (integer | 'g' ['^' int])? ['*'] factor ('*' factor)*
    // With width < 0 the term is only scanned (for nvars inference).
    Monomial parse_term(bool negative, int width) {
        skip_ws();
        FieldElement coeff = F.one();
        bool have_coeff = false;
        if (pos < text.size() &&
            (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == 'g')) {
            if (text[pos] == 'g') {
                ++pos;
                long long k = consume('^') ? parse_integer() : 1;
                coeff = F.gen_pow(k);
            } else {
                coeff = F.from_int(parse_integer());
            }
            have_coeff = true;
            consume('*');
        }
        Monomial mono;
        if (width > 0) mono.exps.assign(width, 0);
        bool have_factor = false;
        if (peek_is('x')) {
            for (;;) {
                auto [index, exponent] = parse_factor();
                if (width > 0) mono.exps[index - 1] += static_cast<int>(exponent);
                have_factor = true;
                if (!consume('*')) break;
            }
        }
        if (!have_coeff && !have_factor) fail("expected term");
        mono.coeff = negative ? F.neg(coeff) : coeff;
        return mono;
    }
};

} // namespace

SparsePoly parse_poly(const FieldDescriptor& F, std::string_view text, int nvars) {
    if (nvars < 0) throw Error(Errc::InvalidArgument, "nvars must be nonnegative");
    Parser parser{F, text, 0, nvars};
    std::vector<Monomial> ms;
    bool negative = parser.consume('-');
    if (!negative) parser.consume('+');
    for (;;) {
        ms.push_back(parser.parse_term(negative, nvars));
        parser.skip_ws();
        if (parser.pos == text.size()) break;
        if (parser.consume('+')) negative = false;
        else if (parser.consume('-')) negative = true;
        else parser.fail("expected '+' or '-'");
    }
    return SparsePoly::from_monomials(F, nvars, std::move(ms));
}

SparsePoly parse_poly(const FieldDescriptor& F, std::string_view text) {
    // First pass with unchecked indices just to size the exponent vectors.
    Parser probe{F, text, 0, -1};
    {
        std::vector<Monomial> ignored;
        bool negative = probe.consume('-');
        if (!negative) probe.consume('+');
        for (;;) {
            probe.parse_term(negative, 0); // width 0: exponents discarded below
            probe.skip_ws();
            if (probe.pos == text.size()) break;
            if (probe.consume('+')) negative = false;
            else if (probe.consume('-')) negative = true;
            else probe.fail("expected '+' or '-'");
        }
    }
    return parse_poly(F, text, probe.max_seen);
}

std::string print_poly(const FieldDescriptor& F, const SparsePoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& mono : f.monomials()) {
        if (!first) os << " + ";
        first = false;
        bool unit_coeff = mono.coeff == F.one();
        bool has_vars =
            std::any_of(mono.exps.begin(), mono.exps.end(), [](int e) { return e != 0; });
        if (!unit_coeff || !has_vars) {
            auto c = F.coeffs(mono.coeff);
            bool prime_subfield =
                std::all_of(c.begin() + 1, c.end(), [](int ci) { return ci == 0; });
            if (prime_subfield) os << c[0];
            else os << "g^" << F.dlog(mono.coeff);
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < mono.exps.size(); ++i) {
            if (mono.exps[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << "x" << i + 1;
            if (mono.exps[i] != 1) os << "^" << mono.exps[i];
        }
    }
    return os.str();
}

SparsePoly multiply(const FieldDescriptor& F, const SparsePoly& f, const SparsePoly& g) {
    if (f.nvars() != g.nvars())
        throw Error(Errc::InvalidArgument, "multiplying polynomials with different nvars");
    std::vector<Monomial> ms;
    ms.reserve(static_cast<std::size_t>(f.term_count()) * g.term_count());
    for (const auto& a : f.monomials())
        for (const auto& b : g.monomials()) {
            Monomial mono;
            mono.exps.resize(a.exps.size());
            for (std::size_t i = 0; i < a.exps.size(); ++i) mono.exps[i] = a.exps[i] + b.exps[i];
            mono.coeff = F.mul(a.coeff, b.coeff);
            ms.push_back(std::move(mono));
        }
    return SparsePoly::from_monomials(F, f.nvars(), std::move(ms));
}

SparsePoly restrict_to_stratum(const SparsePoly& f, const std::vector<int>& zeroed_vars) {
    if (f.has_negative_exponent())
        throw Error(Errc::NegativeExponent, "stratum restriction needs nonnegative exponents");
    std::vector<bool> zeroed(f.nvars(), false);
    for (int v : zeroed_vars) {
        if (v < 1 || v > f.nvars())
            throw Error(Errc::VariableOutOfRange, "zeroed variable out of range");
        zeroed[v - 1] = true;
    }
    std::vector<int> survivors;
    for (int i = 0; i < f.nvars(); ++i)
        if (!zeroed[i]) survivors.push_back(i);

    std::vector<Monomial> ms;
    for (const auto& mono : f.monomials()) {
        bool killed = false;
        for (int i = 0; i < f.nvars() && !killed; ++i)
            if (zeroed[i] && mono.exps[i] > 0) killed = true;
        if (killed) continue;
        Monomial kept;
        kept.coeff = mono.coeff;
        kept.exps.reserve(survivors.size());
        for (int i : survivors) kept.exps.push_back(mono.exps[i]);
        ms.push_back(std::move(kept));
    }
    // Survivors carry exponent 0 on every zeroed variable, so projection
    // keeps exponent vectors distinct and in lexicographic order: the result
    // is canonical as-is.
    SparsePoly out(static_cast<int>(survivors.size()));
    return SparsePoly::adopt_canonical(out.nvars(), std::move(ms));
}

ExponentData exponent_data(const SparsePoly& f) {
    if (f.is_zero()) throw Error(Errc::EmptyPolynomial, "zero polynomial has no exponent data");
    ExponentData data;
    data.R = IntMatrix(f.nvars(), f.term_count());
    data.coeffs.reserve(f.term_count());
    for (int j = 0; j < f.term_count(); ++j) {
        const auto& mono = f.monomials()[j];
        for (int i = 0; i < f.nvars(); ++i) data.R.at(i, j) = mono.exps[i];
        data.coeffs.push_back(mono.coeff);
    }
    return data;
}

HomogeneityInfo is_homogeneous(const SparsePoly& f) {
    HomogeneityInfo info;
    if (f.is_zero()) {
        info.homogeneous = true;
        return info;
    }
    long long degree = 0;
    bool first = true;
    for (const auto& mono : f.monomials()) {
        long long d = 0;
        for (int e : mono.exps) d += e;
        if (first) {
            degree = d;
            first = false;
        } else if (d != degree) {
            return info;
        }
    }
    info.homogeneous = true;
    info.degree = degree;
    return info;
}

FieldElement eval_poly(const FieldDescriptor& F, const SparsePoly& f,
                       std::span<const FieldElement> point) {
    if (static_cast<int>(point.size()) != f.nvars())
        throw Error(Errc::InvalidArgument, "evaluation point has wrong dimension");
    FieldElement acc = F.zero();
    for (const auto& mono : f.monomials()) {
        FieldElement term = mono.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (mono.exps[i] == 0) continue;
            term = F.mul(term, F.pow(point[i], mono.exps[i]));
        }
        acc = F.add(acc, term);
    }
    return acc;
}

} // namespace charcount
