#include "charcount/field.hpp"

#include <algorithm>
#include <sstream>

namespace charcount {

namespace {

// Digit vectors (low to high, entries in [0,p)) back the construction-time
// polynomial arithmetic; the fast table-based operations take over once the
// generator has been found.

using Digits = std::vector<int>;

std::uint32_t pack(const Digits& c, long long p) {
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * static_cast<std::uint64_t>(p) + c[i];
    return static_cast<std::uint32_t>(v);
}

Digits unpack(std::uint32_t v, long long p, int e) {
    Digits c(e, 0);
    for (int i = 0; i < e && v != 0; ++i) {
        c[i] = static_cast<int>(v % p);
        v = static_cast<std::uint32_t>(v / p);
    }
    return c;
}

Digits raw_add(const Digits& x, const Digits& y, long long p) {
    Digits r(std::max(x.size(), y.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        long long s = (i < x.size() ? x[i] : 0) + (i < y.size() ? y[i] : 0);
        r[i] = static_cast<int>(s % p);
    }
    return r;
}

// Remainder of x modulo a monic divisor, both over F_p.
Digits raw_mod(Digits x, const Digits& divisor, long long p) {
    int dd = static_cast<int>(divisor.size()) - 1;
    for (int i = static_cast<int>(x.size()) - 1; i >= dd; --i) {
        long long f = x[i];
        if (f == 0) continue;
        x[i] = 0;
        for (int j = 0; j < dd; ++j) {
            long long t = x[i - dd + j] - f * divisor[j];
            t %= p;
            if (t < 0) t += p;
            x[i - dd + j] = static_cast<int>(t);
        }
    }
    x.resize(dd);
    return x;
}

Digits raw_mul(const Digits& x, const Digits& y, const Digits& modulus, long long p) {
    Digits prod(x.size() + y.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            long long t = prod[i + j] + static_cast<long long>(x[i]) * y[j];
            prod[i + j] = static_cast<int>(t % p);
        }
    }
    return raw_mod(std::move(prod), modulus, p);
}

Digits raw_pow(Digits base, long long k, const Digits& modulus, long long p, int e) {
    Digits r(e, 0);
    r[0] = 1;
    while (k > 0) {
        if (k & 1) r = raw_mul(r, base, modulus, p);
        base = raw_mul(base, base, modulus, p);
        k >>= 1;
    }
    return r;
}

bool raw_is_zero(const Digits& x) {
    return std::all_of(x.begin(), x.end(), [](int c) { return c == 0; });
}

bool raw_is_one(const Digits& x) {
    if (x.empty() || x[0] != 1) return false;
    return std::all_of(x.begin() + 1, x.end(), [](int c) { return c == 0; });
}

// Trial division by every monic polynomial of degree <= e/2.
bool modulus_irreducible(const Digits& h, long long p, int e) {
    for (int d = 1; 2 * d <= e; ++d) {
        Digits div(d + 1, 0);
        div[d] = 1;
        // Odometer over the d low coefficients.
        while (true) {
            if (raw_is_zero(raw_mod(h, div, p))) return false;
            int i = 0;
            while (i < d && div[i] == p - 1) div[i++] = 0;
            if (i == d) break;
            ++div[i];
        }
    }
    return true;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> fs;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Decodes a lexicographic rank into coordinates with c_0 most significant,
// so increasing rank walks (c_0, ..., c_{e-1}) in lexicographic order.
Digits lex_decode(long long rank, long long p, int e) {
    Digits c(e, 0);
    for (int i = e - 1; i >= 0; --i) {
        c[i] = static_cast<int>(rank % p);
        rank /= p;
    }
    return c;
}

constexpr long long kHardMaxQ = 1LL << 20;

} // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<long long, int>> as_prime_power(long long n) {
    if (n < 2) return std::nullopt;
    long long p = n;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    int e = 0;
    long long m = n;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) return std::nullopt;
    return std::make_pair(p, e);
}

std::vector<long long> prime_powers_upto(long long qmax) {
    std::vector<long long> qs;
    for (long long n = 2; n <= qmax; ++n)
        if (as_prime_power(n)) qs.push_back(n);
    return qs;
}

FieldDescriptor FieldDescriptor::make(long long p, int e, const std::vector<long long>& modulus) {
    FieldOptions options;
    options.modulus = modulus;
    return make(p, e, options);
}

FieldDescriptor FieldDescriptor::make(long long p, int e, const FieldOptions& options) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");

    long long cap = std::min(options.max_q, kHardMaxQ);
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > cap)
            throw Error(Errc::FieldTooLarge,
                        "q = " + std::to_string(p) + "^" + std::to_string(e) + " exceeds cap " +
                            std::to_string(cap));
    }

    FieldDescriptor F;
    F.p_ = p;
    F.e_ = e;
    F.q_ = q;

    if (options.modulus) {
        const auto& given = *options.modulus;
        if (static_cast<int>(given.size()) != e + 1)
            throw Error(Errc::InvalidArgument, "modulus must have degree e (e+1 coefficients)");
        Digits h(e + 1);
        for (int i = 0; i <= e; ++i) h[i] = static_cast<int>(((given[i] % p) + p) % p);
        if (h[e] != 1) throw Error(Errc::InvalidArgument, "modulus must be monic");
        if (!modulus_irreducible(h, p, e))
            throw Error(Errc::ReducibleModulus, "modulus is reducible over F_p");
        F.modulus_.assign(h.begin(), h.end());
    } else {
        // First monic irreducible of degree e in lexicographic coefficient order.
        bool found = false;
        for (long long rank = 0; rank < q && !found; ++rank) {
            Digits c = lex_decode(rank, p, e);
            Digits h(c.begin(), c.end());
            h.push_back(1);
            if (modulus_irreducible(h, p, e)) {
                F.modulus_.assign(h.begin(), h.end());
                found = true;
            }
        }
        if (!found) throw Error(Errc::ReducibleModulus, "no irreducible modulus found"); // unreachable
    }

    Digits mod_digits(F.modulus_.begin(), F.modulus_.end());
    const long long m = q - 1;
    const auto factors = prime_factors(m);

    auto has_full_order = [&](const Digits& x) {
        if (raw_is_zero(x)) return false;
        for (long long f : factors)
            if (raw_is_one(raw_pow(x, m / f, mod_digits, p, e))) return false;
        return true;
    };

    Digits gen;
    if (options.generator_override) {
        const auto& ov = *options.generator_override;
        if (static_cast<int>(ov.size()) > e)
            throw Error(Errc::InvalidArgument, "generator override has too many coordinates");
        gen.assign(e, 0);
        for (std::size_t i = 0; i < ov.size(); ++i)
            gen[i] = static_cast<int>(((ov[i] % p) + p) % p);
        if (!has_full_order(gen))
            throw Error(Errc::InvalidArgument, "generator override does not have order q-1");
    } else {
        // Least element of order q-1 in lexicographic coefficient order.
        bool found = false;
        for (long long rank = 1; rank < q && !found; ++rank) {
            Digits c = lex_decode(rank, p, e);
            if (has_full_order(c)) {
                gen = c;
                found = true;
            }
        }
        if (!found) throw Error(Errc::InvalidArgument, "no generator found"); // unreachable
    }
    F.gen_ = FieldElement{pack(gen, p)};
    F.one_ = FieldElement{1};

    // Discrete-log tables: exp_[k] = generator^k, log_ its inverse.
    F.exp_.assign(m, 0);
    F.log_.assign(q, -1);
    Digits cur(e, 0);
    cur[0] = 1;
    for (long long k = 0; k < m; ++k) {
        std::uint32_t v = pack(cur, p);
        F.exp_[k] = v;
        if (F.log_[v] != -1)
            throw Error(Errc::InvalidArgument, "generator order is not q-1"); // unreachable
        F.log_[v] = k;
        cur = raw_mul(cur, gen, mod_digits, p);
    }

    // Trace of every element: Tr(x) = sum of the e Frobenius conjugates.
    F.trace_.assign(q, 0);
    for (long long v = 1; v < q; ++v) {
        long long a = F.log_[v];
        Digits acc(e, 0);
        for (int i = 0; i < e; ++i) {
            long long exponent = a;
            for (int j = 0; j < i; ++j) exponent = (exponent * p) % m;
            acc = raw_add(acc, unpack(F.exp_[exponent], p, e), p);
        }
        for (std::size_t i = 1; i < acc.size(); ++i)
            if (acc[i] != 0)
                throw Error(Errc::InvalidArgument, "trace left the prime subfield"); // unreachable
        F.trace_[v] = acc[0];
    }
    return F;
}

FieldElement FieldDescriptor::from_int(long long c) const {
    long long r = ((c % p_) + p_) % p_;
    return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement FieldDescriptor::from_coeffs(const std::vector<long long>& coeffs) const {
    if (static_cast<int>(coeffs.size()) > e_)
        throw Error(Errc::InvalidArgument, "too many coordinates for this field");
    Digits c(e_, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        c[i] = static_cast<int>(((coeffs[i] % p_) + p_) % p_);
    return FieldElement{pack(c, p_)};
}

std::vector<int> FieldDescriptor::coeffs(FieldElement x) const { return unpack(x.v, p_, e_); }

FieldElement FieldDescriptor::add(FieldElement x, FieldElement y) const {
    if (p_ == 2) return FieldElement{x.v ^ y.v};
    std::uint32_t r = 0, mult = 1;
    std::uint32_t a = x.v, b = y.v;
    for (int i = 0; i < e_; ++i) {
        std::uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= static_cast<std::uint32_t>(p_);
        r += s * mult;
        a /= p_;
        b /= p_;
        mult *= static_cast<std::uint32_t>(p_);
    }
    return FieldElement{r};
}

FieldElement FieldDescriptor::neg(FieldElement x) const {
    if (p_ == 2) return x;
    std::uint32_t r = 0, mult = 1;
    std::uint32_t a = x.v;
    for (int i = 0; i < e_; ++i) {
        std::uint32_t d = a % p_;
        r += (d == 0 ? 0 : static_cast<std::uint32_t>(p_) - d) * mult;
        a /= p_;
        mult *= static_cast<std::uint32_t>(p_);
    }
    return FieldElement{r};
}

FieldElement FieldDescriptor::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement FieldDescriptor::mul(FieldElement x, FieldElement y) const {
    if (x.v == 0 || y.v == 0) return zero();
    long long k = log_[x.v] + log_[y.v];
    if (k >= q_ - 1) k -= q_ - 1;
    return FieldElement{exp_[k]};
}

FieldElement FieldDescriptor::inv(FieldElement x) const {
    if (x.v == 0) throw Error(Errc::DivisionByZero, "division by zero");
    long long k = log_[x.v];
    return FieldElement{exp_[k == 0 ? 0 : q_ - 1 - k]};
}

FieldElement FieldDescriptor::div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }

FieldElement FieldDescriptor::pow(FieldElement x, long long k) const {
    if (x.v == 0) {
        if (k > 0) return zero();
        if (k == 0) return one();
        throw Error(Errc::DivisionByZero, "negative power of zero");
    }
    long long m = q_ - 1;
    long long km = ((k % m) + m) % m;
    return FieldElement{exp_[(log_[x.v] * km) % m]};
}

long long FieldDescriptor::dlog(FieldElement x) const {
    if (x.v == 0) throw Error(Errc::LogOfZero, "discrete log of zero");
    return log_[x.v];
}

FieldElement FieldDescriptor::gen_pow(long long k) const {
    long long m = q_ - 1;
    return FieldElement{exp_[((k % m) + m) % m]};
}

long long FieldDescriptor::trace(FieldElement x) const { return trace_[x.v]; }

std::string FieldDescriptor::spec_string() const {
    std::ostringstream os;
    if (e_ == 1) {
        os << "q=" << p_;
    } else {
        os << "q=" << p_ << "^" << e_ << ";mod=";
        for (int i = 0; i <= e_; ++i) {
            if (i) os << ",";
            os << modulus_[i];
        }
    }
    return os.str();
}

} // namespace charcount
