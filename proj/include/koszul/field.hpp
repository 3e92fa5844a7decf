#ifndef KOSZUL_FIELD_HPP
#define KOSZUL_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "koszul/errors.hpp"

namespace koszul {

// Runtime description of the coefficient field: Q or GF(p).
struct FieldSpec {
    enum class Kind { rational, prime };
    Kind kind = Kind::rational;
    std::uint32_t p = 0; // set iff kind == prime

    bool operator==(const FieldSpec&) const = default;

    std::string name() const {
        if (kind == Kind::rational) return "rational";
        return "gf" + std::to_string(p);
    }
};

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Exact rationals backed by GMP.
struct RationalField {
    using Elem = mpq_class;

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::rational, 0}; }
    bool operator==(const RationalField&) const { return true; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long v) const { return Elem(v); }

    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw InternalError("division by zero in rational field");
        return Elem(1) / a;
    }

    // Accepts "n", "-n" and "n/d" with arbitrary-precision parts.
    Elem parse(const std::string& s) const {
        if (s.empty()) throw InputError("empty coefficient");
        try {
            Elem v(s);
            v.canonicalize();
            return v;
        } catch (const std::invalid_argument&) {
            throw InputError("cannot parse rational coefficient '" + s + "'");
        }
    }

    std::string to_string(const Elem& a) const { return a.get_str(); }
};

// GF(p) with machine-word residues, p an odd-or-even prime below 2^31.
struct PrimeField {
    using Elem = std::uint32_t;

    std::uint32_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint32_t prime) : p(prime) {
        if (prime >= (1u << 31) || !is_prime_u32(prime))
            throw InputError("field modulus " + std::to_string(prime) +
                             " is not a prime below 2^31");
    }

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::prime, p}; }
    bool operator==(const PrimeField& o) const { return p == o.p; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_long(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += p;
        return static_cast<Elem>(r);
    }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= p) s -= p;
        return static_cast<Elem>(s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((std::uint64_t(a) * b) % p);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw InternalError("division by zero in GF(p)");
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = p, newr = a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += p;
        return static_cast<Elem>(t);
    }

    // Canonical representatives 0..p-1; also accepts negatives and "a/b".
    Elem parse(const std::string& s) const {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            Elem num = parse(s.substr(0, slash));
            Elem den = parse(s.substr(slash + 1));
            if (den == 0) throw InputError("coefficient '" + s + "' has zero denominator in GF(" +
                                           std::to_string(p) + ")");
            return mul(num, inv(den));
        }
        try {
            mpz_class z(s);
            mpz_class r = z % p;
            if (r < 0) r += p;
            return static_cast<Elem>(r.get_ui());
        } catch (const std::invalid_argument&) {
            throw InputError("cannot parse GF(p) coefficient '" + s + "'");
        }
    }

    std::string to_string(const Elem& a) const { return std::to_string(a); }
};

} // namespace koszul

#endif
