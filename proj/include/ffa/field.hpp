#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ffa/errors.hpp"

namespace ffa {

// ---------------------------------------------------------------------------
// raw GF(2)[x] helpers (usable before a FieldSpec exists)
// ---------------------------------------------------------------------------

// Carry-less product of two degree < m polynomials reduced mod `modulus`
// (monic of degree m, bit i = coefficient of x^i).  m <= 32, so the raw
// product fits in 63 bits.
inline uint32_t gf2_mul_raw(uint32_t a, uint32_t b, int m, uint64_t modulus) {
    uint64_t acc = 0;
    uint64_t aa = a;
    while (b) {
        if (b & 1u) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int i = 2 * m - 2; i >= m; --i) {
        if (acc >> i & 1u) acc ^= modulus << (i - m);
    }
    return static_cast<uint32_t>(acc);
}

// Rabin test: f irreducible over GF(2) iff x^{2^m} = x mod f and
// x^{2^{m/p}} != x mod f for every prime p dividing m.
inline bool gf2_is_irreducible(uint64_t modulus, int m) {
    if (m == 1) return true;
    if ((modulus & 1u) == 0) return false;  // x divides f
    auto frob = [&](uint32_t a, int k) {
        for (int i = 0; i < k; ++i) a = gf2_mul_raw(a, a, m, modulus);
        return a;
    };
    const uint32_t x = 0b10;
    if (frob(x, m) != x) return false;
    for (int p = 2, rem = m; rem > 1; ++p) {
        if (rem % p) continue;
        while (rem % p == 0) rem /= p;
        if (frob(x, m / p) == x) return false;
    }
    return true;
}

// Distinct prime factors by trial division; n = 2^m - 1 < 2^32 is odd.
inline std::vector<uint32_t> distinct_prime_factors(uint64_t n) {
    std::vector<uint32_t> out;
    for (uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d) continue;
        out.push_back(static_cast<uint32_t>(d));
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(static_cast<uint32_t>(n));
    return out;
}

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// ---------------------------------------------------------------------------
// FieldSpec: a validated GF(2^m), m <= 32, polynomial basis, one machine word
// per element.
// ---------------------------------------------------------------------------

struct FieldSpec {
    int degree = 0;                        // m
    uint64_t modulus = 0;                  // monic, bit m set
    uint32_t generator = 0;                // multiplicative order 2^m - 1
    uint32_t order = 0;                    // 2^m - 1
    std::vector<uint32_t> order_factors;   // distinct primes of 2^m - 1

    uint64_t size() const { return static_cast<uint64_t>(order) + 1; }

    uint32_t mul(uint32_t a, uint32_t b) const { return gf2_mul_raw(a, b, degree, modulus); }
    uint32_t sqr(uint32_t a) const { return mul(a, a); }

    // a^e for e >= 0; pow_raw(0, 0) = 1 (empty product).
    uint32_t pow_raw(uint32_t a, uint64_t e) const {
        uint32_t r = 1, base = a;
        while (e) {
            if (e & 1u) r = mul(r, base);
            base = sqr(base);
            e >>= 1;
        }
        return r;
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw DivisionByZero("inv(0)");
        return pow_raw(a, static_cast<uint64_t>(order) - 1);  // a^{2^m - 2}
    }

    // Signed exponent; negative exponents go through the inverse.
    uint32_t pow(uint32_t a, int64_t e) const {
        if (e < 0) {
            if (a == 0) throw DivisionByZero("pow(0, negative)");
            return pow_raw(inv(a), static_cast<uint64_t>(-e));
        }
        return pow_raw(a, static_cast<uint64_t>(e));
    }

    // a^{2^k}; k squarings, reduced mod m since frobenius(a, m) = a.
    uint32_t frobenius(uint32_t a, int k) const {
        if (k < 0) throw Error("frobenius: negative k");
        k %= degree;
        for (int i = 0; i < k; ++i) a = sqr(a);
        return a;
    }

    // Unique square root: a^{2^{m-1}}.
    uint32_t sqrt(uint32_t a) const { return frobenius(a, degree - 1); }

    // Absolute trace Tr_1^m: sum of all 2^i-th Frobenius images; lands in {0,1}.
    uint32_t abs_trace(uint32_t a) const {
        uint32_t t = 0, x = a;
        for (int i = 0; i < degree; ++i) {
            t ^= x;
            x = sqr(x);
        }
        return t;
    }

    std::string modulus_hex() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.degree == b.degree && a.modulus == b.modulus;
    }
};

inline std::string to_hex(uint64_t v) {
    if (v == 0) return "0x0";
    char buf[19];
    int i = 18;
    buf[i] = '\0';
    while (v) {
        buf[--i] = "0123456789abcdef"[v & 0xf];
        v >>= 4;
    }
    buf[--i] = 'x';
    buf[--i] = '0';
    return std::string(buf + i);
}

inline std::string FieldSpec::modulus_hex() const { return to_hex(modulus); }

// Built-in irreducible modulus for every degree 2..32 (x is primitive in each).
inline uint64_t default_modulus(int m) {
    static constexpr uint64_t table[33] = {
        0,          0x3,        0x7,       0xB,        0x13,       0x25,
        0x43,       0x83,       0x11D,     0x211,      0x409,      0x805,
        0x1053,     0x201B,     0x4443,    0x8003,     0x1100B,    0x20009,
        0x40081,    0x80027,    0x100009,  0x200005,   0x400003,   0x800021,
        0x1000087,  0x2000009,  0x4000047, 0x8000027,  0x10000009, 0x20000005,
        0x40000053, 0x80000009, 0x100400007,
    };
    if (m < 1 || m > 32) throw DegreeTooLarge("default_modulus: degree out of 1..32");
    return table[m];
}

inline FieldSpec make_field(int m, uint64_t modulus) {
    if (m < 1 || m > 32) throw DegreeTooLarge("make_field: degree out of 1..32");
    const uint64_t top = 1ull << m;
    if ((modulus & top) == 0 || (modulus >> m) != 1ull)
        throw ReducibleModulus("make_field: modulus not monic of the stated degree");
    if (!gf2_is_irreducible(modulus, m))
        throw ReducibleModulus("make_field: modulus factors over GF(2)");

    FieldSpec f;
    f.degree = m;
    f.modulus = modulus;
    f.order = (m == 32) ? 0xffffffffu : ((1u << m) - 1u);
    f.order_factors = distinct_prime_factors(f.order);

    auto is_generator = [&](uint32_t g) {
        if (g == 0) return false;
        for (uint32_t p : f.order_factors)
            if (f.pow_raw(g, f.order / p) == 1u) return false;
        return true;
    };

    if (f.order == 1) {
        f.generator = 1;  // GF(2): the unit group is trivial
        return f;
    }
    if (is_generator(0b10)) {  // the class of x, first choice for reproducibility
        f.generator = 0b10;
        return f;
    }
    uint64_t seed = modulus * 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(m);
    for (int attempt = 0; attempt < 64; ++attempt) {
        uint32_t cand = static_cast<uint32_t>(splitmix64(seed) % f.order) + 1u;
        if (is_generator(cand)) {
            f.generator = cand;
            return f;
        }
    }
    for (uint64_t cand = 2; cand <= f.order; ++cand) {  // exhaustive fallback
        if (is_generator(static_cast<uint32_t>(cand))) {
            f.generator = static_cast<uint32_t>(cand);
            return f;
        }
    }
    throw Error("make_field: no generator found (unreachable for a valid field)");
}

inline FieldSpec default_field(int m) { return make_field(m, default_modulus(m)); }

// ---------------------------------------------------------------------------
// FieldElement: a value tied to its FieldSpec; throwing wrappers around the
// raw word operations.  Field identity is by value (degree, modulus), so
// copies of a spec interoperate.
// ---------------------------------------------------------------------------

struct FieldElement {
    uint32_t v = 0;
    const FieldSpec* spec = nullptr;
};

inline FieldElement element(const FieldSpec& f, uint32_t v) {
    if (f.degree < 32 && (v >> f.degree) != 0) throw Error("element: coordinates beyond degree");
    return FieldElement{v, &f};
}

inline void require_same_spec(const FieldElement& a, const FieldElement& b) {
    if (a.spec == nullptr || b.spec == nullptr || !(*a.spec == *b.spec))
        throw SpecMismatch("operands belong to different fields");
}

inline FieldElement add(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    return FieldElement{a.v ^ b.v, a.spec};
}

inline FieldElement mul(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    return FieldElement{a.spec->mul(a.v, b.v), a.spec};
}

inline FieldElement inv(const FieldElement& a) { return FieldElement{a.spec->inv(a.v), a.spec}; }

inline FieldElement pow(const FieldElement& a, int64_t e) {
    return FieldElement{a.spec->pow(a.v, e), a.spec};
}

inline FieldElement frobenius(const FieldElement& a, int k) {
    return FieldElement{a.spec->frobenius(a.v, k), a.spec};
}

inline FieldElement sqrt(const FieldElement& a) { return FieldElement{a.spec->sqrt(a.v), a.spec}; }

inline bool operator==(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    return a.v == b.v;
}

inline std::string hex(const FieldElement& a) { return to_hex(a.v); }

}  // namespace ffa
