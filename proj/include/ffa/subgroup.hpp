#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "ffa/tower.hpp"

namespace ffa {

// ---------------------------------------------------------------------------
// mu_s subgroups
// ---------------------------------------------------------------------------

struct SubgroupDesc {
    const FieldSpec* spec = nullptr;
    uint32_t s = 0;                 // divides 2^m - 1
    uint32_t coset_generator = 0;   // generator^{(2^m-1)/s}, order exactly s
};

inline SubgroupDesc make_subgroup(const FieldSpec& f, uint32_t s) {
    if (s == 0 || f.order % s != 0)
        throw NotADivisor("make_subgroup: s does not divide 2^m - 1");
    SubgroupDesc d;
    d.spec = &f;
    d.s = s;
    d.coset_generator = f.pow_raw(f.generator, f.order / s);
    return d;
}

// { generator^{k(2^m-1)/s} : 0 <= k < s }, in k order (element 0 is 1).
inline std::vector<uint32_t> subgroup_elements(const FieldSpec& f, uint32_t s) {
    SubgroupDesc d = make_subgroup(f, s);
    std::vector<uint32_t> out;
    out.reserve(s);
    uint32_t x = 1;
    for (uint32_t k = 0; k < s; ++k) {
        out.push_back(x);
        x = f.mul(x, d.coset_generator);
    }
    return out;
}

// ---------------------------------------------------------------------------
// unit circles and polar decomposition
// ---------------------------------------------------------------------------

// Level 1: x^{q+1} = 1 (circle of F_{q^2} over F_q); level 2: x^{q^2+1} = 1.
inline bool in_unit_circle(const TowerView& t, uint32_t x, int level) {
    if (level != 1 && level != 2) throw BadTowerIndex("in_unit_circle: level must be 1 or 2");
    if (x == 0) return false;
    const uint64_t qpow = 1ull << (t.n * level);
    return t.ambient->pow_raw(x, qpow + 1) == 1u;
}

// Unique factorization x = lambda * y with lambda in mu_{Q+1}, y in F_Q*,
// Q = 2^{n*level}.  y is the square root of the norm x^{Q+1}; uniqueness
// holds because gcd(Q+1, Q-1) = 1 in characteristic 2.
inline std::pair<uint32_t, uint32_t> polar_decompose(const TowerView& t, uint32_t x, int level) {
    if (level != 1 && level != 2) throw BadTowerIndex("polar_decompose: level must be 1 or 2");
    if (x == 0) throw ZeroInput("polar_decompose: x = 0");
    const FieldSpec& f = *t.ambient;
    if (level == 1 && !is_in_subfield(t, x, 2))
        throw NotInSubfield("polar_decompose: level 1 requires x in F_{q^2}");
    const uint64_t Q = 1ull << (t.n * level);
    uint32_t y = f.sqrt(f.pow_raw(x, Q + 1));
    uint32_t lambda = f.mul(x, f.inv(y));
    return {lambda, y};
}

inline std::pair<FieldElement, FieldElement> polar_decompose(const FieldElement& x,
                                                             const TowerView& t, int level) {
    if (x.spec == nullptr || !(*x.spec == *t.ambient))
        throw SpecMismatch("polar_decompose: element not in the tower's ambient field");
    auto [l, y] = polar_decompose(t, x.v, level);
    return {FieldElement{l, x.spec}, FieldElement{y, x.spec}};
}

// ---------------------------------------------------------------------------
// unit-circle quadratic classifier (x^2 + ax + b = 0 over GF(2^{2m}))
// ---------------------------------------------------------------------------

struct QuadraticRoots {
    int count = 0;                   // classified number of roots on the circle
    std::vector<uint32_t> roots;     // ascending; the roots on mu_{2^m + 1}
    bool no_roots_in_field = false;  // Tr_1^{2m}(b/a^2) = 1: no roots at all
};

namespace detail {

// Per-field table solving t^2 + t = w: entry w holds the smaller preimage t,
// or UINT32_MAX when w has absolute trace 1.  Built once per field.
inline std::shared_ptr<const std::vector<uint32_t>> artin_schreier_table(const FieldSpec& f) {
    if (f.degree > 24) throw DegreeTooLarge("quadratic solver: table bound is degree 24");
    static std::mutex mu;
    static std::map<std::pair<int, uint64_t>, std::shared_ptr<const std::vector<uint32_t>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(f.degree, f.modulus);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto tab = std::make_shared<std::vector<uint32_t>>(f.size(), UINT32_MAX);
    for (uint64_t t = 0; t < f.size(); ++t) {
        uint32_t tt = static_cast<uint32_t>(t);
        uint32_t w = f.sqr(tt) ^ tt;
        if ((*tab)[w] == UINT32_MAX) (*tab)[w] = tt;  // first hit is the smaller of {t, t+1}
    }
    cache.emplace(key, tab);
    return tab;
}

}  // namespace detail

// Classifies the number of solutions on the unit circle mu_{2^m + 1} of the
// field GF(2^{2m}) and returns the actual on-circle roots.  The classifier:
//   2 roots  iff  b = a^{1 - 2^m} and Tr_1^m(1 / a^{1 + 2^m}) = 1
//   1 root   iff  b != a^{1 - 2^m} and
//                 (1 + b^{1+2^m})(1 + a^{1+2^m} + b^{1+2^m}) + a^2 b^{2^m} + a^{2^{m+1}} b = 0
// Standing hypothesis Tr_1^{2m}(b/a^2) = 0; otherwise the quadratic has no
// roots in the field at all and the result carries `no_roots_in_field`.
inline QuadraticRoots unit_circle_quadratic(const FieldSpec& f, uint32_t a, uint32_t b,
                                            int m_half) {
    if (f.degree != 2 * m_half)
        throw BadTowerIndex("unit_circle_quadratic: field degree must equal 2m");
    if (a == 0 || b == 0) throw ZeroCoefficient("unit_circle_quadratic: a, b must be nonzero");

    QuadraticRoots res;
    const uint32_t w = f.mul(b, f.inv(f.sqr(a)));  // b / a^2
    if (f.abs_trace(w) == 1u) {
        res.no_roots_in_field = true;
        return res;
    }

    // actual roots: x = a*t with t^2 + t = b/a^2
    auto tab = detail::artin_schreier_table(f);
    const uint32_t t = (*tab)[w];
    const uint64_t circle_exp = (1ull << m_half) + 1;
    for (uint32_t root : {f.mul(a, t), f.mul(a, t ^ 1u)}) {
        if (root != 0 && f.pow_raw(root, circle_exp) == 1u) res.roots.push_back(root);
    }
    std::sort(res.roots.begin(), res.roots.end());

    // classification
    const uint32_t a_norm = f.mul(a, f.frobenius(a, m_half));   // a^{1 + 2^m}
    const uint32_t b_norm = f.mul(b, f.frobenius(b, m_half));   // b^{1 + 2^m}
    const uint32_t a_skew = f.mul(a, f.inv(f.frobenius(a, m_half)));  // a^{1 - 2^m}
    int classified;
    if (b == a_skew) {
        classified = subfield_abs_trace(f, f.inv(a_norm), m_half) == 1u ? 2 : 0;
    } else {
        const uint32_t lhs = f.mul(1u ^ b_norm, 1u ^ a_norm ^ b_norm) ^
                             f.mul(f.sqr(a), f.frobenius(b, m_half)) ^
                             f.mul(f.sqr(f.frobenius(a, m_half)), b);
        classified = (lhs == 0) ? 1 : 0;
    }
    if (classified != static_cast<int>(res.roots.size()))
        throw Error("unit_circle_quadratic: classification disagrees with solved roots");
    res.count = classified;
    return res;
}

}  // namespace ffa
