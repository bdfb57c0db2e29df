#pragma once

#include "ffa/field.hpp"

namespace ffa {

// The tower F_2 c F_q c F_{q^2} c F_{q^4} with q = 2^n inside a degree-4n
// field.  Subfields are recognized by Frobenius fixed-point tests; no basis
// conversion is ever performed.
struct TowerView {
    const FieldSpec* ambient = nullptr;  // degree 4n
    int n = 0;
    uint32_t q = 0;  // 2^n
};

inline TowerView make_tower(const FieldSpec& f) {
    if (f.degree % 4 != 0)
        throw BadTowerIndex("make_tower: ambient degree must be a multiple of 4");
    TowerView t;
    t.ambient = &f;
    t.n = f.degree / 4;
    t.q = 1u << t.n;
    return t;
}

// a^{q^i} within the tower.
inline uint32_t frob_q(const TowerView& t, uint32_t a, int i) {
    return t.ambient->frobenius(a, i * t.n);
}

// true iff a lies in F_{q^k}, k in {1, 2}: a^{2^{kn}} = a.
inline bool is_in_subfield(const TowerView& t, uint32_t a, int k) {
    if (k != 1 && k != 2) throw BadTowerIndex("is_in_subfield: k must be 1 or 2");
    return t.ambient->frobenius(a, k * t.n) == a;
}

// Relative trace down the tower.  sub_k = 1 gives Tr_n^{4n} (four conjugates
// a^{q^i}), sub_k = 2 gives Tr_{2n}^{4n}, sub_k = 0 the absolute trace
// Tr_1^{4n} with value in {0, 1}.
inline uint32_t rel_trace(const TowerView& t, uint32_t a, int sub_k) {
    const FieldSpec& f = *t.ambient;
    switch (sub_k) {
        case 0:
            return f.abs_trace(a);
        case 1: {
            uint32_t s = 0, x = a;
            for (int i = 0; i < 4; ++i) {
                s ^= x;
                x = f.frobenius(x, t.n);
            }
            return s;
        }
        case 2:
            return a ^ f.frobenius(a, 2 * t.n);
        default:
            throw BadTowerIndex("rel_trace: sub_k must be 0, 1 or 2");
    }
}

// Absolute trace of the degree-k subfield, Tr_1^k(a) for a in F_{2^k}.
inline uint32_t subfield_abs_trace(const FieldSpec& f, uint32_t a, int k) {
    if (k < 1 || k > f.degree || f.degree % k != 0)
        throw BadTowerIndex("subfield_abs_trace: k must divide the field degree");
    if (f.frobenius(a, k) != a)
        throw NotInSubfield("subfield_abs_trace: element outside F_{2^k}");
    uint32_t t = 0, x = a;
    for (int i = 0; i < k; ++i) {
        t ^= x;
        x = f.sqr(x);
    }
    return t;
}

// FieldElement wrappers.

inline FieldElement rel_trace(const FieldElement& a, const TowerView& t, int sub_k) {
    if (a.spec == nullptr || !(*a.spec == *t.ambient))
        throw SpecMismatch("rel_trace: element not in the tower's ambient field");
    return FieldElement{rel_trace(t, a.v, sub_k), a.spec};
}

inline bool is_in_subfield(const FieldElement& a, const TowerView& t, int k) {
    if (a.spec == nullptr || !(*a.spec == *t.ambient))
        throw SpecMismatch("is_in_subfield: element not in the tower's ambient field");
    return is_in_subfield(t, a.v, k);
}

}  // namespace ffa
