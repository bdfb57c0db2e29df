#pragma once

#include <vector>

#include "ffa/field.hpp"

namespace ffa {

// Dense univariate polynomial over a FieldSpec; coeffs[i] multiplies u^i.
// Normal form: no stored leading zero (the zero polynomial stores nothing).
struct Poly {
    const FieldSpec* spec = nullptr;
    std::vector<uint32_t> coeffs;

    static Poly from_coeffs(const FieldSpec& f, std::vector<uint32_t> c) {
        while (!c.empty() && c.back() == 0) c.pop_back();
        return Poly{&f, std::move(c)};
    }

    static Poly zero(const FieldSpec& f) { return Poly{&f, {}}; }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    uint32_t coeff(size_t i) const { return i < coeffs.size() ? coeffs[i] : 0u; }

    uint32_t eval(uint32_t u) const {  // Horner
        uint32_t acc = 0;
        for (size_t i = coeffs.size(); i-- > 0;) acc = spec->mul(acc, u) ^ coeffs[i];
        return acc;
    }
};

inline void require_same_spec(const Poly& a, const Poly& b) {
    if (a.spec == nullptr || b.spec == nullptr || !(*a.spec == *b.spec))
        throw SpecMismatch("polynomials over different fields");
}

inline Poly add(const Poly& a, const Poly& b) {
    require_same_spec(a, b);
    std::vector<uint32_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0u);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) ^ b.coeff(i);
    return Poly::from_coeffs(*a.spec, std::move(c));
}

inline Poly mul(const Poly& a, const Poly& b) {
    require_same_spec(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(*a.spec);
    std::vector<uint32_t> c(a.coeffs.size() + b.coeffs.size() - 1, 0u);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] ^= a.spec->mul(a.coeffs[i], b.coeffs[j]);
    return Poly::from_coeffs(*a.spec, std::move(c));
}

inline bool operator==(const Poly& a, const Poly& b) {
    require_same_spec(a, b);
    return a.coeffs == b.coeffs;
}

}  // namespace ffa
