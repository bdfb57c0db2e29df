#pragma once

#include <array>
#include <chrono>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ffa/poly.hpp"
#include "ffa/power_function.hpp"

namespace ffa {

namespace detail {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

// Runs fn(i, out) over [0, total) on worker threads; counterexample strings
// are merged and sorted so the result is independent of the thread count.
template <typename Fn>
inline std::vector<std::string> parallel_collect(uint64_t total, unsigned threads, Fn&& fn) {
    const unsigned nt = thread_count(threads);
    std::vector<std::vector<std::string>> per(nt);
    parallel_chunks(0, total, nt, [&per, &fn](uint64_t lo, uint64_t hi, unsigned chunk) {
        auto& out = per[chunk];
        for (uint64_t i = lo; i < hi; ++i) fn(i, out);
    });
    std::vector<std::string> all;
    for (auto& v : per)
        for (auto& s : v) all.push_back(std::move(s));
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// verification context for one tower F_2 < F_q < F_{q^2} < F_{q^4}, q = 2^n
// ---------------------------------------------------------------------------

// Holds the ambient field and the precomputed tables every checker shares.
// Not copyable: the power-function tables point at the owned FieldSpec.
struct VerifyCtx {
    FieldSpec F;
    int n = 0;
    uint32_t q = 0;
    uint64_t d = 0;  // q^3 + q^2 + q - 1
    uint64_t e = 0;  // (q - 1)(q^2 + 1) + 2
    std::vector<uint32_t> mu_q1;   // mu_{q+1}, k-order
    std::vector<uint32_t> mu_q21;  // mu_{q^2+1}, k-order
    PowerFunction Fd;              // x -> x^d
    std::vector<uint32_t> pow_e;   // x -> x^e

    VerifyCtx(const VerifyCtx&) = delete;
    VerifyCtx& operator=(const VerifyCtx&) = delete;

    explicit VerifyCtx(int n_, std::optional<uint64_t> modulus = std::nullopt) {
        if (n_ < 1 || n_ > 5) throw DegreeTooLarge("VerifyCtx: supported range is 1 <= n <= 5");
        n = n_;
        F = modulus ? make_field(4 * n, *modulus) : default_field(4 * n);
        q = 1u << n;
        const uint64_t qq = q;
        d = qq * qq * qq + qq * qq + qq - 1;
        e = (qq - 1) * (qq * qq + 1) + 2;
        mu_q1 = subgroup_elements(F, q + 1);
        mu_q21 = subgroup_elements(F, q * q + 1);
        Fd = make_power_function(F, d);
        pow_e = make_power_function(F, e).table;
    }

    TowerView tower() const { return make_tower(F); }

    uint32_t fq(uint32_t a, int i) const { return frob_q(tower(), a, i); }
    uint32_t tr(uint32_t a) const { return rel_trace(tower(), a, 1); }  // Tr_n^{4n}
    uint32_t tr1(uint32_t a) const { return subfield_abs_trace(F, a, n); }  // Tr_1^n on F_q
    uint32_t mul(uint32_t a, uint32_t b) const { return F.mul(a, b); }
    uint32_t sqr(uint32_t a) const { return F.sqr(a); }
    uint32_t inv(uint32_t a) const { return F.inv(a); }
    uint32_t v_of(uint32_t b) const { return fq(b, 1) ^ fq(b, 2); }  // v = b^q + b^{q^2}
    uint32_t c1q(uint32_t c) const { return mul(c, fq(c, 1)); }      // c^{1+q}

    bool in_mu_q21(uint32_t c) const {
        return c != 0 && F.pow_raw(c, static_cast<uint64_t>(q) * q + 1) == 1u;
    }

    void require_admissible_c(uint32_t c) const {
        if (c == 1u || !in_mu_q21(c))
            throw Error("verifier: c must lie in mu_{q^2+1} \\ {1}, got " + to_hex(c));
    }

    // Exhaustive b-domain, or the deterministic sample {0, g^0, ..., g^{4094}}
    // used by the per-b checkers when the field outgrows desk scale.
    std::vector<uint32_t> b_domain(bool sampled) const {
        std::vector<uint32_t> out;
        if (!sampled || F.size() <= 4096) {
            out.resize(F.size());
            for (uint64_t i = 0; i < F.size(); ++i) out[i] = static_cast<uint32_t>(i);
            return out;
        }
        out.reserve(4096);
        out.push_back(0);
        uint32_t g = 1;
        for (int i = 0; i < 4095; ++i) {
            out.push_back(g);
            g = mul(g, F.generator);
        }
        return out;
    }

    PropositionReport blank_report(PropId id, uint32_t c) const {
        PropositionReport r;
        r.prop_id = id;
        r.n = n;
        r.modulus = F.modulus_hex();
        r.c_hex = to_hex(c);
        return r;
    }
};

// ---------------------------------------------------------------------------
// Eq. (4-1) polynomial pair in k
// ---------------------------------------------------------------------------

// C1(k) = (1+k^4)(1+b^{q+q^3}) + (k^3+k)(c^q + c^{-q} + (c+c^{-1})b^{q+q^3})
// C0(k) = Tr(b) + k(Tr(bc) + Tr(b)Tr(c))
//       + k^2(Tr(b) + Tr(c^{1+q}(b^{q^2}+b^{q^3}))) + k^3 Tr(c b^{q^2})
struct CPolyPair {
    Poly C1;
    Poly C0;
    uint32_t b = 0;
    uint32_t c = 0;
};

inline CPolyPair make_cpoly_pair(const VerifyCtx& t, uint32_t c, uint32_t b) {
    const uint32_t bq_q3 = t.mul(t.fq(b, 1), t.fq(b, 3));
    const uint32_t lead = 1u ^ bq_q3;
    const uint32_t a2 = t.fq(c, 1) ^ t.inv(t.fq(c, 1)) ^ t.mul(c ^ t.inv(c), bq_q3);
    CPolyPair p;
    p.b = b;
    p.c = c;
    p.C1 = Poly::from_coeffs(t.F, {lead, a2, 0, a2, lead});
    const uint32_t c1q = t.c1q(c);
    p.C0 = Poly::from_coeffs(
        t.F, {t.tr(b),                                                        //
              t.tr(t.mul(b, c)) ^ t.mul(t.tr(b), t.tr(c)),                    //
              t.tr(b) ^ t.tr(t.mul(c1q, t.fq(b, 2) ^ t.fq(b, 3))),            //
              t.tr(t.mul(c, t.fq(b, 2)))});
    return p;
}

// Internal cross-check from the Theorem 2 proof: with E_i the coefficients of
// C0, for every k on mu_{q+1} (so k^{-1} = k^q and u = k + k^{-1}),
//   C0(k)^{1+q} = sum E_i^2 + u(E0E1+E1E2+E2E3+E0E3) + u^2(E0E2+E1E3) + u^3 E0E3.
inline bool cpoly_e_crosscheck(const VerifyCtx& t, const CPolyPair& p) {
    const uint32_t E0 = p.C0.coeff(0), E1 = p.C0.coeff(1), E2 = p.C0.coeff(2),
                   E3 = p.C0.coeff(3);
    const uint32_t s0 = t.sqr(E0) ^ t.sqr(E1) ^ t.sqr(E2) ^ t.sqr(E3);
    const uint32_t s1 = t.mul(E0, E1) ^ t.mul(E1, E2) ^ t.mul(E2, E3) ^ t.mul(E0, E3);
    const uint32_t s2 = t.mul(E0, E2) ^ t.mul(E1, E3);
    const uint32_t s3 = t.mul(E0, E3);
    for (uint32_t k : t.mu_q1) {
        const uint32_t u = k ^ t.inv(k);
        const uint32_t c0k = p.C0.eval(k);
        const uint32_t lhs = t.mul(c0k, t.fq(c0k, 1));  // C0(k)^{1+q}
        const uint32_t rhs = s0 ^ t.mul(u, s1) ^ t.mul(t.sqr(u), s2) ^ t.mul(t.mul(t.sqr(u), u), s3);
        if (lhs != rhs) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Eq. (4-11) quartic in u and its factorization
// ---------------------------------------------------------------------------

struct GPolyBundle {
    Poly G;             // G0 + G1 u + ... + G4 u^4
    uint32_t A = 0;     // Tr(c v^{q+1})
    uint32_t B = 0;     // Tr(c^{1+q} v^{2q})
    Poly factor_left;   // u^2 + Tr(c) u + Tr(c^{1+q})
    Poly factor_right;  // G4 u^2 + A u + B
};

inline GPolyBundle make_gpoly_bundle(const VerifyCtx& t, uint32_t c, uint32_t b) {
    const uint32_t bq = t.fq(b, 1), bq2 = t.fq(b, 2), bq3 = t.fq(b, 3);
    const uint32_t bq_q3 = t.mul(bq, bq3);     // b^{q+q^3}
    const uint32_t b1_q2 = t.mul(b, bq2);      // b^{1+q^2}
    const uint32_t ball = t.mul(bq_q3, b1_q2); // b^{1+q+q^2+q^3}
    const uint32_t v = bq ^ bq2;
    const uint32_t c2 = t.sqr(c);
    const uint32_t c1q = t.c1q(c);

    GPolyBundle g;
    g.A = t.tr(t.mul(c, t.mul(v, t.fq(v, 1))));
    g.B = t.tr(t.mul(c1q, t.sqr(t.fq(v, 1))));

    const uint32_t G0 = t.tr(t.mul(c2, t.sqr(bq) ^ t.sqr(bq3))) ^
                        t.tr(t.mul(t.sqr(c1q), t.sqr(bq2) ^ t.sqr(bq3)));
    const uint32_t G1 = t.mul(t.tr(t.mul(c, bq ^ bq3)), t.tr(t.mul(c1q, bq2 ^ bq3)));
    const uint32_t G2 = t.tr(t.sqr(b)) ^
                        t.tr(t.mul(c2, t.sqr(bq2) ^ t.mul(bq, bq2) ^ t.mul(bq2, bq3) ^ bq_q3)) ^
                        t.mul(t.tr(c1q), 1u ^ ball) ^
                        t.tr(t.mul(c1q, t.mul(bq, bq2) ^ t.mul(b, bq3)));
    const uint32_t G3 = t.mul(t.tr(c), 1u ^ ball) ^ t.mul(t.tr(b), t.tr(t.mul(c, bq2)));
    const uint32_t G4 = t.mul(1u ^ bq_q3, 1u ^ b1_q2);

    g.G = Poly::from_coeffs(t.F, {G0, G1, G2, G3, G4});
    g.factor_left = Poly::from_coeffs(t.F, {t.tr(c1q), t.tr(c), 1});
    g.factor_right = Poly::from_coeffs(t.F, {g.B, g.A, G4});
    return g;
}

// ---------------------------------------------------------------------------
// Eq. (4-18): (x+1)^e + c^2 x^e = b^2 with e = (q-1)(q^2+1) + 2
// ---------------------------------------------------------------------------

// hist[y] = #{x : (x+1)^e + c^2 x^e = y}; the count for b is hist[b^2].
inline std::vector<uint32_t> eq418_histogram(const VerifyCtx& t, uint32_t c) {
    t.require_admissible_c(c);
    const uint32_t c2 = t.sqr(c);
    std::vector<uint32_t> hist(t.F.size(), 0);
    for (uint64_t x = 0; x < t.F.size(); ++x) {
        uint32_t xu = static_cast<uint32_t>(x);
        ++hist[t.pow_e[xu ^ 1u] ^ t.mul(c2, t.pow_e[xu])];
    }
    return hist;
}

inline uint64_t eq418_count(const VerifyCtx& t, uint32_t c, uint32_t b) {
    t.require_admissible_c(c);
    const uint32_t c2 = t.sqr(c);
    const uint32_t b2 = t.sqr(b);
    uint64_t count = 0;
    for (uint64_t x = 0; x < t.F.size(); ++x) {
        uint32_t xu = static_cast<uint32_t>(x);
        if ((t.pow_e[xu ^ 1u] ^ t.mul(c2, t.pow_e[xu])) == b2) ++count;
    }
    return count;
}

// Multiset equality between the per-b counts of Eq. (4-18) and the
// c-differential spectrum of x^d.  b -> b^2 is a bijection, so the multiset
// of counts is exactly the multiset of histogram values.
inline PropositionReport eq418_spectrum_match(const VerifyCtx& t, uint32_t c) {
    detail::Stopwatch sw;
    PropositionReport r = t.blank_report(PropId::EQ418_SPECTRUM, c);
    std::vector<uint64_t> omega418 = detail::omega_of_histogram(eq418_histogram(t, c));
    SpectrumRecord spec = power_spectrum(t.Fd, c);
    r.cases_total = 1;
    r.cases_checked = 1;
    if (omega418 != spec.omega)
        r.counterexamples.push_back("omega mismatch c=" + to_hex(c));
    r.elapsed_ms = sw.ms();
    return r;
}

// ---------------------------------------------------------------------------
// propositions
// ---------------------------------------------------------------------------

// Part (1): whenever Tr(c v^{1+q}) and Tr(c^{1+q} v^{2q}) are both nonzero,
// Tr_1^n(Tr(c v^{1+q}) / Tr(c^{1+q} v^{2q})) = 1.
inline PropositionReport prop1a_check(const VerifyCtx& t, uint32_t c, unsigned threads = 0) {
    t.require_admissible_c(c);
    detail::Stopwatch sw;
    PropositionReport r = t.blank_report(PropId::P1a, c);
    r.cases_total = t.F.size();
    r.cases_checked = r.cases_total;
    const uint32_t cc1q = t.c1q(c);
    r.counterexamples = detail::parallel_collect(
        t.F.size(), threads, [&t, c, cc1q](uint64_t i, std::vector<std::string>& out) {
            const uint32_t v = static_cast<uint32_t>(i);
            const uint32_t num = t.tr(t.mul(c, t.mul(v, t.fq(v, 1))));
            const uint32_t den = t.tr(t.mul(cc1q, t.sqr(t.fq(v, 1))));
            if (num == 0 || den == 0) return;
            if (t.tr1(t.mul(num, t.inv(den))) != 1u)
                out.push_back("c=" + to_hex(c) + " v=" + to_hex(v));
        });
    r.elapsed_ms = sw.ms();
    return r;
}

// Part (2): b on mu_{q^2+1} with Tr(c v^{1+q}) = 0 forces b in {1, c}.
inline PropositionReport prop1b_check(const VerifyCtx& t, uint32_t c, unsigned threads = 0) {
    t.require_admissible_c(c);
    detail::Stopwatch sw;
    PropositionReport r = t.blank_report(PropId::P1b, c);
    r.cases_total = t.mu_q21.size();
    r.cases_checked = r.cases_total;
    r.counterexamples = detail::parallel_collect(
        t.mu_q21.size(), threads, [&t, c](uint64_t i, std::vector<std::string>& out) {
            const uint32_t b = t.mu_q21[i];
            const uint32_t v = t.v_of(b);
            if (t.tr(t.mul(c, t.mul(v, t.fq(v, 1)))) != 0u) return;
            if (b != 1u && b != c) out.push_back("c=" + to_hex(c) + " b=" + to_hex(b));
        });
    r.elapsed_ms = sw.ms();
    return r;
}

// If C1(k) = C0(k) = 0 for some k on mu_{q+1}, then k = 1.  Also replays the
// proof's E-coefficient recombination of C0(k)^{1+q} as an internal check.
inline PropositionReport prop2_check(const VerifyCtx& t, uint32_t c, bool sampled = false,
                                     unsigned threads = 0) {
    t.require_admissible_c(c);
    detail::Stopwatch sw;
    PropositionReport r = t.blank_report(PropId::P2, c);
    const std::vector<uint32_t> domain = t.b_domain(sampled);
    r.sampled = domain.size() < t.F.size();
    r.cases_total = domain.size();
    r.cases_checked = r.cases_total;
    r.counterexamples = detail::parallel_collect(
        domain.size(), threads, [&t, c, &domain](uint64_t i, std::vector<std::string>& out) {
            const uint32_t b = domain[i];
            const CPolyPair p = make_cpoly_pair(t, c, b);
            for (uint32_t k : t.mu_q1) {
                if (k != 1u && p.C1.eval(k) == 0u && p.C0.eval(k) == 0u)
                    out.push_back("c=" + to_hex(c) + " b=" + to_hex(b) + " k=" + to_hex(k));
            }
            if (!cpoly_e_crosscheck(t, p))
                out.push_back("c=" + to_hex(c) + " b=" + to_hex(b) + " e-recombination");
        });
    r.elapsed_ms = sw.ms();
    return r;
}

// Under Tr(c(v+v^q)) + Tr(c^{q+1} v^q) = 0: A1 = Tr(c(v+v^q)) and
// A2 = c^q + c^{-q} + (c+c^{-1}) b^{q+q^3} never vanish together.
inline PropositionReport prop3_check(const VerifyCtx& t, uint32_t c, unsigned threads = 0) {
    t.require_admissible_c(c);
    detail::Stopwatch sw;
    PropositionReport r = t.blank_report(PropId::P3, c);
    r.cases_total = t.F.size();
    r.cases_checked = r.cases_total;
    const uint32_t cc1q = t.c1q(c);
    r.counterexamples = detail::parallel_collect(
        t.F.size(), threads, [&t, c, cc1q](uint64_t i, std::vector<std::string>& out) {
            const uint32_t b = static_cast<uint32_t>(i);
            const uint32_t v = t.v_of(b);
            const uint32_t a1 = t.tr(t.mul(c, v ^ t.fq(v, 1)));
            if ((a1 ^ t.tr(t.mul(cc1q, t.fq(v, 1)))) != 0u) return;
            const uint32_t a2 =
                t.fq(c, 1) ^ t.inv(t.fq(c, 1)) ^ t.mul(c ^ t.inv(c), t.mul(t.fq(b, 1), t.fq(b, 3)));
            if (a1 == 0u && a2 == 0u) out.push_back("c=" + to_hex(c) + " b=" + to_hex(b));
        });
    r.elapsed_ms = sw.ms();
    return r;
}

// For v with Tr(v) = 0 (automatic for v = b^q + b^{q^2}): if Tr(c(v+v^q)) =
// Tr(c^{1+q} v^q) = 0 then Tr(c v^{1+q}) = Tr(c^{1+q} v^{2q}) = 0.  The
// Tr(v) = 0 restriction is part of the hypothesis set the proof consumes;
// free v with Tr(v) != 0 admit genuine counterexamples.
inline PropositionReport prop4_check(const VerifyCtx& t, uint32_t c, unsigned threads = 0) {
    t.require_admissible_c(c);
    detail::Stopwatch sw;
    PropositionReport r = t.blank_report(PropId::P4, c);
    r.cases_total = t.F.size();
    r.cases_checked = r.cases_total;
    const uint32_t cc1q = t.c1q(c);
    r.counterexamples = detail::parallel_collect(
        t.F.size(), threads, [&t, c, cc1q](uint64_t i, std::vector<std::string>& out) {
            const uint32_t v = static_cast<uint32_t>(i);
            if (t.tr(v) != 0u) return;
            if (t.tr(t.mul(c, v ^ t.fq(v, 1))) != 0u) return;
            if (t.tr(t.mul(cc1q, t.fq(v, 1))) != 0u) return;
            const bool ok = t.tr(t.mul(c, t.mul(v, t.fq(v, 1)))) == 0u &&
                            t.tr(t.mul(cc1q, t.sqr(t.fq(v, 1)))) == 0u;
            if (!ok) out.push_back("c=" + to_hex(c) + " v=" + to_hex(v));
        });
    r.elapsed_ms = sw.ms();
    return r;
}

// Factorization of Eq. (4-11): G(u) = (u^2 + Tr(c)u + Tr(c^{1+q}))(G4 u^2 + Au + B).
// Symbolic mode compares the five coefficients; exhaustive mode evaluates both
// sides at every u of the ambient field.
inline PropositionReport prop5_check(const VerifyCtx& t, uint32_t c, bool symbolic = true,
                                     bool sampled = false, unsigned threads = 0) {
    t.require_admissible_c(c);
    detail::Stopwatch sw;
    PropositionReport r = t.blank_report(PropId::P5, c);
    const std::vector<uint32_t> domain = t.b_domain(sampled);
    r.sampled = domain.size() < t.F.size();
    r.cases_total = domain.size();
    r.cases_checked = r.cases_total;
    r.counterexamples = detail::parallel_collect(
        domain.size(), threads,
        [&t, c, symbolic, &domain](uint64_t i, std::vector<std::string>& out) {
            const uint32_t b = domain[i];
            const GPolyBundle g = make_gpoly_bundle(t, c, b);
            const Poly prod = mul(g.factor_left, g.factor_right);
            bool ok = true;
            if (symbolic) {
                ok = prod == g.G;
            } else {
                for (uint64_t u = 0; u < t.F.size() && ok; ++u)
                    ok = prod.eval(static_cast<uint32_t>(u)) == g.G.eval(static_cast<uint32_t>(u));
            }
            if (!ok) out.push_back("c=" + to_hex(c) + " b=" + to_hex(b));
        });
    r.elapsed_ms = sw.ms();
    return r;
}

// Under b^{1+q^2} != 1, Tr(c^{1+q} v^{2q}) = 0, Tr(c v^{q+1}) != 0: the
// quantity of Eq. (4-12) lies in F_q and has absolute trace 1.
inline PropositionReport prop6_check(const VerifyCtx& t, uint32_t c, unsigned threads = 0) {
    t.require_admissible_c(c);
    detail::Stopwatch sw;
    PropositionReport r = t.blank_report(PropId::P6, c);
    r.cases_total = t.F.size();
    r.cases_checked = r.cases_total;
    const uint32_t cc1q = t.c1q(c);
    const uint64_t q21 = static_cast<uint64_t>(t.q) * t.q + 1;
    r.counterexamples = detail::parallel_collect(
        t.F.size(), threads, [&t, c, cc1q, q21](uint64_t i, std::vector<std::string>& out) {
            const uint32_t b = static_cast<uint32_t>(i);
            if (t.F.pow_raw(b, q21) == 1u) return;  // b^{1+q^2} = 1 excluded
            const uint32_t v = t.v_of(b);
            if (t.tr(t.mul(cc1q, t.sqr(t.fq(v, 1)))) != 0u) return;  // needs B = 0
            const uint32_t A = t.tr(t.mul(c, t.mul(v, t.fq(v, 1))));
            if (A == 0u) return;  // needs A != 0
            const uint32_t den1 = t.tr(t.mul(cc1q, t.fq(v, 1)));
            if (den1 == 0u) {
                out.push_back("c=" + to_hex(c) + " b=" + to_hex(b) + " zero-denominator");
                return;
            }
            const uint32_t bq_q3 = t.mul(t.fq(b, 1), t.fq(b, 3));
            const uint32_t b1_q2 = t.mul(b, t.fq(b, 2));
            const uint32_t ball = t.mul(bq_q3, b1_q2);
            const uint32_t num1 = t.mul(t.tr(cc1q), 1u ^ ball) ^ t.tr(t.mul(t.sqr(c), bq_q3));
            const uint32_t g4 = t.mul(1u ^ bq_q3, 1u ^ b1_q2);
            const uint32_t omega =
                t.mul(num1, t.inv(t.sqr(den1))) ^ t.mul(g4, t.inv(A));
            if (t.F.frobenius(omega, t.n) != omega || t.tr1(omega) != 1u)
                out.push_back("c=" + to_hex(c) + " b=" + to_hex(b));
        });
    r.elapsed_ms = sw.ms();
    return r;
}

// Eq. (4-18) has exactly one solution iff Tr(c^{q+1} v^{2q}) = 0 and
// Tr(c(v+v^q)) = 0.
inline PropositionReport prop7_check(const VerifyCtx& t, uint32_t c, unsigned threads = 0) {
    t.require_admissible_c(c);
    detail::Stopwatch sw;
    PropositionReport r = t.blank_report(PropId::P7, c);
    r.cases_total = t.F.size();
    r.cases_checked = r.cases_total;
    const std::vector<uint32_t> hist = eq418_histogram(t, c);
    const uint32_t cc1q = t.c1q(c);
    r.counterexamples = detail::parallel_collect(
        t.F.size(), threads, [&t, c, cc1q, &hist](uint64_t i, std::vector<std::string>& out) {
            const uint32_t b = static_cast<uint32_t>(i);
            const uint32_t v = t.v_of(b);
            const bool one = hist[t.sqr(b)] == 1u;
            const bool traces = t.tr(t.mul(cc1q, t.sqr(t.fq(v, 1)))) == 0u &&
                                t.tr(t.mul(c, v ^ t.fq(v, 1))) == 0u;
            if (one != traces) out.push_back("c=" + to_hex(c) + " b=" + to_hex(b));
        });
    r.elapsed_ms = sw.ms();
    return r;
}

// ---------------------------------------------------------------------------
// spectrum counting argument and Eq. (4-24)
// ---------------------------------------------------------------------------

// #{b : Tr((c+c^{-1})b^{q^3}) = 0 and Tr(c^q(c+c^{-1})b^{q^3}) = 0}; counted
// through the substitution w = b^{q^3}, a bijection of the field.
inline uint64_t omega1_trace_count(const VerifyCtx& t, uint32_t c) {
    t.require_admissible_c(c);
    const uint32_t gamma = c ^ t.inv(c);
    const uint32_t cq_gamma = t.mul(t.fq(c, 1), gamma);
    uint64_t count = 0;
    for (uint64_t w = 0; w < t.F.size(); ++w) {
        const uint32_t wu = static_cast<uint32_t>(w);
        if (t.tr(t.mul(gamma, wu)) == 0u && t.tr(t.mul(cq_gamma, wu)) == 0u) ++count;
    }
    return count;
}

inline PropositionReport omega1_check(const VerifyCtx& t, uint32_t c) {
    detail::Stopwatch sw;
    PropositionReport r = t.blank_report(PropId::SPECTRUM_OMEGA1, c);
    r.cases_total = 2;
    r.cases_checked = 2;
    const uint64_t count = omega1_trace_count(t, c);
    const uint64_t q2 = static_cast<uint64_t>(t.q) * t.q;
    if (count != q2)
        r.counterexamples.push_back("c=" + to_hex(c) + " trace-count=" + std::to_string(count));
    const SpectrumRecord spec = power_spectrum(t.Fd, c);
    const uint64_t w1 = spec.omega.size() > 1 ? spec.omega[1] : 0;
    if (count != w1)
        r.counterexamples.push_back("c=" + to_hex(c) + " omega1=" + std::to_string(w1));
    r.elapsed_ms = sw.ms();
    return r;
}

// A2 alpha^2 + A1 alpha + A0 = 0 restricted to mu_{q+1}, coefficients per the
// Theorem 2 proof.  Degenerate means A0 = A1 = A2 = 0 (every alpha solves),
// which only arises outside the Tr(c^{1+q} v^{2q}) = 0 regime the equation is
// used in.
struct Eq424Result {
    uint32_t a0 = 0, a1 = 0, a2 = 0;
    std::vector<uint32_t> roots;  // ascending
    int count = 0;
    bool degenerate = false;
};

inline Eq424Result eq424_roots(const VerifyCtx& t, uint32_t c, uint32_t b) {
    t.require_admissible_c(c);
    const uint32_t ci = t.inv(c);
    const uint32_t cq = t.fq(c, 1);
    const uint32_t cqi = t.inv(cq);
    const uint32_t bq = t.fq(b, 1), bq2 = t.fq(b, 2), bq3 = t.fq(b, 3);
    Eq424Result res;
    res.a2 = cq ^ cqi ^ t.mul(c ^ ci, t.mul(bq, bq3));
    res.a1 = t.mul(c ^ ci, t.mul(cqi, bq) ^ t.mul(cq, bq3)) ^
             t.mul(cq ^ cqi, t.mul(ci, b) ^ t.mul(c, bq2));
    res.a0 = c ^ ci ^ t.mul(cq ^ cqi, t.mul(b, bq2));

    // identities from the proof; the third holds exactly on the
    // Tr(c^{1+q} v^{2q}) = 0 locus where Eq. (4-24) is invoked
    const uint32_t v = bq ^ bq2;
    if (t.fq(res.a0, 1) != res.a2) throw Error("eq424_roots: A2 != A0^q");
    if (t.tr(t.mul(t.c1q(c), t.fq(v, 1))) != res.a1)
        throw Error("eq424_roots: A1 != Tr(c^{q+1} v^q)");
    if (t.tr(t.mul(t.c1q(c), t.sqr(t.fq(v, 1)))) == 0u &&
        t.tr(t.mul(c, v ^ t.fq(v, 1))) != res.a1)
        throw Error("eq424_roots: A1 != Tr(c(v+v^q)) under the case hypothesis");

    res.degenerate = res.a0 == 0u && res.a1 == 0u && res.a2 == 0u;
    for (uint32_t alpha : t.mu_q1) {
        if ((t.mul(res.a2, t.sqr(alpha)) ^ t.mul(res.a1, alpha) ^ res.a0) == 0u)
            res.roots.push_back(alpha);
    }
    std::sort(res.roots.begin(), res.roots.end());
    res.count = static_cast<int>(res.roots.size());
    return res;
}

// End of the Theorem 2 proof: with Tr(c^{1+q} v^{2q}) = 0 and Tr(c v^{q+1})
// != 0, Eq. (4-23) contributing two k's and Eq. (4-24) contributing two
// alphas are mutually exclusive.
inline PropositionReport mutual_exclusion_check(const VerifyCtx& t, uint32_t c,
                                                unsigned threads = 0) {
    t.require_admissible_c(c);
    detail::Stopwatch sw;
    PropositionReport r = t.blank_report(PropId::P6, c);  // operational content of Prop 6
    r.cases_total = t.F.size();
    r.cases_checked = r.cases_total;
    const uint32_t cc1q = t.c1q(c);
    r.counterexamples = detail::parallel_collect(
        t.F.size(), threads, [&t, c, cc1q](uint64_t i, std::vector<std::string>& out) {
            const uint32_t b = static_cast<uint32_t>(i);
            const uint32_t v = t.v_of(b);
            if (t.tr(t.mul(cc1q, t.sqr(t.fq(v, 1)))) != 0u) return;
            const uint32_t A = t.tr(t.mul(c, t.mul(v, t.fq(v, 1))));
            if (A == 0u) return;
            const uint32_t g4 =
                t.mul(1u ^ t.mul(t.fq(b, 1), t.fq(b, 3)), 1u ^ t.mul(b, t.fq(b, 2)));
            const bool two_ks = t.tr1(t.mul(g4, t.inv(A))) == 1u;
            const Eq424Result e = eq424_roots(t, c, b);
            const bool two_alphas =
                e.a1 != 0u && e.a2 != 0u &&
                t.tr1(t.mul(t.mul(e.a0, e.a2), t.inv(t.sqr(e.a1)))) == 1u;
            if (two_ks && two_alphas) out.push_back("c=" + to_hex(c) + " b=" + to_hex(b));
        });
    r.elapsed_ms = sw.ms();
    return r;
}

// ---------------------------------------------------------------------------
// integer congruences behind Theorem 2
// ---------------------------------------------------------------------------

// gcd(d, q^4 - 1) = 1 and d q^2 = (q-1)(q^2+1) + 2 mod (q^4 - 1), q = 2^n.
inline PropositionReport congruence_check(int n) {
    if (n < 1 || n > 16) throw Error("congruence_check: supported range is 1 <= n <= 16");
    detail::Stopwatch sw;
    PropositionReport r;
    r.prop_id = PropId::THM2_CONGRUENCE;
    r.n = n;
    r.modulus = "-";  // pure integer arithmetic, no field involved
    r.cases_total = 2;
    r.cases_checked = 2;
    const uint64_t q = 1ull << n;
    const uint64_t d = q * q * q + q * q + q - 1;
    const uint64_t e = (q - 1) * (q * q + 1) + 2;
    const uint64_t q4m1 = (n == 16) ? ~0ull : q * q * q * q - 1;
    if (std::gcd(d, q4m1) != 1)
        r.counterexamples.push_back("n=" + std::to_string(n) + " gcd");
    const unsigned __int128 lhs = static_cast<unsigned __int128>(d) * q * q;
    if (static_cast<uint64_t>(lhs % q4m1) != e % q4m1)
        r.counterexamples.push_back("n=" + std::to_string(n) + " congruence");
    r.elapsed_ms = sw.ms();
    return r;
}

// ---------------------------------------------------------------------------
// Table 1 catalog scan (characteristic-2 rows)
// ---------------------------------------------------------------------------

enum class CSelectorKind { AllUnitCircle, Single, AllNonzeroNonone };

struct CSelector {
    CSelectorKind kind = CSelectorKind::AllUnitCircle;
    uint32_t c = 0;  // for Single
};

// Scans the requested c-set for one power family and returns the records
// achieving c-differential uniformity exactly 2.  family "inverse" is
// x^{2^m-2}; family "paper_map" is x^{q^3+q^2+q-1} with q = 2^{m/4}.
inline std::vector<SpectrumRecord> catalog_scan(const std::string& family, int m,
                                                const CSelector& sel, unsigned threads = 0) {
    uint64_t d = 0;
    if (family == "inverse") {
        if (m < 2 || m > 24) throw DegreeTooLarge("catalog_scan: m out of range");
        d = (1ull << m) - 2;
    } else if (family == "paper_map") {
        if (m % 4 != 0) throw BadTowerIndex("catalog_scan: paper_map needs 4 | m");
        if (m < 4 || m > 20) throw DegreeTooLarge("catalog_scan: m out of range");
        const uint64_t q = 1ull << (m / 4);
        d = q * q * q + q * q + q - 1;
    } else {
        throw UnsupportedFamily("catalog_scan: only characteristic-2 families (inverse, paper_map)");
    }

    const FieldSpec f = default_field(m);
    const PowerFunction F = make_power_function(f, d);

    std::vector<uint32_t> cs;
    switch (sel.kind) {
        case CSelectorKind::AllUnitCircle: {
            if (m % 4 != 0) throw BadTowerIndex("catalog_scan: unit-circle c-set needs 4 | m");
            const uint32_t q = 1u << (m / 4);
            for (uint32_t c : subgroup_elements(f, q * q + 1))
                if (c != 1u) cs.push_back(c);
            break;
        }
        case CSelectorKind::Single:
            cs.push_back(sel.c);
            break;
        case CSelectorKind::AllNonzeroNonone:
            for (uint64_t c = 2; c < f.size(); ++c) cs.push_back(static_cast<uint32_t>(c));
            break;
    }

    const unsigned nt = thread_count(threads);
    std::vector<std::vector<SpectrumRecord>> per(nt);
    parallel_chunks(0, cs.size(), nt, [&](uint64_t lo, uint64_t hi, unsigned chunk) {
        std::vector<uint32_t> hist(f.size());
        for (uint64_t i = lo; i < hi; ++i) {
            std::fill(hist.begin(), hist.end(), 0u);
            detail::spectrum_histogram(F, cs[i], hist);
            std::vector<uint64_t> omega = detail::omega_of_histogram(hist);
            if (omega.size() != 3) continue;  // delta != 2
            SpectrumRecord r;
            r.c = cs[i];
            r.d = F.d;
            r.delta = 2;
            r.omega = std::move(omega);
            r.modulus = f.modulus_hex();
            r.degree = f.degree;
            r.elapsed_ms = 0;
            per[chunk].push_back(std::move(r));
        }
    });
    std::vector<SpectrumRecord> out;
    for (auto& v : per)
        for (auto& r : v) out.push_back(std::move(r));
    std::sort(out.begin(), out.end(),
              [](const SpectrumRecord& x, const SpectrumRecord& y) { return x.c < y.c; });
    return out;
}

// ---------------------------------------------------------------------------
// dispatcher
// ---------------------------------------------------------------------------

// Runs proposition `id` (1..7) for one c or for every admissible c.  id 1
// yields two reports per c (the proposition has two independent parts).
inline std::vector<PropositionReport> run_prop(const VerifyCtx& t, int id,
                                               std::optional<uint32_t> c_single,
                                               bool symbolic = true,
                                               std::optional<bool> sampled = std::nullopt,
                                               unsigned threads = 0) {
    std::vector<uint32_t> cs;
    if (c_single) {
        cs.push_back(*c_single);
    } else {
        for (uint32_t c : t.mu_q21)
            if (c != 1u) cs.push_back(c);
    }
    const bool use_sample = sampled.value_or(t.n >= 3);
    std::vector<PropositionReport> out;
    for (uint32_t c : cs) {
        switch (id) {
            case 1:
                out.push_back(prop1a_check(t, c, threads));
                out.push_back(prop1b_check(t, c, threads));
                break;
            case 2: out.push_back(prop2_check(t, c, use_sample, threads)); break;
            case 3: out.push_back(prop3_check(t, c, threads)); break;
            case 4: out.push_back(prop4_check(t, c, threads)); break;
            case 5: out.push_back(prop5_check(t, c, symbolic, use_sample, threads)); break;
            case 6: out.push_back(prop6_check(t, c, threads)); break;
            case 7: out.push_back(prop7_check(t, c, threads)); break;
            default: throw Error("run_prop: id must be 1..7");
        }
    }
    return out;
}

}  // namespace ffa
