#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <vector>

#include "ffa/parallel.hpp"
#include "ffa/report.hpp"
#include "ffa/subgroup.hpp"

namespace ffa {

// ---------------------------------------------------------------------------
// power maps x -> x^d with a precomputed evaluation table
// ---------------------------------------------------------------------------

struct PowerFunction {
    const FieldSpec* spec = nullptr;
    uint64_t d = 0;        // reduced: 0 <= d < 2^m - 1 (except d = 2^m - 1 maps to 0)
    bool is_permutation = false;
    std::vector<uint32_t> table;  // table[x] = x^d, 2^m entries

    uint32_t operator()(uint32_t x) const { return table[x]; }
};

inline PowerFunction make_power_function(const FieldSpec& f, uint64_t d) {
    if (f.degree > 24) throw DegreeTooLarge("make_power_function: table bound is degree 24");
    PowerFunction pf;
    pf.spec = &f;
    // reduction is valid on F* only; x = 0 keeps the original exponent's value
    uint64_t dr = d % f.order;
    pf.d = dr;
    pf.is_permutation =
        std::gcd(dr == 0 ? static_cast<uint64_t>(f.order) : dr, static_cast<uint64_t>(f.order)) == 1;
    pf.table.resize(f.size());
    pf.table[0] = (d == 0) ? 1u : 0u;
    for (uint64_t x = 1; x < f.size(); ++x)
        pf.table[x] = f.pow_raw(static_cast<uint32_t>(x), dr);
    return pf;
}

// ---------------------------------------------------------------------------
// c-derivative counting
// ---------------------------------------------------------------------------

// #{x : F(x + a) + c F(x) = b}; subtraction is addition in characteristic 2.
inline uint64_t c_derivative_count(const PowerFunction& F, uint32_t c, uint32_t a, uint32_t b) {
    const FieldSpec& f = *F.spec;
    uint64_t count = 0;
    for (uint64_t x = 0; x < f.size(); ++x) {
        uint32_t xu = static_cast<uint32_t>(x);
        if ((F.table[xu ^ a] ^ f.mul(c, F.table[xu])) == b) ++count;
    }
    return count;
}

inline uint64_t c_derivative_count(const PowerFunction& F, const FieldElement& c,
                                   const FieldElement& a, const FieldElement& b) {
    if (c.spec != F.spec || a.spec != F.spec || b.spec != F.spec)
        throw SpecMismatch("c_derivative_count: element field mismatch");
    return c_derivative_count(F, c.v, a.v, b.v);
}

namespace detail {

// Histogram of b = F(x+1) + c F(x) over all x; hist must hold 2^m zeroed slots.
inline void spectrum_histogram(const PowerFunction& F, uint32_t c, std::vector<uint32_t>& hist) {
    const FieldSpec& f = *F.spec;
    for (uint64_t x = 0; x < f.size(); ++x) {
        uint32_t xu = static_cast<uint32_t>(x);
        ++hist[F.table[xu ^ 1u] ^ f.mul(c, F.table[xu])];
    }
}

inline std::vector<uint64_t> omega_of_histogram(const std::vector<uint32_t>& hist) {
    uint32_t maxfreq = 0;
    for (uint32_t h : hist) maxfreq = std::max(maxfreq, h);
    std::vector<uint64_t> omega(maxfreq + 1, 0);
    for (uint32_t h : hist) ++omega[h];
    return omega;
}

}  // namespace detail

// Max solution count over the reduced row set: a = 1 always (power-map
// scaling cDelta(a,b) = cDelta(1, b/a^d) covers every a != 0), plus the raw
// a = 0 row iff include_a_zero and c != 1.  For c = 1, a = 0 makes the
// derivative identically zero and is excluded.
inline uint64_t c_uniformity(const PowerFunction& F, uint32_t c, bool include_a_zero) {
    const FieldSpec& f = *F.spec;
    std::vector<uint32_t> hist(f.size(), 0);
    detail::spectrum_histogram(F, c, hist);
    uint64_t best = 0;
    for (uint32_t h : hist) best = std::max<uint64_t>(best, h);
    if (include_a_zero && c != 1u) {
        // a = 0: (1 + c) F(x) = b, count per b is the multiplicity of F at b/(1+c)
        std::vector<uint32_t> fh(f.size(), 0);
        for (uint32_t y : F.table) ++fh[y];
        for (uint32_t h : fh) best = std::max<uint64_t>(best, h);
    }
    return best;
}

inline SpectrumRecord power_spectrum(const PowerFunction& F, uint32_t c) {
    const auto t0 = std::chrono::steady_clock::now();
    const FieldSpec& f = *F.spec;
    std::vector<uint32_t> hist(f.size(), 0);
    detail::spectrum_histogram(F, c, hist);
    SpectrumRecord r;
    r.c = c;
    r.d = F.d;
    r.omega = detail::omega_of_histogram(hist);
    r.delta = static_cast<int>(r.omega.size()) - 1;
    r.modulus = f.modulus_hex();
    r.degree = f.degree;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

// Closed form for the maps x^{q^3+q^2+q-1} over F_{q^4}, q = 2^n:
// (omega_0, omega_1, omega_2) = ((q^4-q^2)/2, q^2, (q^4-q^2)/2).
struct SpectrumFormula {
    int delta = 2;
    std::array<uint64_t, 3> omega{};
};

inline SpectrumFormula spectrum_formula(int n) {
    if (n < 1) throw Error("spectrum_formula: n must be >= 1");
    const unsigned __int128 q = static_cast<unsigned __int128>(1) << n;
    const unsigned __int128 half = (q * q * q * q - q * q) / 2;
    SpectrumFormula s;
    s.omega = {static_cast<uint64_t>(half), static_cast<uint64_t>(q * q),
               static_cast<uint64_t>(half)};
    return s;
}

// Exhaustive check of the APcN claim at desk scale: over GF(2^{4n}) with
// d = q^3 + q^2 + q - 1, every c in mu_{q^2+1} \ {1} must give delta = 2 with
// the closed-form spectrum.
inline PropositionReport verify_apcn(int n, unsigned threads = 0) {
    if (n < 1 || n > 5) throw DegreeTooLarge("verify_apcn: supported range is 1 <= n <= 5");
    const auto t0 = std::chrono::steady_clock::now();
    const FieldSpec f = default_field(4 * n);
    const uint64_t q = 1ull << n;
    const uint64_t d = q * q * q + q * q + q - 1;
    const PowerFunction F = make_power_function(f, d);
    const std::vector<uint32_t> mu = subgroup_elements(f, static_cast<uint32_t>(q * q + 1));

    const SpectrumFormula want = spectrum_formula(n);
    const std::vector<uint64_t> want_omega(want.omega.begin(), want.omega.end());

    const unsigned nthreads = thread_count(threads);
    std::vector<std::vector<std::string>> bad(mu.size());
    parallel_chunks(0, mu.size(), nthreads, [&](uint64_t lo, uint64_t hi, unsigned chunk) {
        (void)chunk;
        std::vector<uint32_t> hist(f.size());
        for (uint64_t i = lo; i < hi; ++i) {
            const uint32_t c = mu[i];
            if (c == 1u) continue;
            std::fill(hist.begin(), hist.end(), 0u);
            detail::spectrum_histogram(F, c, hist);
            std::vector<uint64_t> omega = detail::omega_of_histogram(hist);
            if (omega != want_omega) bad[i].push_back("c=" + to_hex(c));
        }
    });

    PropositionReport r;
    r.prop_id = PropId::APCN;
    r.n = n;
    r.modulus = f.modulus_hex();
    r.cases_total = mu.size() - 1;  // mu minus {1}
    r.cases_checked = r.cases_total;
    for (auto& v : bad)
        for (auto& s : v) r.counterexamples.push_back(std::move(s));
    std::sort(r.counterexamples.begin(), r.counterexamples.end());
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

}  // namespace ffa
