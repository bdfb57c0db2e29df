// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ffa/ffa.hpp"

using namespace ffa;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

template <typename Fn>
void criterion(int idx, const char* label, Fn&& fn) {
    const auto t0 = Clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    const int64_t ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    std::cout << "criterion " << idx << ": " << (ok ? "PASS" : "FAIL") << " (" << ms << " ms) "
              << label;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

std::vector<uint32_t> admissible_cs(const FieldSpec& f, uint64_t q) {
    std::vector<uint32_t> cs;
    for (uint32_t c : subgroup_elements(f, static_cast<uint32_t>(q * q) + 1))
        if (c != 1u) cs.push_back(c);
    return cs;
}

bool mass_ok(const SpectrumRecord& r, uint64_t size) {
    uint64_t total = 0, weighted = 0;
    for (size_t i = 0; i < r.omega.size(); ++i) {
        total += r.omega[i];
        weighted += i * r.omega[i];
    }
    return total == size && weighted == size &&
           r.omega.size() == static_cast<size_t>(r.delta) + 1;
}

}  // namespace

int main() {
    criterion(1, "unit-circle uniformity is exactly 2 at n = 1, 2 (< 5 s)", [](std::string& why) {
        const auto t0 = Clock::now();
        for (int n : {1, 2}) {
            PropositionReport r = verify_apcn(n);
            if (!r.pass() || r.cases_checked != r.cases_total || r.sampled) {
                why = "n=" + std::to_string(n) + " counterexamples=" +
                      std::to_string(r.counterexamples.size());
                return false;
            }
        }
        const int64_t ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        if (ms >= 5000) {
            why = "budget exceeded: " + std::to_string(ms) + " ms";
            return false;
        }
        return true;
    });

    criterion(2, "every circle spectrum matches the closed form for n = 1..4", [](std::string& why) {
        for (int n = 1; n <= 4; ++n) {
            const auto t0 = Clock::now();
            const FieldSpec f = default_field(4 * n);
            const uint64_t q = 1ull << n;
            const PowerFunction F = make_power_function(f, q * q * q + q * q + q - 1);
            const SpectrumFormula sf = spectrum_formula(n);
            const std::vector<uint64_t> want(sf.omega.begin(), sf.omega.end());
            for (uint32_t c : admissible_cs(f, q)) {
                const SpectrumRecord r = power_spectrum(F, c);
                if (r.delta != sf.delta || r.omega != want) {
                    why = "n=" + std::to_string(n) + " c=" + to_hex(c);
                    return false;
                }
            }
            const int64_t ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
            if (n == 4 && ms >= 60000) {
                why = "n=4 budget exceeded: " + std::to_string(ms) + " ms";
                return false;
            }
        }
        return true;
    });

    criterion(3, "checkers 1..7 pass exhaustively at n = 1, 2 (< 120 s)", [](std::string& why) {
        const auto t0 = Clock::now();
        for (int n : {1, 2}) {
            VerifyCtx t(n);
            for (int id = 1; id <= 7; ++id) {
                for (const PropositionReport& r :
                     run_prop(t, id, std::nullopt, true, false)) {
                    if (!r.pass() || r.sampled || r.cases_checked != r.cases_total) {
                        why = "n=" + std::to_string(n) + " id=" + std::to_string(id) + " c=" +
                              r.c_hex.value_or("-") + " counterexamples=" +
                              std::to_string(r.counterexamples.size());
                        return false;
                    }
                }
            }
        }
        const int64_t ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        if (ms >= 120000) {
            why = "budget exceeded: " + std::to_string(ms) + " ms";
            return false;
        }
        return true;
    });

    criterion(4, "coefficient identity holds symbolically for all 4160 (b, c) pairs",
              [](std::string& why) {
                  uint64_t cases = 0;
                  for (int n : {1, 2}) {
                      VerifyCtx t(n);
                      for (const PropositionReport& r :
                           run_prop(t, 5, std::nullopt, true, false)) {
                          if (!r.pass()) {
                              why = "n=" + std::to_string(n) + " c=" + r.c_hex.value_or("-");
                              return false;
                          }
                          cases += r.cases_checked;
                      }
                  }
                  if (cases != 4160u) {
                      why = "cases=" + std::to_string(cases);
                      return false;
                  }
                  return true;
              });

    criterion(5, "gcd and exponent congruence hold for n = 1..16 (< 1 s)", [](std::string& why) {
        const auto t0 = Clock::now();
        for (int n = 1; n <= 16; ++n) {
            if (!congruence_check(n).pass()) {
                why = "n=" + std::to_string(n);
                return false;
            }
        }
        const int64_t ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        if (ms >= 1000) {
            why = "budget exceeded: " + std::to_string(ms) + " ms";
            return false;
        }
        return true;
    });

    criterion(6, "exponent-e solution spectrum equals the derivative spectrum at n = 1, 2",
              [](std::string& why) {
                  for (int n : {1, 2}) {
                      VerifyCtx t(n);
                      for (uint32_t c : t.mu_q21) {
                          if (c == 1u) continue;
                          if (!eq418_spectrum_match(t, c).pass()) {
                              why = "n=" + std::to_string(n) + " c=" + to_hex(c);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(7, "omega_1 = q^2 by trace count and by spectrum for n = 1..3",
              [](std::string& why) {
                  for (int n = 1; n <= 3; ++n) {
                      VerifyCtx t(n);
                      const uint64_t q2 = (1ull << n) * (1ull << n);
                      for (uint32_t c : t.mu_q21) {
                          if (c == 1u) continue;
                          if (omega1_trace_count(t, c) != q2 || !omega1_check(t, c).pass()) {
                              why = "n=" + std::to_string(n) + " c=" + to_hex(c);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(8, "circle quadratic classification equals brute force on GF(2^4) and GF(2^6)",
              [](std::string& why) {
                  for (int m_half : {2, 3}) {
                      const FieldSpec f = default_field(2 * m_half);
                      const uint64_t circle_exp = (1ull << m_half) + 1;
                      for (uint64_t a = 1; a < f.size(); ++a) {
                          for (uint64_t b = 1; b < f.size(); ++b) {
                              const uint32_t aa = static_cast<uint32_t>(a);
                              const uint32_t bb = static_cast<uint32_t>(b);
                              int in_field = 0;
                              std::vector<uint32_t> on_circle;
                              for (uint64_t x = 0; x < f.size(); ++x) {
                                  const uint32_t xx = static_cast<uint32_t>(x);
                                  if ((f.sqr(xx) ^ f.mul(aa, xx) ^ bb) != 0u) continue;
                                  ++in_field;
                                  if (xx != 0 && f.pow_raw(xx, circle_exp) == 1u)
                                      on_circle.push_back(xx);
                              }
                              std::sort(on_circle.begin(), on_circle.end());
                              const QuadraticRoots got = unit_circle_quadratic(f, aa, bb, m_half);
                              if (got.roots != on_circle ||
                                  got.count != static_cast<int>(on_circle.size()) ||
                                  got.no_roots_in_field != (in_field == 0)) {
                                  why = "m=" + std::to_string(2 * m_half) + " a=" + to_hex(aa) +
                                        " b=" + to_hex(bb);
                                  return false;
                              }
                          }
                      }
                  }
                  return true;
              });

    criterion(9, "axiom, trace, polar and mass property suites", [](std::string& why) {
        // field axioms on 1e5 random triples per field
        for (int m : {4, 6, 8, 12, 16, 20, 24, 32}) {
            const FieldSpec f = default_field(m);
            std::mt19937_64 rng(0x5eedull + static_cast<uint64_t>(m));
            const uint32_t mask =
                (m == 32) ? 0xffffffffu : ((1u << m) - 1u);
            for (int i = 0; i < 100000; ++i) {
                const uint32_t a = static_cast<uint32_t>(rng()) & mask;
                const uint32_t b = static_cast<uint32_t>(rng()) & mask;
                const uint32_t c = static_cast<uint32_t>(rng()) & mask;
                if (f.mul(a, b) != f.mul(b, a) ||
                    f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)) ||
                    f.mul(a, b ^ c) != (f.mul(a, b) ^ f.mul(a, c)) ||
                    (a != 0 && f.mul(a, f.inv(a)) != 1u)) {
                    why = "axioms m=" + std::to_string(m) + " a=" + to_hex(a) + " b=" +
                          to_hex(b) + " c=" + to_hex(c);
                    return false;
                }
            }
        }

        // trace transitivity, exhaustive for 4n <= 12
        for (int n = 1; n <= 3; ++n) {
            const FieldSpec f = default_field(4 * n);
            const TowerView t = make_tower(f);
            for (uint64_t a = 0; a < f.size(); ++a) {
                const uint32_t x = static_cast<uint32_t>(a);
                if (f.abs_trace(x) != subfield_abs_trace(f, rel_trace(t, x, 1), n)) {
                    why = "trace n=" + std::to_string(n) + " a=" + to_hex(x);
                    return false;
                }
            }
        }

        // polar decomposition round-trip and uniqueness, exhaustive for 4n <= 12
        for (int n = 1; n <= 3; ++n) {
            const FieldSpec f = default_field(4 * n);
            const TowerView t = make_tower(f);
            for (int level : {1, 2}) {
                const uint64_t Q = 1ull << (t.n * level);
                const std::vector<uint32_t> circle =
                    subgroup_elements(f, static_cast<uint32_t>(Q) + 1);
                std::vector<uint32_t> base;
                for (uint64_t x = 1; x < f.size(); ++x)
                    if (f.pow_raw(static_cast<uint32_t>(x), Q) == x)
                        base.push_back(static_cast<uint32_t>(x));
                for (uint64_t x = 1; x < f.size(); ++x) {
                    const uint32_t xx = static_cast<uint32_t>(x);
                    if (level == 1 && !is_in_subfield(t, xx, 2)) continue;
                    const auto [lam, y] = polar_decompose(t, xx, level);
                    uint64_t pairs = 0;
                    for (uint32_t l2 : circle)
                        for (uint32_t y2 : base)
                            if (f.mul(l2, y2) == xx) ++pairs;
                    if (f.mul(lam, y) != xx || !in_unit_circle(t, lam, level) ||
                        f.pow_raw(y, Q) != y || pairs != 1u) {
                        why = "polar n=" + std::to_string(n) + " level=" +
                              std::to_string(level) + " x=" + to_hex(xx);
                        return false;
                    }
                }
            }
        }

        // mass invariants on every record this suite computes
        for (int n = 1; n <= 3; ++n) {
            const FieldSpec f = default_field(4 * n);
            const uint64_t q = 1ull << n;
            const PowerFunction F = make_power_function(f, q * q * q + q * q + q - 1);
            std::vector<uint32_t> cs = admissible_cs(f, q);
            cs.push_back(0);  // degenerate controls outside the circle
            cs.push_back(1);
            cs.push_back(f.generator);
            for (uint32_t c : cs) {
                if (!mass_ok(power_spectrum(F, c), f.size())) {
                    why = "mass n=" + std::to_string(n) + " c=" + to_hex(c);
                    return false;
                }
            }
        }
        return true;
    });

    if (g_failures == 0) {
        std::cout << "all 9 criteria passed" << std::endl;
        return 0;
    }
    std::cout << g_failures << " criterion(s) failed" << std::endl;
    return 1;
}
