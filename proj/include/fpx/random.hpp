#ifndef FPX_RANDOM_HPP
#define FPX_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "fpx/polymap.hpp"
#include "fpx/polynomial.hpp"
#include "fpx/session.hpp"

namespace fpx {

// SplitMix64: the whole harness draws from this generator so that runs are
// reproducible bit-for-bit on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) noexcept : s_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound); the modulo bias is irrelevant at the
    // tiny bounds used here.
    std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

  private:
    std::uint64_t s_;
};

// Per-trial seed: one SplitMix64 output of master + (trial+1) * golden ratio.
// Fixed so that individual trials can be re-run in isolation.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) noexcept {
    return SplitMix64(master_seed + 0x9E3779B97F4A7C15ull * (trial + 1)).next();
}

// Every 10th trial is forced onto a template with j(F) a unit (trial % 10 ==
// 0: identity plus p-th powers) or j(F) = 0 (trial % 10 == 5: components in
// the p-th power subring), so both regimes always appear in a trial stream.
enum class MapRegime { generic, unit_jacobian, zero_jacobian };

inline MapRegime regime_for_trial(std::uint64_t trial) noexcept {
    if (trial % 10 == 0) return MapRegime::unit_jacobian;
    if (trial % 10 == 5) return MapRegime::zero_jacobian;
    return MapRegime::generic;
}

// Up to max_terms monomials of total degree <= max_degree with uniform
// coefficients; draws of coefficient 0 simply drop the monomial.
inline Polynomial random_polynomial(SplitMix64& rng, std::uint32_t p, std::size_t n,
                                    std::uint32_t max_degree, std::uint32_t max_terms) {
    std::map<MultiIndex, Fp, GradedLexLess> acc;
    const std::uint64_t terms = 1 + rng.below(max_terms);
    for (std::uint64_t t = 0; t < terms; ++t) {
        const std::uint64_t degree = rng.below(std::uint64_t{max_degree} + 1);
        std::vector<std::uint32_t> e(n, 0);
        for (std::uint64_t d = 0; d < degree; ++d) e[rng.below(n)] += 1;
        const Fp c(static_cast<std::int64_t>(rng.below(p)), p);
        if (c.is_zero()) continue;
        MultiIndex key(std::move(e));
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(std::move(key), c);
        else {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
    return Polynomial::from_accumulated(p, n, std::move(acc));
}

// Random element of F_p[X^p] of total degree <= max_degree.
inline Polynomial random_subring_polynomial(SplitMix64& rng, std::uint32_t p, std::size_t n,
                                            std::uint32_t max_degree, std::uint32_t max_terms) {
    const Polynomial inner = random_polynomial(rng, p, n, max_degree / p, max_terms);
    Polynomial out(p, n);
    for (const Polynomial::Term& t : inner.terms()) {
        std::vector<std::uint32_t> e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = t.first[i] * p;
        out.add_term(MultiIndex(std::move(e)), t.second);
    }
    return out;
}

inline PolyMap random_poly_map(SplitMix64& rng, const SessionConfig& config, MapRegime regime) {
    std::vector<Polynomial> comps;
    comps.reserve(config.n);
    for (std::size_t i = 0; i < config.n; ++i) {
        switch (regime) {
            case MapRegime::generic:
                comps.push_back(random_polynomial(rng, config.p, config.n, config.max_degree,
                                                  config.max_terms));
                break;
            case MapRegime::unit_jacobian:
                // x_i + (p-th power part) has unit Jacobian; with a degree
                // budget below 1 the template degenerates to constants.
                if (config.max_degree == 0)
                    comps.push_back(random_polynomial(rng, config.p, config.n, 0,
                                                      config.max_terms));
                else
                    comps.push_back(Polynomial::variable(config.p, config.n, i) +
                                    random_subring_polynomial(rng, config.p, config.n,
                                                              config.max_degree,
                                                              config.max_terms));
                break;
            case MapRegime::zero_jacobian:
                comps.push_back(random_subring_polynomial(rng, config.p, config.n,
                                                          config.max_degree, config.max_terms));
                break;
        }
    }
    return PolyMap(std::move(comps));
}

// The map used by trial number `trial` of any verification law: the trial
// seed fixes the stream, the regime is forced by the trial index.
inline PolyMap random_poly_map(const SessionConfig& config, std::uint64_t trial) {
    SplitMix64 rng(trial_seed(config.seed, trial));
    return random_poly_map(rng, config, regime_for_trial(trial));
}

// Uniform scalar matrix; when forced singular, row 1 duplicates row 0 (or
// the single entry is zeroed when n = 1).
inline std::vector<std::vector<Fp>> random_scalar_matrix(SplitMix64& rng, std::uint32_t p,
                                                         std::size_t n, bool force_singular) {
    std::vector<std::vector<Fp>> a;
    a.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Fp> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j)
            row.emplace_back(static_cast<std::int64_t>(rng.below(p)), p);
        a.push_back(std::move(row));
    }
    if (force_singular) {
        if (n == 1)
            a[0][0] = Fp::zero(p);
        else
            a[1] = a[0];
    }
    return a;
}

} // namespace fpx

#endif // FPX_RANDOM_HPP
