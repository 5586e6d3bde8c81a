#ifndef FPX_VERIFY_HPP
#define FPX_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fpx/frobenius.hpp"
#include "fpx/io.hpp"
#include "fpx/random.hpp"
#include "fpx/session.hpp"
#include "fpx/wronskian.hpp"

namespace fpx {

struct TrialOutcome {
    bool ok = true;
    std::string detail; // rendered counterexample, empty when ok
};

using TrialCheck = std::function<TrialOutcome(const SessionConfig&, std::uint64_t, SplitMix64&)>;

// Aggregate of one law run. Reproducible bit-for-bit from (law, config); the
// wall time is reported in the text rendering only, never in the structured
// output.
struct VerificationReport {
    std::string law;
    SessionConfig config;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::optional<std::uint64_t> first_failure_trial;
    std::string first_counterexample;
    std::vector<std::uint64_t> trial_seeds;
    double wall_ms = 0.0;

    bool pass() const noexcept { return failures == 0; }
};

inline VerificationReport run_trials(std::string_view law, const SessionConfig& config,
                                     const TrialCheck& check) {
    config.validate();
    VerificationReport report;
    report.law = law;
    report.config = config;
    report.trial_seeds.reserve(config.trials);
    const auto start = std::chrono::steady_clock::now();
    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
        const std::uint64_t seed = trial_seed(config.seed, trial);
        report.trial_seeds.push_back(seed);
        SplitMix64 rng(seed);
        TrialOutcome outcome;
        try {
            outcome = check(config, trial, rng);
        } catch (const std::exception& e) {
            outcome = TrialOutcome{false, std::string("exception: ") + e.what()};
        }
        ++report.trials;
        if (!outcome.ok) {
            ++report.failures;
            if (!report.first_failure_trial) {
                report.first_failure_trial = trial;
                report.first_counterexample = std::move(outcome.detail);
            }
        }
    }
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

namespace laws {

inline TrialOutcome prop2(const SessionConfig& cfg, std::uint64_t trial, SplitMix64& rng) {
    const PolyMap F = random_poly_map(rng, cfg, regime_for_trial(trial));
    const Prop2Witness w = verify_prop2(F);
    if (w.holds) return {};
    return {false, "F = " + print_canonical(F) + "\ndelta(F) = " + print_canonical(w.delta_value) +
                       "\nj(F)^q = " + print_canonical(w.jacobian_power)};
}

inline TrialOutcome lemma2(const SessionConfig& cfg, std::uint64_t trial, SplitMix64& rng) {
    const PolyMap F = random_poly_map(rng, cfg, regime_for_trial(trial));
    const PolyMap G = random_poly_map(rng, cfg, regime_for_trial(trial + 5));
    const Lemma2Witness w = verify_lemma2(F, G);
    if (w.holds) return {};
    return {false, "F = " + print_canonical(F) + "\nG = " + print_canonical(G) +
                       "\ndelta(F o G) = " + print_canonical(w.lhs) +
                       "\n(phi_F delta(G)) * delta(F) = " + print_canonical(w.rhs)};
}

inline TrialOutcome lemma3(const SessionConfig& cfg, std::uint64_t trial, SplitMix64& rng) {
    const auto A = random_scalar_matrix(rng, cfg.p, cfg.n, trial % 10 == 5);
    const LinearDeltaWitness w = linear_map_delta(A);
    if (w.holds) return {};
    std::string rendered = "A =";
    for (const auto& row : A) {
        rendered += " [";
        for (std::size_t j = 0; j < row.size(); ++j)
            rendered += (j ? "," : "") + std::to_string(row[j].value());
        rendered += "]";
    }
    return {false, rendered + "\ndelta(AX) = " + print_canonical(w.delta_value) +
                       "\ndet A = " + std::to_string(w.matrix_det.value())};
}

inline TrialOutcome lemma4(const SessionConfig& cfg, std::uint64_t trial, SplitMix64& rng) {
    const PolyMap F = random_poly_map(rng, cfg, regime_for_trial(trial));
    const Lemma4Witness w = verify_lemma4(F);
    if (w.holds) return {};
    return {false, "F = " + print_canonical(F) + "\ndet W = " + print_canonical(w.det_w) +
                       "\nc_p^n delta(F) = " + print_canonical(w.scaled_delta) +
                       "\nfactorization W = Q U^T " +
                       (w.factorization_holds ? "holds" : "FAILS")};
}

inline TrialOutcome nousiainen(const SessionConfig& cfg, std::uint64_t trial, SplitMix64& rng) {
    const PolyMap F = random_poly_map(rng, cfg, regime_for_trial(trial));
    const bool basis = is_frobenius_basis(F);
    const Polynomial d = delta(F);
    const bool delta_unit = !d.is_zero() && d.is_constant();
    if (basis != delta_unit)
        return {false, "F = " + print_canonical(F) +
                           "\nbasis criterion (jacobian side) = " + (basis ? "true" : "false") +
                           "\ndelta(F) = " + print_canonical(d)};
    if (!basis) return {};
    const Fp d_inverse = d.constant_value().inverse();
    for (std::size_t i = 0; i < cfg.n; ++i) {
        const Polynomial xi = Polynomial::variable(cfg.p, cfg.n, i);
        const DeltaRepresentation rep = represent_delta_multiple(xi, F);
        Polynomial sum(cfg.p, cfg.n);
        for (std::size_t b = 0; b < rep.index.size(); ++b)
            sum += rep.coefficients[b] * monomial_power(F, rep.index[b]);
        if (sum * d_inverse != xi)
            return {false, "F = " + print_canonical(F) + "\nx" + std::to_string(i + 1) +
                               " is not reproduced; delta = " + print_canonical(rep.delta_value)};
    }
    return {};
}

inline TrialOutcome prop3(const SessionConfig& cfg, std::uint64_t trial, SplitMix64& rng) {
    const PolyMap F = random_poly_map(rng, cfg, regime_for_trial(trial));
    const Polynomial g = random_polynomial(rng, cfg.p, cfg.n, cfg.max_degree, cfg.max_terms);
    const DeltaRepresentation rep = represent_delta_multiple(g, F);
    Polynomial sum(cfg.p, cfg.n);
    for (std::size_t b = 0; b < rep.index.size(); ++b) {
        if (!in_frobenius_subring(rep.coefficients[b]))
            return {false, "F = " + print_canonical(F) + "\ng = " + print_canonical(g) +
                               "\ncoefficient outside F_p[X^p]: " +
                               print_canonical(rep.coefficients[b])};
        sum += rep.coefficients[b] * monomial_power(F, rep.index[b]);
    }
    if (sum == rep.delta_value * g) return {};
    return {false, "F = " + print_canonical(F) + "\ng = " + print_canonical(g) +
                       "\nsum c_beta F^beta = " + print_canonical(sum) +
                       "\ndelta * g = " + print_canonical(rep.delta_value * g)};
}

inline TrialOutcome theorem_kf(const SessionConfig& cfg, std::uint64_t trial, SplitMix64& rng) {
    const PolyMap F = random_poly_map(rng, cfg, regime_for_trial(trial));
    const TheoremKfWitness w = verify_theorem_principal_case(F);
    if (w.holds) return {};
    return {false, "F = " + print_canonical(F) +
                       "\nj(F)^q = " + print_canonical(w.jacobian_power) +
                       "\ndelta(F) = " + print_canonical(w.representation.delta_value)};
}

inline TrialOutcome lemma1(const SessionConfig& cfg, std::uint64_t trial, SplitMix64& rng) {
    (void)trial;
    const Polynomial f = random_polynomial(rng, cfg.p, cfg.n, cfg.max_degree, cfg.max_terms);
    // m stays below p so the binomial coefficients do not collapse mod p,
    // and below 5 to bound the power sizes.
    const std::uint32_t m_max = std::min<std::uint32_t>(4, cfg.p - 1);
    for (std::uint32_t l = 0; l <= m_max; ++l) {
        std::vector<std::size_t> vars;
        vars.reserve(l);
        for (std::uint32_t t = 0; t < l; ++t)
            vars.push_back(static_cast<std::size_t>(rng.below(cfg.n)));
        for (std::uint32_t m = l; m <= m_max; ++m) {
            const Polynomial sum = lemma1_sum(f, vars, m);
            if (m > l) {
                if (!sum.is_zero())
                    return {false, "f = " + print_canonical(f) + "\nl = " + std::to_string(l) +
                                       ", m = " + std::to_string(m) +
                                       "\nsum = " + print_canonical(sum) + " (expected 0)"};
            } else {
                Polynomial expected =
                    Polynomial::constant(cfg.p, cfg.n, factorial_mod(l, cfg.p).value());
                for (std::size_t v : vars) expected *= derive(f, v);
                if (sum != expected)
                    return {false, "f = " + print_canonical(f) + "\nl = m = " + std::to_string(l) +
                                       "\nsum = " + print_canonical(sum) +
                                       "\nl! prod D_k f = " + print_canonical(expected)};
            }
        }
    }
    return {};
}

inline TrialOutcome prop1_blocks(const SessionConfig& cfg, std::uint64_t trial, SplitMix64& rng) {
    const PolyMap F = random_poly_map(rng, cfg, regime_for_trial(trial));
    const std::uint32_t r = cfg.p;
    const WronskianAssembly assembly = reduced_wronskian(F, r);
    const Polynomial det_t = det_fraction_free(assembly.t);
    if (!det_t.is_one())
        return {false, "F = " + print_canonical(F) + "\ndet T = " + print_canonical(det_t)};
    for (std::size_t i = 0; i < assembly.index.size(); ++i)
        for (std::size_t j = 0; j < assembly.index.size(); ++j)
            if (assembly.index[i].degree() < assembly.index[j].degree() &&
                !assembly.reduced.at(i, j).is_zero())
                return {false, "F = " + print_canonical(F) + "\nW' nonzero above the blocks"};
    const Polynomial det_w = detail::checked_det(assembly.w);
    Polynomial block_product = Polynomial::constant(cfg.p, cfg.n, 1);
    for (std::uint64_t l = 0; l <= static_cast<std::uint64_t>(cfg.n) * (r - 1); ++l)
        block_product *= detail::checked_det(diagonal_block(F, r, l));
    if (det_w != block_product)
        return {false, "F = " + print_canonical(F) + "\ndet W = " + print_canonical(det_w) +
                           "\nproduct of diagonal blocks = " + print_canonical(block_product)};
    return {};
}

inline TrialOutcome formula5(const SessionConfig& cfg, std::uint64_t trial, SplitMix64& rng) {
    (void)trial;
    const Polynomial f = random_polynomial(rng, cfg.p, 1, cfg.max_degree, cfg.max_terms);
    const std::uint32_t r_max = std::min<std::uint32_t>(cfg.p, 4);
    for (std::uint32_t r = 1; r <= r_max; ++r) {
        const UnivariateWronskianWitness w = univariate_power_wronskian_check(f, r);
        if (!w.holds)
            return {false, "f = " + print_canonical(f) + ", r = " + std::to_string(r) +
                               "\ndet = " + print_canonical(w.determinant) +
                               "\n(Df)^{r(r-1)/2} prod k! = " + print_canonical(w.expected)};
    }
    return {};
}

} // namespace laws

struct Law {
    std::string name;
    std::function<void(const SessionConfig&)> validate; // may be empty
    TrialCheck check;
};

inline const std::vector<Law>& law_table() {
    static const std::vector<Law> table = {
        {"lemma1", {}, laws::lemma1},
        {"prop1-blocks", {}, laws::prop1_blocks},
        {"formula5",
         [](const SessionConfig& cfg) {
             if (cfg.n != 1)
                 throw std::invalid_argument("law formula5 requires n = 1 (univariate)");
         },
         laws::formula5},
        {"lemma2", {}, laws::lemma2},
        {"lemma3", {}, laws::lemma3},
        {"lemma4", {}, laws::lemma4},
        {"prop2", {}, laws::prop2},
        {"nousiainen", {}, laws::nousiainen},
        {"prop3", {}, laws::prop3},
        {"theorem-kf", {}, laws::theorem_kf},
    };
    return table;
}

inline std::vector<std::string> law_names() {
    std::vector<std::string> names;
    names.reserve(law_table().size());
    for (const Law& law : law_table()) names.push_back(law.name);
    return names;
}

inline VerificationReport run_verification(std::string_view law, const SessionConfig& config) {
    for (const Law& entry : law_table()) {
        if (entry.name != law) continue;
        if (entry.validate) entry.validate(config);
        return run_trials(entry.name, config, entry.check);
    }
    throw std::invalid_argument("unknown law: " + std::string(law));
}

inline std::string render_text(const VerificationReport& report) {
    std::string out = "law: " + report.law + "\n";
    const SessionConfig& c = report.config;
    out += "config: p=" + std::to_string(c.p) + " n=" + std::to_string(c.n) +
           " seed=" + std::to_string(c.seed) + " trials=" + std::to_string(c.trials) +
           " max_degree=" + std::to_string(c.max_degree) +
           " max_terms=" + std::to_string(c.max_terms) + "\n";
    out += std::string("result: ") + (report.pass() ? "PASS" : "FAIL") + " (" +
           std::to_string(report.trials) + " trials, " + std::to_string(report.failures) +
           " failures)\n";
    if (report.first_failure_trial) {
        out += "first failure: trial " + std::to_string(*report.first_failure_trial) + " (seed " +
               std::to_string(report.trial_seeds[*report.first_failure_trial]) + ")\n";
        out += "counterexample:\n";
        std::size_t start = 0;
        const std::string& ce = report.first_counterexample;
        while (start <= ce.size()) {
            const std::size_t end = ce.find('\n', start);
            out += "  " + ce.substr(start, end == std::string::npos ? std::string::npos
                                                                    : end - start) +
                   "\n";
            if (end == std::string::npos) break;
            start = end + 1;
        }
    }
    out += "time: " + std::to_string(report.wall_ms) + " ms\n";
    return out;
}

// Structured rendering. Deterministic for a fixed (law, config): the wall
// time is deliberately omitted (timing = null) so identical runs emit
// identical bytes.
inline std::string render_json(const VerificationReport& report) {
    nlohmann::json j;
    j["command"] = "verify";
    j["inputs"] = {{"law", report.law},
                   {"p", report.config.p},
                   {"n", report.config.n},
                   {"seed", report.config.seed},
                   {"trials", report.config.trials},
                   {"max_degree", report.config.max_degree},
                   {"max_terms", report.config.max_terms}};
    nlohmann::json result;
    result["law"] = report.law;
    result["pass"] = report.pass();
    result["trials"] = report.trials;
    result["failures"] = report.failures;
    if (report.first_failure_trial) {
        result["first_failure_trial"] = *report.first_failure_trial;
        result["first_counterexample"] = report.first_counterexample;
    } else {
        result["first_failure_trial"] = nullptr;
        result["first_counterexample"] = nullptr;
    }
    result["trial_seeds"] = report.trial_seeds;
    j["result"] = std::move(result);
    j["timing"] = nullptr;
    return j.dump();
}

} // namespace fpx

#endif // FPX_VERIFY_HPP
