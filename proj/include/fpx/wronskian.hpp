#ifndef FPX_WRONSKIAN_HPP
#define FPX_WRONSKIAN_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fpx/errors.hpp"
#include "fpx/frobenius.hpp"
#include "fpx/matrix.hpp"
#include "fpx/multiindex.hpp"
#include "fpx/polymap.hpp"
#include "fpx/polynomial.hpp"

namespace fpx {

namespace detail {

// In characteristic p with r > p the factorials beta! in the diagonal blocks
// vanish and every such Wronskian determinant is identically zero, so the
// Wronskian constructors only accept 1 <= r <= p.
inline void require_order(std::uint32_t r, std::uint32_t p, const char* where) {
    if (r < 1 || r > p)
        throw std::invalid_argument(std::string(where) + ": order must satisfy 1 <= r <= p");
}

} // namespace detail

// The generalized Wronskian W with W(alpha, beta) = d^alpha F^beta, rows and
// columns running over the graded-lex enumeration of [0, r-1].
inline PolyMatrix wronskian_matrix(const PolyMap& F, std::uint32_t r) {
    detail::require_order(r, F.modulus(), "wronskian_matrix");
    const std::vector<MultiIndex> index = interval_enumerate(0, r - 1, F.dimension());
    PolyMatrix w(index.size(), index.size(), F.modulus(), F.dimension());
    for (std::size_t j = 0; j < index.size(); ++j) {
        const Polynomial fb = monomial_power(F, index[j]);
        for (std::size_t i = 0; i < index.size(); ++i) w.at(i, j) = derive(fb, index[i]);
    }
    return w;
}

// T(alpha, beta) = (beta choose alpha) (-F)^{beta - alpha}; zero whenever
// alpha is not componentwise below beta, hence upper unitriangular in any
// order refining the partial order.
inline PolyMatrix t_matrix(const PolyMap& F, std::uint32_t r) {
    detail::require_order(r, F.modulus(), "t_matrix");
    const std::uint32_t p = F.modulus();
    const std::size_t n = F.dimension();
    const std::vector<MultiIndex> index = interval_enumerate(0, r - 1, n);
    std::map<MultiIndex, Polynomial, GradedLexLess> signed_powers;
    PolyMatrix t(index.size(), index.size(), p, n);
    for (std::size_t i = 0; i < index.size(); ++i) {
        for (std::size_t j = 0; j < index.size(); ++j) {
            const MultiIndex &alpha = index[i], &beta = index[j];
            if (!componentwise_leq(alpha, beta)) continue;
            const Fp coeff = binomial(beta, alpha, p);
            if (coeff.is_zero()) continue;
            const MultiIndex gamma = beta - alpha;
            auto it = signed_powers.find(gamma);
            if (it == signed_powers.end()) {
                Polynomial pow = monomial_power(F, gamma);
                if (gamma.degree() % 2 == 1) pow = -pow;
                it = signed_powers.emplace(gamma, std::move(pow)).first;
            }
            t.at(i, j) = it->second * coeff;
        }
    }
    return t;
}

// W, T, the product W' = W T, and the grade block sizes s_l, all validated:
// T unitriangular, W'(alpha, beta) = 0 for |alpha| < |beta|, and
// sum_l l*s_l = n r^n (r-1)/2. A violation here is an implementation bug.
struct WronskianAssembly {
    std::uint32_t order;
    std::vector<MultiIndex> index;
    PolyMatrix w;
    PolyMatrix t;
    PolyMatrix reduced;
    std::vector<std::size_t> block_sizes;
};

inline WronskianAssembly reduced_wronskian(const PolyMap& F, std::uint32_t r) {
    detail::require_order(r, F.modulus(), "reduced_wronskian");
    const std::size_t n = F.dimension();
    std::vector<MultiIndex> index = interval_enumerate(0, r - 1, n);
    PolyMatrix w = wronskian_matrix(F, r);
    PolyMatrix t = t_matrix(F, r);
    PolyMatrix reduced = w * t;
    const std::size_t grades = n * (static_cast<std::size_t>(r) - 1) + 1;
    std::vector<std::size_t> block_sizes(grades, 0);
    std::uint64_t weighted = 0;
    for (const MultiIndex& a : index) {
        block_sizes[static_cast<std::size_t>(a.degree())] += 1;
        weighted += a.degree();
    }
    std::uint64_t expected = static_cast<std::uint64_t>(n) * index.size() * (r - 1) / 2;
    if (weighted != expected)
        throw invariant_violation("reduced_wronskian: grade sum mismatch");
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (!t.at(i, i).is_one())
            throw invariant_violation("reduced_wronskian: T diagonal entry is not 1");
        for (std::size_t j = 0; j < i; ++j)
            if (!t.at(i, j).is_zero())
                throw invariant_violation("reduced_wronskian: T is not upper triangular");
        for (std::size_t j = 0; j < index.size(); ++j)
            if (index[i].degree() < index[j].degree() && !reduced.at(i, j).is_zero())
                throw invariant_violation("reduced_wronskian: block vanishing fails");
    }
    return WronskianAssembly{r,            std::move(index),   std::move(w),
                             std::move(t), std::move(reduced), std::move(block_sizes)};
}

// The grade-l diagonal block of W', computed directly from the closed form:
// entry (alpha, beta) = beta! * sum over tuples (theta^1, ..., theta^n) with
// |theta^i| = beta_i and sum_i theta^i = alpha of the multinomial
// (alpha choose theta^1 ... theta^n) times prod_{i,j} (d_j f_i)^{theta^i_j}.
// Entries are polynomials in the Jacobian matrix entries only.
inline PolyMatrix diagonal_block(const PolyMap& F, std::uint32_t r, std::uint64_t grade) {
    detail::require_order(r, F.modulus(), "diagonal_block");
    const std::uint32_t p = F.modulus();
    const std::size_t n = F.dimension();
    if (grade > static_cast<std::uint64_t>(n) * (r - 1))
        throw std::invalid_argument("diagonal_block: grade out of range");
    std::vector<MultiIndex> all = interval_enumerate(0, r - 1, n);
    std::vector<MultiIndex> level;
    for (const MultiIndex& a : all)
        if (a.degree() == grade) level.push_back(a);

    const PolyMatrix jf = jacobian_matrix(F);
    // powers[i][j][k] = (d_j f_i)^k for k up to r-1
    std::vector<std::vector<std::vector<Polynomial>>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        powers[i].resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            powers[i][j].reserve(r);
            powers[i][j].push_back(Polynomial::constant(p, n, 1));
            for (std::uint32_t k = 1; k < r; ++k)
                powers[i][j].push_back(powers[i][j].back() * jf.at(i, j));
        }
    }

    // all theta in N^n with |theta| = total
    auto compositions = [n](std::uint32_t total) {
        std::vector<MultiIndex> out;
        std::vector<std::uint32_t> cur(n, 0);
        auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
            if (pos + 1 == n) {
                cur[pos] = left;
                out.push_back(MultiIndex(cur));
                return;
            }
            for (std::uint32_t v = 0; v <= left; ++v) {
                cur[pos] = v;
                self(self, pos + 1, left - v);
            }
        };
        rec(rec, 0, total);
        return out;
    };

    PolyMatrix block(level.size(), level.size(), p, n);
    for (std::size_t bi = 0; bi < level.size(); ++bi) {
        const MultiIndex& beta = level[bi];
        const Fp beta_factorial = factorial(beta, p);
        std::vector<std::vector<MultiIndex>> choices;
        choices.reserve(n);
        for (std::size_t i = 0; i < n; ++i) choices.push_back(compositions(beta[i]));
        for (std::size_t ai = 0; ai < level.size(); ++ai) {
            const MultiIndex& alpha = level[ai];
            Polynomial acc(p, n);
            std::vector<MultiIndex> tuple;
            tuple.reserve(n);
            auto rec = [&](auto&& self, std::size_t i, const MultiIndex& used) -> void {
                if (i == n) {
                    if (!(used == alpha)) return;
                    Fp coeff = multinomial(alpha, tuple, p) * beta_factorial;
                    if (coeff.is_zero()) return;
                    Polynomial prod = Polynomial::constant(p, n, coeff.value());
                    for (std::size_t ii = 0; ii < n; ++ii)
                        for (std::size_t jj = 0; jj < n; ++jj)
                            if (tuple[ii][jj] > 0) prod *= powers[ii][jj][tuple[ii][jj]];
                    acc += prod;
                    return;
                }
                for (const MultiIndex& theta : choices[i]) {
                    const MultiIndex next = used + theta;
                    if (!componentwise_leq(next, alpha)) continue;
                    tuple.push_back(theta);
                    self(self, i + 1, next);
                    tuple.pop_back();
                }
            };
            rec(rec, 0, MultiIndex::zero(n));
            block.at(ai, bi) = std::move(acc);
        }
    }
    return block;
}

// sum_{k=0}^{m} (m choose k) (-f)^{m-k} D_1 ... D_l f^k where D_t is the
// partial derivative in the t-th listed variable (0-based, repeats allowed).
// The sum collapses to 0 for m > l and to l! prod_t D_t f at m = l.
inline Polynomial lemma1_sum(const Polynomial& f, const std::vector<std::size_t>& derivation_vars,
                             std::uint32_t m) {
    const std::uint32_t p = f.modulus();
    const std::size_t n = f.dimension();
    if (m < derivation_vars.size())
        throw std::invalid_argument("lemma1_sum: m must be >= the number of derivations");
    for (std::size_t v : derivation_vars)
        if (v >= n) throw std::invalid_argument("lemma1_sum: derivation index out of range");
    std::vector<Polynomial> powers;
    powers.reserve(m + 1);
    powers.push_back(Polynomial::constant(p, n, 1));
    for (std::uint32_t k = 1; k <= m; ++k) powers.push_back(powers.back() * f);
    Polynomial acc(p, n);
    for (std::uint32_t k = 0; k <= m; ++k) {
        const Fp coeff = integer_binomial_mod(m, k, p);
        if (coeff.is_zero()) continue;
        Polynomial derived = powers[k];
        for (std::size_t v : derivation_vars) derived = derive(derived, v);
        if (derived.is_zero()) continue;
        Polynomial term = powers[m - k] * derived * coeff;
        if ((m - k) % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

// c_p = prod_{k=1}^{p-1} k!, a unit of F_p.
inline Fp c_p_constant(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("c_p_constant: p must be prime");
    Fp acc = Fp::one(p);
    Fp running = Fp::one(p);
    for (std::uint32_t k = 1; k < p; ++k) {
        running *= Fp(k, p);
        acc *= running;
    }
    return acc;
}

// Univariate check: det || D^k f^l ||_{0 <= k,l <= r-1} equals
// (Df)^{r(r-1)/2} prod_{k=1}^{r-1} k!.
struct UnivariateWronskianWitness {
    bool holds;
    Polynomial determinant;
    Polynomial expected;
};

inline UnivariateWronskianWitness univariate_power_wronskian_check(const Polynomial& f,
                                                                   std::uint32_t r) {
    if (f.dimension() != 1)
        throw std::invalid_argument("univariate_power_wronskian_check: univariate input only");
    const std::uint32_t p = f.modulus();
    detail::require_order(r, p, "univariate_power_wronskian_check");
    const PolyMap F({f});
    Polynomial det = detail::checked_det(wronskian_matrix(F, r));
    Fp factorials = Fp::one(p);
    Fp running = Fp::one(p);
    for (std::uint32_t k = 1; k < r; ++k) {
        running *= Fp(k, p);
        factorials *= running;
    }
    Polynomial expected =
        derive(f, std::size_t{0}).pow(std::uint64_t{r} * (r - 1) / 2) * factorials;
    const bool holds = det == expected;
    return UnivariateWronskianWitness{holds, std::move(det), std::move(expected)};
}

// Q(alpha, beta) = d^alpha X^beta over [0, p-1]: the Kronecker product of
// the univariate derivative tables, upper triangular with det Q = c_p^n
// (verified before returning).
inline PolyMatrix q_matrix(std::uint32_t p, std::size_t n) {
    if (!is_prime(p)) throw std::invalid_argument("q_matrix: p must be prime");
    const std::vector<MultiIndex> index = interval_enumerate(0, p - 1, n);
    PolyMatrix q(index.size(), index.size(), p, n);
    for (std::size_t j = 0; j < index.size(); ++j) {
        const Polynomial xb = Polynomial::monomial(Fp::one(p), index[j]);
        for (std::size_t i = 0; i < index.size(); ++i) q.at(i, j) = derive(xb, index[i]);
    }
    const Fp expected = c_p_constant(p).pow(n);
    if (detail::checked_det(q) != Polynomial::constant(p, n, expected.value()))
        throw invariant_violation("q_matrix: determinant is not c_p^n");
    return q;
}

// det W = c_p^n Delta(F) at order r = p, along with the factorization
// W = Q U(F)^T that proves it.
struct Lemma4Witness {
    bool holds;
    bool determinant_holds;
    bool factorization_holds;
    Polynomial det_w;
    Polynomial scaled_delta;
};

inline Lemma4Witness verify_lemma4(const PolyMap& F) {
    const std::uint32_t p = F.modulus();
    const std::size_t n = F.dimension();
    const PolyMatrix w = wronskian_matrix(F, p);
    Polynomial det_w = detail::checked_det(w);
    const UMatrix u = u_matrix(F);
    Polynomial scaled = detail::checked_det(u.matrix) * c_p_constant(p).pow(n);
    const bool det_ok = det_w == scaled;
    const bool factor_ok = q_matrix(p, n) * u.matrix.transpose() == w;
    return Lemma4Witness{det_ok && factor_ok, det_ok, factor_ok, std::move(det_w),
                         std::move(scaled)};
}

} // namespace fpx

#endif // FPX_WRONSKIAN_HPP
