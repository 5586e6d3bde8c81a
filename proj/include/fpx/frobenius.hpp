#ifndef FPX_FROBENIUS_HPP
#define FPX_FROBENIUS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fpx/errors.hpp"
#include "fpx/matrix.hpp"
#include "fpx/multiindex.hpp"
#include "fpx/polymap.hpp"
#include "fpx/polynomial.hpp"

namespace fpx {

// q = p^n(p-1)/2, the exponent appearing in all the power identities.
inline std::uint64_t q_exponent(std::uint32_t p, std::size_t n) {
    if (!is_prime(p)) throw std::invalid_argument("q_exponent: p must be prime");
    if (n < 1) throw std::invalid_argument("q_exponent: n must be >= 1");
    std::uint64_t pn = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (pn > UINT64_MAX / p) throw std::overflow_error("q_exponent: p^n overflows");
        pn *= p;
    }
    return (p % 2 == 0) ? pn / 2 * (p - 1) : pn * ((p - 1) / 2);
}

// True when f lies in F_p[x_1^p, ..., x_n^p], i.e. every exponent is
// componentwise divisible by p. Such elements are killed by all partials.
inline bool in_frobenius_subring(const Polynomial& f) {
    const std::uint32_t p = f.modulus();
    for (const Polynomial::Term& t : f.terms())
        for (std::uint32_t c : t.first.components())
            if (c % p != 0) return false;
    return true;
}

// Coordinates of a polynomial in the basis {X^alpha : alpha in [0,p-1]} of
// F_p[X] as a free module over F_p[X^p]. Zero coordinates are not stored.
class FrobeniusDecomposition {
  public:
    using CoordinateMap = std::map<MultiIndex, Polynomial, GradedLexLess>;

    FrobeniusDecomposition(std::uint32_t modulus, std::size_t dimension, CoordinateMap coordinates)
        : p_(modulus), n_(dimension), coords_(std::move(coordinates)) {
        if (!is_prime(modulus))
            throw std::invalid_argument("FrobeniusDecomposition: modulus not prime");
        for (auto it = coords_.begin(); it != coords_.end();) {
            const auto& [alpha, g] = *it;
            if (alpha.dimension() != n_)
                throw std::invalid_argument("FrobeniusDecomposition: index dimension mismatch");
            for (std::uint32_t c : alpha.components())
                if (c >= p_)
                    throw std::invalid_argument(
                        "FrobeniusDecomposition: index outside [0, p-1]");
            if (g.modulus() != p_ || g.dimension() != n_)
                throw std::invalid_argument("FrobeniusDecomposition: coordinate mismatch");
            if (!in_frobenius_subring(g))
                throw std::invalid_argument(
                    "FrobeniusDecomposition: coordinate not in the p-th power subring");
            it = g.is_zero() ? coords_.erase(it) : std::next(it);
        }
    }

    std::uint32_t modulus() const noexcept { return p_; }
    std::size_t dimension() const noexcept { return n_; }
    const CoordinateMap& coordinates() const noexcept { return coords_; }

    Polynomial coordinate(const MultiIndex& alpha) const {
        if (alpha.dimension() != n_)
            throw std::invalid_argument("coordinate: dimension mismatch");
        for (std::uint32_t c : alpha.components())
            if (c >= p_) throw std::invalid_argument("coordinate: index outside [0, p-1]");
        auto it = coords_.find(alpha);
        return it == coords_.end() ? Polynomial(p_, n_) : it->second;
    }

    friend bool operator==(const FrobeniusDecomposition&, const FrobeniusDecomposition&) = default;

  private:
    std::uint32_t p_;
    std::size_t n_;
    CoordinateMap coords_;
};

// Splits every exponent as e = p*u + r with r in [0,p-1]; the coordinate at
// r collects c * X^{p*u}. This is the unique such expression of g.
inline FrobeniusDecomposition frobenius_decompose(const Polynomial& g) {
    const std::uint32_t p = g.modulus();
    const std::size_t n = g.dimension();
    std::map<MultiIndex, std::map<MultiIndex, Fp, GradedLexLess>, GradedLexLess> buckets;
    for (const Polynomial::Term& t : g.terms()) {
        std::vector<std::uint32_t> r(n), u(n);
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = t.first[i] % p;
            u[i] = t.first[i] - r[i];
        }
        buckets[MultiIndex(std::move(r))].emplace(MultiIndex(std::move(u)), t.second);
    }
    FrobeniusDecomposition::CoordinateMap coords;
    for (auto& [alpha, terms] : buckets)
        coords.emplace(alpha, Polynomial::from_accumulated(p, n, std::move(terms)));
    return FrobeniusDecomposition(p, n, std::move(coords));
}

// Sum of g_alpha * X^alpha; the exact inverse of frobenius_decompose.
inline Polynomial frobenius_recompose(const FrobeniusDecomposition& d) {
    Polynomial acc(d.modulus(), d.dimension());
    for (const auto& [alpha, g] : d.coordinates())
        acc += g * Polynomial::monomial(Fp::one(d.modulus()), alpha);
    return acc;
}

// The p^n x p^n matrix over F_p[X^p] whose row alpha holds the coordinates
// of F^alpha: F^alpha = sum_beta matrix(alpha, beta) X^beta. Rows and
// columns are indexed by the graded-lex enumeration of [0, p-1] in `index`.
struct UMatrix {
    PolyMatrix matrix;
    std::vector<MultiIndex> index;
};

inline UMatrix u_matrix(const PolyMap& F) {
    const std::uint32_t p = F.modulus();
    const std::size_t n = F.dimension();
    std::vector<MultiIndex> index = interval_enumerate(0, p - 1, n);
    std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> rank;
    rank.reserve(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) rank.emplace(index[i], i);
    PolyMatrix m(index.size(), index.size(), p, n);
    for (std::size_t i = 0; i < index.size(); ++i) {
        const FrobeniusDecomposition d = frobenius_decompose(monomial_power(F, index[i]));
        for (const auto& [beta, g] : d.coordinates()) m.at(i, rank.at(beta)) = g;
    }
    return UMatrix{std::move(m), std::move(index)};
}

// Delta(F) = det U(F), an element of F_p[X^p].
inline Polynomial delta(const PolyMap& F) { return detail::checked_det(u_matrix(F).matrix); }

// Delta(F) = j(F)^q, both sides computed independently.
struct Prop2Witness {
    bool holds;
    Polynomial delta_value;
    Polynomial jacobian_power;
};

inline Prop2Witness verify_prop2(const PolyMap& F) {
    Polynomial d = delta(F);
    Polynomial jq = jacobian(F).pow(q_exponent(F.modulus(), F.dimension()));
    const bool holds = d == jq;
    return Prop2Witness{holds, std::move(d), std::move(jq)};
}

// Delta(phi_F G) = (phi_F Delta(G)) * Delta(F).
struct Lemma2Witness {
    bool holds;
    Polynomial lhs;
    Polynomial rhs;
};

inline Lemma2Witness verify_lemma2(const PolyMap& F, const PolyMap& G) {
    if (F.modulus() != G.modulus() || F.dimension() != G.dimension())
        throw std::invalid_argument("verify_lemma2: modulus/dimension mismatch");
    Polynomial lhs = delta(substitute(G, F));
    Polynomial rhs = substitute(delta(G), F) * delta(F);
    const bool holds = lhs == rhs;
    return Lemma2Witness{holds, std::move(lhs), std::move(rhs)};
}

// For a linear map F = AX: Delta(F) = (det A)^q.
struct LinearDeltaWitness {
    bool holds;
    Polynomial delta_value;
    Fp matrix_det;
};

inline LinearDeltaWitness linear_map_delta(const std::vector<std::vector<Fp>>& A) {
    PolyMap F = PolyMap::linear(A);
    const std::uint32_t p = F.modulus();
    const std::size_t n = F.dimension();
    PolyMatrix scalar(n, n, p, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scalar.at(i, j) = Polynomial::constant(p, n, A[i][j].value());
    const Fp det_a = det_fraction_free(scalar).constant_value();
    Polynomial d = delta(F);
    const Fp expected = det_a.pow(q_exponent(p, n));
    const bool holds = d == Polynomial::constant(p, n, expected.value());
    return LinearDeltaWitness{holds, std::move(d), det_a};
}

// {F^alpha : alpha in [0,p-1]} is a module basis iff j(F) is a nonzero
// constant. The Jacobian side is the decision path; invertibility of U(F)
// is the cross-check exercised in tests.
inline bool is_frobenius_basis(const PolyMap& F) {
    const Polynomial j = jacobian(F);
    return !j.is_zero() && j.is_constant();
}

// Coefficients c_beta in F_p[X^p] with Delta(F) * g = sum_beta c_beta *
// F^beta. `coefficients[i]` belongs to `index[i]`.
struct DeltaRepresentation {
    std::vector<MultiIndex> index;
    std::vector<Polynomial> coefficients;
    Polynomial delta_value;

    const Polynomial& coefficient(const MultiIndex& beta) const {
        return coefficients.at(rank_in_interval(beta, delta_value.modulus()));
    }
};

// Row alpha of adj U(F) expresses Delta(F) * X^alpha through the powers
// F^beta; summing rows against the coordinates of g gives Delta(F) * g.
// The adjugate identity needs no invertibility, so Delta(F) = 0 is fine.
// The expansion is re-verified before returning.
inline DeltaRepresentation represent_delta_multiple(const Polynomial& g, const PolyMap& F) {
    if (g.modulus() != F.modulus() || g.dimension() != F.dimension())
        throw std::invalid_argument("represent_delta_multiple: modulus/dimension mismatch");
    const std::uint32_t p = F.modulus();
    const std::size_t n = F.dimension();
    UMatrix u = u_matrix(F);
    const std::size_t size = u.index.size();
    const PolyMatrix adj = adjugate(u.matrix);
    Polynomial d = detail::checked_det(u.matrix);
    std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> rank;
    rank.reserve(size);
    for (std::size_t i = 0; i < size; ++i) rank.emplace(u.index[i], i);
    const FrobeniusDecomposition dec = frobenius_decompose(g);
    std::vector<Polynomial> coeffs(size, Polynomial(p, n));
    for (const auto& [alpha, g_alpha] : dec.coordinates()) {
        const std::size_t ai = rank.at(alpha);
        for (std::size_t bi = 0; bi < size; ++bi) coeffs[bi] += g_alpha * adj.at(ai, bi);
    }
    Polynomial expansion(p, n);
    for (std::size_t bi = 0; bi < size; ++bi) {
        if (coeffs[bi].is_zero()) continue;
        if (!in_frobenius_subring(coeffs[bi]))
            throw invariant_violation(
                "represent_delta_multiple: coefficient escaped the p-th power subring");
        expansion += coeffs[bi] * monomial_power(F, u.index[bi]);
    }
    if (expansion != d * g)
        throw invariant_violation("represent_delta_multiple: re-expansion mismatch");
    return DeltaRepresentation{std::move(u.index), std::move(coeffs), std::move(d)};
}

// Constructive witness that j(F)^q lies in F_p[X^p][F]: the coefficients of
// represent_delta_multiple(1, F) satisfy j(F)^q = sum_beta c_beta F^beta,
// with j(F)^q computed independently of Delta(F).
struct TheoremKfWitness {
    bool holds;
    DeltaRepresentation representation;
    Polynomial jacobian_power;
};

inline TheoremKfWitness verify_theorem_principal_case(const PolyMap& F) {
    const std::uint32_t p = F.modulus();
    const std::size_t n = F.dimension();
    DeltaRepresentation rep = represent_delta_multiple(Polynomial::constant(p, n, 1), F);
    Polynomial jq = jacobian(F).pow(q_exponent(p, n));
    Polynomial expansion(p, n);
    for (std::size_t i = 0; i < rep.index.size(); ++i)
        expansion += rep.coefficients[i] * monomial_power(F, rep.index[i]);
    const bool holds = expansion == jq;
    return TheoremKfWitness{holds, std::move(rep), std::move(jq)};
}

} // namespace fpx

#endif // FPX_FROBENIUS_HPP
