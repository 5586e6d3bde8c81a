#ifndef FPX_POLYMAP_HPP
#define FPX_POLYMAP_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fpx/matrix.hpp"
#include "fpx/polynomial.hpp"

namespace fpx {

// An n-tuple F = (f_1, ..., f_n) of polynomials in n variables: the data of
// an algebra endomorphism x_i -> f_i.
class PolyMap {
  public:
    explicit PolyMap(std::vector<Polynomial> components) : comps_(std::move(components)) {
        if (comps_.empty()) throw std::invalid_argument("PolyMap: needs at least one component");
        const std::uint32_t p = comps_[0].modulus();
        const std::size_t n = comps_[0].dimension();
        if (comps_.size() != n)
            throw std::invalid_argument("PolyMap: component count must equal the dimension");
        for (const Polynomial& f : comps_)
            if (f.modulus() != p || f.dimension() != n)
                throw std::invalid_argument("PolyMap: mixed moduli or dimensions");
    }

    static PolyMap identity(std::uint32_t p, std::size_t n) {
        std::vector<Polynomial> comps;
        comps.reserve(n);
        for (std::size_t i = 0; i < n; ++i) comps.push_back(Polynomial::variable(p, n, i));
        return PolyMap(std::move(comps));
    }

    // F = AX for a scalar matrix A (components are linear forms).
    static PolyMap linear(const std::vector<std::vector<Fp>>& A) {
        if (A.empty()) throw std::invalid_argument("PolyMap::linear: empty matrix");
        const std::size_t n = A.size();
        const std::uint32_t p = A[0][0].modulus();
        std::vector<Polynomial> comps;
        comps.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (A[i].size() != n) throw std::invalid_argument("PolyMap::linear: matrix not square");
            Polynomial f(p, n);
            for (std::size_t j = 0; j < n; ++j) f += Polynomial::variable(p, n, j) * A[i][j];
            comps.push_back(std::move(f));
        }
        return PolyMap(std::move(comps));
    }

    std::uint32_t modulus() const noexcept { return comps_[0].modulus(); }
    std::size_t dimension() const noexcept { return comps_.size(); }
    const Polynomial& operator[](std::size_t i) const { return comps_.at(i); }
    const std::vector<Polynomial>& components() const noexcept { return comps_; }

    friend bool operator==(const PolyMap&, const PolyMap&) = default;

  private:
    std::vector<Polynomial> comps_;
};

// F^a = prod_i f_i^{a_i}; the empty product is 1.
inline Polynomial monomial_power(const PolyMap& F, const MultiIndex& a) {
    if (a.dimension() != F.dimension())
        throw std::invalid_argument("monomial_power: dimension mismatch");
    Polynomial acc = Polynomial::constant(F.modulus(), F.dimension(), 1);
    for (std::size_t i = 0; i < a.dimension(); ++i)
        if (a[i] > 0) acc *= F[i].pow(a[i]);
    return acc;
}

// Image of g under the endomorphism x_i -> f_i.
inline Polynomial substitute(const Polynomial& g, const PolyMap& F) {
    if (g.modulus() != F.modulus() || g.dimension() != F.dimension())
        throw std::invalid_argument("substitute: modulus/dimension mismatch");
    const std::uint32_t p = g.modulus();
    const std::size_t n = g.dimension();
    std::vector<std::uint32_t> max_exp(n, 0);
    for (const Polynomial::Term& t : g.terms())
        for (std::size_t i = 0; i < n; ++i)
            max_exp[i] = std::max(max_exp[i], t.first[i]);
    std::vector<std::vector<Polynomial>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        powers[i].reserve(max_exp[i] + 1);
        powers[i].push_back(Polynomial::constant(p, n, 1));
        for (std::uint32_t k = 1; k <= max_exp[i]; ++k)
            powers[i].push_back(powers[i].back() * F[i]);
    }
    Polynomial acc(p, n);
    for (const Polynomial::Term& t : g.terms()) {
        Polynomial prod = Polynomial::constant(p, n, t.second.value());
        for (std::size_t i = 0; i < n; ++i)
            if (t.first[i] > 0) prod *= powers[i][t.first[i]];
        acc += prod;
    }
    return acc;
}

// Componentwise application: (phi_F G)_i = G_i(f_1, ..., f_n).
inline PolyMap substitute(const PolyMap& G, const PolyMap& F) {
    std::vector<Polynomial> comps;
    comps.reserve(G.dimension());
    for (const Polynomial& g : G.components()) comps.push_back(substitute(g, F));
    return PolyMap(std::move(comps));
}

// The matrix of first partials, entry (i, j) = df_i/dx_j.
inline PolyMatrix jacobian_matrix(const PolyMap& F) {
    const std::size_t n = F.dimension();
    PolyMatrix J(n, n, F.modulus(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) J.at(i, j) = derive(F[i], j);
    return J;
}

inline Polynomial jacobian(const PolyMap& F) { return det_fraction_free(jacobian_matrix(F)); }

// Jacobians of all n-element subsequences of the given generators, in
// lexicographic order of the index subsets. By the chain rule these generate
// the Jacobian ideal of the subalgebra the generators span.
inline std::vector<Polynomial> jacobian_ideal_generators(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::invalid_argument("jacobian_ideal_generators: no generators");
    const std::size_t n = gens[0].dimension();
    const std::size_t m = gens.size();
    if (m < n)
        throw std::invalid_argument("jacobian_ideal_generators: need at least n generators");
    for (const Polynomial& g : gens)
        if (g.modulus() != gens[0].modulus() || g.dimension() != n)
            throw std::invalid_argument("jacobian_ideal_generators: mixed moduli or dimensions");
    std::vector<Polynomial> out;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (;;) {
        std::vector<Polynomial> sub;
        sub.reserve(n);
        for (std::size_t i : idx) sub.push_back(gens[i]);
        out.push_back(jacobian(PolyMap(std::move(sub))));
        // next n-combination of [0, m)
        std::size_t i = n;
        while (i > 0 && idx[i - 1] == m - n + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

} // namespace fpx

#endif // FPX_POLYMAP_HPP
