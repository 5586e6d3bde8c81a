#ifndef FPX_POLYNOMIAL_HPP
#define FPX_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fpx/errors.hpp"
#include "fpx/fp.hpp"
#include "fpx/multiindex.hpp"

namespace fpx {

// Sparse multivariate polynomial over F_p in n variables. Terms are kept
// sorted ascending in graded-lex order with no zero coefficients, so equal
// polynomials have equal representations.
class Polynomial {
  public:
    using Term = std::pair<MultiIndex, Fp>;

    Polynomial(std::uint32_t modulus, std::size_t dimension) : p_(modulus), n_(dimension) {
        if (!is_prime(modulus))
            throw std::invalid_argument("Polynomial: modulus " + std::to_string(modulus) +
                                        " is not prime");
        if (dimension < 1) throw std::invalid_argument("Polynomial: dimension must be >= 1");
    }

    static Polynomial constant(std::uint32_t p, std::size_t n, std::int64_t c) {
        Polynomial out(p, n);
        Fp v(c, p);
        if (!v.is_zero()) out.terms_.emplace_back(MultiIndex::zero(n), v);
        return out;
    }

    static Polynomial monomial(const Fp& coeff, const MultiIndex& exponent) {
        Polynomial out(coeff.modulus(), exponent.dimension());
        if (!coeff.is_zero()) out.terms_.emplace_back(exponent, coeff);
        return out;
    }

    static Polynomial variable(std::uint32_t p, std::size_t n, std::size_t var) {
        return monomial(Fp::one(p), MultiIndex::unit(n, var));
    }

    std::uint32_t modulus() const noexcept { return p_; }
    std::size_t dimension() const noexcept { return n_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    // Ascending graded-lex; the trailing term is the leading one.
    const std::vector<Term>& terms() const noexcept { return terms_; }

    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_zero());
    }

    bool is_one() const noexcept {
        return terms_.size() == 1 && terms_[0].first.is_zero() && terms_[0].second.value() == 1;
    }

    // The constant it equals, if constant.
    Fp constant_value() const {
        if (!is_constant()) throw std::domain_error("Polynomial: not a constant");
        return terms_.empty() ? Fp::zero(p_) : terms_[0].second;
    }

    // Total degree; empty for the zero polynomial (minus infinity).
    std::optional<std::uint64_t> total_degree() const noexcept {
        if (terms_.empty()) return std::nullopt;
        return terms_.back().first.degree();
    }

    Fp coefficient(const MultiIndex& e) const {
        if (e.dimension() != n_) throw std::invalid_argument("coefficient: dimension mismatch");
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const MultiIndex& k) {
                                       return GradedLexLess{}(t.first, k);
                                   });
        if (it != terms_.end() && it->first == e) return it->second;
        return Fp::zero(p_);
    }

    // Adds c*X^e, keeping the representation canonical.
    Polynomial& add_term(const MultiIndex& e, const Fp& c) {
        if (e.dimension() != n_ || c.modulus() != p_)
            throw std::invalid_argument("add_term: incompatible term");
        if (c.is_zero()) return *this;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const MultiIndex& k) {
                                       return GradedLexLess{}(t.first, k);
                                   });
        if (it != terms_.end() && it->first == e) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        } else {
            terms_.insert(it, Term(e, c));
        }
        return *this;
    }

    Polynomial operator-() const {
        Polynomial out(p_, n_);
        out.terms_.reserve(terms_.size());
        for (const Term& t : terms_) out.terms_.emplace_back(t.first, -t.second);
        return out;
    }

    Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
    Polynomial operator-(const Polynomial& o) const { return merged(o, true); }

    Polynomial operator*(const Fp& s) const {
        if (s.modulus() != p_) throw std::invalid_argument("scalar multiply: modulus mismatch");
        Polynomial out(p_, n_);
        if (s.is_zero()) return out;
        out.terms_.reserve(terms_.size());
        for (const Term& t : terms_) out.terms_.emplace_back(t.first, t.second * s);
        return out;
    }

    Polynomial operator*(const Polynomial& o) const;

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(std::uint64_t e) const {
        Polynomial acc = constant(p_, n_, 1);
        Polynomial base = *this;
        while (e) {
            if (e & 1) acc *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return acc;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Internal: assumes the map is canonical-compatible (right (p, n), no
    // particular order needed; zeros are dropped here).
    static Polynomial from_accumulated(std::uint32_t p, std::size_t n,
                                       std::map<MultiIndex, Fp, GradedLexLess>&& acc) {
        Polynomial out(p, n);
        out.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (!c.is_zero()) out.terms_.emplace_back(e, c);
        return out;
    }

  private:
    Polynomial merged(const Polynomial& o, bool subtract) const {
        require_compatible(o);
        Polynomial out(p_, n_);
        out.terms_.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        GradedLexLess less;
        while (a != terms_.end() && b != o.terms_.end()) {
            if (less(a->first, b->first)) {
                out.terms_.push_back(*a++);
            } else if (less(b->first, a->first)) {
                out.terms_.emplace_back(b->first, subtract ? -b->second : b->second);
                ++b;
            } else {
                Fp c = subtract ? a->second - b->second : a->second + b->second;
                if (!c.is_zero()) out.terms_.emplace_back(a->first, c);
                ++a;
                ++b;
            }
        }
        for (; a != terms_.end(); ++a) out.terms_.push_back(*a);
        for (; b != o.terms_.end(); ++b)
            out.terms_.emplace_back(b->first, subtract ? -b->second : b->second);
        return out;
    }

    void require_compatible(const Polynomial& o) const {
        if (p_ != o.p_ || n_ != o.n_)
            throw std::invalid_argument("Polynomial: modulus/dimension mismatch");
    }

    std::uint32_t max_component() const noexcept {
        std::uint32_t m = 0;
        for (const Term& t : terms_)
            for (std::uint32_t c : t.first.components()) m = std::max(m, c);
        return m;
    }

    std::uint32_t p_;
    std::size_t n_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Fp& s, const Polynomial& f) { return f * s; }

inline Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_compatible(o);
    Polynomial out(p_, n_);
    if (terms_.empty() || o.terms_.empty()) return out;

    std::vector<Term> result;
    // Fast path: exponents packed one byte per variable, componentwise sums
    // carry-free because both factors stay below 128 per component.
    if (n_ <= 8 && max_component() < 128 && o.max_component() < 128) {
        auto pack = [this](const MultiIndex& e) {
            std::uint64_t k = 0;
            for (std::size_t i = 0; i < n_; ++i) k |= std::uint64_t{e[i]} << (8 * i);
            return k;
        };
        std::vector<std::pair<std::uint64_t, std::uint32_t>> lhs, rhs;
        lhs.reserve(terms_.size());
        rhs.reserve(o.terms_.size());
        for (const Term& t : terms_) lhs.emplace_back(pack(t.first), t.second.value());
        for (const Term& t : o.terms_) rhs.emplace_back(pack(t.first), t.second.value());
        std::unordered_map<std::uint64_t, std::uint32_t> acc;
        acc.reserve(lhs.size() + rhs.size());
        for (const auto& [ka, va] : lhs)
            for (const auto& [kb, vb] : rhs) {
                std::uint32_t& slot = acc[ka + kb];
                slot = static_cast<std::uint32_t>((slot + std::uint64_t{va} * vb) % p_);
            }
        result.reserve(acc.size());
        for (const auto& [k, v] : acc) {
            if (v == 0) continue;
            std::vector<std::uint32_t> comp(n_);
            for (std::size_t i = 0; i < n_; ++i)
                comp[i] = static_cast<std::uint32_t>((k >> (8 * i)) & 0xff);
            result.emplace_back(MultiIndex(std::move(comp)),
                                Fp(static_cast<std::int64_t>(v), p_));
        }
    } else {
        std::unordered_map<MultiIndex, std::uint32_t, MultiIndexHash> acc;
        acc.reserve(terms_.size() + o.terms_.size());
        for (const Term& ta : terms_)
            for (const Term& tb : o.terms_) {
                std::uint32_t& slot = acc[ta.first + tb.first];
                slot = static_cast<std::uint32_t>(
                    (slot + std::uint64_t{ta.second.value()} * tb.second.value()) % p_);
            }
        result.reserve(acc.size());
        for (const auto& [e, v] : acc)
            if (v != 0) result.emplace_back(e, Fp(static_cast<std::int64_t>(v), p_));
    }
    std::sort(result.begin(), result.end(),
              [](const Term& a, const Term& b) { return GradedLexLess{}(a.first, b.first); });
    out.terms_ = std::move(result);
    return out;
}

// Iterated formal partial derivative d^order(f). Falling-factorial
// coefficients are reduced mod p, so p-th powers differentiate to zero.
inline Polynomial derive(const Polynomial& f, const MultiIndex& order) {
    if (order.dimension() != f.dimension())
        throw std::invalid_argument("derive: dimension mismatch");
    const std::uint32_t p = f.modulus();
    Polynomial out(p, f.dimension());
    std::map<MultiIndex, Fp, GradedLexLess> acc;
    for (const Polynomial::Term& t : f.terms()) {
        Fp c = t.second;
        std::vector<std::uint32_t> e(t.first.components());
        bool alive = true;
        for (std::size_t i = 0; i < e.size() && alive; ++i) {
            if (e[i] < order[i]) {
                alive = false;
                break;
            }
            c *= falling_factorial_mod(e[i], order[i], p);
            if (c.is_zero()) alive = false;
            e[i] -= order[i];
        }
        if (alive) acc.emplace(MultiIndex(std::move(e)), c);
    }
    return Polynomial::from_accumulated(p, f.dimension(), std::move(acc));
}

inline Polynomial derive(const Polynomial& f, std::size_t var) {
    return derive(f, MultiIndex::unit(f.dimension(), var));
}

// Exact quotient a / b over F_p[X], or nullopt when b does not divide a.
// Graded-lex leading-term elimination; terminates because the leading term
// of the remainder strictly decreases.
inline std::optional<Polynomial> try_exact_quotient(const Polynomial& a, const Polynomial& b) {
    if (a.modulus() != b.modulus() || a.dimension() != b.dimension())
        throw std::invalid_argument("try_exact_quotient: modulus/dimension mismatch");
    if (b.is_zero()) throw std::domain_error("try_exact_quotient: division by zero");
    const std::uint32_t p = a.modulus();
    const std::size_t n = a.dimension();
    std::map<MultiIndex, Fp, GradedLexLess> rem;
    for (const Polynomial::Term& t : a.terms()) rem.emplace(t.first, t.second);
    const MultiIndex& lead_b = b.terms().back().first;
    const Fp inv_lead = b.terms().back().second.inverse();
    std::map<MultiIndex, Fp, GradedLexLess> quo;
    while (!rem.empty()) {
        const auto& [lead_e, lead_c] = *rem.rbegin();
        if (!componentwise_leq(lead_b, lead_e)) return std::nullopt;
        const MultiIndex qe = lead_e - lead_b;
        const Fp qc = lead_c * inv_lead;
        quo.emplace(qe, qc);
        for (const Polynomial::Term& t : b.terms()) {
            const MultiIndex e = qe + t.first;
            const Fp delta = qc * t.second;
            auto it = rem.find(e);
            if (it == rem.end()) {
                rem.emplace(e, -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    return Polynomial::from_accumulated(p, n, std::move(quo));
}

} // namespace fpx

#endif // FPX_POLYNOMIAL_HPP
