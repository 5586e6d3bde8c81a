#ifndef FPX_MULTIINDEX_HPP
#define FPX_MULTIINDEX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fpx/errors.hpp"
#include "fpx/fp.hpp"

namespace fpx {

// Everything indexed by multiindices (interval enumerations, matrix sizes)
// is rejected beyond this many elements.
inline constexpr std::size_t kSizeCap = 32768;

// An exponent vector in N^n. Indexes monomials, derivative orders and the
// rows/columns of the structured matrices.
class MultiIndex {
  public:
    explicit MultiIndex(std::vector<std::uint32_t> components) : e_(std::move(components)) {
        if (e_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
    }

    static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<std::uint32_t>(n, 0)); }

    static MultiIndex unit(std::size_t n, std::size_t var) {
        if (var >= n) throw std::invalid_argument("MultiIndex::unit: variable out of range");
        std::vector<std::uint32_t> e(n, 0);
        e[var] = 1;
        return MultiIndex(std::move(e));
    }

    std::size_t dimension() const noexcept { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& components() const noexcept { return e_; }

    // |alpha|, the total degree.
    std::uint64_t degree() const noexcept {
        return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
    }

    bool is_zero() const noexcept {
        return std::all_of(e_.begin(), e_.end(), [](std::uint32_t c) { return c == 0; });
    }

    MultiIndex operator+(const MultiIndex& o) const {
        require_same_dimension(o);
        std::vector<std::uint32_t> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
        return MultiIndex(std::move(r));
    }

    // Componentwise difference; defined only when o <= *this.
    MultiIndex operator-(const MultiIndex& o) const {
        require_same_dimension(o);
        std::vector<std::uint32_t> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (o.e_[i] > e_[i])
                throw std::invalid_argument("MultiIndex: subtraction would go negative");
            r[i] = e_[i] - o.e_[i];
        }
        return MultiIndex(std::move(r));
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  private:
    void require_same_dimension(const MultiIndex& o) const {
        if (e_.size() != o.e_.size())
            throw std::invalid_argument("MultiIndex: dimension mismatch");
    }

    std::vector<std::uint32_t> e_;
};

inline std::ostream& operator<<(std::ostream& os, const MultiIndex& m) {
    os << '(';
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        if (i) os << ',';
        os << m[i];
    }
    return os << ')';
}

// The componentwise partial order alpha <= beta.
inline bool componentwise_leq(const MultiIndex& a, const MultiIndex& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("componentwise_leq: dimension mismatch");
    for (std::size_t i = 0; i < a.dimension(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

enum class Ordering { less, equal, greater };

// Total order refining the componentwise partial order: first by total
// degree, ties broken lexicographically left to right. Equal-degree blocks
// are contiguous in any enumeration sorted this way.
inline Ordering graded_lex_compare(const MultiIndex& a, const MultiIndex& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("graded_lex_compare: dimension mismatch");
    const std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? Ordering::less : Ordering::greater;
    for (std::size_t i = 0; i < a.dimension(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? Ordering::less : Ordering::greater;
    return Ordering::equal;
}

struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return graded_lex_compare(a, b) == Ordering::less;
    }
};

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& m) const noexcept {
        std::uint64_t h = 1469598103934665603ull; // FNV-1a
        for (std::uint32_t c : m.components()) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// The "diagonal" interval [k,m] = { alpha : k <= alpha_i <= m }.
class DiagonalInterval {
  public:
    DiagonalInterval(std::uint32_t lower, std::uint32_t upper, std::size_t dimension)
        : lower_(lower), upper_(upper), n_(dimension) {
        if (lower > upper) throw std::invalid_argument("DiagonalInterval: lower > upper");
        if (dimension < 1) throw std::invalid_argument("DiagonalInterval: dimension must be >= 1");
        std::size_t count = 1;
        const std::size_t width = static_cast<std::size_t>(upper - lower) + 1;
        for (std::size_t i = 0; i < n_; ++i) {
            if (count > kSizeCap / width)
                throw capacity_error("DiagonalInterval: size exceeds cap of " +
                                     std::to_string(kSizeCap));
            count *= width;
        }
        size_ = count;
    }

    std::uint32_t lower() const noexcept { return lower_; }
    std::uint32_t upper() const noexcept { return upper_; }
    std::size_t dimension() const noexcept { return n_; }

    // (upper - lower + 1)^n
    std::size_t size() const noexcept { return size_; }

    // All members, sorted ascending in graded-lex order.
    std::vector<MultiIndex> enumerate() const {
        std::vector<MultiIndex> out;
        out.reserve(size_);
        std::vector<std::uint32_t> cur(n_, lower_);
        for (;;) {
            out.push_back(MultiIndex(cur));
            std::size_t i = n_;
            while (i > 0 && cur[i - 1] == upper_) cur[--i] = lower_;
            if (i == 0) break;
            ++cur[i - 1];
        }
        std::sort(out.begin(), out.end(), GradedLexLess{});
        return out;
    }

  private:
    std::uint32_t lower_, upper_;
    std::size_t n_;
    std::size_t size_;
};

inline std::vector<MultiIndex> interval_enumerate(std::uint32_t lower, std::uint32_t upper,
                                                  std::size_t n) {
    return DiagonalInterval(lower, upper, n).enumerate();
}

namespace detail {

// #{ theta in N^vars : |theta| = total, theta_i <= bound }  (exact count)
inline std::uint64_t bounded_composition_count(std::size_t vars, std::int64_t total,
                                               std::uint32_t bound) {
    if (total < 0) return 0;
    if (vars == 0) return total == 0 ? 1 : 0;
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(total) + 1, 0);
    ways[0] = 1;
    for (std::size_t v = 0; v < vars; ++v) {
        std::vector<std::uint64_t> next(ways.size(), 0);
        for (std::size_t s = 0; s < ways.size(); ++s) {
            if (ways[s] == 0) continue;
            for (std::uint64_t c = 0; c <= bound && s + c < next.size(); ++c)
                next[s + c] += ways[s];
        }
        ways.swap(next);
    }
    return ways.back();
}

} // namespace detail

// Position of a in the graded-lex enumeration of [0, p-1]; bijective onto
// [0, p^n - 1]. Computed combinatorially, no enumeration materialized.
inline std::size_t rank_in_interval(const MultiIndex& a, std::uint32_t p) {
    const std::size_t n = a.dimension();
    const std::uint32_t bound = p - 1;
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] > bound)
            throw std::invalid_argument("rank_in_interval: component out of [0, p-1]");
    const std::uint64_t deg = a.degree();
    std::uint64_t rank = 0;
    for (std::uint64_t s = 0; s < deg; ++s)
        rank += detail::bounded_composition_count(n, static_cast<std::int64_t>(s), bound);
    std::int64_t rem = static_cast<std::int64_t>(deg);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t v = 0; v < a[i]; ++v)
            rank += detail::bounded_composition_count(n - i - 1, rem - v, bound);
        rem -= a[i];
    }
    return static_cast<std::size_t>(rank);
}

// (a choose b) = prod_i C(a_i, b_i) mod p; zero when b is not componentwise
// below a, so the coefficient is total.
inline Fp binomial(const MultiIndex& a, const MultiIndex& b, std::uint32_t p) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("binomial: dimension mismatch");
    Fp acc = Fp::one(p);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        acc *= integer_binomial_mod(a[i], b[i], p);
        if (acc.is_zero()) return acc;
    }
    return acc;
}

// alpha! = prod_i alpha_i! mod p.
inline Fp factorial(const MultiIndex& a, std::uint32_t p) {
    Fp acc = Fp::one(p);
    for (std::size_t i = 0; i < a.dimension(); ++i) acc *= factorial_mod(a[i], p);
    return acc;
}

// Multinomial coefficient (a choose parts[0] ... parts[k-1]) mod p, the
// componentwise product of integer multinomials. The parts must sum to a.
inline Fp multinomial(const MultiIndex& a, const std::vector<MultiIndex>& parts, std::uint32_t p) {
    MultiIndex sum = MultiIndex::zero(a.dimension());
    for (const MultiIndex& part : parts) sum = sum + part;
    if (!(sum == a)) throw std::invalid_argument("multinomial: parts do not sum to the total");
    // m!/(k_1!...k_r!) = prod_j C(k_1+...+k_j, k_j), per component
    Fp acc = Fp::one(p);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        std::uint64_t partial = 0;
        for (const MultiIndex& part : parts) {
            partial += part[i];
            acc *= integer_binomial_mod(partial, part[i], p);
        }
    }
    return acc;
}

} // namespace fpx

#endif // FPX_MULTIINDEX_HPP
