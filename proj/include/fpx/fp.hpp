#ifndef FPX_FP_HPP
#define FPX_FP_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fpx {

inline bool is_prime(std::uint64_t m) noexcept {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

// An element of the prime field F_p with runtime modulus. Arithmetic between
// elements of different fields is rejected.
class Fp {
  public:
    Fp(std::int64_t value, std::uint32_t modulus) : p_(modulus) {
        if (!is_prime(modulus))
            throw std::invalid_argument("Fp: modulus " + std::to_string(modulus) + " is not prime");
        std::int64_t r = value % static_cast<std::int64_t>(modulus);
        if (r < 0) r += modulus;
        v_ = static_cast<std::uint32_t>(r);
    }

    static Fp zero(std::uint32_t modulus) { return Fp(0, modulus); }
    static Fp one(std::uint32_t modulus) { return Fp(1, modulus); }

    std::uint32_t value() const noexcept { return v_; }
    std::uint32_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    Fp operator-() const noexcept { return Fp(v_ == 0 ? 0 : p_ - v_, p_, raw_tag{}); }

    Fp operator+(const Fp& o) const {
        require_same(o);
        std::uint32_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return Fp(s, p_, raw_tag{});
    }

    Fp operator-(const Fp& o) const {
        require_same(o);
        std::uint32_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return Fp(s, p_, raw_tag{});
    }

    Fp operator*(const Fp& o) const {
        require_same(o);
        return Fp(static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p_), p_, raw_tag{});
    }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp pow(std::uint64_t e) const noexcept {
        std::uint64_t base = v_ % p_, acc = 1 % p_;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return Fp(static_cast<std::uint32_t>(acc), p_, raw_tag{});
    }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: zero has no inverse");
        return pow(p_ - 2);
    }

    friend bool operator==(const Fp&, const Fp&) = default;

  private:
    struct raw_tag {};
    Fp(std::uint32_t value, std::uint32_t modulus, raw_tag) noexcept : v_(value), p_(modulus) {}

    void require_same(const Fp& o) const {
        if (p_ != o.p_)
            throw std::invalid_argument("Fp: mixed moduli " + std::to_string(p_) + " and " +
                                        std::to_string(o.p_));
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

// 0! .. 20!, the range where factorials are exact in 64 bits. This table is
// the normative route for small binomial and multinomial coefficients.
inline constexpr std::uint64_t kFactorial64[21] = {
    1ull,
    1ull,
    2ull,
    6ull,
    24ull,
    120ull,
    720ull,
    5040ull,
    40320ull,
    362880ull,
    3628800ull,
    39916800ull,
    479001600ull,
    6227020800ull,
    87178291200ull,
    1307674368000ull,
    20922789888000ull,
    355687428096000ull,
    6402373705728000ull,
    121645100408832000ull,
    2432902008176640000ull};

// k! mod p. Zero as soon as k >= p.
inline Fp factorial_mod(std::uint64_t k, std::uint32_t p) {
    if (k >= p) return Fp::zero(p);
    if (k <= 20) return Fp(static_cast<std::int64_t>(kFactorial64[k] % p), p);
    std::uint64_t acc = 1;
    for (std::uint64_t i = 2; i <= k; ++i) acc = acc * (i % p) % p;
    return Fp(static_cast<std::int64_t>(acc), p);
}

// x(x-1)...(x-k+1) mod p, the coefficient picked up by a k-fold derivative.
inline Fp falling_factorial_mod(std::uint64_t x, std::uint64_t k, std::uint32_t p) {
    Fp acc = Fp::one(p);
    for (std::uint64_t i = 0; i < k; ++i) {
        if (x < i + 1) return Fp::zero(p); // x < k: product contains 0
        acc *= Fp(static_cast<std::int64_t>((x - i) % p), p);
    }
    return acc;
}

namespace detail {

// C(a, b) mod p for a < p, via the multiplicative formula.
inline Fp small_binomial_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    if (b > a) return Fp::zero(p);
    Fp num = Fp::one(p), den = Fp::one(p);
    for (std::uint32_t i = 0; i < b; ++i) {
        num *= Fp(static_cast<std::int64_t>(a - i), p);
        den *= Fp(static_cast<std::int64_t>(i + 1), p);
    }
    return num * den.inverse();
}

} // namespace detail

// Integer binomial coefficient C(a, b) reduced mod p. Exact 64-bit factorials
// up to a = 20; the base-p digit product (Lucas) beyond that.
inline Fp integer_binomial_mod(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    if (b > a) return Fp::zero(p);
    if (a <= 20) {
        std::uint64_t c = kFactorial64[a] / (kFactorial64[b] * kFactorial64[a - b]);
        return Fp(static_cast<std::int64_t>(c % p), p);
    }
    Fp acc = Fp::one(p);
    while (a > 0 || b > 0) {
        auto ad = static_cast<std::uint32_t>(a % p);
        auto bd = static_cast<std::uint32_t>(b % p);
        if (bd > ad) return Fp::zero(p);
        acc *= detail::small_binomial_mod(ad, bd, p);
        a /= p;
        b /= p;
    }
    return acc;
}

} // namespace fpx

#endif // FPX_FP_HPP
