#ifndef FPX_SESSION_HPP
#define FPX_SESSION_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "fpx/fp.hpp"
#include "fpx/multiindex.hpp"

namespace fpx {

// Shared knobs for the CLI and the randomized verification harness.
struct SessionConfig {
    enum class Output { text, json };

    std::uint32_t p = 2;
    std::size_t n = 1;
    std::uint64_t seed = 0;
    std::uint64_t trials = 100;
    std::uint32_t max_degree = 3;
    std::uint32_t max_terms = 4;
    Output output = Output::text;

    void validate() const {
        if (p < 2 || p > 13 || !is_prime(p))
            throw std::invalid_argument("config: p must be a prime in [2, 13]");
        if (n < 1) throw std::invalid_argument("config: n must be >= 1");
        std::size_t pn = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (pn > kSizeCap / p)
                throw std::invalid_argument("config: p^n exceeds the size cap of " +
                                            std::to_string(kSizeCap));
            pn *= p;
        }
        if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
        if (max_terms < 1) throw std::invalid_argument("config: max_terms must be >= 1");
    }
};

} // namespace fpx

#endif // FPX_SESSION_HPP
