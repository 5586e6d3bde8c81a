#ifndef FPX_IO_HPP
#define FPX_IO_HPP

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fpx/errors.hpp"
#include "fpx/polymap.hpp"
#include "fpx/polynomial.hpp"
#include "fpx/session.hpp"

namespace fpx {

// Canonical rendering: terms descending in graded-lex order, coefficients in
// 1..p-1 with a coefficient of 1 omitted before a variable part, "0" for the
// zero polynomial. Round-trips through parse_polynomial.
inline std::string print_canonical(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& terms = f.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (!out.empty()) out += " + ";
        const MultiIndex& e = it->first;
        std::string mono;
        for (std::size_t i = 0; i < e.dimension(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += 'x';
            mono += std::to_string(i + 1);
            if (e[i] > 1) {
                mono += '^';
                mono += std::to_string(e[i]);
            }
        }
        if (mono.empty())
            out += std::to_string(it->second.value());
        else if (it->second.value() == 1)
            out += mono;
        else
            out += std::to_string(it->second.value()) + "*" + mono;
    }
    return out;
}

inline std::string print_canonical(const PolyMap& F) {
    std::string out;
    for (const Polynomial& f : F.components()) {
        if (!out.empty()) out += "; ";
        out += print_canonical(f);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
    return os << print_canonical(f);
}

inline std::ostream& operator<<(std::ostream& os, const PolyMap& F) {
    return os << print_canonical(F);
}

namespace detail {

// Recursive descent over the grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := nat | variable | '(' expr ')'
// Variables are x1..xn; x, y, z stand for x1, x2, x3 when n <= 3. Implicit
// multiplication is not accepted.
class ExpressionParser {
  public:
    ExpressionParser(std::string_view text, std::uint32_t p, std::size_t n)
        : text_(text), p_(p), n_(n) {}

    Polynomial parse() {
        Polynomial out = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return out;
    }

  private:
    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        for (;;) {
            skip_ws();
            if (match('+'))
                acc += parse_term();
            else if (match('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            skip_ws();
            if (!match('*')) return acc;
            acc *= parse_factor();
        }
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        skip_ws();
        if (match('^')) return base.pow(parse_exponent());
        return base;
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(p_, n_, parse_coefficient().value());
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_variable();
        if (match('(')) {
            Polynomial inner = parse_expr();
            skip_ws();
            if (!match(')')) throw parse_error("expected ')'", pos_);
            return inner;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    Polynomial parse_variable() {
        const std::size_t start = pos_;
        const char letter = text_[pos_++];
        std::uint64_t idx = 0;
        bool has_digits = false;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            has_digits = true;
            idx = idx * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (idx > 1000000) throw parse_error("variable index too large", start);
            ++pos_;
        }
        if (has_digits) {
            if (letter != 'x' || idx < 1 || idx > n_)
                throw parse_error("unknown variable", start);
            return Polynomial::variable(p_, n_, static_cast<std::size_t>(idx - 1));
        }
        if (n_ <= 3) {
            std::size_t alias = letter == 'x' ? 0 : letter == 'y' ? 1 : letter == 'z' ? 2 : n_;
            if (alias < n_) return Polynomial::variable(p_, n_, alias);
        }
        throw parse_error("unknown variable", start);
    }

    Fp parse_coefficient() {
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = (v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % p_;
            ++pos_;
        }
        return Fp(static_cast<std::int64_t>(v), p_);
    }

    std::uint32_t parse_exponent() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected exponent", pos_);
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > 65535) throw parse_error("exponent too large", start);
            ++pos_;
        }
        return static_cast<std::uint32_t>(v);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool match(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string_view text_;
    std::uint32_t p_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(std::string_view text, std::uint32_t p, std::size_t n) {
    return detail::ExpressionParser(text, p, n).parse();
}

inline Polynomial parse_polynomial(std::string_view text, const SessionConfig& config) {
    return parse_polynomial(text, config.p, config.n);
}

// ';'-separated polynomials in one string.
inline std::vector<Polynomial> parse_polynomial_list(std::string_view text, std::uint32_t p,
                                                     std::size_t n) {
    std::vector<Polynomial> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t sep = text.find(';', start);
        const std::string_view piece =
            text.substr(start, sep == std::string_view::npos ? std::string_view::npos
                                                             : sep - start);
        out.push_back(detail::ExpressionParser(piece, p, n).parse());
        if (sep == std::string_view::npos) break;
        start = sep + 1;
    }
    return out;
}

inline PolyMap parse_poly_map(std::string_view text, std::uint32_t p, std::size_t n) {
    std::vector<Polynomial> comps = parse_polynomial_list(text, p, n);
    if (comps.size() != n)
        throw std::invalid_argument("map needs exactly " + std::to_string(n) +
                                    " components, got " + std::to_string(comps.size()));
    return PolyMap(std::move(comps));
}

// One polynomial per line; '#' starts a comment; blank lines are skipped.
inline std::vector<Polynomial> read_polynomial_lines(std::istream& in, std::uint32_t p,
                                                     std::size_t n) {
    std::vector<Polynomial> out;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        out.push_back(parse_polynomial(line, p, n));
    }
    return out;
}

} // namespace fpx

#endif // FPX_IO_HPP
