#pragma once

// Canonical text grammar and JSON serialization.
//
//   element := term (('+'|'-') term)*
//   term    := [coeff '*']? factor ('*' factor)* | coeff
//   factor  := 'e[' int ',' int ']'
//   coeff   := int | int '/' int
//
// Printing always emits the canonical form: terms sorted by descending word
// length then lexicographic word order, unit coefficients elided, signs
// folded into the separators.  parse(print(x)) == x for every element.

#include "glshift/classical.hpp"
#include "glshift/matrix_calc.hpp"
#include "glshift/pbw.hpp"
#include "glshift/shift_matrix.hpp"
#include "glshift/shift_verify.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glshift {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& message, int line_, int column_)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(column_) + ": " + message),
          line(line_),
          column(column_) {}
};

namespace detail {

inline void print_term(std::ostream& os, bool first, const Rational& coeff,
                       const std::vector<GenIndex>& factors) {
    const bool negative = coeff < 0;
    if (first) {
        if (negative) os << '-';
    } else {
        os << (negative ? " - " : " + ");
    }
    const Rational mag = negative ? Rational(-coeff) : coeff;
    if (factors.empty()) {
        os << mag.str();
        return;
    }
    if (mag != 1) os << mag.str() << '*';
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k > 0) os << '*';
        os << "e[" << factors[k].row << ',' << factors[k].col << ']';
    }
}

class ElementParser {
public:
    ElementParser(std::string_view text, int dim) : text_(text), dim_(dim) {}

    // Parses into a generic handler with add_coeff_word(coeff, letters).
    template <typename AddTerm>
    void run(AddTerm&& add_term) {
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = take() == '-';
        parse_term(add_term, negative);
        skip_ws();
        while (pos_ < text_.size()) {
            const char op = take();
            if (op != '+' && op != '-') fail("expected '+' or '-' between terms");
            skip_ws();
            parse_term(add_term, op == '-');
            skip_ws();
        }
    }

private:
    template <typename AddTerm>
    void parse_term(AddTerm&& add_term, bool negative) {
        Rational coeff = 1;
        std::vector<GenIndex> factors;
        bool saw_coeff = false;
        if (peek() == 'e') {
            factors.push_back(parse_factor());
        } else {
            coeff = parse_coeff();
            saw_coeff = true;
        }
        skip_ws();
        while (peek() == '*') {
            take();
            skip_ws();
            factors.push_back(parse_factor());
            skip_ws();
        }
        if (saw_coeff && factors.empty() && coeff == 0) {
            // explicit zero term contributes nothing
        }
        add_term(negative ? Rational(-coeff) : coeff, factors);
    }

    GenIndex parse_factor() {
        expect('e');
        expect('[');
        skip_ws();
        const long row = parse_long();
        skip_ws();
        expect(',');
        skip_ws();
        const long col = parse_long();
        skip_ws();
        expect(']');
        if (row < 1 || row > dim_ || col < 1 || col > dim_)
            fail("generator index out of range for d=" + std::to_string(dim_));
        return GenIndex{static_cast<int>(row), static_cast<int>(col)};
    }

    Rational parse_coeff() {
        const Integer num = parse_integer();
        skip_ws();
        if (peek() == '/') {
            take();
            skip_ws();
            const Integer den = parse_integer();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    Integer parse_integer() {
        const std::size_t start = pos_;
        if (peek() == '+' || peek() == '-') take();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        while (std::isdigit(static_cast<unsigned char>(peek()))) take();
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    long parse_long() {
        const std::size_t start = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an index");
        while (std::isdigit(static_cast<unsigned char>(peek()))) take();
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    char take() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_start_ = pos_;
        }
        return c;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        take();
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) take();
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, static_cast<int>(pos_ - col_start_) + 1);
    }

    std::string_view text_;
    int dim_;
    std::size_t pos_ = 0;
    int line_ = 1;
    std::size_t col_start_ = 0;
};

}  // namespace detail

inline std::string print_element(const UEAElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        std::vector<GenIndex> factors;
        factors.reserve(w.size());
        for (Letter code : w) factors.push_back(decode_gen(code, e.dim()));
        detail::print_term(os, first, c, factors);
        first = false;
    }
    return os.str();
}

inline std::string print_element(const SymElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        std::vector<GenIndex> factors;
        for (std::size_t code = 0; code < m.size(); ++code)
            for (int rep = 0; rep < m[code]; ++rep)
                factors.push_back(decode_gen(static_cast<Letter>(code), e.dim()));
        detail::print_term(os, first, c, factors);
        first = false;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const UEAElement& e) {
    return os << print_element(e);
}

inline std::ostream& operator<<(std::ostream& os, const SymElement& e) {
    return os << print_element(e);
}

// Parses the canonical grammar; products of generators are normal-ordered.
inline UEAElement parse_element(std::string_view text, int dim) {
    UEAElement out = UEAElement::zero(dim);
    detail::ElementParser parser(text, dim);
    parser.run([&](const Rational& coeff, const std::vector<GenIndex>& factors) {
        out += normal_order(std::span<const GenIndex>(factors.data(), factors.size()), dim) * coeff;
    });
    return out;
}

// Commutative counterpart; factor order is irrelevant after normalization.
inline SymElement parse_sym_element(std::string_view text, int dim) {
    SymElement out = SymElement::zero(dim);
    detail::ElementParser parser(text, dim);
    parser.run([&](const Rational& coeff, const std::vector<GenIndex>& factors) {
        Monomial m(static_cast<std::size_t>(dim) * dim, 0);
        for (GenIndex g : factors) ++m[encode_gen(g, dim)];
        out.add_term(std::move(m), coeff);
    });
    return out;
}

inline nlohmann::json to_json(const UEAElement& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : e.terms()) {
        nlohmann::json word = nlohmann::json::array();
        for (Letter code : w) {
            const GenIndex g = decode_gen(code, e.dim());
            word.push_back({g.row, g.col});
        }
        terms.push_back({{"coeff", c.str()}, {"word", std::move(word)}});
    }
    return {{"d", e.dim()}, {"terms", std::move(terms)}};
}

inline nlohmann::json to_json(const ElementMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json to_json(const Report& report) {
    nlohmann::json config = nlohmann::json::object();
    for (const auto& [key, value] : report.config) {
        if (config.contains(key)) {
            if (!config[key].is_array()) config[key] = nlohmann::json::array({config[key]});
            config[key].push_back(value);
        } else {
            config[key] = value;
        }
    }
    config["suite"] = report.suite;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& check : report.checks) {
        nlohmann::json c = {{"id", check.id}, {"status", check.pass ? "pass" : "fail"}};
        if (check.witness) c["witness"] = to_json(*check.witness);
        checks.push_back(std::move(c));
    }
    return {{"config", std::move(config)}, {"checks", std::move(checks)}};
}

// Accepts "diag:a,b,..." or "full:[[a,b],[c,d]]" with rational entries.
inline ShiftMatrix parse_shift_matrix(std::string_view text, int dim) {
    const auto parse_rational = [](std::string_view s) -> Rational {
        const auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
            return Rational(Integer(std::string(s.substr(0, slash))),
                            Integer(std::string(s.substr(slash + 1))));
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid rational entry '" + std::string(s) + "'");
        }
    };
    const auto split = [](std::string_view s, char sep) {
        std::vector<std::string_view> parts;
        std::size_t start = 0;
        while (start <= s.size()) {
            const auto end = s.find(sep, start);
            if (end == std::string_view::npos) {
                parts.push_back(s.substr(start));
                break;
            }
            parts.push_back(s.substr(start, end - start));
            start = end + 1;
        }
        return parts;
    };

    if (text.starts_with("diag:")) {
        const auto entries = split(text.substr(5), ',');
        if (static_cast<int>(entries.size()) != dim)
            throw std::invalid_argument("diag: expected " + std::to_string(dim) + " entries");
        std::vector<Rational> diag;
        for (auto e : entries) diag.push_back(parse_rational(e));
        return ShiftMatrix::diagonal(diag);
    }
    if (text.starts_with("full:")) {
        std::string_view body = text.substr(5);
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw std::invalid_argument("full: expected [[...],[...]] matrix body");
        body.remove_prefix(1);
        body.remove_suffix(1);
        std::vector<std::vector<Rational>> rows;
        std::size_t pos = 0;
        while (pos < body.size()) {
            if (body[pos] == ',') {
                ++pos;
                continue;
            }
            if (body[pos] != '[') throw std::invalid_argument("full: expected '[' starting a row");
            const auto close = body.find(']', pos);
            if (close == std::string_view::npos)
                throw std::invalid_argument("full: missing ']' closing a row");
            std::vector<Rational> row;
            for (auto e : split(body.substr(pos + 1, close - pos - 1), ','))
                row.push_back(parse_rational(e));
            rows.push_back(std::move(row));
            pos = close + 1;
        }
        if (static_cast<int>(rows.size()) != dim)
            throw std::invalid_argument("full: expected " + std::to_string(dim) + " rows");
        for (const auto& row : rows)
            if (static_cast<int>(row.size()) != dim)
                throw std::invalid_argument("full: expected " + std::to_string(dim) +
                                            " entries per row");
        return ShiftMatrix::from_rows(rows);
    }
    throw std::invalid_argument("xi must be given as diag:... or full:[[...]]");
}

}  // namespace glshift
