#include "ffclass/poly_text.hpp"

#include <cctype>

namespace ffclass {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }
};

std::int64_t parse_number(Cursor& cur) {
    cur.skip_ws();
    const std::size_t start = cur.pos;
    std::int64_t value = 0;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
        value = value * 10 + (cur.text[cur.pos] - '0');
        if (value > (std::int64_t(1) << 62) / 10)
            throw parse_error("number too large", start);
        ++cur.pos;
    }
    if (cur.pos == start)
        throw parse_error("expected a number", start);
    return value;
}

// term := number ['*']? ['x' ['^' number]?]?  |  'x' ['^' number]?
void parse_term(Cursor& cur, const PrimeField& field, std::vector<std::int64_t>& coeffs,
                bool negative) {
    cur.skip_ws();
    if (cur.pos >= cur.text.size())
        throw parse_error("expected a term", cur.pos);

    std::int64_t coefficient = 1;
    bool saw_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
        coefficient = parse_number(cur);
        saw_coefficient = true;
        cur.skip_ws();
        if (cur.pos < cur.text.size() && cur.text[cur.pos] == '*') {
            ++cur.pos;
            cur.skip_ws();
            if (cur.pos >= cur.text.size() || cur.text[cur.pos] != 'x')
                throw parse_error("expected 'x' after '*'", cur.pos);
        }
    }

    std::int64_t exponent = 0;
    cur.skip_ws();
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == 'x') {
        ++cur.pos;
        exponent = 1;
        cur.skip_ws();
        if (cur.pos < cur.text.size() && cur.text[cur.pos] == '^') {
            ++cur.pos;
            exponent = parse_number(cur);
            if (exponent > 512)
                throw parse_error("exponent too large", cur.pos);
        }
    } else if (!saw_coefficient) {
        throw parse_error("expected a coefficient or 'x'", cur.pos);
    }

    if (static_cast<std::size_t>(exponent) >= coeffs.size())
        coeffs.resize(static_cast<std::size_t>(exponent) + 1, 0);
    const std::int64_t reduced = field.reduce(coefficient);
    auto& slot = coeffs[static_cast<std::size_t>(exponent)];
    slot = negative ? field.sub(slot, reduced) : field.add(slot, reduced);
}

} // namespace

Poly parse_poly(std::string_view text, const PrimeField& field) {
    Cursor cur{text};
    if (cur.done())
        throw parse_error("empty polynomial", 0);

    std::vector<std::int64_t> coeffs;
    bool negative = false;
    if (cur.peek() == '+' || cur.peek() == '-') {
        negative = cur.text[cur.pos] == '-';
        ++cur.pos;
    }
    parse_term(cur, field, coeffs, negative);
    while (!cur.done()) {
        const char op = cur.peek();
        if (op != '+' && op != '-')
            throw parse_error("expected '+' or '-'", cur.pos);
        ++cur.pos;
        parse_term(cur, field, coeffs, op == '-');
    }
    return Poly(field, std::move(coeffs));
}

std::string to_string(const Poly& poly) {
    if (poly.is_zero())
        return "0";
    std::string out;
    for (int i = poly.degree(); i >= 0; --i) {
        const std::int64_t c = poly.coeff_value(i);
        if (c == 0)
            continue;
        if (!out.empty())
            out += '+';
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1)
                out += std::to_string(c);
            out += 'x';
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == sep) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

} // namespace

QuadForm parse_form(std::string_view text, const PrimeField& field) {
    const auto parts = split(text, ',');
    if (parts.size() != 3)
        throw parse_error("form literal needs three comma-separated polynomials", 0);
    return QuadForm(parse_poly(parts[0], field), parse_poly(parts[1], field),
                    parse_poly(parts[2], field));
}

std::array<std::string, 3> form_strings(const QuadForm& q) {
    return {to_string(q.a), to_string(q.b), to_string(q.c)};
}

std::string to_string(const QuadForm& q) {
    return "(" + to_string(q.a) + ", " + to_string(q.b) + ", " + to_string(q.c) + ")";
}

MumfordIdeal parse_ideal(std::string_view text, const PrimeField& field, const Poly& alpha) {
    const auto parts = split(text, ';');
    if (parts.size() != 2)
        throw parse_error("ideal literal needs 'u;v'", 0);
    return MumfordIdeal(parse_poly(parts[0], field), parse_poly(parts[1], field), alpha);
}

std::string to_string(const MumfordIdeal& ideal) {
    return to_string(ideal.u()) + ";" + to_string(ideal.v());
}

} // namespace ffclass
