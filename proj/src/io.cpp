#include "lcdring/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace lcdring {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string remove_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

[[noreturn]] void parse_error(std::string_view what, std::string_view text) {
    fail(ErrorCode::Parse, std::string(what) + ": '" + std::string(text) + "'");
}

/// Splits at `sep` outside of (), [] nesting.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (c == sep && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

/// Signed terms of a sum: splits at top-level '+'/'-', keeping the sign.
std::vector<std::pair<bool, std::string_view>> signed_terms(std::string_view s) {
    std::vector<std::pair<bool, std::string_view>> out;
    int depth = 0;
    bool negative = false;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        const char c = i < s.size() ? s[i] : '+';
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if ((c == '+' || c == '-') && depth == 0 && !(i > 0 && s[i - 1] == '^')) {
            if (i > start) out.emplace_back(negative, s.substr(start, i - start));
            else if (i < s.size() && i != 0 && !(s[i - 1] == '+' || s[i - 1] == '-'))
                parse_error("empty term", s);
            negative = (c == '-');
            start = i + 1;
        }
    }
    return out;
}

bool wrapped(std::string_view s, char open, char close) {
    if (s.size() < 2 || s.front() != open || s.back() != close) return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[') ++depth;
        else if (s[i] == ')' || s[i] == ']') --depth;
        if (depth == 0 && i + 1 < s.size()) return false;
    }
    return true;
}

std::int64_t parse_int(std::string_view s) {
    s = strip(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) parse_error("expected an integer", s);
    return v;
}

std::uint64_t reduce_mod(std::int64_t v, std::uint64_t n) {
    const auto m = static_cast<std::int64_t>(n);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

Elem parse_integer_element(const Ring& ring, std::string_view s) {
    switch (ring.kind()) {
    case RingKind::Chain: {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(ring.m()), 0);
        c[0] = reduce_mod(parse_int(s), ring.p_pow_s());
        return ring.from_coordinates(c);
    }
    case RingKind::LocalAlgebra: return reduce_mod(parse_int(s), 2);
    case RingKind::Composite:
        if (ring.is_integer_residue()) return ring.from_integer(static_cast<std::int64_t>(reduce_mod(parse_int(s), ring.characteristic())));
        break;
    }
    parse_error("integer element not valid in this ring", s);
}

// Sum of c·w^e terms for Galois-ring elements.
Elem parse_w_expression(const Ring& ring, std::string_view s) {
    std::vector<std::uint64_t> unit(static_cast<std::size_t>(ring.m()), 0);
    unit[1 % unit.size()] = 1;
    const Elem w = ring.m() > 1 ? ring.from_coordinates(unit) : ring.one();
    Elem acc = 0;
    for (auto [neg, term] : signed_terms(s)) {
        const auto pos = term.find('w');
        Elem value;
        if (pos == std::string_view::npos) {
            value = parse_integer_element(ring, term);
        } else {
            std::string_view coef = term.substr(0, pos);
            if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
            std::string_view rest = term.substr(pos + 1);
            std::uint64_t e = 1;
            if (!rest.empty()) {
                if (rest.front() != '^') parse_error("bad w term", term);
                e = static_cast<std::uint64_t>(parse_int(rest.substr(1)));
            }
            const Elem c = coef.empty() ? ring.one() : parse_integer_element(ring, coef);
            value = ring.mul(c, ring.pow(w, e));
        }
        acc = neg ? ring.sub(acc, value) : ring.add(acc, value);
    }
    return acc;
}

// Sums of monomials such as "1+u1+u1u2" for Rm(m).
Elem parse_u_expression(const Ring& ring, std::string_view s) {
    Elem acc = 0;
    for (auto [neg, term] : signed_terms(s)) {
        (void)neg;
        Elem value;
        if (term.find('u') == std::string_view::npos) {
            value = parse_integer_element(ring, term);
        } else {
            std::size_t mask = 0;
            std::size_t i = 0;
            while (i < term.size()) {
                if (term[i] == '*') {
                    ++i;
                    continue;
                }
                if (term[i] != 'u') parse_error("bad monomial", term);
                std::size_t j = i + 1;
                while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) ++j;
                const auto idx = parse_int(term.substr(i + 1, j - i - 1));
                if (idx < 1 || idx > ring.algebra_generators()) parse_error("generator index out of range", term);
                const std::size_t bit = std::size_t{1} << (idx - 1);
                if (mask & bit) {
                    mask = ~std::size_t{0};
                    break;
                }
                mask |= bit;
                i = j;
            }
            value = mask == ~std::size_t{0} ? 0 : Elem{1} << mask;
        }
        acc = ring.add(acc, value);
    }
    return acc;
}

std::string w_expression(const Ring& ring, Elem a) {
    const auto c = ring.coordinates(a);
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) out += std::to_string(c[i]);
        else {
            if (c[i] != 1) out += std::to_string(c[i]);
            out += 'w';
            if (i > 1) out += '^' + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::string u_expression(const Ring& ring, Elem a) {
    std::string out;
    const std::size_t d = std::size_t{1} << ring.algebra_generators();
    for (std::size_t mask = 0; mask < d; ++mask) {
        if (!((a >> mask) & 1U)) continue;
        if (!out.empty()) out += '+';
        if (mask == 0) {
            out += '1';
            continue;
        }
        for (int i = 0; i < ring.algebra_generators(); ++i)
            if ((mask >> i) & 1U) out += "u" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

bool plain_integer_coefficient(const Ring& ring, Elem a) {
    if (ring.is_integer_residue()) return true;
    if (ring.kind() == RingKind::Chain) {
        const auto c = ring.coordinates(a);
        return std::all_of(c.begin() + 1, c.end(), [](std::uint64_t x) { return x == 0; });
    }
    if (ring.kind() == RingKind::LocalAlgebra) return a <= 1;
    return false;
}

std::string coefficient_text(const Ring& ring, Elem a) {
    if (ring.is_integer_residue()) return std::to_string(ring.to_integer(a));
    if (plain_integer_coefficient(ring, a)) return std::to_string(ring.coordinates(a)[0]);
    switch (ring.kind()) {
    case RingKind::Chain: return "(" + w_expression(ring, a) + ")";
    case RingKind::LocalAlgebra: return "(" + u_expression(ring, a) + ")";
    case RingKind::Composite: return format_element(ring, a);
    }
    return {};
}

} // namespace

// ---------------------------------------------------------------------------
// Ring specs

std::vector<Elem> default_modulus(std::uint64_t p, int s, int m) {
    if (m <= 1) return {};
    const Ring field = Ring::integers_mod(p, 1);
    std::uint64_t pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    const std::uint64_t order = pm - 1;
    const RingPoly x = RingPoly::monomial(field, 1, 1);
    const RingPoly one = RingPoly::constant(field, 1);
    for (std::uint64_t idx = 1; idx < pm; ++idx) {
        std::vector<Elem> c(static_cast<std::size_t>(m) + 1, 0);
        std::uint64_t t = idx;
        for (int i = 0; i < m; ++i) {
            c[static_cast<std::size_t>(i)] = t % p;
            t /= p;
        }
        c.back() = 1;
        if (c[0] == 0) continue;
        const RingPoly f(field, c);
        if (!is_irreducible(f)) continue;
        bool primitive = true;
        for (const auto& [r, _] : factor_integer(order))
            if (poly_powmod(x, order / r, f) == one) primitive = false;
        if (!primitive) continue;
        if (s == 1) return f.coeffs();
        const Ring ring = Ring::integers_mod(p, s);
        const RingPoly cofactor = poly_divmod(RingPoly::x_pow_minus(field, order, 1), f).first;
        const auto fs = hensel_lift_factors({f, cofactor}, ring, order, ring.one());
        for (const auto& g : fs.factors)
            if (residue_poly(g) == f) return g.coeffs();
    }
    fail(ErrorCode::Unsupported, "no primitive polynomial found");
}

namespace {

std::uint64_t parse_prime_power(std::string_view s, int& exponent) {
    s = strip(s);
    const auto caret = s.find('^');
    if (caret != std::string_view::npos) {
        exponent = static_cast<int>(parse_int(s.substr(caret + 1)));
        return static_cast<std::uint64_t>(parse_int(s.substr(0, caret)));
    }
    const auto v = parse_int(s);
    if (v < 2) parse_error("expected a prime power", s);
    const auto f = factor_integer(static_cast<std::uint64_t>(v));
    if (f.size() != 1) fail(ErrorCode::NotPrime, "not a prime power: " + std::string(s));
    exponent = f[0].second;
    return f[0].first;
}

Ring make_chain(std::uint64_t p, int s, int m, std::string_view modulus_text) {
    if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (m == 1) return Ring::integers_mod(p, s);
    std::vector<Elem> modulus;
    if (modulus_text.empty()) {
        modulus = default_modulus(p, s, m);
    } else {
        const Ring base = Ring::integers_mod(p, s);
        const RingPoly f = parse_poly(base, modulus_text);
        if (f.degree() != m || !f.is_monic())
            fail(ErrorCode::ReducibleModulus, "modulus must be monic of degree " + std::to_string(m));
        const RingPoly fbar = s == 1 ? f : residue_poly(f);
        if (!is_irreducible(fbar)) fail(ErrorCode::ReducibleModulus, "modulus is reducible over the residue field");
        for (auto c : f.coeffs()) modulus.push_back(base.to_integer(c));
    }
    return Ring::chain(p, s, m, modulus);
}

} // namespace

Ring make_ring(std::string_view spec_text) {
    std::string spec = remove_spaces(spec_text);
    std::string_view s = spec;
    if (s.empty()) parse_error("empty ring spec", s);
    if (s.rfind("CRT[", 0) == 0) {
        if (s.back() != ']') parse_error("unterminated CRT spec", s);
        std::vector<Ring> parts;
        for (auto part : split_top(s.substr(4, s.size() - 5), '|')) parts.push_back(make_ring(part));
        return Ring::composite(std::move(parts));
    }
    std::string_view modulus;
    if (const auto semi = s.find(';'); semi != std::string_view::npos) {
        std::string_view opt = s.substr(semi + 1);
        s = s.substr(0, semi);
        if (opt.rfind("modulus=", 0) != 0) parse_error("unknown ring option", opt);
        modulus = opt.substr(8);
    }
    auto args = [&](std::string_view head) {
        if (s.size() <= head.size() + 1 || s.back() != ')') parse_error("malformed ring spec", spec);
        return split_top(s.substr(head.size() + 1, s.size() - head.size() - 2), ',');
    };
    if (s.rfind("GR(", 0) == 0) {
        const auto a = args("GR");
        if (a.size() != 2) parse_error("GR needs (p^s,m)", spec);
        int e = 1;
        const std::uint64_t p = parse_prime_power(a[0], e);
        return make_chain(p, e, static_cast<int>(parse_int(a[1])), modulus);
    }
    if (s.rfind("Fq(", 0) == 0) {
        const auto a = args("Fq");
        if (a.size() != 2) parse_error("Fq needs (p,m)", spec);
        return make_chain(static_cast<std::uint64_t>(parse_int(a[0])), 1, static_cast<int>(parse_int(a[1])), modulus);
    }
    if (s.rfind("Rm(", 0) == 0) {
        const auto a = args("Rm");
        if (a.size() != 1) parse_error("Rm needs (m)", spec);
        return Ring::local_algebra(static_cast<int>(parse_int(a[0])));
    }
    if (s.front() == 'Z') {
        const auto k = parse_int(s.substr(1));
        if (k < 2) parse_error("Zk needs k >= 2", spec);
        std::vector<Ring> parts;
        for (const auto& [p, e] : factor_integer(static_cast<std::uint64_t>(k))) parts.push_back(Ring::integers_mod(p, e));
        return Ring::composite(std::move(parts));
    }
    parse_error("unknown ring spec", spec);
}

// ---------------------------------------------------------------------------
// Elements

std::string format_element(const Ring& ring, Elem a) {
    if (ring.is_integer_residue()) return std::to_string(ring.to_integer(a));
    switch (ring.kind()) {
    case RingKind::Chain:
    case RingKind::LocalAlgebra: {
        std::vector<std::uint64_t> c;
        if (ring.kind() == RingKind::Chain) c = ring.coordinates(a);
        else
            for (std::size_t i = 0; i < (std::size_t{1} << ring.algebra_generators()); ++i) c.push_back((a >> i) & 1U);
        std::string out = "[";
        for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
        return out + "]";
    }
    case RingKind::Composite: {
        const auto parts = ring.split(a);
        std::string out = "(";
        for (std::size_t j = 0; j < parts.size(); ++j)
            out += (j ? "|" : "") + format_element(ring.component(j), parts[j]);
        return out + ")";
    }
    }
    return {};
}

Elem parse_element(const Ring& ring, std::string_view text) {
    const std::string cleaned = remove_spaces(text);
    std::string_view s = cleaned;
    if (s.empty()) parse_error("empty element", text);
    if (ring.kind() == RingKind::Composite && !ring.is_integer_residue()) {
        if (!wrapped(s, '(', ')')) parse_error("composite element must look like (a|b)", s);
        const auto parts = split_top(s.substr(1, s.size() - 2), '|');
        if (parts.size() != ring.component_count()) parse_error("wrong number of components", s);
        std::vector<Elem> v;
        for (std::size_t j = 0; j < parts.size(); ++j) v.push_back(parse_element(ring.component(j), parts[j]));
        return ring.compose(v);
    }
    if (wrapped(s, '(', ')')) return parse_element(ring, s.substr(1, s.size() - 2));
    if (wrapped(s, '[', ']')) {
        const auto items = split_top(s.substr(1, s.size() - 2), ',');
        if (ring.kind() == RingKind::Chain) {
            if (items.size() != static_cast<std::size_t>(ring.m())) parse_error("wrong coordinate count", s);
            std::vector<std::uint64_t> c;
            for (auto it : items) c.push_back(reduce_mod(parse_int(it), ring.p_pow_s()));
            return ring.from_coordinates(c);
        }
        if (ring.kind() == RingKind::LocalAlgebra) {
            if (items.size() != (std::size_t{1} << ring.algebra_generators())) parse_error("wrong coordinate count", s);
            Elem a = 0;
            for (std::size_t i = 0; i < items.size(); ++i)
                if (reduce_mod(parse_int(items[i]), 2)) a |= Elem{1} << i;
            return a;
        }
        parse_error("coordinate lists are not valid in this ring", s);
    }
    if (ring.kind() == RingKind::Chain && s.find('w') != std::string_view::npos) return parse_w_expression(ring, s);
    if (ring.kind() == RingKind::LocalAlgebra && s.find('u') != std::string_view::npos)
        return parse_u_expression(ring, s);
    if (s.find_first_of("+") != std::string_view::npos || s.find('-', 1) != std::string_view::npos) {
        Elem acc = 0;
        for (auto [neg, term] : signed_terms(s)) {
            const Elem v = parse_integer_element(ring, term);
            acc = neg ? ring.sub(acc, v) : ring.add(acc, v);
        }
        return acc;
    }
    return parse_integer_element(ring, s);
}

nlohmann::json element_json(const Ring& ring, Elem a) {
    if (ring.is_integer_residue()) return ring.to_integer(a);
    if (ring.kind() == RingKind::Composite) return format_element(ring, a);
    return nlohmann::json::parse(format_element(ring, a));
}

Elem element_from_json(const Ring& ring, const nlohmann::json& j) {
    if (j.is_number_integer()) return parse_integer_element(ring, std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) return parse_element(ring, j.get<std::string>());
    if (j.is_array()) return parse_element(ring, j.dump());
    fail(ErrorCode::Parse, "unsupported JSON element: " + j.dump());
}

// ---------------------------------------------------------------------------
// Vectors and matrices

std::string format_vector(const Ring& ring, std::span<const Elem> v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + format_element(ring, v[i]);
    return out + "]";
}

RingVector parse_vector(const Ring& ring, std::string_view text) {
    const std::string cleaned = remove_spaces(text);
    std::string_view s = cleaned;
    if (wrapped(s, '[', ']')) s = s.substr(1, s.size() - 2);
    RingVector out;
    if (s.empty()) return out;
    for (auto item : split_top(s, ',')) out.push_back(parse_element(ring, item));
    return out;
}

nlohmann::json vector_json(const Ring& ring, std::span<const Elem> v) {
    auto out = nlohmann::json::array();
    for (auto x : v) out.push_back(element_json(ring, x));
    return out;
}

RingVector vector_from_json(const Ring& ring, const nlohmann::json& j) {
    if (j.is_string()) return parse_vector(ring, j.get<std::string>());
    if (!j.is_array()) fail(ErrorCode::Parse, "vector must be a JSON array");
    RingVector out;
    for (const auto& x : j) out.push_back(element_from_json(ring, x));
    return out;
}

std::string format_matrix(const RingMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out += ';';
        for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? "," : "") + format_element(m.ring(), m(r, c));
    }
    return out;
}

RingMatrix parse_matrix(const Ring& ring, std::string_view text) {
    const std::string cleaned = remove_spaces(text);
    std::vector<RingVector> rows;
    if (cleaned.empty()) return RingMatrix(ring, 0, 0);
    for (auto row : split_top(cleaned, ';')) {
        if (row.empty()) continue;
        RingVector v;
        for (auto item : split_top(row, ',')) v.push_back(parse_element(ring, item));
        rows.push_back(std::move(v));
    }
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    return RingMatrix::from_rows(ring, cols, rows);
}

nlohmann::json matrix_json(const RingMatrix& m) {
    auto out = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.ring(), m.row(r)));
    return out;
}

RingMatrix matrix_from_json(const Ring& ring, const nlohmann::json& rows, std::size_t n) {
    if (rows.is_string()) {
        RingMatrix m = parse_matrix(ring, rows.get<std::string>());
        if (m.rows() == 0) return RingMatrix(ring, 0, n);
        if (n && m.cols() != n) fail(ErrorCode::ShapeMismatch, "row width does not match n");
        return m;
    }
    if (!rows.is_array()) fail(ErrorCode::Parse, "generators must be an array of rows");
    std::vector<RingVector> v;
    for (const auto& r : rows) v.push_back(vector_from_json(ring, r));
    if (n == 0 && !v.empty()) n = v[0].size();
    return RingMatrix::from_rows(ring, n, v);
}

// ---------------------------------------------------------------------------
// Polynomials

std::string format_poly(const RingPoly& f) {
    if (f.is_zero()) return "0";
    const Ring& ring = f.ring();
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const Elem c = f.coeffs()[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += coefficient_text(ring, c);
            continue;
        }
        if (c != ring.one()) out += coefficient_text(ring, c) + "*";
        out += 'X';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

RingPoly parse_poly(const Ring& ring, std::string_view text) {
    const std::string cleaned = remove_spaces(text);
    std::string_view s = cleaned;
    if (s.empty()) parse_error("empty polynomial", text);
    // Products of parenthesized factors: "(X-1)(X^2+X+1)" or "(X-1)*(X^2+X+1)".
    if (s.front() == '(') {
        std::vector<std::string_view> factors;
        int depth = 0;
        std::size_t start = 0;
        bool product = true;
        for (std::size_t i = 0; i < s.size() && product; ++i) {
            if (s[i] == '(' || s[i] == '[') {
                if (depth++ == 0) start = i;
            } else if (s[i] == ')' || s[i] == ']') {
                if (--depth == 0) factors.push_back(s.substr(start + 1, i - start - 1));
            } else if (depth == 0 && s[i] != '*') {
                product = false;
            }
        }
        const auto has_x = [](std::string_view f) { return f.find_first_of("Xx") != std::string_view::npos; };
        if (product && std::all_of(factors.begin(), factors.end(), has_x)) {
            RingPoly acc = RingPoly::constant(ring, ring.one());
            for (auto f : factors) acc = poly_mul(acc, parse_poly(ring, f));
            return acc;
        }
    }
    std::vector<Elem> coeffs;
    for (auto [neg, term] : signed_terms(s)) {
        // Locate a top-level X.
        std::size_t xpos = std::string_view::npos;
        int depth = 0;
        for (std::size_t i = 0; i < term.size(); ++i) {
            const char c = term[i];
            if (c == '(' || c == '[') ++depth;
            else if (c == ')' || c == ']') --depth;
            else if ((c == 'X' || c == 'x') && depth == 0) {
                xpos = i;
                break;
            }
        }
        std::size_t degree = 0;
        Elem value;
        if (xpos == std::string_view::npos) {
            value = parse_element(ring, term);
        } else {
            std::string_view coef = term.substr(0, xpos);
            if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
            std::string_view rest = term.substr(xpos + 1);
            degree = 1;
            if (!rest.empty()) {
                if (rest.front() != '^') parse_error("bad polynomial term", term);
                const auto e = parse_int(rest.substr(1));
                if (e < 0) parse_error("negative exponent", term);
                degree = static_cast<std::size_t>(e);
            }
            value = coef.empty() ? ring.one() : parse_element(ring, coef);
        }
        if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
        coeffs[degree] = neg ? ring.sub(coeffs[degree], value) : ring.add(coeffs[degree], value);
    }
    return RingPoly(ring, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Codes

std::string big_to_string(const BigInt& v) { return v.str(); }

nlohmann::json code_json(const LinearCode& c) {
    return {{"ring", c.ring().spec()},
            {"n", c.length()},
            {"generators", matrix_json(c.reduced())},
            {"rank", c.rank()},
            {"free", c.is_free()},
            {"cardinality", big_to_string(c.cardinality())}};
}

LinearCode code_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("ring")) fail(ErrorCode::Parse, "code JSON needs a \"ring\" field");
    const Ring ring = make_ring(j.at("ring").get<std::string>());
    const std::size_t n = j.contains("n") ? j.at("n").get<std::size_t>() : 0;
    const nlohmann::json* rows = nullptr;
    if (j.contains("generators")) rows = &j.at("generators");
    else if (j.contains("rows")) rows = &j.at("rows");
    else fail(ErrorCode::Parse, "code JSON needs \"generators\" or \"rows\"");
    RingMatrix g = matrix_from_json(ring, *rows, n);
    const std::size_t len = n ? n : g.cols();
    if (g.cols() != len) fail(ErrorCode::ShapeMismatch, "generator width does not match n");
    return LinearCode(ring, len, std::move(g));
}

nlohmann::ordered_json distance_json(const Ring& ring, const DistanceReport& r) {
    nlohmann::ordered_json j;
    j["metric"] = to_string(r.metric);
    j["status"] = to_string(r.status);
    if (r.status == DistanceStatus::Exact) j["value"] = r.value;
    else j["value"] = {r.lower, r.upper};
    j["witness"] = vector_json(ring, r.witness);
    j["strategy"] = to_string(r.strategy);
    j["examined"] = std::to_string(r.examined);
    return j;
}

} // namespace lcdring
