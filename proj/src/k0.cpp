#include "wpl/k0.hpp"

#include <cctype>
#include <stdexcept>

#include "wpl/graded_ring.hpp"

namespace wpl {

namespace {

const std::array<GradedElement, 6>& basis_elements() {
    static const std::array<GradedElement, 6> basis = {
        GradedElement{},
        GradedElement::generator(1),
        GradedElement::generator(2),
        GradedElement::generator(3),
        GradedElement::generator(4),
        GradedElement::canonical(),
    };
    return basis;
}

const std::array<std::string, 6>& basis_names() {
    static const std::array<std::string, 6> names = {
        "[O(0)]", "[O(x1)]", "[O(x2)]", "[O(x3)]", "[O(x4)]", "[O(c)]",
    };
    return names;
}

} // namespace

K0Class& K0Class::operator+=(const K0Class& o) {
    for (size_t k = 0; k < 6; ++k) coeff[k] += o.coeff[k];
    return *this;
}

K0Class& K0Class::operator-=(const K0Class& o) {
    for (size_t k = 0; k < 6; ++k) coeff[k] -= o.coeff[k];
    return *this;
}

K0Class K0Class::operator-() const {
    K0Class out;
    for (size_t k = 0; k < 6; ++k) out.coeff[k] = -coeff[k];
    return out;
}

K0Class operator*(long long s, K0Class a) {
    for (auto& v : a.coeff) v *= s;
    return a;
}

long long rank(const K0Class& a) {
    long long r = 0;
    for (long long v : a.coeff) r += v;
    return r;
}

long long degree(const K0Class& a) {
    return a.coeff[1] + a.coeff[2] + a.coeff[3] + a.coeff[4] + 2 * a.coeff[5];
}

Slope slope(const K0Class& a) {
    if (a.is_zero()) throw std::domain_error("slope of the zero class");
    long long r = rank(a);
    if (r == 0) return Slope::infinity();
    return Slope::finite(Rational(degree(a), r));
}

// Reduction of [O(x)] to the basis B rests on two identities among
// line-bundle classes:
//
//   R2: [O(y+xi+xj)] = [O(y+xi)] + [O(y+xj)] - [O(y)]       (i != j)
//   R1: [O(y+c)]     = [O(y)]    + [O(c)]    - [O(0)]
//
// R2 holds because a non-split extension of O(y+xi+xj) by O(y) is a rank-two
// bundle that also carries a line filtration with factors O(y+xi) and
// O(y+xj); the two filtrations of the same bundle give equal classes. The
// degenerate case i = j reads [O(y+c)] = 2*[O(y+xi)] - [O(y)], and combining
// it with R2 telescopes to the y-independent step R1. The test suite checks
// independently that every application order of R1/R2 reduces to the same
// vector and that the resulting Euler pairing satisfies the Riemann-Roch
// identity, which pins this relation set down.
K0Class line_bundle_class(const GradedElement& x) {
    long long l = x.c_coeff();
    int nbits = x.bit(1) + x.bit(2) + x.bit(3) + x.bit(4);

    if (l != 0) {
        // R1 telescoped: strip the whole c-part in one step.
        GradedElement base = x - GradedElement::from_raw({{0, 0, 0, 0}, l});
        K0Class out = line_bundle_class(base);
        out.coeff[5] += l;
        out.coeff[0] -= l;
        return out;
    }

    if (nbits <= 1) {
        K0Class out;
        if (nbits == 0) {
            out.coeff[0] = 1;
        } else {
            for (int i = 1; i <= 4; ++i)
                if (x.bit(i)) out.coeff[static_cast<size_t>(i)] = 1;
        }
        return out;
    }

    // R2, splitting off the two lowest set bits.
    int i = 0, j = 0;
    for (int k = 1; k <= 4; ++k) {
        if (!x.bit(k)) continue;
        if (i == 0) i = k;
        else if (j == 0) { j = k; break; }
    }
    GradedElement xi = GradedElement::generator(i);
    GradedElement xj = GradedElement::generator(j);
    GradedElement rest = x - xi - xj;
    return line_bundle_class(rest + xi) + line_bundle_class(rest + xj) - line_bundle_class(rest);
}

std::array<std::array<long long, 6>, 6> euler_gram() {
    // <O(x), O(y)> = hom - ext1 = dim S_{y-x} - dim S_{x+w-y}, the second
    // term by Serre duality.
    std::array<std::array<long long, 6>, 6> g{};
    const auto& basis = basis_elements();
    const GradedElement w = GradedElement::dualizing();
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j)
            g[i][j] = dim_s(basis[j] - basis[i]) - dim_s(basis[i] + w - basis[j]);
    return g;
}

long long euler_form(const K0Class& a, const K0Class& b) {
    static const auto g = euler_gram();
    long long total = 0;
    for (size_t i = 0; i < 6; ++i) {
        if (a.coeff[i] == 0) continue;
        for (size_t j = 0; j < 6; ++j) total += a.coeff[i] * g[i][j] * b.coeff[j];
    }
    return total;
}

K0Class tau(const K0Class& a) {
    static const std::array<K0Class, 6> columns = [] {
        std::array<K0Class, 6> cols{};
        const auto& basis = basis_elements();
        const GradedElement w = GradedElement::dualizing();
        for (size_t k = 0; k < 6; ++k) cols[k] = line_bundle_class(basis[k] + w);
        return cols;
    }();
    K0Class out;
    for (size_t k = 0; k < 6; ++k)
        if (a.coeff[k] != 0) out += a.coeff[k] * columns[k];
    return out;
}

K0Class exceptional_simple_class(int i, int parity) {
    if (i < 1 || i > 4) throw std::invalid_argument("simple index out of range");
    if (parity != 0 && parity != 1) throw std::invalid_argument("simple parity must be 0 or 1");
    K0Class out;
    if (parity == 0) {
        out.coeff[static_cast<size_t>(i)] = 1;
        out.coeff[0] = -1;
    } else {
        out.coeff[5] = 1;
        out.coeff[static_cast<size_t>(i)] = -1;
    }
    return out;
}

K0Class tube_fiber_class() {
    K0Class out;
    out.coeff[5] = 1;
    out.coeff[0] = -1;
    return out;
}

std::string to_string(const K0Class& a) {
    std::string out;
    for (size_t k = 0; k < 6; ++k) {
        long long v = a.coeff[k];
        if (v == 0) continue;
        if (!out.empty()) out += (v > 0) ? "+" : "-";
        else if (v < 0) out += '-';
        long long mag = (v > 0) ? v : -v;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += basis_names()[k];
    }
    if (out.empty()) out = "0";
    return out;
}

namespace {

struct ClassParser {
    const std::string& text;
    size_t pos{0};

    explicit ClassParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("bad class expression '" + text + "': " + what);
    }

    void expect(char ch) {
        skip_ws();
        if (pos >= text.size() || text[pos] != ch)
            fail(std::string("expected '") + ch + "'");
        ++pos;
    }

    long long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoll(text.substr(start, pos - start));
    }

    // term ::= [int "*"] "[O(" element ")]"
    K0Class term() {
        long long coeff = 1;
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = integer();
            expect('*');
        }
        expect('[');
        expect('O');
        expect('(');
        size_t start = pos;
        size_t close = text.find(')', pos);
        if (close == std::string::npos) fail("unterminated [O(...)]");
        GradedElement x = parse_element(text.substr(start, close - start));
        pos = close + 1;
        expect(']');
        return coeff * line_bundle_class(x);
    }

    K0Class expression() {
        skip_ws();
        if (peek() == '0') {
            size_t save = pos;
            ++pos;
            if (eof()) return K0Class{};
            pos = save;
        }
        K0Class total;
        long long sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos;
        } else if (peek() == '+') {
            ++pos;
        }
        while (true) {
            total += sign * term();
            if (eof()) break;
            char op = peek();
            if (op == '+') sign = 1;
            else if (op == '-') sign = -1;
            else fail("expected '+' or '-'");
            ++pos;
        }
        return total;
    }
};

} // namespace

K0Class parse_class_expr(const std::string& text) {
    ClassParser p(text);
    K0Class a = p.expression();
    if (!p.eof()) p.fail("trailing input");
    return a;
}

} // namespace wpl
