#include "wpl/grading.hpp"

#include <cctype>
#include <stdexcept>

namespace wpl {

namespace {

long long floor_div2(long long v) {
    // round toward minus infinity, not toward zero
    return (v >= 0) ? v / 2 : -((-v + 1) / 2);
}

} // namespace

GradedElement GradedElement::from_raw(const RawElement& raw) {
    GradedElement x;
    long long carry = raw.m;
    for (size_t i = 0; i < 4; ++i) {
        long long q = floor_div2(raw.a[i]);
        x.bits_[i] = static_cast<int>(raw.a[i] - 2 * q);
        carry += q;
    }
    x.lc_ = carry;
    return x;
}

GradedElement GradedElement::generator(int i) {
    if (i < 1 || i > 4) throw std::invalid_argument("generator index out of range");
    GradedElement x;
    x.bits_[static_cast<size_t>(i - 1)] = 1;
    return x;
}

GradedElement GradedElement::canonical() {
    GradedElement x;
    x.lc_ = 1;
    return x;
}

GradedElement GradedElement::dualizing() {
    GradedElement x;
    x.bits_ = {1, 1, 1, 1};
    x.lc_ = -2;
    return x;
}

GradedElement operator+(const GradedElement& x, const GradedElement& y) {
    RawElement raw;
    for (size_t i = 0; i < 4; ++i) raw.a[i] = x.bits_[i] + y.bits_[i];
    raw.m = x.lc_ + y.lc_;
    return GradedElement::from_raw(raw);
}

GradedElement operator-(const GradedElement& x, const GradedElement& y) {
    RawElement raw;
    for (size_t i = 0; i < 4; ++i) raw.a[i] = x.bits_[i] - y.bits_[i];
    raw.m = x.lc_ - y.lc_;
    return GradedElement::from_raw(raw);
}

GradedElement GradedElement::operator-() const {
    RawElement raw;
    for (size_t i = 0; i < 4; ++i) raw.a[i] = -bits_[i];
    raw.m = -lc_;
    return from_raw(raw);
}

std::vector<GradedElement> delta_fiber(long long d) {
    std::vector<GradedElement> out;
    out.reserve(8);
    for (int mask = 0; mask < 16; ++mask) {
        long long s = 0;
        RawElement raw;
        for (size_t i = 0; i < 4; ++i) {
            raw.a[i] = (mask >> i) & 1;
            s += raw.a[i];
        }
        if ((d - s) % 2 != 0) continue;
        raw.m = (d - s) / 2;
        out.push_back(GradedElement::from_raw(raw));
    }
    return out;
}

std::string to_string(const GradedElement& x) {
    std::string out;
    for (int i = 1; i <= 4; ++i) {
        if (x.bit(i) == 0) continue;
        if (!out.empty()) out += '+';
        out += 'x';
        out += static_cast<char>('0' + i);
    }
    long long l = x.c_coeff();
    if (l != 0) {
        if (!out.empty()) out += (l > 0) ? "+" : "-";
        else if (l < 0) out += '-';
        long long mag = (l > 0) ? l : -l;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += 'c';
    }
    if (out.empty()) out = "0";
    return out;
}

namespace {

struct ElementParser {
    const std::string& text;
    size_t pos{0};

    explicit ElementParser(const std::string& t) : text(t) {}

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
        throw std::invalid_argument("bad element '" + text + "': " + what);
    }

    long long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoll(text.substr(start, pos - start));
    }

    // term ::= [int "*"] ("x1" | "x2" | "x3" | "x4" | "c" | "w")
    RawElement term() {
        long long coeff = 1;
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = integer();
            skip_ws();
            if (pos >= text.size() || text[pos] != '*') fail("expected '*' after coefficient");
            ++pos;
        }
        skip_ws();
        RawElement raw;
        if (pos < text.size() && text[pos] == 'x') {
            ++pos;
            if (pos >= text.size() || text[pos] < '1' || text[pos] > '4') fail("expected x1..x4");
            raw.a[static_cast<size_t>(text[pos] - '1')] = coeff;
            ++pos;
        } else if (pos < text.size() && text[pos] == 'c') {
            raw.m = coeff;
            ++pos;
        } else if (pos < text.size() && text[pos] == 'w') {
            for (auto& a : raw.a) a = coeff;
            raw.m = -2 * coeff;
            ++pos;
        } else {
            fail("expected generator");
        }
        return raw;
    }

    GradedElement element() {
        skip_ws();
        if (peek() == '0') {
            size_t save = pos;
            ++pos;
            if (eof()) return GradedElement{};
            pos = save;
        }
        RawElement total;
        long long sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos;
        } else if (peek() == '+') {
            ++pos;
        }
        while (true) {
            RawElement t = term();
            for (size_t i = 0; i < 4; ++i) total.a[i] += sign * t.a[i];
            total.m += sign * t.m;
            if (eof()) break;
            char op = peek();
            if (op == '+') sign = 1;
            else if (op == '-') sign = -1;
            else fail("expected '+' or '-'");
            ++pos;
        }
        return GradedElement::from_raw(total);
    }
};

} // namespace

GradedElement parse_element(const std::string& text) {
    ElementParser p(text);
    GradedElement x = p.element();
    if (!p.eof()) p.fail("trailing input");
    return x;
}

} // namespace wpl
