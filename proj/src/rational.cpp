#include "wpl/rational.hpp"

#include <cctype>

namespace wpl {

namespace {

long long parse_ll(const std::string& text, size_t& pos, const std::string& whole) {
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = (text[pos] == '-');
        ++pos;
    }
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
        throw std::invalid_argument("bad rational '" + whole + "': expected integer");
    long long v = std::stoll(text.substr(start, pos - start));
    return neg ? -v : v;
}

} // namespace

Rational parse_rational(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    long long num = parse_ll(text, pos, text);
    skip_ws();
    long long den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        den = parse_ll(text, pos, text);
        skip_ws();
    }
    if (pos != text.size())
        throw std::invalid_argument("bad rational '" + text + "': trailing input");
    return Rational(num, den);
}

} // namespace wpl
