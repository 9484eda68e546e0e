#include "wpl/bundles.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace wpl {

namespace {

void check_index(int i, const char* what) {
    if (i < 1 || i > 4) throw std::invalid_argument(std::string(what) + " must be in 1..4");
}

const GradedElement& omega() {
    static const GradedElement w = GradedElement::dualizing();
    return w;
}

} // namespace

BundleExpr line_bundle(const GradedElement& x) {
    return BundleExpr{BundleKind::line, x, 0};
}

BundleExpr auslander_bundle(const GradedElement& L) {
    return BundleExpr{BundleKind::auslander, L, 0};
}

BundleExpr extension_bundle(const GradedElement& L, int i) {
    check_index(i, "extension branch");
    return BundleExpr{BundleKind::extension, L, i};
}

BundleExpr quasi_simple_bundle(const GradedElement& L) {
    GradedElement other = L + omega();
    return BundleExpr{BundleKind::quasi_simple, std::min(L, other), 0};
}

BundleExpr rank_three_bundle(int j, const GradedElement& t) {
    check_index(j, "arm index");
    return BundleExpr{BundleKind::rank_three, t, j};
}

BundleExpr twist(const BundleExpr& b, const GradedElement& x) {
    switch (b.kind) {
        case BundleKind::line: return line_bundle(b.base + x);
        case BundleKind::auslander: return auslander_bundle(b.base + x);
        case BundleKind::extension: return extension_bundle(b.base + x, b.index);
        case BundleKind::quasi_simple: return quasi_simple_bundle(b.base + x);
        case BundleKind::rank_three: return rank_three_bundle(b.index, b.base + x);
    }
    throw std::logic_error("unreachable bundle kind");
}

long long rank(const BundleExpr& b) {
    switch (b.kind) {
        case BundleKind::line: return 1;
        case BundleKind::auslander:
        case BundleKind::extension:
        case BundleKind::quasi_simple: return 2;
        case BundleKind::rank_three: return 3;
    }
    throw std::logic_error("unreachable bundle kind");
}

K0Class k0_class(const BundleExpr& b) {
    const GradedElement& w = omega();
    switch (b.kind) {
        case BundleKind::line:
            return line_bundle_class(b.base);
        case BundleKind::auslander:
            return line_bundle_class(b.base) + line_bundle_class(b.base + w);
        case BundleKind::extension:
            return line_bundle_class(b.base + w) +
                   line_bundle_class(b.base + GradedElement::generator(b.index));
        case BundleKind::quasi_simple:
            return line_bundle_class(b.base + w) +
                   line_bundle_class(b.base + GradedElement::canonical());
        case BundleKind::rank_three: {
            GradedElement xj = GradedElement::generator(b.index);
            return line_bundle_class(w + b.base) + line_bundle_class(w + xj + b.base) +
                   line_bundle_class(xj + b.base);
        }
    }
    throw std::logic_error("unreachable bundle kind");
}

long long degree(const BundleExpr& b) { return degree(k0_class(b)); }

Slope slope(const BundleExpr& b) { return Slope::finite(Rational(degree(b), rank(b))); }

TubeId tube(const BundleExpr& b) {
    switch (b.kind) {
        case BundleKind::extension: return TubeId{TubeId::Kind::exceptional, b.index};
        case BundleKind::quasi_simple: return TubeId{TubeId::Kind::homogeneous, 0};
        default: return TubeId{};
    }
}

std::optional<DefiningSequence> defining_sequence(const BundleExpr& b) {
    const GradedElement& w = omega();
    switch (b.kind) {
        case BundleKind::line:
            return std::nullopt;
        case BundleKind::auslander:
            return DefiningSequence{line_bundle(b.base + w), line_bundle(b.base)};
        case BundleKind::extension:
            return DefiningSequence{line_bundle(b.base + w),
                                    line_bundle(b.base + GradedElement::generator(b.index))};
        case BundleKind::quasi_simple:
            return DefiningSequence{line_bundle(b.base + w),
                                    line_bundle(b.base + GradedElement::canonical())};
        case BundleKind::rank_three: {
            GradedElement xj = GradedElement::generator(b.index);
            return DefiningSequence{line_bundle(w + b.base),
                                    auslander_bundle(w + xj + b.base)};
        }
    }
    throw std::logic_error("unreachable bundle kind");
}

long long CoverReport::total_degree() const {
    long long d = 0;
    for (const auto& x : summands) d += x.delta();
    return d;
}

CoverReport projective_cover(const BundleExpr& b) {
    const GradedElement& w = omega();
    CoverReport out;
    switch (b.kind) {
        case BundleKind::auslander:
            out.summands.push_back(b.base + w);
            for (int i = 1; i <= 4; ++i)
                out.summands.push_back(b.base - GradedElement::generator(i));
            return out;
        case BundleKind::extension: {
            out.summands.push_back(b.base + w);
            GradedElement xi = GradedElement::generator(b.index);
            for (int j = 1; j <= 4; ++j) {
                if (j == b.index) continue;
                out.summands.push_back(b.base + xi - GradedElement::generator(j));
            }
            return out;
        }
        case BundleKind::quasi_simple:
            for (const auto& z : delta_fiber(0)) out.summands.push_back(b.base + z);
            return out;
        default:
            throw std::invalid_argument("no cover formula for " + to_string(b));
    }
}

CoverReport injective_hull(const BundleExpr& b) {
    const GradedElement& w = omega();
    CoverReport out;
    switch (b.kind) {
        case BundleKind::auslander:
            out.summands.push_back(b.base);
            for (int i = 1; i <= 4; ++i)
                out.summands.push_back(b.base + w + GradedElement::generator(i));
            return out;
        case BundleKind::extension: {
            out.summands.push_back(b.base + GradedElement::generator(b.index));
            for (int j = 1; j <= 4; ++j) {
                if (j == b.index) continue;
                out.summands.push_back(b.base + w + GradedElement::generator(j));
            }
            return out;
        }
        case BundleKind::quasi_simple:
            for (const auto& z : delta_fiber(2)) out.summands.push_back(b.base + z);
            return out;
        case BundleKind::rank_three:
            out.summands.push_back(b.base + GradedElement::canonical());
            for (int i = 1; i <= 4; ++i)
                out.summands.push_back(b.base + w + GradedElement::generator(i));
            return out;
        default:
            throw std::invalid_argument("no cover formula for " + to_string(b));
    }
}

bool is_exceptional(const BundleExpr& b) {
    if (b.kind == BundleKind::auslander) return true;
    Slope mu = slope(b);
    const Rational& v = mu.value();
    if (v.is_integer()) return false;
    return rank(b) == v.den;
}

std::string to_string(const BundleExpr& b) {
    switch (b.kind) {
        case BundleKind::line: return "O(" + to_string(b.base) + ")";
        case BundleKind::auslander: return "E(" + to_string(b.base) + ")";
        case BundleKind::extension:
            return "E<" + to_string(b.base) + ";" + std::to_string(b.index) + ">";
        case BundleKind::quasi_simple: return "Q(" + to_string(b.base) + ")";
        case BundleKind::rank_three:
            return "F(" + std::to_string(b.index) + "," + to_string(b.base) + ")";
    }
    throw std::logic_error("unreachable bundle kind");
}

namespace {

std::string strip_ws(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

[[noreturn]] void bad_bundle(const std::string& text, const std::string& what) {
    throw std::invalid_argument("bad bundle '" + text + "': " + what);
}

} // namespace

BundleExpr parse_bundle(const std::string& text) {
    std::string s = strip_ws(text);
    if (s.size() < 3) bad_bundle(text, "too short");

    if (s[0] == 'O' && s[1] == '(' && s.back() == ')')
        return line_bundle(parse_element(s.substr(2, s.size() - 3)));

    if (s[0] == 'Q' && s[1] == '(' && s.back() == ')')
        return quasi_simple_bundle(parse_element(s.substr(2, s.size() - 3)));

    if (s[0] == 'E' && s[1] == '(' && s.back() == ')')
        return auslander_bundle(parse_element(s.substr(2, s.size() - 3)));

    if (s[0] == 'E' && s[1] == '<' && s.back() == '>') {
        size_t semi = s.find(';', 2);
        if (semi == std::string::npos) bad_bundle(text, "expected ';' in E<...;i>");
        std::string elt = s.substr(2, semi - 2);
        std::string idx = s.substr(semi + 1, s.size() - semi - 2);
        if (idx.size() != 1 || idx[0] < '1' || idx[0] > '4')
            bad_bundle(text, "branch index must be 1..4");
        return extension_bundle(parse_element(elt), idx[0] - '0');
    }

    if (s[0] == 'F' && s[1] == '(' && s.back() == ')') {
        size_t comma = s.find(',', 2);
        if (comma == std::string::npos) bad_bundle(text, "expected ',' in F(j,...)");
        std::string idx = s.substr(2, comma - 2);
        if (idx.size() != 1 || idx[0] < '1' || idx[0] > '4')
            bad_bundle(text, "arm index must be 1..4");
        return rank_three_bundle(idx[0] - '0', parse_element(s.substr(comma + 1, s.size() - comma - 2)));
    }

    bad_bundle(text, "unknown bundle form");
}

} // namespace wpl
