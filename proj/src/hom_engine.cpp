#include "wpl/hom_engine.hpp"

#include <stdexcept>

#include "wpl/graded_ring.hpp"
#include "wpl/k0.hpp"

namespace wpl {

namespace {

const GradedElement& omega() {
    static const GradedElement w = GradedElement::dualizing();
    return w;
}

// Mathematical facts the rules rest on, quoted verbatim into traces.
constexpr const char* fact_twist = "Hom(X,Y) = Hom(X(z),Y(z)) for every twist z";
constexpr const char* fact_memo = "previously closed value";
constexpr const char* fact_guard = "recursion guard; this branch yields no value";
constexpr const char* fact_r0 = "Hom(O(x),O(y)) = S_(y-x)";
constexpr const char* fact_r1 = "every indecomposable bundle here is semistable, so maps never drop strictly in slope";
constexpr const char* fact_r2 = "tubes of one slope are pairwise orthogonal";
constexpr const char* fact_r3 = "Ext1(X,Y) = D Hom(Y, X(w))";
constexpr const char* fact_r4 = "<[X],[Y]> = dim Hom(X,Y) - dim Ext1(X,Y)";
constexpr const char* fact_r5 =
    "for the slope-0 Auslander bundle A: dim Hom(A,F) = deg F if mu(F) > 0 and dim Hom(F,A) = -deg F if mu(F) < 0";
constexpr const char* fact_r6 =
    "tube hammock: dim Hom(E,E) = floor((r+1)/2), dim Hom(E,E(w)) = floor(r/2), r = rank/denominator(mu)";
constexpr const char* fact_r7 = "long exact Hom sequence along the non-split 0 -> A -> M -> B -> 0";
constexpr const char* fact_r7_edge =
    "the connecting map sends id to the nonzero extension class, so nothing of Hom(B,B) resp. Hom(A,A) lifts";
constexpr const char* fact_s0 = "line bundles are the zero objects of the stable category";
constexpr const char* fact_shift = "the shift is an autoequivalence: uHom(X[a],Y[b]) = uHom(X,Y[b-a])";
constexpr const char* fact_realize = "catalogued realization of a shifted object as a bundle";
constexpr const char* fact_s1 =
    "a shifted semistable object is semistable with the iterated slope; uHom is then a quotient of a vanishing Hom";
constexpr const char* fact_s2_quot = "uHom(X,Y) is a quotient of Hom(X,Y)";
constexpr const char* fact_s2_ix = "0 -> Hom(X[1],Y) -> Hom(IX,Y) -> Hom(X,Y) -> uHom(X,Y) -> 0";
constexpr const char* fact_s2_py = "0 -> Hom(X,Y[-1]) -> Hom(X,PY) -> Hom(X,Y) -> uHom(X,Y) -> 0";
constexpr const char* fact_s4 = "Serre duality: uHom(X,Y[n]) = D uHom(Y, X(w)[1-n])";
constexpr const char* fact_open = "no rule closes this query";

TraceStep make_step(std::string rule, std::string anchor, std::string detail,
                    std::optional<long long> value = std::nullopt) {
    return TraceStep{std::move(rule), std::move(anchor), std::move(detail), value};
}

HomResult closed(std::string rule, std::string anchor, std::string detail, long long value) {
    HomResult r;
    r.trace.push_back(make_step(std::move(rule), std::move(anchor), std::move(detail), value));
    r.value = value;
    return r;
}

HomResult open_result(std::string detail) {
    HomResult r;
    r.trace.push_back(make_step("open", fact_open, std::move(detail)));
    return r;
}

void append_trace(HomResult& into, const HomResult& from) {
    into.trace.insert(into.trace.end(), from.trace.begin(), from.trace.end());
}

std::string tube_text(const TubeId& t) {
    switch (t.kind) {
        case TubeId::Kind::exceptional: return "exceptional point " + std::to_string(t.index);
        case TubeId::Kind::homogeneous: return "homogeneous";
        default: return "unknown";
    }
}

std::string pair_text(const BundleExpr& x, const BundleExpr& y) {
    return to_string(x) + " , " + to_string(y);
}

} // namespace

HomResult HomEngine::hom(const BundleExpr& x, const BundleExpr& y) {
    busy_.clear();
    return hom_impl(x, y, 0);
}

HomResult HomEngine::ext1(const BundleExpr& x, const BundleExpr& y) {
    busy_.clear();
    return ext1_impl(x, y, 0);
}

HomResult HomEngine::ext1_impl(const BundleExpr& x, const BundleExpr& y, int depth) {
    BundleExpr target = twist(x, omega());
    TraceStep flip = make_step("R3", fact_r3,
                               "ext1(" + pair_text(x, y) + ") = hom(" + pair_text(y, target) + ")");
    HomResult inner = hom_impl(y, target, depth + 1);
    inner.trace.insert(inner.trace.begin(), flip);
    return inner;
}

HomResult HomEngine::hom_impl(const BundleExpr& x0, const BundleExpr& y0, int depth) {
    std::vector<TraceStep> prologue;
    BundleExpr x = x0;
    BundleExpr y = y0;

    // Normalize the pair by a common twist so equivalent queries share one
    // memo slot and cycles are detected up to twist.
    GradedElement shift_by = x.base;
    if (!(shift_by == GradedElement{})) {
        x = twist(x, -shift_by);
        y = twist(y, -shift_by);
        prologue.push_back(make_step("twist", fact_twist,
                                     "replace (" + pair_text(x0, y0) + ") by (" + pair_text(x, y) +
                                         ")"));
    }

    const std::string key = to_string(x) + "|" + to_string(y);

    if (auto it = memo_.find(key); it != memo_.end()) {
        HomResult r;
        r.trace = std::move(prologue);
        r.trace.push_back(make_step("memo", fact_memo, key, it->second));
        r.value = it->second;
        return r;
    }

    HomResult result;
    if (depth > depth_cap) {
        result = open_result("depth cap at " + key);
        result.trace.front().anchor = fact_guard;
    } else if (busy_.count(key)) {
        result = open_result("cycle at " + key);
        result.trace.front().anchor = fact_guard;
    } else {
        busy_.insert(key);
        try {
            result = hom_rules(x, y, depth);
        } catch (...) {
            busy_.erase(key);
            throw;
        }
        busy_.erase(key);
        if (result.value) memo_[key] = *result.value;
    }

    result.trace.insert(result.trace.begin(), prologue.begin(), prologue.end());
    return result;
}

HomResult HomEngine::hom_rules(const BundleExpr& x, const BundleExpr& y, int depth) {
    // R0: both line bundles.
    if (x.kind == BundleKind::line && y.kind == BundleKind::line) {
        GradedElement d = y.base - x.base;
        return closed("R0", fact_r0, "y-x=" + to_string(d), dim_s(d));
    }

    const Slope mx = slope(x);
    const Slope my = slope(y);

    // R1: strict slope drop.
    if (mx > my)
        return closed("R1", fact_r1, "mu(X)=" + to_string(mx) + " mu(Y)=" + to_string(my), 0);

    // R2: equal slope, distinct known tubes.
    if (mx == my) {
        TubeId tx = tube(x);
        TubeId ty = tube(y);
        if (tx.kind != TubeId::Kind::unknown && ty.kind != TubeId::Kind::unknown && !(tx == ty))
            return closed("R2", fact_r2, tube_text(tx) + " vs " + tube_text(ty), 0);
    }

    // R4: Euler closure through the Ext side (R3 flip inside).
    {
        HomResult ex = ext1_impl(x, y, depth + 1);
        if (ex.closed()) {
            long long euler = euler_form(k0_class(x), k0_class(y));
            long long value = euler + *ex.value;
            if (value < 0)
                throw std::logic_error("Euler closure gave a negative dimension at " +
                                       pair_text(x, y));
            HomResult r;
            r.trace = std::move(ex.trace);
            r.trace.push_back(make_step(
                "R4", fact_r4,
                "euler=" + std::to_string(euler) + " ext1=" + std::to_string(*ex.value), value));
            r.value = value;
            return r;
        }
    }

    // R5: degree counting against an Auslander bundle.
    if (x.kind == BundleKind::auslander && my > mx) {
        long long deg_y = degree(y);
        long long rk_y = rank(y);
        long long dl = x.base.delta();
        long long value = deg_y - dl * rk_y;
        if (value < 0) throw std::logic_error("degree count gave a negative dimension");
        return closed("R5", fact_r5,
                      "degY=" + std::to_string(deg_y) + " deltaL=" + std::to_string(dl) +
                          " rkY=" + std::to_string(rk_y),
                      value);
    }
    if (y.kind == BundleKind::auslander && mx < my) {
        long long deg_x = degree(x);
        long long rk_x = rank(x);
        long long dl = y.base.delta();
        long long value = dl * rk_x - deg_x;
        if (value < 0) throw std::logic_error("degree count gave a negative dimension");
        return closed("R5", fact_r5,
                      "degX=" + std::to_string(deg_x) + " deltaL=" + std::to_string(dl) +
                          " rkX=" + std::to_string(rk_x),
                      value);
    }

    // R6: hammock values inside one tube.
    if (y == x || y == twist(x, omega())) {
        const Rational& v = mx.value();
        if (rank(x) % v.den == 0) {
            long long r_param = rank(x) / v.den;
            bool self = (y == x);
            long long value = self ? (r_param + 1) / 2 : r_param / 2;
            return closed("R6", fact_r6,
                          std::string("variant=") + (self ? "self" : "omega") +
                              " r=" + std::to_string(r_param),
                          value);
        }
    }

    // R7: long exact Hom sequences along the catalogued sequences.
    // Target side: 0 -> A -> Y -> B -> 0.
    if (auto seq = defining_sequence(y)) {
        const BundleExpr& a = seq->sub;
        const BundleExpr& b = seq->quotient;
        if (x == b) {
            // X = B is a brick, so the connecting map is injective on
            // Hom(B,B) and Hom(B,Y) = Hom(B,A).
            HomResult hba = hom_impl(x, a, depth + 1);
            if (hba.closed()) {
                HomResult r;
                r.trace = std::move(hba.trace);
                r.trace.push_back(make_step("R7", fact_r7_edge,
                                            "variant=target-edge homBA=" +
                                                std::to_string(*hba.value),
                                            *hba.value));
                r.value = hba.value;
                return r;
            }
        }
        {
            HomResult ea = ext1_impl(x, a, depth + 1);
            if (ea.closed() && *ea.value == 0) {
                HomResult ha = hom_impl(x, a, depth + 1);
                HomResult hb = hom_impl(x, b, depth + 1);
                if (ha.closed() && hb.closed()) {
                    long long value = *ha.value + *hb.value;
                    HomResult r;
                    r.trace = std::move(ea.trace);
                    append_trace(r, ha);
                    append_trace(r, hb);
                    r.trace.push_back(make_step("R7", fact_r7,
                                                "variant=target-a homXA=" +
                                                    std::to_string(*ha.value) +
                                                    " homXB=" + std::to_string(*hb.value),
                                                value));
                    r.value = value;
                    return r;
                }
            }
        }
        {
            HomResult hb = hom_impl(x, b, depth + 1);
            if (hb.closed() && *hb.value == 0) {
                HomResult ha = hom_impl(x, a, depth + 1);
                if (ha.closed()) {
                    HomResult r;
                    r.trace = std::move(hb.trace);
                    append_trace(r, ha);
                    r.trace.push_back(make_step(
                        "R7", fact_r7, "variant=target-b homXA=" + std::to_string(*ha.value),
                        *ha.value));
                    r.value = ha.value;
                    return r;
                }
            }
        }
    }

    // Source side: 0 -> A -> X -> B -> 0.
    if (auto seq = defining_sequence(x)) {
        const BundleExpr& a = seq->sub;
        const BundleExpr& b = seq->quotient;
        if (y == a) {
            // Y = A is a brick (a line bundle), so Hom(X,A) = Hom(B,A).
            HomResult hba = hom_impl(b, y, depth + 1);
            if (hba.closed()) {
                HomResult r;
                r.trace = std::move(hba.trace);
                r.trace.push_back(make_step("R7", fact_r7_edge,
                                            "variant=source-edge homBA=" +
                                                std::to_string(*hba.value),
                                            *hba.value));
                r.value = hba.value;
                return r;
            }
        }
        {
            HomResult eb = ext1_impl(b, y, depth + 1);
            if (eb.closed() && *eb.value == 0) {
                HomResult ha = hom_impl(a, y, depth + 1);
                HomResult hb = hom_impl(b, y, depth + 1);
                if (ha.closed() && hb.closed()) {
                    long long value = *ha.value + *hb.value;
                    HomResult r;
                    r.trace = std::move(eb.trace);
                    append_trace(r, ha);
                    append_trace(r, hb);
                    r.trace.push_back(make_step("R7", fact_r7,
                                                "variant=source-a homAY=" +
                                                    std::to_string(*ha.value) +
                                                    " homBY=" + std::to_string(*hb.value),
                                                value));
                    r.value = value;
                    return r;
                }
            }
        }
        {
            HomResult ha = hom_impl(a, y, depth + 1);
            if (ha.closed() && *ha.value == 0) {
                HomResult hb = hom_impl(b, y, depth + 1);
                if (hb.closed()) {
                    HomResult r;
                    r.trace = std::move(ha.trace);
                    append_trace(r, hb);
                    r.trace.push_back(make_step(
                        "R7", fact_r7, "variant=source-b homBY=" + std::to_string(*hb.value),
                        *hb.value));
                    r.value = hb.value;
                    return r;
                }
            }
        }
    }

    return open_result(pair_text(x, y));
}

HomResult HomEngine::stable_hom(const StableObject& x, const StableObject& y) {
    busy_.clear();
    return stable_impl(x, y, 0, false);
}

HomResult HomEngine::stable_impl(StableObject x, StableObject y, int depth, bool flipped) {
    std::vector<TraceStep> steps;

    // Normalize the shifts to (0, n).
    long long n = y.shift - x.shift;
    if (x.shift != 0 || y.shift != 0)
        steps.push_back(make_step("shift", fact_shift,
                                  "uHom(" + to_string(x) + ", " + to_string(y) + ") = uHom(" +
                                      to_string(x.base) + ", " + to_string(y.base) + "[" +
                                      std::to_string(n) + "])"));
    BundleExpr bx = x.base;
    BundleExpr by = y.base;

    // Common twist, as in the sheaf-level engine.
    GradedElement shift_by = bx.base;
    if (!(shift_by == GradedElement{})) {
        BundleExpr ox = bx, oy = by;
        bx = twist(bx, -shift_by);
        by = twist(by, -shift_by);
        steps.push_back(make_step("twist", fact_twist,
                                  "replace (" + pair_text(ox, oy) + ") by (" + pair_text(bx, by) +
                                      ")"));
    }

    auto finish = [&steps](HomResult r) {
        r.trace.insert(r.trace.begin(), steps.begin(), steps.end());
        return r;
    };

    // S0: a line summand is stably zero.
    if (bx.kind == BundleKind::line || by.kind == BundleKind::line)
        return finish(closed("S0", fact_s0, pair_text(bx, by), 0));

    const std::string key =
        "u|" + to_string(bx) + "|" + to_string(by) + "|" + std::to_string(n);
    if (auto it = stable_memo_.find(key); it != stable_memo_.end()) {
        HomResult r;
        r.trace.push_back(make_step("memo", fact_memo, key, it->second));
        r.value = it->second;
        return finish(r);
    }
    if (depth > depth_cap) {
        HomResult r = open_result("depth cap at " + key);
        r.trace.front().anchor = fact_guard;
        return finish(r);
    }

    // Realize the shift on Y, then on X, as far as the catalogue allows.
    while (n != 0) {
        int sign = (n > 0) ? 1 : -1;
        auto stepped = realize_step(by, sign);
        if (!stepped) break;
        steps.push_back(make_step("realize", fact_realize,
                                  to_string(by) + "[" + std::to_string(sign) + "] = " +
                                      to_string(*stepped)));
        by = *stepped;
        n -= sign;
    }
    while (n != 0) {
        int sign = (n > 0) ? 1 : -1;
        auto stepped = realize_step(bx, -sign);
        if (!stepped) break;
        steps.push_back(make_step("realize", fact_realize,
                                  to_string(bx) + "[" + std::to_string(-sign) + "] = " +
                                      to_string(*stepped) + " (moving the shift to X)"));
        bx = *stepped;
        n -= sign;
    }

    auto close_with = [&](HomResult r) {
        if (r.value) stable_memo_[key] = *r.value;
        return finish(std::move(r));
    };

    if (n == 0) {
        HomResult h = hom_impl(bx, by, depth + 1);
        if (h.closed() && *h.value == 0) {
            HomResult r;
            r.trace = std::move(h.trace);
            r.trace.push_back(make_step("S2", fact_s2_quot, "hom=0", 0));
            r.value = 0;
            return close_with(std::move(r));
        }
        if (h.closed()) {
            // Route through the injective hull of X:
            // uHom(X,Y) = hom(X,Y) - hom(IX,Y) + hom(X[1],Y).
            {
                CoverReport hull = injective_hull(bx);
                HomResult sub;
                bool all_closed = true;
                long long hull_total = 0;
                for (const auto& s : hull.summands) {
                    HomResult hs = hom_impl(line_bundle(s), by, depth + 1);
                    if (!hs.closed()) {
                        all_closed = false;
                        break;
                    }
                    hull_total += *hs.value;
                    append_trace(sub, hs);
                }
                std::optional<long long> next_term;
                if (all_closed) {
                    if (auto stepped = realize_step(bx, 1)) {
                        HomResult h1 = hom_impl(*stepped, by, depth + 1);
                        if (h1.closed()) {
                            sub.trace.push_back(make_step("realize", fact_realize,
                                                          to_string(bx) + "[1] = " +
                                                              to_string(*stepped)));
                            append_trace(sub, h1);
                            next_term = *h1.value;
                        }
                    }
                    if (!next_term) {
                        Slope up = shift_slope_up(slope(bx));
                        if (up > slope(by)) {
                            sub.trace.push_back(make_step(
                                "S1", fact_s1,
                                "hom(X[1],Y)=0: mu(X[1])=" + to_string(up) +
                                    " mu(Y)=" + to_string(slope(by)),
                                0));
                            next_term = 0;
                        }
                    }
                }
                if (all_closed && next_term) {
                    long long value = *h.value - hull_total + *next_term;
                    if (value < 0)
                        throw std::logic_error("stable closure gave a negative dimension at " +
                                               key);
                    HomResult r;
                    r.trace = std::move(h.trace);
                    append_trace(r, sub);
                    r.trace.push_back(make_step("S2", fact_s2_ix,
                                                "route=IX h=" + std::to_string(*h.value) +
                                                    " cover=" + std::to_string(hull_total) +
                                                    " next=" + std::to_string(*next_term),
                                                value));
                    r.value = value;
                    return close_with(std::move(r));
                }
            }
            // Fallback route through the projective cover of Y:
            // uHom(X,Y) = hom(X,Y) - hom(X,PY) + hom(X,Y[-1]).
            if (by.kind == BundleKind::auslander || by.kind == BundleKind::extension ||
                by.kind == BundleKind::quasi_simple) {
                CoverReport cover = projective_cover(by);
                HomResult sub;
                bool all_closed = true;
                long long cover_total = 0;
                for (const auto& s : cover.summands) {
                    HomResult hs = hom_impl(bx, line_bundle(s), depth + 1);
                    if (!hs.closed()) {
                        all_closed = false;
                        break;
                    }
                    cover_total += *hs.value;
                    append_trace(sub, hs);
                }
                std::optional<long long> prev_term;
                if (all_closed) {
                    if (auto stepped = realize_step(by, -1)) {
                        HomResult h1 = hom_impl(bx, *stepped, depth + 1);
                        if (h1.closed()) {
                            sub.trace.push_back(make_step("realize", fact_realize,
                                                          to_string(by) + "[-1] = " +
                                                              to_string(*stepped)));
                            append_trace(sub, h1);
                            prev_term = *h1.value;
                        }
                    }
                    if (!prev_term) {
                        Slope down = shift_slope_down(slope(by));
                        if (slope(bx) > down) {
                            sub.trace.push_back(make_step(
                                "S1", fact_s1,
                                "hom(X,Y[-1])=0: mu(X)=" + to_string(slope(bx)) +
                                    " mu(Y[-1])=" + to_string(down),
                                0));
                            prev_term = 0;
                        }
                    }
                }
                if (all_closed && prev_term) {
                    long long value = *h.value - cover_total + *prev_term;
                    if (value < 0)
                        throw std::logic_error("stable closure gave a negative dimension at " +
                                               key);
                    HomResult r;
                    r.trace = std::move(h.trace);
                    append_trace(r, sub);
                    r.trace.push_back(make_step("S2", fact_s2_py,
                                                "route=PY h=" + std::to_string(*h.value) +
                                                    " cover=" + std::to_string(cover_total) +
                                                    " next=" + std::to_string(*prev_term),
                                                value));
                    r.value = value;
                    return close_with(std::move(r));
                }
            }
        }
    } else {
        // S1: leftover formal shift, decided by slope growth alone.
        Slope target = shift_slope_iter(slope(by), n);
        if (slope(bx) > target)
            return close_with(closed("S1", fact_s1,
                                     "mu(X)=" + to_string(slope(bx)) + " mu(Y[" +
                                         std::to_string(n) + "])=" + to_string(target),
                                     0));
    }

    // S4: one Serre flip.
    if (!flipped) {
        StableObject fx{by, 0};
        StableObject fy{twist(bx, omega()), 1 - n};
        steps.push_back(make_step("S4", fact_s4,
                                  "uHom(" + to_string(bx) + ", " + to_string(by) + "[" +
                                      std::to_string(n) + "]) = uHom(" + to_string(fx) + ", " +
                                      to_string(fy) + ")"));
        HomResult r = stable_impl(fx, fy, depth + 1, true);
        if (r.value) stable_memo_[key] = *r.value;
        return finish(std::move(r));
    }

    return finish(open_result(key));
}

} // namespace wpl
