#include <doctest.h>

#include <wpl/grading.hpp>

#include <random>
#include <set>
#include <stdexcept>

using namespace wpl;

namespace {

GradedElement make(int b1, int b2, int b3, int b4, long long l) {
    RawElement raw;
    raw.a = {b1, b2, b3, b4};
    raw.m = l;
    return GradedElement::from_raw(raw);
}

GradedElement x(int i) { return GradedElement::generator(i); }
GradedElement c() { return make(0, 0, 0, 0, 1); }

GradedElement random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> coeff(-6, 6);
    RawElement raw;
    for (auto& a : raw.a) a = coeff(rng);
    raw.m = coeff(rng);
    return GradedElement::from_raw(raw);
}

} // namespace

TEST_CASE("normal form absorbs even generator multiples into the central part") {
    for (int i = 1; i <= 4; ++i) {
        CHECK(x(i) + x(i) == c());
        CHECK(x(i) + x(i) + x(i) == x(i) + c());
    }

    // Raw coefficients reduce mod 2 with the floor carried centrally,
    // including through negatives.
    RawElement raw;
    raw.a = {-1, 0, 0, 0};
    raw.m = 0;
    GradedElement e = GradedElement::from_raw(raw);
    CHECK(e.bit(1) == 1);
    CHECK(e.c_coeff() == -1);
    CHECK(e == x(1) - c());

    raw.a = {5, -2, 0, 3};
    raw.m = 1;
    e = GradedElement::from_raw(raw);
    CHECK(e.bit(1) == 1);
    CHECK(e.bit(2) == 0);
    CHECK(e.bit(4) == 1);
    CHECK(e.c_coeff() == 1 + 2 - 1 + 1); // floors 2, -1, 0, 1 plus the raw m
}

TEST_CASE("group identities") {
    GradedElement zero = GradedElement{};
    GradedElement w = GradedElement::dualizing();

    CHECK(w == x(1) + x(2) + x(3) + x(4) - c() - c());
    CHECK(w + w == zero);
    CHECK(-w == w);
    CHECK(-x(1) == x(1) - c());

    std::mt19937_64 rng(20260821);
    for (int trial = 0; trial < 200; ++trial) {
        GradedElement a = random_element(rng);
        GradedElement b = random_element(rng);
        CHECK(a + b == b + a);
        CHECK(a - b == a + (-b));
        CHECK(a + zero == a);
        CHECK(a - a == zero);
    }
}

TEST_CASE("degree and effectivity") {
    CHECK(delta(GradedElement{}) == 0);
    CHECK(delta(c()) == 2);
    CHECK(delta(GradedElement::dualizing()) == 0);
    for (int i = 1; i <= 4; ++i) CHECK(delta(x(i)) == 1);

    CHECK(is_effective(GradedElement{}));
    CHECK(is_effective(c()));
    CHECK(is_effective(x(1)));
    CHECK_FALSE(is_effective(GradedElement::dualizing()));
    CHECK_FALSE(is_effective(x(1) - c()));

    CHECK(leq(GradedElement{}, x(2)));
    CHECK(leq(x(2), c()));
    CHECK_FALSE(leq(c(), x(2)));
}

TEST_CASE("effectivity dichotomy against the dual window") {
    // Exactly one of x >= 0 and x <= w + c holds, for every x.
    GradedElement top = GradedElement::dualizing() + c();
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        GradedElement e = random_element(rng);
        CHECK(is_effective(e) != leq(e, top));
    }
}

TEST_CASE("degree fibers have exactly eight elements") {
    for (long long d = -6; d <= 6; ++d) {
        auto fiber = delta_fiber(d);
        REQUIRE(fiber.size() == 8);
        std::set<GradedElement> seen(fiber.begin(), fiber.end());
        CHECK(seen.size() == 8);
        for (const auto& e : fiber) CHECK(delta(e) == d);
    }

    // Degree zero: the trivial element, the dualizing element, and the six
    // two-index combinations pulled one central step down.
    auto fiber = delta_fiber(0);
    std::set<GradedElement> seen(fiber.begin(), fiber.end());
    CHECK(seen.count(GradedElement{}) == 1);
    CHECK(seen.count(GradedElement::dualizing()) == 1);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            CHECK(seen.count(x(i) + x(j) - c()) == 1);
}

TEST_CASE("printing") {
    CHECK(to_string(GradedElement{}) == "0");
    CHECK(to_string(x(1)) == "x1");
    CHECK(to_string(c()) == "c");
    CHECK(to_string(-c()) == "-c");
    CHECK(to_string(x(2) - c()) == "x2-c");
    CHECK(to_string(x(1) + x(3) + c() + c()) == "x1+x3+2*c");
    CHECK(to_string(GradedElement::dualizing()) == "x1+x2+x3+x4-2*c");
}

TEST_CASE("parsing accepts the printed grammar") {
    CHECK(parse_element("0") == GradedElement{});
    CHECK(parse_element("w") == GradedElement::dualizing());
    CHECK(parse_element("2*x1") == c());
    CHECK(parse_element(" x1 - x2 ") == x(1) - x(2));
    CHECK(parse_element("-3*c+x4") == x(4) - c() - c() - c());
    CHECK(parse_element("x1+x2+x3+x4-2*c") == GradedElement::dualizing());

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        GradedElement e = random_element(rng);
        CHECK(parse_element(to_string(e)) == e);
    }

    CHECK_THROWS_AS(parse_element(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("x5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("x1+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("1*"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("x1 x2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("q"), std::invalid_argument);
    CHECK_THROWS_AS(GradedElement::generator(0), std::invalid_argument);
    CHECK_THROWS_AS(GradedElement::generator(5), std::invalid_argument);
}
