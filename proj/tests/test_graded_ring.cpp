#include <doctest.h>

#include <wpl/graded_ring.hpp>
#include <wpl/grading.hpp>

#include "support/lambda_poly.hpp"
#include "support/monomial_oracle.hpp"

#include <stdexcept>

using namespace wpl;
using namespace wpl::testing;

namespace {

GradedElement make(int b1, int b2, int b3, int b4, long long l) {
    RawElement raw;
    raw.a = {b1, b2, b3, b4};
    raw.m = l;
    return GradedElement::from_raw(raw);
}

} // namespace

TEST_CASE("section dimensions at landmark degrees") {
    CHECK(dim_s(GradedElement{}) == 1);
    CHECK(dim_s(make(0, 0, 0, 0, 1)) == 2);  // two central sections
    CHECK(dim_s(make(0, 0, 0, 0, 2)) == 3);
    CHECK(dim_s(make(1, 1, 0, 0, 0)) == 1);  // single mixed monomial
    CHECK(dim_s(GradedElement::dualizing()) == 0);
    CHECK(dim_s(make(0, 0, 0, 0, -1)) == 0);
    for (int i = 1; i <= 4; ++i) CHECK(dim_s(GradedElement::generator(i)) == 1);
}

TEST_CASE("lambda stays symbolic") {
    FormalLambda lambda;
    CHECK(lambda.name == "lambda");
}

TEST_CASE("polynomial scratch arithmetic") {
    LambdaPoly one = LambdaPoly::constant(1);
    LambdaPoly l = LambdaPoly::lambda();
    CHECK((one + l) * l == l + l * l);
    CHECK((l + LambdaPoly::constant(-1) * l).zero());
    CHECK(LambdaPoly::constant(0).zero());
    CHECK(l.str() == "lambda");
    CHECK((l * l + one + one).str() == "2+lambda^2");
}

TEST_CASE("oracle landmark values") {
    CHECK(dim_s_oracle(make(0, 0, 0, 0, 1), 10) == 2);
    CHECK(dim_s_oracle(make(1, 1, 0, 0, 0), 10) == 1);
    CHECK(dim_s_oracle(make(0, 0, 0, 0, 2), 10) == 3);
    CHECK(dim_s_oracle(make(0, 0, 0, 0, -1), 10) == 0);
    CHECK(dim_s_oracle(GradedElement::dualizing(), 10) == 0);
    CHECK_THROWS_AS(dim_s_oracle(make(0, 0, 0, 0, 30), 10), std::invalid_argument);
}

TEST_CASE("closed form matches monomial enumeration on the full window") {
    // All 16 index patterns, central part from -5 to 15: 336 degrees.
    for (int mask = 0; mask < 16; ++mask) {
        for (long long l = -5; l <= 15; ++l) {
            GradedElement e = make(mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1, l);
            CAPTURE(to_string(e));
            CHECK(dim_s(e) == dim_s_oracle(e, 40));
        }
    }
}
