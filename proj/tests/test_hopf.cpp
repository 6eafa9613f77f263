#include <algorithm>
#include <vector>

#include "doctest.h"
#include "hopfbundle/hopf.hpp"

using namespace hopfbundle;

namespace {

FiberPoint pt(long num, long den = 1) {
    return FiberPoint::finite(CycloNum(rational(num, den)));
}

}  // namespace

TEST_CASE("fiber classification at hand-checked base points") {
    ManifoldSpec spec(4, 12);
    // sigma0 vanishes at 0 and at every fourth root of unity.
    CHECK(classify_fiber(spec, pt(0)) == HopfClass::X0);
    CHECK(classify_fiber(spec, pt(1)) == HopfClass::X0);
    CHECK(classify_fiber(spec, pt(-1)) == HopfClass::X0);
    CHECK(classify_fiber(spec, FiberPoint::finite(CycloNum::root_of_unity(4, 1))) ==
          HopfClass::X0);
    // sigma0(2) = 2^8 - 2^4 != 0, and sigma1(0) = 1 covers infinity.
    CHECK(classify_fiber(spec, pt(2)) == HopfClass::X1);
    CHECK(classify_fiber(spec, pt(1, 2)) == HopfClass::X1);
    CHECK(classify_fiber(spec, FiberPoint::infinity()) == HopfClass::X1);
    // An eighth root of unity is not a fourth root: generic fiber.
    CHECK(classify_fiber(spec, FiberPoint::finite(CycloNum::root_of_unity(8, 1))) ==
          HopfClass::X1);
    CHECK(to_string(HopfClass::X0) == "X0");
    CHECK(to_string(HopfClass::X1) == "X1");
}

TEST_CASE("special locus has a + 1 points for every family member") {
    for (long a = 4; a <= 8; ++a) {
        ManifoldSpec spec(a, 3 * a);
        std::vector<FiberPoint> locus = special_fibers(spec);
        REQUIRE(locus.size() == static_cast<std::size_t>(a) + 1);
        CHECK(locus.front() == pt(0));
        // The rest are exactly the a-th roots of unity, no repeats.
        for (long k = 0; k < a; ++k) {
            FiberPoint root = FiberPoint::finite(CycloNum::root_of_unity(a, k));
            CHECK(std::count(locus.begin(), locus.end(), root) == 1);
        }
        // Everything on the list classifies as X0, nearby points do not.
        for (const FiberPoint& p : locus) CHECK(classify_fiber(spec, p) == HopfClass::X0);
        CHECK(classify_fiber(spec, pt(2)) == HopfClass::X1);
        CHECK(classify_fiber(spec, FiberPoint::infinity()) == HopfClass::X1);
    }
}

TEST_CASE("classification depends only on a, not on the twist b") {
    FiberPoint probe = FiberPoint::finite(CycloNum::root_of_unity(5, 2));
    CHECK(classify_fiber(ManifoldSpec(5, 15), probe) == HopfClass::X0);
    CHECK(classify_fiber(ManifoldSpec(5, 18), probe) == HopfClass::X0);
    CHECK(classify_fiber(ManifoldSpec(4, 12), probe) == HopfClass::X1);
}
