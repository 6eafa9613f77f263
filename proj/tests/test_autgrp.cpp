#include <optional>

#include "doctest.h"
#include "hopfbundle/autgrp.hpp"
#include "hopfbundle/errors.hpp"
#include "hopfbundle/sampling.hpp"

using namespace hopfbundle;

namespace {

CycloNum q(long num, long den = 1) { return CycloNum(rational(num, den)); }

LaurentPoly tpoly(long e, long num = 1, long den = 1) {
    return LaurentPoly::monomial(kChart0Var, e, q(num, den));
}

}  // namespace

TEST_CASE("make_automorphism enforces the parameter invariants") {
    ManifoldSpec spec(4, 12);
    CHECK_NOTHROW(make_automorphism(1, q(1), tpoly(8), spec));
    // k reduces mod a.
    CHECK(make_automorphism(7, q(1), LaurentPoly::zero("t"), spec).k == 3);
    CHECK(make_automorphism(-1, q(1), LaurentPoly::zero("t"), spec).k == 3);
    CHECK_THROWS_AS(make_automorphism(0, q(0), LaurentPoly::zero("t"), spec), InvalidArgument);
    CHECK_THROWS_AS(make_automorphism(0, q(1), tpoly(9), spec), InvalidArgument);
    CHECK_THROWS_AS(make_automorphism(0, q(1), tpoly(-1), spec), InvalidArgument);
}

TEST_CASE("is_automorphism accepts the valid shapes and rejects the rest") {
    ManifoldSpec spec(4, 12);
    CHECK(is_automorphism(aut_identity(spec), spec));
    CHECK(is_automorphism(contraction_element(spec), spec));
    CHECK(is_automorphism(AutElement{2, CycloNum::root_of_unity(4, 1), tpoly(3, 5)}, spec));
    // Degree b - a + 1 picks up a pole in the far chart.
    CHECK_FALSE(is_automorphism(AutElement{0, q(1), tpoly(9)}, spec));
    // Negative exponents fail in the near chart already.
    CHECK_FALSE(is_automorphism(AutElement{0, q(1), tpoly(-1)}, spec));
    // Scalar zero is not invertible on the fibers.
    CHECK_FALSE(is_automorphism(AutElement{0, q(0), LaurentPoly::zero("t")}, spec));
    // The glued realization agrees with the contraction freeze.
    BundleMap g = to_bundle_map(contraction_element(spec), spec);
    CHECK(g.verified());
    CHECK(g == contraction(spec));
}

TEST_CASE("multiply: worked example at (4, 12)") {
    ManifoldSpec spec(4, 12);
    AutElement e = make_automorphism(1, q(1), tpoly(1), spec);
    AutElement f = make_automorphism(1, q(1), LaurentPoly::zero("t"), spec);
    // e after f: rotation indices add; e's polynomial is read at f's moved
    // base point, so t picks up the factor zeta_4.
    AutElement prod = multiply(e, f, spec);
    CHECK(prod.k == 2);
    CHECK(prod.alpha == q(1));
    CHECK(prod.p == LaurentPoly::monomial("t", 1, CycloNum::root_of_unity(4, 1)));
    // Reversed order leaves the polynomial untouched (f has no polynomial part).
    AutElement swapped = multiply(f, e, spec);
    CHECK(swapped.k == 2);
    CHECK(swapped.p == tpoly(1));
}

TEST_CASE("multiply agrees with glued chartwise composition") {
    ManifoldSpec spec(4, 12);
    Rng rng(1001);
    for (int trial = 0; trial < 100; ++trial) {
        AutElement e = random_automorphism(rng, spec);
        AutElement f = random_automorphism(rng, spec);
        AutElement prod = multiply(e, f, spec);
        CHECK(is_automorphism(prod, spec));
        CHECK(to_bundle_map(prod, spec) ==
              compose(to_bundle_map(e, spec), to_bundle_map(f, spec)));
    }
}

TEST_CASE("group axioms hold on random triples") {
    ManifoldSpec spec(4, 12);
    AutElement id = aut_identity(spec);
    Rng rng(1002);
    for (int trial = 0; trial < 100; ++trial) {
        AutElement e = random_automorphism(rng, spec);
        AutElement f = random_automorphism(rng, spec);
        AutElement h = random_automorphism(rng, spec);
        CHECK(multiply(multiply(e, f, spec), h, spec) ==
              multiply(e, multiply(f, h, spec), spec));
        CHECK(multiply(e, id, spec) == e);
        CHECK(multiply(id, e, spec) == e);
        AutElement inv = inverse(e, spec);
        CHECK(multiply(e, inv, spec) == id);
        CHECK(multiply(inv, e, spec) == id);
    }
}

TEST_CASE("the contraction is central") {
    ManifoldSpec spec(4, 12);
    AutElement g = contraction_element(spec);
    Rng rng(1003);
    for (int trial = 0; trial < 100; ++trial) {
        AutElement e = random_automorphism(rng, spec);
        CHECK(multiply(g, e, spec) == multiply(e, g, spec));
    }
}

TEST_CASE("contraction powers in closed form") {
    ManifoldSpec spec(4, 12);
    AutElement g = contraction_element(spec);
    for (long n = -3; n <= 5; ++n) CHECK(contraction_power(n, spec) == power(g, n, spec));
    // Spot-check the closed form at n = 2 by hand: (0, lambda^2, 2 lambda sigma0).
    AutElement g2 = contraction_power(2, spec);
    CHECK(g2.k == 0);
    CHECK(g2.alpha == q(1, 4));
    CHECK(g2.p == spec.sigma0());
    CHECK(inverse(g, spec) == contraction_power(-1, spec));
}

TEST_CASE("mod_g_equal recovers the witness exponent") {
    ManifoldSpec spec(4, 12);
    AutElement g = contraction_element(spec);
    Rng rng(1004);
    for (int trial = 0; trial < 40; ++trial) {
        AutElement e = random_automorphism(rng, spec);
        CHECK(mod_g_equal(e, e, spec) == std::optional<long>(0));
        CHECK(mod_g_equal(e, multiply(g, e, spec), spec) == std::optional<long>(1));
        CHECK(mod_g_equal(multiply(g, e, spec), e, spec) == std::optional<long>(-1));
        CHECK(mod_g_equal(e, multiply(contraction_power(5, spec), e, spec), spec) ==
              std::optional<long>(5));
    }
    // Different rotation index: never equivalent.
    AutElement id = aut_identity(spec);
    AutElement rot = make_automorphism(1, q(1), LaurentPoly::zero("t"), spec);
    CHECK_FALSE(mod_g_equal(id, rot, spec).has_value());
    // Same index but the scalar ratio 3 is no power of 1/2.
    AutElement three = make_automorphism(0, q(3), LaurentPoly::zero("t"), spec);
    CHECK_FALSE(mod_g_equal(id, three, spec).has_value());
    // Scalar matches g^1, polynomial does not.
    AutElement off = make_automorphism(0, q(1, 2), LaurentPoly::zero("t"), spec);
    CHECK_FALSE(mod_g_equal(id, off, spec).has_value());
}

TEST_CASE("component group is cyclic of order a") {
    for (long a : {4L, 5L, 6L}) {
        ManifoldSpec spec(a, 3 * a);
        ComponentGroup cg = component_group(spec);
        CHECK(cg.order == a);
        CHECK(cg.cyclic);
        CHECK(component_of(cg.generator.representative) == 1);
        // The generator's class has exact order a.
        AutElement acc = aut_identity(spec);
        for (long n = 1; n < a; ++n) {
            acc = multiply(cg.generator.representative, acc, spec);
            CHECK_FALSE(same_class(AutClass{acc, spec}, AutClass{aut_identity(spec), spec}));
        }
        acc = multiply(cg.generator.representative, acc, spec);
        CHECK(same_class(AutClass{acc, spec}, AutClass{aut_identity(spec), spec}));
    }
}

TEST_CASE("component_of is a homomorphism onto Z/a") {
    ManifoldSpec spec(5, 15);
    Rng rng(1005);
    for (int trial = 0; trial < 100; ++trial) {
        AutElement e = random_automorphism(rng, spec);
        AutElement f = random_automorphism(rng, spec);
        CHECK(component_of(multiply(e, f, spec)) ==
              (component_of(e) + component_of(f)) % spec.a());
    }
    // Multiplying by g never moves the class.
    AutElement g = contraction_element(spec);
    AutElement e = random_automorphism(rng, spec);
    CHECK(component_of(multiply(g, e, spec)) == component_of(e));
    CHECK(same_class(AutClass{e, spec}, AutClass{multiply(g, e, spec), spec}));
}

TEST_CASE("ansatz dimension is b - a + 2 for every rotation index") {
    for (auto [a, b] : {std::pair<long, long>{4, 12}, {4, 13}, {5, 15}}) {
        ManifoldSpec spec(a, b);
        for (long k = 0; k < a; ++k) {
            for (long degree : {b - a, b - a + 3}) {
                AnsatzSolution sol = solve_ansatz(spec, k, degree);
                CHECK(sol.dimension == b - a + 2);
                CHECK(sol.basis.size() == static_cast<std::size_t>(sol.dimension));
                CHECK(sol.alpha_all_constant);
                CHECK(sol.unknowns == 2 * (degree + 1));
                CHECK(sol.constraints > 0);
                // Members with invertible alpha are honest automorphisms.
                for (const auto& member : sol.basis) {
                    if (member.alpha.is_zero()) continue;
                    AutElement e =
                        make_automorphism(k, member.alpha.coeff(0), member.tau, spec);
                    CHECK(is_automorphism(e, spec));
                }
            }
        }
    }
}

TEST_CASE("ansatz rejects truncating degree bounds") {
    ManifoldSpec spec(4, 12);
    CHECK_THROWS_AS(solve_ansatz(spec, 0, 7), InvalidArgument);
}
