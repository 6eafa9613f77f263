#include <algorithm>
#include <array>
#include <vector>

#include "doctest.h"
#include "hopfbundle/errors.hpp"
#include "hopfbundle/moebius.hpp"
#include "hopfbundle/sampling.hpp"

using namespace hopfbundle;

namespace {

ProjPoint pt(long num, long den = 1) { return ProjPoint::finite(CycloNum(rational(num, den))); }

std::vector<ProjPoint> zero_and_roots(long n) {
    std::vector<ProjPoint> points{pt(0)};
    for (long k = 0; k < n; ++k)
        points.push_back(ProjPoint::finite(CycloNum::root_of_unity(n, k)));
    return points;
}

// z -> -(z - j)/(2jz + j^2) with j = zeta_3: fixes 1 and cycles 0 -> j^2 ->
// j -> 0, so it permutes {0, 1, j, j^2} without being a rotation about the
// origin.
Moebius footnote_map() {
    CycloNum j = CycloNum::root_of_unity(3, 1);
    CycloNum two = CycloNum::from_rational(CycloCtx::get(3), Rational(2));
    return Moebius(-CycloNum(Rational(1)), j, two * j, j * j);
}

bool contains(const std::vector<Moebius>& elements, const Moebius& m) {
    return std::any_of(elements.begin(), elements.end(),
                       [&](const Moebius& e) { return e == m; });
}

}  // namespace

TEST_CASE("projective points compare up to scale") {
    CHECK(pt(2) == ProjPoint(CycloNum(Rational(4)), CycloNum(Rational(2))));
    CHECK(pt(2) != pt(3));
    CHECK(ProjPoint::infinity() == ProjPoint(CycloNum(Rational(-5)), CycloNum(Rational(0))));
    CHECK(ProjPoint::infinity() != pt(0));
    CHECK_THROWS_AS(ProjPoint(CycloNum(Rational(0)), CycloNum(Rational(0))), InvalidArgument);
    CHECK_THROWS_AS(ProjPoint::infinity().value(), DivisionByZero);
    // Cross-conductor equality: zeta_3 as conductor-3 vs conductor-12 data.
    CHECK(ProjPoint::finite(CycloNum::root_of_unity(3, 1)) ==
          ProjPoint::finite(CycloNum::root_of_unity(12, 4)));
}

TEST_CASE("moebius apply and composition") {
    Moebius m(CycloNum(Rational(1)), CycloNum(Rational(1)), CycloNum(Rational(0)),
              CycloNum(Rational(1)));  // z + 1
    CHECK(m.apply(pt(2)) == pt(3));
    CHECK(m.apply(ProjPoint::infinity()) == ProjPoint::infinity());
    Moebius inv = Moebius::inversion(CycloNum(Rational(1)));  // 1/z
    CHECK(inv.apply(pt(0)) == ProjPoint::infinity());
    CHECK(inv.apply(ProjPoint::infinity()) == pt(0));
    CHECK(inv.apply(pt(2)) == pt(1, 2));
    // (m * inv)(z) = m(1/z).
    CHECK((m * inv).apply(pt(4)) == pt(5, 4));
    CHECK_THROWS_AS(Moebius(CycloNum(Rational(1)), CycloNum(Rational(2)), CycloNum(Rational(2)),
                            CycloNum(Rational(4))),
                    InvalidArgument);
}

TEST_CASE("moebius inverse and projective equality") {
    Rng rng(8088);
    const CycloCtx& ctx = CycloCtx::get(12);
    int built = 0;
    while (built < 40) {
        CycloNum a = random_cyclo(rng, ctx, 2), b = random_cyclo(rng, ctx, 2);
        CycloNum c = random_cyclo(rng, ctx, 2), d = random_cyclo(rng, ctx, 2);
        if ((a * d - b * c).is_zero()) continue;
        ++built;
        Moebius m(a, b, c, d);
        CHECK((m * m.inverse()).is_identity());
        CHECK((m.inverse() * m).is_identity());
        // Scaling the matrix is invisible projectively.
        CycloNum three = CycloNum::from_rational(ctx, Rational(3));
        CHECK(m == Moebius(a * three, b * three, c * three, d * three));
    }
}

TEST_CASE("through_triples hits its interpolation data") {
    std::array<ProjPoint, 3> src = {pt(0), pt(1), ProjPoint::infinity()};
    std::array<ProjPoint, 3> dst = {pt(1), ProjPoint::infinity(), pt(0)};
    Moebius m = through_triples(src, dst);
    for (int i = 0; i < 3; ++i) CHECK(m.apply(src[i]) == dst[i]);

    // Random distinct triples round-trip through the standard frame.
    Rng rng(1234);
    const CycloCtx& ctx = CycloCtx::get(8);
    for (int trial = 0; trial < 25; ++trial) {
        std::array<ProjPoint, 3> s = {ProjPoint::finite(random_cyclo(rng, ctx, 2)),
                                      ProjPoint::finite(random_cyclo(rng, ctx, 2)),
                                      ProjPoint::infinity()};
        std::array<ProjPoint, 3> d = {ProjPoint::finite(random_cyclo(rng, ctx, 2)),
                                      ProjPoint::infinity(),
                                      ProjPoint::finite(random_cyclo(rng, ctx, 2))};
        if (s[0] == s[1] || d[0] == d[2]) continue;
        Moebius m2 = through_triples(s, d);
        for (int i = 0; i < 3; ++i) CHECK(m2.apply(s[i]) == d[i]);
    }
    CHECK_THROWS_AS(through_triples({pt(0), pt(0), pt(1)}, {pt(0), pt(1), pt(2)}),
                    InvalidArgument);
}

TEST_CASE("stabilizer of {0, 1, inf} is the dihedral group of order 6") {
    std::vector<Moebius> stab = stabilizer({pt(0), pt(1), ProjPoint::infinity()});
    CHECK(stab.size() == 6);
    CHECK(stab.front().is_identity());
    // Every permutation of three points is fractional-linear, so the
    // stabilizer is the full symmetric group on {0, 1, inf}.
    SubgroupLabel label = classify_finite_subgroup(stab);
    CHECK(label == SubgroupLabel{SubgroupKind::Dihedral, 6, 3});
    CHECK(label.name() == "dihedral(3)");
}

TEST_CASE("stabilizer of zero plus the a-th roots is the rotation group") {
    for (long a : {4L, 5L, 6L, 7L}) {
        std::vector<Moebius> stab = stabilizer(zero_and_roots(a));
        CHECK(stab.size() == static_cast<std::size_t>(a));
        long rotations = 0;
        std::vector<bool> seen(static_cast<std::size_t>(a), false);
        for (const Moebius& m : stab) {
            auto mu = is_rotation_about_zero(m);
            REQUIRE(mu.has_value());
            ++rotations;
            // Each scalar is a distinct a-th root of unity.
            for (long k = 0; k < a; ++k)
                if (*mu == CycloNum::root_of_unity(a, k)) {
                    CHECK_FALSE(seen[static_cast<std::size_t>(k)]);
                    seen[static_cast<std::size_t>(k)] = true;
                }
        }
        CHECK(rotations == a);
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
        CHECK(classify_finite_subgroup(stab) == SubgroupLabel{SubgroupKind::Cyclic, a, a});
    }
}

TEST_CASE("a = 3 is the rigidity boundary: extra symmetry appears") {
    std::vector<ProjPoint> config = zero_and_roots(3);
    std::vector<Moebius> stab = stabilizer(config);
    CHECK(stab.size() == 12);
    CHECK(classify_finite_subgroup(stab) == SubgroupLabel{SubgroupKind::Tetrahedral, 12, 0});

    Moebius extra = footnote_map();
    CHECK(contains(stab, extra));
    CHECK_FALSE(is_rotation_about_zero(extra).has_value());
    // It moves 0 to j^2, so it cannot be any rotation about the origin.
    CycloNum j = CycloNum::root_of_unity(3, 1);
    CHECK(extra.apply(pt(0)) == ProjPoint::finite(j * j));
    CHECK(extra.apply(pt(1)) == pt(1));
    CHECK(element_order(extra, 12) == 3);
    // And it genuinely permutes the configuration.
    for (const ProjPoint& p : config) {
        ProjPoint image = extra.apply(p);
        CHECK(std::any_of(config.begin(), config.end(),
                          [&](const ProjPoint& c) { return c == image; }));
    }
}

TEST_CASE("is_rotation_about_zero extracts the scalar exactly") {
    CycloNum mu = CycloNum::root_of_unity(5, 2);
    auto got = is_rotation_about_zero(Moebius::scaling(mu));
    REQUIRE(got.has_value());
    CHECK(*got == mu);
    // Projective rescaling of the matrix does not disturb the ratio.
    CycloNum seven = CycloNum::from_rational(CycloCtx::get(5), Rational(7));
    Moebius scaled(mu * seven, CycloNum(Rational(0)), CycloNum(Rational(0)),
                   CycloNum(Rational(7)));
    got = is_rotation_about_zero(scaled);
    REQUIRE(got.has_value());
    CHECK(*got == mu);
    CHECK_FALSE(is_rotation_about_zero(Moebius::inversion(CycloNum(Rational(1)))).has_value());
    CHECK_FALSE(is_rotation_about_zero(Moebius(CycloNum(Rational(1)), CycloNum(Rational(1)),
                                               CycloNum(Rational(0)), CycloNum(Rational(1))))
                    .has_value());
}

TEST_CASE("element_order on rotations and the inversion") {
    for (long n : {1L, 2L, 3L, 4L, 6L, 12L})
        CHECK(element_order(Moebius::scaling(CycloNum::root_of_unity(12, 12 / n)), 20) == n);
    CHECK(element_order(Moebius::inversion(CycloNum(Rational(1))), 5) == 2);
    // z -> z + 1 has infinite order; the cap triggers.
    Moebius shift(CycloNum(Rational(1)), CycloNum(Rational(1)), CycloNum(Rational(0)),
                  CycloNum(Rational(1)));
    CHECK_THROWS_AS(element_order(shift, 50), InvalidArgument);
}

TEST_CASE("classify_finite_subgroup rejects non-groups and labels small groups") {
    CHECK(classify_finite_subgroup({Moebius::identity()}) ==
          SubgroupLabel{SubgroupKind::Cyclic, 1, 1});
    // {id, z+1} is not closed.
    Moebius shift(CycloNum(Rational(1)), CycloNum(Rational(1)), CycloNum(Rational(0)),
                  CycloNum(Rational(1)));
    CHECK_THROWS_AS(classify_finite_subgroup({Moebius::identity(), shift}), InvalidArgument);
    // {id, 1/z} is cyclic of order two.
    CHECK(classify_finite_subgroup({Moebius::identity(),
                                    Moebius::inversion(CycloNum(Rational(1)))}) ==
          SubgroupLabel{SubgroupKind::Cyclic, 2, 2});
    // Klein four-group: z, -z, 1/z, -1/z — dihedral(2) in this taxonomy.
    CycloNum one(Rational(1)), minus(Rational(-1));
    std::vector<Moebius> klein{Moebius::identity(), Moebius::scaling(minus),
                               Moebius::inversion(one), Moebius::inversion(minus)};
    CHECK(classify_finite_subgroup(klein) == SubgroupLabel{SubgroupKind::Dihedral, 4, 2});
}

TEST_CASE("stabilizer needs at least three distinct points") {
    CHECK_THROWS_AS(stabilizer({pt(0), pt(1)}), InvalidArgument);
    CHECK_THROWS_AS(stabilizer({pt(0), pt(1), pt(1)}), InvalidArgument);
}
