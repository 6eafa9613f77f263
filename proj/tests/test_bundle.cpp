#include <vector>

#include "doctest.h"
#include "hopfbundle/bundle.hpp"
#include "hopfbundle/errors.hpp"
#include "hopfbundle/sampling.hpp"

using namespace hopfbundle;

namespace {

CycloNum q(long num, long den = 1) { return CycloNum(rational(num, den)); }

// Chart-0 self-map with scaling base and upper-triangular fiber: the shape
// that always glues when the upper degree stays within b - a.
ChartMap upper_map(const CycloNum& mu, const CycloNum& alpha, const LaurentPoly& upper) {
    return ChartMap(Moebius::scaling(mu), FiberMatrix::upper_triangular(alpha, upper));
}

ChartMap random_gluing_map(Rng& rng, const ManifoldSpec& spec, const CycloCtx& ctx) {
    return upper_map(random_nonzero_cyclo(rng, ctx), random_nonzero_cyclo(rng, ctx),
                     random_laurent(rng, kChart0Var, ctx, 0, spec.b() - spec.a()));
}

bool points_equal(const ChartPoint& lhs, const ChartPoint& rhs) {
    return lhs.base == rhs.base && lhs.z == rhs.z && lhs.w == rhs.w;
}

}  // namespace

TEST_CASE("spec validation: canonical bounds and the relaxed escape hatch") {
    CHECK_NOTHROW(ManifoldSpec(4, 12));
    CHECK_THROWS_AS(ManifoldSpec(3, 12), InvalidArgument);
    CHECK_THROWS_AS(ManifoldSpec(4, 11), InvalidArgument);
    CHECK_THROWS_AS(ManifoldSpec(4, 12, rational(3, 2)), InvalidArgument);
    CHECK_THROWS_AS(ManifoldSpec(4, 12, rational(0)), InvalidArgument);
    CHECK_NOTHROW(ManifoldSpec::relaxed(4, 11, 8));
    ManifoldSpec spec(4, 12);
    CHECK(spec.c() == 8);
    CHECK(spec.lambda() == rational(1, 2));
}

TEST_CASE("section coefficients in both charts") {
    ManifoldSpec spec(4, 12);
    LaurentPoly t8 = LaurentPoly::monomial("t", 8, q(1));
    LaurentPoly t4 = LaurentPoly::monomial("t", 4, q(1));
    CHECK(spec.sigma0() == t8 - t4);
    LaurentPoly s4 = LaurentPoly::monomial("s", 4, q(1));
    CHECK(spec.sigma1() == LaurentPoly::one("s") - s4);
    // sigma1 vanishes at the roots of unity seen from the far chart, not at 0.
    CHECK(spec.sigma1().evaluate(q(0)) == q(1));
    CHECK(spec.sigma1().evaluate(CycloNum::root_of_unity(4, 3)).is_zero());
}

TEST_CASE("monomial_base reads scaling and inversion shapes only") {
    CycloNum mu = CycloNum::root_of_unity(8, 3);
    MonomialBase diag = monomial_base(Moebius::scaling(mu));
    CHECK(diag.mu == mu);
    CHECK(diag.sign == 1);
    MonomialBase anti = monomial_base(Moebius::inversion(mu));
    CHECK(anti.mu == mu);
    CHECK(anti.sign == -1);
    // Recovered matrices agree projectively with the input.
    CHECK(as_moebius(diag) == Moebius::scaling(mu));
    CHECK(as_moebius(anti) == Moebius::inversion(mu));
    // Reading through x -> 1/x inverts the scalar and keeps the shape.
    MonomialBase far = base_in_other_chart(diag);
    CHECK(far.mu == mu.inv());
    CHECK(far.sign == 1);
    Moebius shift(q(1), q(1), q(0), q(1));
    CHECK_THROWS_AS(monomial_base(shift), InvalidArgument);
}

TEST_CASE("fiber matrix arithmetic matches 2x2 algebra") {
    Rng rng(99);
    const CycloCtx& ctx = CycloCtx::get(4);
    for (int trial = 0; trial < 30; ++trial) {
        FiberMatrix m(random_laurent(rng, "t", ctx, -2, 2), random_laurent(rng, "t", ctx, -2, 2),
                      random_laurent(rng, "t", ctx, -2, 2), random_laurent(rng, "t", ctx, -2, 2));
        FiberMatrix n(random_laurent(rng, "t", ctx, -2, 2), random_laurent(rng, "t", ctx, -2, 2),
                      random_laurent(rng, "t", ctx, -2, 2), random_laurent(rng, "t", ctx, -2, 2));
        FiberMatrix prod = m * n;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(prod.entry(i, j) == m.entry(i, 0) * n.entry(0, j) +
                                              m.entry(i, 1) * n.entry(1, j));
        CHECK(prod.det() == m.det() * n.det());
        // Pointwise action agrees with evaluating entries.
        CycloNum at = random_nonzero_cyclo(rng, ctx);
        CycloNum z = random_cyclo(rng, ctx), w = random_cyclo(rng, ctx);
        auto [mz, mw] = m.apply(at, z, w);
        // evaluate() of a zero entry lands in Q, so align before recombining.
        auto row = [&](int i) {
            CycloNum p = m.entry(i, 0).evaluate(at), q = m.entry(i, 1).evaluate(at);
            CycloNum zz = z, ww = w;
            align_all({&p, &q, &zz, &ww});
            return p * zz + q * ww;
        };
        CHECK(mz == row(0));
        CHECK(mw == row(1));
    }
    CHECK(FiberMatrix::identity("t").is_upper_triangular());
    CHECK_THROWS_AS(FiberMatrix(LaurentPoly::one("t"), LaurentPoly::zero("t"),
                                LaurentPoly::zero("s"), LaurentPoly::one("t")),
                    InvalidArgument);
}

TEST_CASE("chart transition: weights, involution, fixed fiber at t = 1") {
    ManifoldSpec spec(4, 12);
    Transition tr = transition(spec);
    CHECK(tr.z_exp == 12);
    CHECK(tr.w_exp == 4);
    ChartPoint p{q(2), q(3), q(5)};
    ChartPoint far = apply_transition(spec, p);
    CHECK(far.base == q(1, 2));
    CHECK(far.z == q(3) * q(1, 2).pow(12));
    CHECK(far.w == q(5) * q(1, 2).pow(4));
    CHECK(points_equal(apply_transition(spec, far), p));
    // The fiber is untouched over the self-dual point t = 1.
    ChartPoint fixed{q(1), q(7), q(11)};
    CHECK(points_equal(apply_transition(spec, fixed), fixed));
    CHECK_THROWS_AS(apply_transition(spec, ChartPoint{q(0), q(1), q(1)}), DivisionByZero);
}

TEST_CASE("contraction conjugates to the frozen far-chart form") {
    ManifoldSpec spec(4, 12);
    BundleMap g = contraction(spec);
    CHECK(g.verified());
    CHECK(g.chart0().fiber() ==
          FiberMatrix::upper_triangular(spec.lambda_value(), spec.sigma0()));
    CHECK(g.chart0().base().is_identity());
    // Far chart: base still identity, diagonal still lambda, upper 1 - s^4.
    CHECK(g.chart1().base().is_identity());
    CHECK(g.chart1().var() == "s");
    LaurentPoly expected = LaurentPoly::one("s") - LaurentPoly::monomial("s", 4, q(1));
    CHECK(g.chart1().fiber() == FiberMatrix::upper_triangular(spec.lambda_value(), expected));
    // Same computation at (4, 13): the upper entry shifts to s - s^5.
    ManifoldSpec wide(4, 13);
    BundleMap g13 = contraction(wide);
    CHECK(g13.chart1().fiber().entry(0, 1) ==
          LaurentPoly::monomial("s", 1, q(1)) - LaurentPoly::monomial("s", 5, q(1)));
}

TEST_CASE("conjugation to the far chart is an involution") {
    ManifoldSpec spec(4, 12);
    Rng rng(2024);
    const CycloCtx& ctx = CycloCtx::get(4);
    for (int trial = 0; trial < 30; ++trial) {
        // Base alternates between scaling and inversion shapes.
        CycloNum mu = random_nonzero_cyclo(rng, ctx);
        Moebius base = (trial % 2 == 0) ? Moebius::scaling(mu) : Moebius::inversion(mu);
        ChartMap f(base, FiberMatrix::upper_triangular(
                             random_nonzero_cyclo(rng, ctx),
                             random_laurent(rng, kChart0Var, ctx, -2, 5)));
        ChartMap far = conjugate_to_s_chart(f, spec);
        CHECK(far.var() == "s");
        ChartMap back = conjugate_to_s_chart(far, spec);
        CHECK(back == f);
    }
}

TEST_CASE("boundary exponent: b = 3a - 1 obstructs the contraction") {
    ManifoldSpec bad = ManifoldSpec::relaxed(4, 11, 8);
    GlueCheck check = glues(contraction_chart0(bad), bad);
    CHECK_FALSE(check.ok);
    REQUIRE(check.obstruction.size() == 1);
    const ObstructionTerm& term = check.obstruction.front();
    CHECK(term.row == 0);
    CHECK(term.col == 1);
    CHECK(term.exponent == -1);
    CHECK(term.coeff == q(1));
    CHECK_THROWS_AS(contraction(bad), GluingFailure);
    // One more twist degree and the family member exists.
    CHECK(glues(contraction_chart0(ManifoldSpec(4, 12)), ManifoldSpec(4, 12)).ok);
}

TEST_CASE("glues rejects negative exponents in the given chart too") {
    ManifoldSpec spec(4, 12);
    // Own entry t^{-1} conjugates to the harmless s^{b-a+1}, so only the
    // near-chart check can catch it.
    ChartMap f(Moebius::identity(),
               FiberMatrix::upper_triangular(q(1), LaurentPoly::monomial("t", -1, q(1))));
    GlueCheck check = glues(f, spec);
    CHECK_FALSE(check.ok);
    CHECK_FALSE(check.obstruction.empty());
}

TEST_CASE("upper degree b - a is the exact gluing threshold") {
    ManifoldSpec spec(4, 12);
    LaurentPoly at_limit = LaurentPoly::monomial("t", 8, q(1));
    CHECK(glues(upper_map(q(1), q(1), at_limit), spec).ok);
    LaurentPoly over = LaurentPoly::monomial("t", 9, q(1));
    GlueCheck check = glues(upper_map(q(1), q(1), over), spec);
    CHECK_FALSE(check.ok);
    REQUIRE(check.obstruction.size() == 1);
    CHECK(check.obstruction.front().exponent == -1);
}

TEST_CASE("composition is chartwise and associative") {
    ManifoldSpec spec(4, 12);
    Rng rng(31415);
    const CycloCtx& ctx = CycloCtx::get(4);
    for (int trial = 0; trial < 50; ++trial) {
        BundleMap f = make_bundle_map(random_gluing_map(rng, spec, ctx), spec);
        BundleMap g = make_bundle_map(random_gluing_map(rng, spec, ctx), spec);
        BundleMap h = make_bundle_map(random_gluing_map(rng, spec, ctx), spec);
        REQUIRE(f.verified());
        REQUIRE(g.verified());
        REQUIRE(h.verified());
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("composition matches pointwise application") {
    ManifoldSpec spec(4, 12);
    Rng rng(2222);
    const CycloCtx& ctx = CycloCtx::get(4);
    for (int trial = 0; trial < 25; ++trial) {
        ChartMap f = random_gluing_map(rng, spec, ctx);
        ChartMap g = random_gluing_map(rng, spec, ctx);
        ChartMap fg = compose(f, g);
        ChartPoint p{random_nonzero_cyclo(rng, ctx), random_cyclo(rng, ctx),
                     random_cyclo(rng, ctx)};
        CHECK(points_equal(apply(fg, p), apply(f, apply(g, p))));
    }
}

TEST_CASE("both charts of a glued map agree on the overlap") {
    ManifoldSpec spec(4, 12);
    BundleMap g = contraction(spec);
    std::vector<ChartPoint> samples = {{q(1), q(1), q(1)},
                                       {q(1, 2), q(2, 3), q(-1)},
                                       {q(2), q(1, 3), q(5)},
                                       {CycloNum::root_of_unity(4, 1), q(1), q(0)}};
    for (const ChartPoint& p : samples) CHECK(charts_agree_at(g, p));

    Rng rng(8080);
    const CycloCtx& ctx = CycloCtx::get(4);
    for (int trial = 0; trial < 20; ++trial) {
        BundleMap f = make_bundle_map(random_gluing_map(rng, spec, ctx), spec);
        for (const ChartPoint& p : samples) CHECK(charts_agree_at(f, p));
    }
}

TEST_CASE("commutes_with_contraction singles out the centralizer") {
    ManifoldSpec spec(4, 12);
    // The contraction commutes with itself.
    CHECK(commutes_with_contraction(contraction(spec), spec));
    // A plain fiber scaling commutes: diagonal matrices do.
    BundleMap scaling = make_bundle_map(upper_map(q(1), q(3), LaurentPoly::zero("t")), spec);
    CHECK(commutes_with_contraction(scaling, spec));
    // Base rotation by a primitive a-th root commutes (sigma0 is invariant).
    BundleMap rot = make_bundle_map(
        upper_map(CycloNum::root_of_unity(4, 1), q(1), LaurentPoly::zero("t")), spec);
    CHECK(commutes_with_contraction(rot, spec));
    // Base scaling by 2 does not: sigma0(2t) != sigma0(t).
    BundleMap stretch = make_bundle_map(upper_map(q(2), q(1), LaurentPoly::zero("t")), spec);
    CHECK_FALSE(commutes_with_contraction(stretch, spec));
}
