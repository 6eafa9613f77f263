#include "hopfbundle/bundle.hpp"

#include <sstream>
#include <utility>

#include "hopfbundle/errors.hpp"

namespace hopfbundle {

namespace {

void require_canonical_bounds(long a, long b, const Rational& lambda) {
    if (a <= 3) throw InvalidArgument("canonical spec needs a > 3, got a = " + std::to_string(a));
    if (b < 3 * a)
        throw InvalidArgument("canonical spec needs b >= 3a, got b = " + std::to_string(b) +
                              " with a = " + std::to_string(a));
    (void)lambda;
}

void require_lambda_range(const Rational& lambda) {
    if (lambda <= 0 || lambda >= 1)
        throw InvalidArgument("lambda must lie strictly between 0 and 1, got " +
                              to_string(lambda));
}

std::string other_chart_var(const std::string& var) {
    if (var == kChart0Var) return kChart1Var;
    if (var == kChart1Var) return kChart0Var;
    throw InvalidArgument("chart variable must be 't' or 's', got '" + var + "'");
}

}  // namespace

ManifoldSpec::ManifoldSpec(long a, long b, Rational lambda)
    : ManifoldSpec(a, b, 2 * a, std::move(lambda), true) {}

ManifoldSpec ManifoldSpec::relaxed(long a, long b, long c, Rational lambda) {
    return ManifoldSpec(a, b, c, std::move(lambda), false);
}

ManifoldSpec::ManifoldSpec(long a, long b, long c, Rational lambda, bool canonical)
    : a_(a), b_(b), c_(c), lambda_(std::move(lambda)) {
    if (a_ < 1 || b_ < 1 || c_ < 1)
        throw InvalidArgument("spec exponents must be positive integers");
    require_lambda_range(lambda_);
    if (canonical) require_canonical_bounds(a_, b_, lambda_);
}

LaurentPoly ManifoldSpec::sigma0() const { return sigma_zero(kChart0Var, a_); }

LaurentPoly ManifoldSpec::sigma1() const {
    return sigma0().substitute_inverse(kChart1Var).shifted(c_);
}

MonomialBase monomial_base(const Moebius& m) {
    if (m.b().is_zero() && m.c().is_zero()) return {m.a() * m.d().inv(), 1};
    if (m.a().is_zero() && m.d().is_zero()) return {m.b() * m.c().inv(), -1};
    throw InvalidArgument("base map must fix {0, inf} setwise: " + to_string(m));
}

Moebius as_moebius(const MonomialBase& base) {
    return base.sign == 1 ? Moebius::scaling(base.mu) : Moebius::inversion(base.mu);
}

MonomialBase base_in_other_chart(const MonomialBase& base) {
    return {base.mu.inv(), base.sign};
}

FiberMatrix::FiberMatrix(LaurentPoly e00, LaurentPoly e01, LaurentPoly e10, LaurentPoly e11)
    : entries_{std::move(e00), std::move(e01), std::move(e10), std::move(e11)} {
    for (int i = 1; i < 4; ++i)
        if (entries_[static_cast<std::size_t>(i)].var() != entries_[0].var())
            throw InvalidArgument("fiber matrix entries must share one variable");
}

FiberMatrix FiberMatrix::identity(const std::string& var) {
    return scalar(var, CycloNum(Rational(1)));
}

FiberMatrix FiberMatrix::scalar(const std::string& var, const CycloNum& value) {
    return FiberMatrix(LaurentPoly::constant(var, value), LaurentPoly::zero(var),
                       LaurentPoly::zero(var), LaurentPoly::constant(var, value));
}

FiberMatrix FiberMatrix::upper_triangular(const CycloNum& alpha, const LaurentPoly& upper) {
    const std::string& var = upper.var();
    return FiberMatrix(LaurentPoly::constant(var, alpha), upper, LaurentPoly::zero(var),
                       LaurentPoly::constant(var, alpha));
}

const LaurentPoly& FiberMatrix::entry(int row, int col) const {
    if (row < 0 || row > 1 || col < 0 || col > 1)
        throw InvalidArgument("fiber matrix index out of range");
    return entries_[static_cast<std::size_t>(2 * row + col)];
}

LaurentPoly FiberMatrix::det() const {
    return entries_[0] * entries_[3] - entries_[1] * entries_[2];
}

FiberMatrix operator*(const FiberMatrix& lhs, const FiberMatrix& rhs) {
    auto cell = [&](int i, int j) {
        return lhs.entry(i, 0) * rhs.entry(0, j) + lhs.entry(i, 1) * rhs.entry(1, j);
    };
    return FiberMatrix(cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1));
}

bool operator==(const FiberMatrix& lhs, const FiberMatrix& rhs) {
    for (std::size_t i = 0; i < 4; ++i)
        if (lhs.entries_[i] != rhs.entries_[i]) return false;
    return true;
}

FiberMatrix FiberMatrix::precomposed_base(const MonomialBase& base) const {
    auto moved = [&](const LaurentPoly& p) { return p.precompose_monomial(base.mu, base.sign); };
    return FiberMatrix(moved(entries_[0]), moved(entries_[1]), moved(entries_[2]),
                       moved(entries_[3]));
}

std::array<CycloNum, 2> FiberMatrix::apply(const CycloNum& at, const CycloNum& z,
                                           const CycloNum& w) const {
    CycloNum a = entry(0, 0).evaluate(at), b = entry(0, 1).evaluate(at);
    CycloNum c = entry(1, 0).evaluate(at), d = entry(1, 1).evaluate(at);
    CycloNum zc = z, wc = w;
    align_all({&a, &b, &c, &d, &zc, &wc});
    return {a * zc + b * wc, c * zc + d * wc};
}

std::string to_string(const FiberMatrix& m) {
    std::ostringstream out;
    out << "[[" << to_string(m.entry(0, 0)) << ", " << to_string(m.entry(0, 1)) << "], ["
        << to_string(m.entry(1, 0)) << ", " << to_string(m.entry(1, 1)) << "]]";
    return out.str();
}

ChartMap::ChartMap(Moebius base, FiberMatrix fiber)
    : base_(std::move(base)), fiber_(std::move(fiber)) {
    if (fiber_.det().is_zero())
        throw InvalidArgument("chart map needs an invertible fiber matrix");
}

ChartMap ChartMap::identity(const std::string& var) {
    return ChartMap(Moebius::identity(), FiberMatrix::identity(var));
}

std::string to_string(const ChartMap& f) {
    std::ostringstream out;
    out << "base " << to_string(f.base()) << ", fiber " << to_string(f.fiber());
    return out.str();
}

ChartMap compose(const ChartMap& outer, const ChartMap& inner) {
    if (outer.var() != inner.var())
        throw InvalidArgument("compose: chart maps live in different charts");
    MonomialBase inner_base = monomial_base(inner.base());
    FiberMatrix outer_moved = outer.fiber().precomposed_base(inner_base);
    return ChartMap(outer.base() * inner.base(), outer_moved * inner.fiber());
}

ChartPoint apply(const ChartMap& f, const ChartPoint& p) {
    MonomialBase base = monomial_base(f.base());
    auto [mu, at] = aligned(base.mu, p.base);
    CycloNum moved = base.sign == 1 ? mu * at : mu * at.inv();
    auto [z, w] = f.fiber().apply(p.base, p.z, p.w);
    return {moved, z, w};
}

Transition transition(const ManifoldSpec& spec) { return {spec.b(), spec.a()}; }

ChartPoint apply_transition(const ManifoldSpec& spec, const ChartPoint& p) {
    CycloNum other = p.base.inv(), z = p.z, w = p.w;
    align_all({&other, &z, &w});
    return {other, other.pow(spec.b()) * z, other.pow(spec.a()) * w};
}

LaurentPoly conjugate_fiber_entry(const LaurentPoly& entry, const MonomialBase& base, long d_row,
                                  long d_col, const std::string& target_var) {
    LaurentPoly out = entry.substitute_inverse(target_var);
    out = out.shifted(base.sign * d_row - d_col);
    return out.scaled(base.mu.inv().pow(d_row));
}

ChartMap conjugate_to_s_chart(const ChartMap& f, const ManifoldSpec& spec) {
    const std::string target = other_chart_var(f.var());
    MonomialBase base = monomial_base(f.base());
    const long d[2] = {spec.b(), spec.a()};

    std::array<LaurentPoly, 4> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[static_cast<std::size_t>(2 * i + j)] =
                conjugate_fiber_entry(f.fiber().entry(i, j), base, d[i], d[j], target);
    return ChartMap(as_moebius(base_in_other_chart(base)),
                    FiberMatrix(std::move(out[0]), std::move(out[1]), std::move(out[2]),
                                std::move(out[3])));
}

namespace {

void collect_obstructions(const FiberMatrix& fiber, std::vector<ObstructionTerm>& sink) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            PolynomialCheck check = is_polynomial(fiber.entry(i, j));
            for (const auto& [exponent, coeff] : check.negative_terms)
                sink.push_back({i, j, exponent, coeff});
        }
}

}  // namespace

GlueCheck glues(const ChartMap& f, const ManifoldSpec& spec) {
    GlueCheck result{false, {}, conjugate_to_s_chart(f, spec)};
    collect_obstructions(f.fiber(), result.obstruction);
    collect_obstructions(result.induced.fiber(), result.obstruction);
    result.ok = result.obstruction.empty();
    return result;
}

BundleMap::BundleMap(ManifoldSpec spec, ChartMap chart0, ChartMap chart1, bool verified,
                     std::vector<ObstructionTerm> obstruction)
    : spec_(std::move(spec)),
      chart0_(std::move(chart0)),
      chart1_(std::move(chart1)),
      verified_(verified),
      obstruction_(std::move(obstruction)) {}

BundleMap make_bundle_map(const ChartMap& chart0, const ManifoldSpec& spec) {
    if (chart0.var() != kChart0Var)
        throw InvalidArgument("bundle maps are built from the t-chart expression");
    GlueCheck check = glues(chart0, spec);
    return BundleMap(spec, chart0, check.induced, check.ok, std::move(check.obstruction));
}

namespace {

std::string describe_obstruction(const std::vector<ObstructionTerm>& terms) {
    std::ostringstream out;
    out << "forbidden terms:";
    for (const ObstructionTerm& term : terms)
        out << " (entry " << term.row << "," << term.col << ": exponent " << term.exponent
            << ", coeff " << to_string(term.coeff) << ")";
    return out.str();
}

}  // namespace

ChartMap contraction_chart0(const ManifoldSpec& spec) {
    return ChartMap(Moebius::identity(),
                    FiberMatrix::upper_triangular(spec.lambda_value(), spec.sigma0()));
}

BundleMap contraction(const ManifoldSpec& spec) {
    BundleMap g = make_bundle_map(contraction_chart0(spec), spec);
    if (!g.verified())
        throw GluingFailure("contraction does not glue for a=" + std::to_string(spec.a()) +
                            " b=" + std::to_string(spec.b()) + " c=" + std::to_string(spec.c()) +
                            "; " + describe_obstruction(g.obstruction()));
    return g;
}

BundleMap compose(const BundleMap& outer, const BundleMap& inner) {
    if (outer.spec() != inner.spec())
        throw InvalidArgument("compose: bundle maps belong to different specs");
    if (!outer.verified() || !inner.verified())
        throw InvalidArgument("compose: both bundle maps must be verified");
    ChartMap c0 = compose(outer.chart0(), inner.chart0());
    ChartMap c1 = compose(outer.chart1(), inner.chart1());
    BundleMap result = make_bundle_map(c0, outer.spec());
    if (result.chart1() != c1)
        throw InvalidArgument("compose: chartwise products disagree with the conjugate");
    return result;
}

bool commutes_with_contraction(const BundleMap& f, const ManifoldSpec& spec) {
    BundleMap g = contraction(spec);
    return compose(g, f) == compose(f, g);
}

bool charts_agree_at(const BundleMap& f, const ChartPoint& p) {
    ChartPoint through_chart0 = apply(f.chart0(), p);
    if (through_chart0.base.is_zero()) return true;  // lands outside the overlap
    ChartPoint left = apply_transition(f.spec(), through_chart0);
    ChartPoint right = apply(f.chart1(), apply_transition(f.spec(), p));
    auto [lz, rz] = aligned(left.z, right.z);
    auto [lw, rw] = aligned(left.w, right.w);
    return left.base == right.base && lz == rz && lw == rw;
}

}  // namespace hopfbundle
