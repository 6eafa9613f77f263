#include "hopfbundle/family.hpp"

#include <sstream>
#include <utility>

#include "hopfbundle/errors.hpp"

namespace hopfbundle {

namespace {

std::string other_chart_var(const std::string& var) {
    if (var == kChart0Var) return kChart1Var;
    if (var == kChart1Var) return kChart0Var;
    throw InvalidArgument("chart variable must be 't' or 's', got '" + var + "'");
}

}  // namespace

FamilyMap::FamilyMap(Moebius base, std::array<EpsPoly, 4> fiber)
    : base_(std::move(base)), fiber_(std::move(fiber)) {
    for (int i = 1; i < 4; ++i)
        if (fiber_[static_cast<std::size_t>(i)].var() != fiber_[0].var())
            throw InvalidArgument("family fiber entries must share one variable");
    EpsPoly det = fiber_[0] * fiber_[3] - fiber_[1] * fiber_[2];
    if (det.is_zero()) throw InvalidArgument("family map needs an invertible fiber matrix");
}

FamilyMap FamilyMap::identity(const std::string& var) {
    return FamilyMap(Moebius::identity(), {EpsPoly::one(var), EpsPoly::zero(var),
                                           EpsPoly::zero(var), EpsPoly::one(var)});
}

const EpsPoly& FamilyMap::entry(int row, int col) const {
    if (row < 0 || row > 1 || col < 0 || col > 1)
        throw InvalidArgument("family fiber index out of range");
    return fiber_[static_cast<std::size_t>(2 * row + col)];
}

std::string to_string(const FamilyMap& f) {
    std::ostringstream out;
    out << "base " << to_string(f.base()) << ", fiber [[" << to_string(f.entry(0, 0)) << ", "
        << to_string(f.entry(0, 1)) << "], [" << to_string(f.entry(1, 0)) << ", "
        << to_string(f.entry(1, 1)) << "]]";
    return out.str();
}

FamilyMap family_contraction(const ManifoldSpec& spec) {
    EpsPoly lambda = EpsPoly::from_laurent(LaurentPoly::constant(kChart0Var, spec.lambda_value()));
    return FamilyMap(Moebius::identity(), {lambda, EpsPoly::from_laurent(spec.sigma0(), 1),
                                           EpsPoly::zero(kChart0Var), lambda});
}

FamilyMap homothety_contraction(const ManifoldSpec& spec) {
    EpsPoly lambda = EpsPoly::from_laurent(LaurentPoly::constant(kChart0Var, spec.lambda_value()));
    return FamilyMap(Moebius::identity(),
                     {lambda, EpsPoly::zero(kChart0Var), EpsPoly::zero(kChart0Var), lambda});
}

FamilyMap extend_to_family(const AutElement& e, const ManifoldSpec& spec) {
    if (!is_automorphism(e, spec))
        throw InvalidArgument("family extension needs a verified automorphism, got " +
                              to_string(e));
    Moebius base = Moebius::scaling(CycloNum::root_of_unity(spec.a(), e.k));
    EpsPoly alpha = EpsPoly::from_laurent(LaurentPoly::constant(kChart0Var, e.alpha));
    return FamilyMap(base,
                     {alpha, EpsPoly::from_laurent(e.p), EpsPoly::zero(kChart0Var), alpha});
}

FamilyMap compose(const FamilyMap& outer, const FamilyMap& inner) {
    if (outer.var() != inner.var())
        throw InvalidArgument("compose: family maps live in different charts");
    MonomialBase inner_base = monomial_base(inner.base());
    auto moved = [&](int i, int j) {
        return outer.entry(i, j).precompose_monomial_t(inner_base.mu, inner_base.sign);
    };
    auto cell = [&](int i, int j) {
        return moved(i, 0) * inner.entry(0, j) + moved(i, 1) * inner.entry(1, j);
    };
    return FamilyMap(outer.base() * inner.base(), {cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1)});
}

FamilyMap conjugate_to_s_chart(const FamilyMap& f, const ManifoldSpec& spec) {
    const std::string target = other_chart_var(f.var());
    MonomialBase base = monomial_base(f.base());
    MonomialBase conjugated = base_in_other_chart(base);
    const long d[2] = {spec.b(), spec.a()};

    std::array<EpsPoly, 4> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            EpsPoly entry = f.entry(i, j).substitute_inverse_t(target);
            entry = entry.shifted_t(base.sign * d[i] - d[j]);
            entry = entry.scaled(conjugated.mu.pow(d[i]));
            out[static_cast<std::size_t>(2 * i + j)] = std::move(entry);
        }
    return FamilyMap(as_moebius(conjugated), std::move(out));
}

namespace {

void collect_family_obstructions(const FamilyMap& f, std::vector<FamilyObstructionTerm>& sink) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (const auto& [key, coeff] : f.entry(i, j).terms())
                if (key.t_exp < 0) sink.push_back({i, j, key.t_exp, key.eps_exp, coeff});
}

}  // namespace

FamilyGlueCheck family_glues(const FamilyMap& f, const ManifoldSpec& spec) {
    FamilyGlueCheck result{false, {}, conjugate_to_s_chart(f, spec)};
    collect_family_obstructions(f, result.obstruction);
    collect_family_obstructions(result.induced, result.obstruction);
    result.ok = result.obstruction.empty();
    return result;
}

namespace {

bool commutes_with(const FamilyMap& f, const FamilyMap& g, const ManifoldSpec& spec) {
    if (compose(g, f) != compose(f, g)) return false;
    FamilyMap fc = conjugate_to_s_chart(f, spec);
    FamilyMap gc = conjugate_to_s_chart(g, spec);
    return compose(gc, fc) == compose(fc, gc);
}

}  // namespace

bool commutes_in_family(const FamilyMap& f, const ManifoldSpec& spec) {
    if (!family_glues(f, spec).ok)
        throw InvalidArgument("commutation check needs a map that glues over the family");
    return commutes_with(f, family_contraction(spec), spec);
}

bool scaling_lift(const CycloNum& mu, const ManifoldSpec& spec, bool at_eps_zero) {
    if (mu.is_zero()) throw InvalidArgument("base scaling must be nonzero");
    FamilyMap lift(Moebius::scaling(mu), {EpsPoly::one(kChart0Var), EpsPoly::zero(kChart0Var),
                                          EpsPoly::zero(kChart0Var), EpsPoly::one(kChart0Var)});
    if (!family_glues(lift, spec).ok) return false;
    FamilyMap g = at_eps_zero ? homothety_contraction(spec) : family_contraction(spec);
    return commutes_with(lift, g, spec);
}

ChartMap specialize_eps(const FamilyMap& f, const CycloNum& value) {
    return ChartMap(f.base(),
                    FiberMatrix(f.entry(0, 0).specialize_eps(value),
                                f.entry(0, 1).specialize_eps(value),
                                f.entry(1, 0).specialize_eps(value),
                                f.entry(1, 1).specialize_eps(value)));
}

}  // namespace hopfbundle
