#include "hopfbundle/sampling.hpp"

namespace hopfbundle {

Rational random_rational(Rng& rng, long max_abs_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return rational(num(rng), den(rng));
}

Rational random_nonzero_rational(Rng& rng, long max_abs_num, long max_den) {
    while (true) {
        Rational r = random_rational(rng, max_abs_num, max_den);
        if (r != 0) return r;
    }
}

CycloNum random_cyclo(Rng& rng, const CycloCtx& ctx, int terms) {
    std::vector<Rational> coeffs(ctx.degree(), Rational(0));
    std::uniform_int_distribution<std::size_t> index(0, ctx.degree() - 1);
    for (int i = 0; i < terms; ++i) coeffs[index(rng)] = random_rational(rng);
    return CycloNum(ctx, std::move(coeffs));
}

CycloNum random_nonzero_cyclo(Rng& rng, const CycloCtx& ctx, int terms) {
    while (true) {
        CycloNum x = random_cyclo(rng, ctx, terms);
        if (!x.is_zero()) return x;
    }
}

LaurentPoly random_laurent(Rng& rng, const std::string& var, const CycloCtx& ctx, long min_exp,
                           long max_exp, int terms) {
    LaurentPoly p(var);
    std::uniform_int_distribution<long> exp(min_exp, max_exp);
    for (int i = 0; i < terms; ++i)
        p += LaurentPoly::monomial(var, exp(rng), random_cyclo(rng, ctx, 1));
    return p;
}

AutElement random_automorphism(Rng& rng, const ManifoldSpec& spec) {
    const CycloCtx& ctx = CycloCtx::get(spec.a());
    std::uniform_int_distribution<long> rotation(0, spec.a() - 1);
    LaurentPoly p =
        random_laurent(rng, kChart0Var, ctx, 0, spec.b() - spec.a(), 3);
    return make_automorphism(rotation(rng), random_nonzero_cyclo(rng, ctx), std::move(p), spec);
}

}  // namespace hopfbundle
