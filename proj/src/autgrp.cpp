#include "hopfbundle/autgrp.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "hopfbundle/errors.hpp"

namespace hopfbundle {

std::string to_string(const AutElement& e) {
    std::ostringstream out;
    out << "(k=" << e.k << ", alpha=" << to_string(e.alpha) << ", P=" << to_string(e.p) << ")";
    return out.str();
}

AutElement make_automorphism(long k, CycloNum alpha, LaurentPoly p, const ManifoldSpec& spec) {
    if (alpha.is_zero()) throw InvalidArgument("automorphism scalar must be nonzero");
    if (p.var() != kChart0Var)
        throw InvalidArgument("automorphism polynomial must live in the t-chart");
    if (!p.is_zero()) {
        if (p.min_exponent() < 0)
            throw InvalidArgument("automorphism polynomial must have nonnegative exponents");
        if (p.max_exponent() > spec.b() - spec.a())
            throw InvalidArgument("automorphism polynomial degree exceeds b - a = " +
                                  std::to_string(spec.b() - spec.a()));
    }
    long reduced = ((k % spec.a()) + spec.a()) % spec.a();
    return {reduced, std::move(alpha), std::move(p)};
}

AutElement aut_identity(const ManifoldSpec& spec) {
    return make_automorphism(0, CycloNum(Rational(1)), LaurentPoly::zero(kChart0Var), spec);
}

AutElement contraction_element(const ManifoldSpec& spec) {
    return make_automorphism(0, spec.lambda_value(), spec.sigma0(), spec);
}

AutElement contraction_power(long n, const ManifoldSpec& spec) {
    CycloNum lambda = spec.lambda_value();
    CycloNum scale = CycloNum(Rational(n)) * lambda.pow(n - 1);
    return make_automorphism(0, lambda.pow(n), spec.sigma0().scaled(scale), spec);
}

namespace {

ChartMap element_chart0(const AutElement& e, const ManifoldSpec& spec) {
    Moebius base = Moebius::scaling(CycloNum::root_of_unity(spec.a(), e.k));
    return ChartMap(base, FiberMatrix::upper_triangular(e.alpha, e.p));
}

}  // namespace

BundleMap to_bundle_map(const AutElement& e, const ManifoldSpec& spec) {
    return make_bundle_map(element_chart0(e, spec), spec);
}

bool is_automorphism(const AutElement& e, const ManifoldSpec& spec) {
    if (e.alpha.is_zero()) return false;
    BundleMap bm = to_bundle_map(e, spec);
    if (!bm.verified()) return false;
    return commutes_with_contraction(bm, spec);
}

namespace {

// Exact inverse of element_chart0: recovers (k, alpha, P) from a composed
// chart map, failing loudly if the map left the parametrized family.
AutElement extract_element(const ChartMap& f, const ManifoldSpec& spec) {
    MonomialBase base = monomial_base(f.base());
    if (base.sign != 1)
        throw std::logic_error("automorphism product has an inverting base map");
    long k = -1;
    for (long m = 0; m < spec.a(); ++m)
        if (base.mu == CycloNum::root_of_unity(spec.a(), m)) {
            k = m;
            break;
        }
    if (k < 0)
        throw std::logic_error("automorphism product base scalar is not an a-th root of unity");

    const LaurentPoly& diag = f.fiber().entry(0, 0);
    if (!f.fiber().entry(1, 0).is_zero() || diag != f.fiber().entry(1, 1) || diag.is_zero() ||
        diag.max_exponent() != 0 || diag.min_exponent() != 0)
        throw std::logic_error("automorphism product fiber left the parametrized family");
    return make_automorphism(k, diag.coeff(0), f.fiber().entry(0, 1), spec);
}

}  // namespace

AutElement multiply(const AutElement& outer, const AutElement& inner, const ManifoldSpec& spec) {
    BundleMap product = compose(to_bundle_map(outer, spec), to_bundle_map(inner, spec));
    return extract_element(product.chart0(), spec);
}

AutElement inverse(const AutElement& e, const ManifoldSpec& spec) {
    CycloNum inv_alpha = e.alpha.inv();
    CycloNum rotation = CycloNum::root_of_unity(spec.a(), -e.k);
    LaurentPoly p = e.p.precompose_scale(rotation).scaled(-(inv_alpha * inv_alpha));
    AutElement candidate = make_automorphism(-e.k, inv_alpha, p, spec);
    if (multiply(e, candidate, spec) != aut_identity(spec) ||
        multiply(candidate, e, spec) != aut_identity(spec))
        throw std::logic_error("inverse round-trip failed for " + to_string(e));
    return candidate;
}

AutElement power(const AutElement& e, long n, const ManifoldSpec& spec) {
    AutElement factor = n < 0 ? inverse(e, spec) : e;
    long count = n < 0 ? -n : n;
    AutElement acc = aut_identity(spec);
    for (long i = 0; i < count; ++i) acc = multiply(acc, factor, spec);
    return acc;
}

namespace {

// Solves lambda^n = q exactly for integer n, scanning outward while the
// remaining ratio keeps shrinking toward 1. lambda in (0,1) makes the powers
// strictly monotone, so the scan terminates.
std::optional<long> lambda_exponent(const Rational& lambda, const Rational& q) {
    if (q <= 0) return std::nullopt;
    Rational cur(1);
    for (long n = 0; cur >= q; ++n) {
        if (cur == q) return n;
        cur *= lambda;
    }
    cur = 1;
    for (long n = 0; cur <= q; --n) {
        if (cur == q) return n;
        cur /= lambda;
    }
    return std::nullopt;
}

}  // namespace

std::optional<long> mod_g_equal(const AutElement& lhs, const AutElement& rhs,
                                const ManifoldSpec& spec) {
    if (lhs.k != rhs.k) return std::nullopt;
    auto [num, den] = aligned(rhs.alpha, lhs.alpha);
    std::optional<Rational> ratio = (num * den.inv()).as_rational();
    if (!ratio) return std::nullopt;
    std::optional<long> n = lambda_exponent(spec.lambda(), *ratio);
    if (!n) return std::nullopt;
    if (multiply(contraction_power(*n, spec), lhs, spec) != rhs) return std::nullopt;
    return n;
}

long component_of(const AutElement& e) { return e.k; }

bool same_class(const AutClass& lhs, const AutClass& rhs) {
    if (lhs.spec != rhs.spec) return false;
    return mod_g_equal(lhs.representative, rhs.representative, lhs.spec).has_value();
}

ComponentGroup component_group(const ManifoldSpec& spec) {
    AutElement rotation = make_automorphism(1, CycloNum(Rational(1)),
                                            LaurentPoly::zero(kChart0Var), spec);
    AutElement acc = rotation;
    for (long m = 1; m < spec.a(); ++m) {
        if (component_of(acc) == 0)
            throw std::logic_error("rotation class collapsed early at power " + std::to_string(m));
        acc = multiply(acc, rotation, spec);
    }
    if (component_of(acc) != 0 || !mod_g_equal(aut_identity(spec), acc, spec))
        throw std::logic_error("rotation class does not close up at power a");
    return {spec.a(), AutClass{rotation, spec}, true};
}

namespace {

struct AnsatzColumn {
    // Conjugated fiber entries (row-major) and commutator entries with the
    // contraction, for one unit coefficient vector.
    std::array<LaurentPoly, 4> conjugated;
    std::array<LaurentPoly, 4> commutator;
};

AnsatzColumn build_column(const LaurentPoly& alpha, const LaurentPoly& tau,
                          const ManifoldSpec& spec, long k) {
    MonomialBase base{CycloNum::root_of_unity(spec.a(), k), 1};
    const long d[2] = {spec.b(), spec.a()};
    FiberMatrix candidate(alpha, tau, LaurentPoly::zero(kChart0Var), alpha);

    AnsatzColumn col;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            col.conjugated[static_cast<std::size_t>(2 * i + j)] =
                conjugate_fiber_entry(candidate.entry(i, j), base, d[i], d[j], kChart1Var);

    FiberMatrix g = FiberMatrix::upper_triangular(spec.lambda_value(), spec.sigma0());
    FiberMatrix g_after = g.precomposed_base(base) * candidate;
    FiberMatrix g_before = candidate * g;  // candidate's base precomposes g trivially: base of g is the identity
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            col.commutator[static_cast<std::size_t>(2 * i + j)] =
                g_after.entry(i, j) - g_before.entry(i, j);
    return col;
}

}  // namespace

AnsatzSolution solve_ansatz(const ManifoldSpec& spec, long k, long degree_bound) {
    if (degree_bound < spec.b() - spec.a())
        throw InvalidArgument("ansatz degree bound must be at least b - a");

    const long per_poly = degree_bound + 1;
    const std::size_t unknowns = static_cast<std::size_t>(2 * per_poly);

    std::vector<AnsatzColumn> columns;
    columns.reserve(unknowns);
    for (std::size_t u = 0; u < unknowns; ++u) {
        LaurentPoly alpha = LaurentPoly::zero(kChart0Var);
        LaurentPoly tau = LaurentPoly::zero(kChart0Var);
        LaurentPoly unit = LaurentPoly::monomial(kChart0Var, static_cast<long>(u) % per_poly,
                                                 CycloNum(Rational(1)));
        (static_cast<long>(u) < per_poly ? alpha : tau) = unit;
        columns.push_back(build_column(alpha, tau, spec, k));
    }

    // Row space: negative exponents of conjugated entries, all exponents of
    // commutator entries, in a fixed order shared by every column.
    std::map<std::pair<int, long>, std::size_t> conj_rows;
    std::map<std::pair<int, long>, std::size_t> comm_rows;
    for (const AnsatzColumn& col : columns)
        for (int slot = 0; slot < 4; ++slot) {
            for (const auto& [exp, coeff] : col.conjugated[static_cast<std::size_t>(slot)].terms())
                if (exp < 0) conj_rows.emplace(std::pair{slot, exp}, 0);
            for (const auto& [exp, coeff] : col.commutator[static_cast<std::size_t>(slot)].terms())
                comm_rows.emplace(std::pair{slot, exp}, 0);
        }
    std::size_t next = 0;
    for (auto& [key, row] : conj_rows) row = next++;
    for (auto& [key, row] : comm_rows) row = next++;

    LinearSystem sys(next, unknowns);
    for (std::size_t u = 0; u < unknowns; ++u) {
        for (const auto& [key, row] : conj_rows)
            sys.set(row, u, columns[u].conjugated[static_cast<std::size_t>(key.first)].coeff(key.second));
        for (const auto& [key, row] : comm_rows)
            sys.set(row, u, columns[u].commutator[static_cast<std::size_t>(key.first)].coeff(key.second));
    }

    AnsatzSolution solution;
    solution.unknowns = static_cast<long>(unknowns);
    solution.constraints = static_cast<long>(next);
    solution.alpha_all_constant = true;
    for (const std::vector<CycloNum>& vec : nullspace(sys)) {
        LaurentPoly alpha = LaurentPoly::zero(kChart0Var);
        LaurentPoly tau = LaurentPoly::zero(kChart0Var);
        for (long d = 0; d < per_poly; ++d) {
            alpha += LaurentPoly::monomial(kChart0Var, d, vec[static_cast<std::size_t>(d)]);
            tau += LaurentPoly::monomial(kChart0Var, d, vec[static_cast<std::size_t>(per_poly + d)]);
        }
        if (!alpha.is_zero() && alpha.max_exponent() > 0) solution.alpha_all_constant = false;
        solution.basis.push_back({std::move(alpha), std::move(tau)});
    }
    solution.dimension = static_cast<long>(solution.basis.size());
    return solution;
}

}  // namespace hopfbundle
