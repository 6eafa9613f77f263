#pragma once

#include <optional>
#include <vector>

#include "hopfbundle/bundle.hpp"
#include "hopfbundle/linalg.hpp"

namespace hopfbundle {

// An automorphism in parametrized form: base rotation index k (the base map
// is t -> zeta_a^k t), fiber scalar alpha, and the off-diagonal polynomial P,
// giving the chart-0 map (t, z, w) -> (zeta_a^k t, alpha z + P(t) w, alpha w).
// Plain aggregate: invariants (k reduced mod a, alpha nonzero, P polynomial
// of degree at most b - a) are enforced by make_automorphism, so deliberately
// malformed elements can still be probed with is_automorphism.
struct AutElement {
    long k = 0;
    CycloNum alpha = CycloNum(Rational(1));
    LaurentPoly p = LaurentPoly::zero(kChart0Var);

    friend bool operator==(const AutElement& lhs, const AutElement& rhs) {
        return lhs.k == rhs.k && lhs.alpha == rhs.alpha && lhs.p == rhs.p;
    }
    friend bool operator!=(const AutElement& lhs, const AutElement& rhs) { return !(lhs == rhs); }
};

std::string to_string(const AutElement& e);

// Checks the invariants against the spec and reduces k mod a.
AutElement make_automorphism(long k, CycloNum alpha, LaurentPoly p, const ManifoldSpec& spec);

AutElement aut_identity(const ManifoldSpec& spec);
// The contraction as an element: (0, lambda, sigma0). Needs b >= 3a so that
// sigma0 fits the degree bound.
AutElement contraction_element(const ManifoldSpec& spec);
// g^n in closed form: (0, lambda^n, n lambda^{n-1} sigma0); n may be negative.
AutElement contraction_power(long n, const ManifoldSpec& spec);

// The glued two-chart realization; its verification status reflects whether
// the element actually extends (invariant-violating elements come back
// unverified with an obstruction).
BundleMap to_bundle_map(const AutElement& e, const ManifoldSpec& spec);

// True iff the element glues and commutes with the contraction.
bool is_automorphism(const AutElement& e, const ManifoldSpec& spec);

// Group law: composes the glued realizations chartwise and extracts the
// parametrized form of the product exactly. multiply(e, f) acts as e after f.
AutElement multiply(const AutElement& outer, const AutElement& inner, const ManifoldSpec& spec);

// Unique two-sided inverse; verified by round-trip multiplication.
AutElement inverse(const AutElement& e, const ManifoldSpec& spec);

// e^n via the group law; n may be negative or zero.
AutElement power(const AutElement& e, long n, const ManifoldSpec& spec);

// The witness exponent n with rhs = g^n * lhs when the two elements lie in
// the same coset of the contraction subgroup; empty otherwise. Decidable
// because lambda is rational: the scalar ratio must be an exact power of
// lambda.
std::optional<long> mod_g_equal(const AutElement& lhs, const AutElement& rhs,
                                const ManifoldSpec& spec);

// The class of e in the discrete quotient: the rotation index k. Zero means
// the identity component.
long component_of(const AutElement& e);

// A coset of the contraction subgroup, named by one representative.
struct AutClass {
    AutElement representative;
    ManifoldSpec spec;
};

bool same_class(const AutClass& lhs, const AutClass& rhs);

struct ComponentGroup {
    long order;
    AutClass generator;
    bool cyclic;
};

// The discrete quotient of the automorphism group: cyclic of order a,
// generated by the rotation lift (1, 1, 0). The generator's order is
// re-verified by explicit multiplication.
ComponentGroup component_group(const ManifoldSpec& spec);

// Nullspace of the constraint system on a degree-bounded ansatz
// (t, z, w) -> (zeta_a^k t, alpha(t) z + tau(t) w, alpha(t) w) with
// deg alpha, deg tau <= degree_bound: every negative exponent of the
// conjugated chart expression must vanish and the map must commute with the
// contraction. The solutions are exactly constant alpha with tau of degree
// at most b - a, so the dimension is (b - a) + 2.
struct AnsatzSolution {
    struct Member {
        LaurentPoly alpha;
        LaurentPoly tau;
    };

    long unknowns = 0;
    long constraints = 0;
    long dimension = 0;
    std::vector<Member> basis;
    // True when every basis member's alpha part is constant.
    bool alpha_all_constant = false;
};

// degree_bound must be at least b - a (smaller bounds truncate the solution
// space and the dimension statement no longer applies).
AnsatzSolution solve_ansatz(const ManifoldSpec& spec, long k, long degree_bound);

}  // namespace hopfbundle
