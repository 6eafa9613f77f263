#pragma once

#include <random>
#include <string>

#include "hopfbundle/autgrp.hpp"

namespace hopfbundle {

// Deterministic generators for property suites: fixed-seed mt19937_64 keeps
// every run and platform on the same sample sequence.
using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, long max_abs_num = 4, long max_den = 4);
Rational random_nonzero_rational(Rng& rng, long max_abs_num = 4, long max_den = 4);

// Up to `terms` nonzero coordinates with small rational values.
CycloNum random_cyclo(Rng& rng, const CycloCtx& ctx, int terms = 3);
CycloNum random_nonzero_cyclo(Rng& rng, const CycloCtx& ctx, int terms = 3);

LaurentPoly random_laurent(Rng& rng, const std::string& var, const CycloCtx& ctx, long min_exp,
                           long max_exp, int terms = 3);

// Arbitrary valid element: random rotation index, nonzero scalar over
// Q(zeta_a), polynomial of degree at most b - a.
AutElement random_automorphism(Rng& rng, const ManifoldSpec& spec);

}  // namespace hopfbundle
