#include "hopfbundle/laurent.hpp"

#include <sstream>

#include "hopfbundle/errors.hpp"

namespace hopfbundle {
namespace {

void require_same_var(const LaurentPoly& a, const LaurentPoly& b, const char* op) {
    if (a.var() != b.var())
        throw InvalidArgument(std::string(op) + ": variable mismatch '" + a.var() + "' vs '" +
                              b.var() + "'");
}

void require_exponent_in_range(long e) {
    if (e > kMaxLaurentExponent || e < -kMaxLaurentExponent)
        throw InvalidArgument("Laurent exponent " + std::to_string(e) + " exceeds the hard cap");
}

CycloNum add_aligned(const CycloNum& a, const CycloNum& b) {
    if (&a.ctx() == &b.ctx()) return a + b;
    auto [x, y] = aligned(a, b);
    return x + y;
}

CycloNum mul_aligned(const CycloNum& a, const CycloNum& b) {
    if (&a.ctx() == &b.ctx()) return a * b;
    auto [x, y] = aligned(a, b);
    return x * y;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(const std::string& var, long exponent, CycloNum coeff) {
    require_exponent_in_range(exponent);
    LaurentPoly p(var);
    p.set_coeff(exponent, std::move(coeff));
    return p;
}

LaurentPoly LaurentPoly::constant(const std::string& var, CycloNum value) {
    return monomial(var, 0, std::move(value));
}

LaurentPoly LaurentPoly::one(const std::string& var) {
    return constant(var, CycloNum(Rational(1)));
}

long LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw InvalidArgument("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw InvalidArgument("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

CycloNum LaurentPoly::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? CycloNum() : it->second;
}

void LaurentPoly::set_coeff(long exponent, CycloNum value) {
    if (value.is_zero()) {
        terms_.erase(exponent);
    } else {
        require_exponent_in_range(exponent);
        terms_.insert_or_assign(exponent, std::move(value));
    }
}

void LaurentPoly::add_to_coeff(long exponent, const CycloNum& value) {
    if (value.is_zero()) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        require_exponent_in_range(exponent);
        terms_.emplace(exponent, value);
        return;
    }
    CycloNum sum = add_aligned(it->second, value);
    if (sum.is_zero()) {
        terms_.erase(it);
    } else {
        it->second = std::move(sum);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(var_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    require_same_var(*this, rhs, "add");
    for (const auto& [e, c] : rhs.terms_) add_to_coeff(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    require_same_var(*this, rhs, "sub");
    for (const auto& [e, c] : rhs.terms_) add_to_coeff(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    require_same_var(*this, rhs, "mul");
    LaurentPoly out(var_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) out.add_to_coeff(e1 + e2, mul_aligned(c1, c2));
    *this = std::move(out);
    return *this;
}

LaurentPoly LaurentPoly::scaled(const CycloNum& factor) const {
    LaurentPoly out(var_);
    if (factor.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.set_coeff(e, mul_aligned(c, factor));
    return out;
}

LaurentPoly LaurentPoly::shifted(long delta) const {
    LaurentPoly out(var_);
    for (const auto& [e, c] : terms_) {
        require_exponent_in_range(e + delta);
        out.terms_.emplace(e + delta, c);
    }
    return out;
}

LaurentPoly LaurentPoly::precompose_scale(const CycloNum& mu) const {
    return precompose_monomial(mu, 1);
}

LaurentPoly LaurentPoly::precompose_monomial(const CycloNum& mu, int step) const {
    if (mu.is_zero()) throw InvalidArgument("precompose: scale factor must be nonzero");
    if (step != 1 && step != -1) throw InvalidArgument("precompose: step must be +1 or -1");
    LaurentPoly out(var_);
    for (const auto& [e, c] : terms_) out.set_coeff(step * e, mul_aligned(c, mu.pow(e)));
    return out;
}

LaurentPoly LaurentPoly::substitute_inverse(const std::string& new_var) const {
    LaurentPoly out(new_var);
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

CycloNum LaurentPoly::evaluate(const CycloNum& x) const {
    CycloNum acc;
    if (x.is_zero()) {
        for (const auto& [e, c] : terms_) {
            if (e < 0) throw DivisionByZero("evaluate: negative exponent at x = 0");
            if (e == 0) acc = add_aligned(acc, c);
        }
        return acc;
    }
    for (const auto& [e, c] : terms_) acc = add_aligned(acc, mul_aligned(c, x.pow(e)));
    return acc;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
    if (var_ != rhs.var_) return false;
    if (terms_.size() != rhs.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (it->second != jt->second) return false;
    }
    return true;
}

PolynomialCheck is_polynomial(const LaurentPoly& p) {
    PolynomialCheck out;
    for (const auto& [e, c] : p.terms()) {
        if (e >= 0) break;
        out.negative_terms.emplace_back(e, c);
    }
    out.is_polynomial = out.negative_terms.empty();
    return out;
}

LaurentPoly sigma_zero(const std::string& var, long a) {
    if (a < 1) throw InvalidArgument("sigma_zero: a must be >= 1");
    const CycloCtx& ctx = CycloCtx::get(a);
    LaurentPoly product = LaurentPoly::one(var);
    for (long k = 0; k < a; ++k) {
        LaurentPoly factor = LaurentPoly::monomial(var, 1, CycloNum::one(ctx));
        factor -= LaurentPoly::constant(var, CycloNum::root_of_unity(ctx, k));
        product *= factor;
    }
    return product.shifted(a);
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // High degree first reads like handwritten polynomials.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) out << " + ";
        first = false;
        std::string cs = to_string(c);
        bool composite = cs.find_first_of("+-") != std::string::npos && cs.size() > 1;
        if (e == 0) {
            out << (composite ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs == "1") {
        } else if (cs == "-1") {
            out << "-";
        } else {
            out << (composite ? "(" + cs + ")" : cs) << "*";
        }
        out << p.var();
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

}  // namespace hopfbundle
