#include "hopfbundle/epspoly.hpp"

#include <sstream>

#include "hopfbundle/errors.hpp"

namespace hopfbundle {
namespace {

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

EpsPoly EpsPoly::from_laurent(const LaurentPoly& p, long eps_exp) {
    if (eps_exp < 0) throw InvalidArgument("EpsPoly: eps exponent must be nonnegative");
    EpsPoly out(p.var());
    for (const auto& [e, c] : p.terms()) out.terms_.emplace(Key{e, eps_exp}, c);
    return out;
}

EpsPoly EpsPoly::monomial(const std::string& var, long t_exp, long eps_exp, CycloNum coeff) {
    if (eps_exp < 0) throw InvalidArgument("EpsPoly: eps exponent must be nonnegative");
    EpsPoly out(var);
    if (!coeff.is_zero()) out.terms_.emplace(Key{t_exp, eps_exp}, std::move(coeff));
    return out;
}

EpsPoly EpsPoly::one(const std::string& var) {
    return monomial(var, 0, 0, CycloNum(Rational(1)));
}

bool EpsPoly::eps_free() const {
    for (const auto& [k, c] : terms_)
        if (k.eps_exp != 0) return false;
    return true;
}

long EpsPoly::min_t_exponent() const {
    if (terms_.empty()) throw InvalidArgument("min_t_exponent of zero polynomial");
    long best = terms_.begin()->first.t_exp;
    for (const auto& [k, c] : terms_) best = std::min(best, k.t_exp);
    return best;
}

void EpsPoly::add_term(const Key& key, const CycloNum& value) {
    if (value.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, value);
        return;
    }
    CycloNum sum = add_aligned(it->second, value);
    if (sum.is_zero()) {
        terms_.erase(it);
    } else {
        it->second = std::move(sum);
    }
}

EpsPoly EpsPoly::operator-() const {
    EpsPoly out(var_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& rhs) {
    if (var_ != rhs.var_) throw InvalidArgument("EpsPoly add: variable mismatch");
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& rhs) {
    if (var_ != rhs.var_) throw InvalidArgument("EpsPoly sub: variable mismatch");
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return *this;
}

EpsPoly& EpsPoly::operator*=(const EpsPoly& rhs) {
    if (var_ != rhs.var_) throw InvalidArgument("EpsPoly mul: variable mismatch");
    EpsPoly out(var_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : rhs.terms_)
            out.add_term(Key{k1.t_exp + k2.t_exp, k1.eps_exp + k2.eps_exp}, mul_aligned(c1, c2));
    *this = std::move(out);
    return *this;
}

EpsPoly EpsPoly::scaled(const CycloNum& factor) const {
    EpsPoly out(var_);
    if (factor.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.add_term(k, mul_aligned(c, factor));
    return out;
}

EpsPoly EpsPoly::shifted_t(long delta) const {
    EpsPoly out(var_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.t_exp + delta, k.eps_exp}, c);
    return out;
}

EpsPoly EpsPoly::precompose_monomial_t(const CycloNum& mu, int step) const {
    if (mu.is_zero()) throw InvalidArgument("EpsPoly precompose: factor must be nonzero");
    if (step != 1 && step != -1) throw InvalidArgument("EpsPoly precompose: step must be +1 or -1");
    EpsPoly out(var_);
    for (const auto& [k, c] : terms_)
        out.add_term(Key{step * k.t_exp, k.eps_exp}, mul_aligned(c, mu.pow(k.t_exp)));
    return out;
}

EpsPoly EpsPoly::substitute_inverse_t(const std::string& new_var) const {
    EpsPoly out(new_var);
    for (const auto& [k, c] : terms_) out.terms_.emplace(Key{-k.t_exp, k.eps_exp}, c);
    return out;
}

LaurentPoly EpsPoly::specialize_eps(const CycloNum& value) const {
    LaurentPoly out(var_);
    for (const auto& [k, c] : terms_) {
        CycloNum scaled = k.eps_exp == 0 ? c : mul_aligned(c, value.pow(k.eps_exp));
        if (scaled.is_zero()) continue;
        out += LaurentPoly::monomial(var_, k.t_exp, std::move(scaled));
    }
    return out;
}

bool EpsPoly::operator==(const EpsPoly& rhs) const {
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

std::string to_string(const EpsPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        if (!first) out << " + ";
        first = false;
        out << "(" << to_string(c) << ")";
        if (k.t_exp != 0) {
            out << "*" << p.var();
            if (k.t_exp != 1) out << "^" << k.t_exp;
        }
        if (k.eps_exp != 0) {
            out << "*eps";
            if (k.eps_exp != 1) out << "^" << k.eps_exp;
        }
    }
    return out.str();
}

}  // namespace hopfbundle
