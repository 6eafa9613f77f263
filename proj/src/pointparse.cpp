#include "hopfbundle/pointparse.hpp"

#include <cctype>

#include "hopfbundle/errors.hpp"

namespace hopfbundle {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    CycloNum run() {
        CycloNum value = expr();
        skip_space();
        if (pos_ != text_.size()) fail("trailing input");
        return value;
    }

  private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    long integer() {
        skip_space();
        bool negative = eat('-');
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected digits");
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000000) fail("integer literal too large");
            ++pos_;
        }
        return negative ? -value : value;
    }

    CycloNum expr() {
        CycloNum value = term();
        while (true) {
            if (eat('+')) {
                auto [x, y] = aligned(value, term());
                value = x + y;
            } else if (eat('-')) {
                auto [x, y] = aligned(value, term());
                value = x - y;
            } else {
                return value;
            }
        }
    }

    CycloNum term() {
        CycloNum value = factor();
        while (eat('*')) {
            auto [x, y] = aligned(value, factor());
            value = x * y;
        }
        return value;
    }

    CycloNum factor() {
        CycloNum base = atom();
        if (!eat('^')) return base;
        return base.pow(integer());
    }

    CycloNum atom() {
        skip_space();
        if (eat('-')) return -atom();
        if (eat('(')) {
            CycloNum inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (keyword("zeta")) {
            if (!eat('(')) fail("expected '(' after zeta");
            long n = integer();
            if (n < 1) fail("zeta needs a positive order");
            long k = 1;
            if (eat(',')) k = integer();
            if (!eat(')')) fail("expected ')' after zeta arguments");
            return CycloNum::root_of_unity(n, k);
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            long num = integer();
            if (eat('/')) {
                long den = integer();
                if (den == 0) fail("zero denominator");
                return CycloNum(rational(num, den));
            }
            return CycloNum(Rational(num));
        }
        fail("expected a number, zeta(...), or '('");
    }

    bool keyword(const std::string& word) {
        skip_space();
        if (text_.compare(pos_, word.size(), word) != 0) return false;
        pos_ += word.size();
        return true;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

CycloNum parse_cyclo(const std::string& text) { return Parser(text).run(); }

ProjPoint parse_point(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t");
    std::size_t last = text.find_last_not_of(" \t");
    if (first != std::string::npos && text.compare(first, last - first + 1, "inf") == 0)
        return ProjPoint::infinity();
    return ProjPoint::finite(parse_cyclo(text));
}

}  // namespace hopfbundle
