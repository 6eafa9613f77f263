#include "hopfbundle/rational.hpp"

#include <cctype>

namespace hopfbundle {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '-' || text[i] == '+') {
        neg = text[i] == '-';
        ++i;
    }
    auto read_digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == from) throw ParseError("expected digits in rational: '" + text + "'");
        return j;
    };
    std::size_t num_end = read_digits(i);
    mpz_class num(text.substr(i, num_end - i));
    mpz_class den(1);
    if (num_end < text.size()) {
        if (text[num_end] != '/') throw ParseError("malformed rational: '" + text + "'");
        std::size_t den_end = read_digits(num_end + 1);
        if (den_end != text.size()) throw ParseError("trailing characters in rational: '" + text + "'");
        den = mpz_class(text.substr(num_end + 1, den_end - num_end - 1));
        if (den == 0) throw ParseError("zero denominator: '" + text + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace hopfbundle
