#include "lrs2mc/rational.hpp"

#include <cctype>
#include <ostream>

namespace lrs2mc {

Rational Rational::parse(const std::string& token) {
    // ^-?[0-9]+(/[0-9]+)?$ -- the sign may appear on the numerator only.
    const auto bad = [&] {
        return std::invalid_argument("Rational: malformed token \"" + token + "\"");
    };
    std::size_t pos = 0;
    if (pos < token.size() && token[pos] == '-') ++pos;
    std::size_t digits = 0;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) throw bad();
    if (pos < token.size()) {
        if (token[pos] != '/') throw bad();
        ++pos;
        digits = 0;
        while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0 || pos != token.size()) throw bad();
    }
    mpq_class q(token, 10);
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in \"" + token + "\"");
    q.canonicalize();
    return Rational(std::move(q));
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& base, unsigned long n) {
    Rational acc(1);
    Rational sq = base;
    while (n > 0) {
        if (n & 1) acc *= sq;
        n >>= 1;
        if (n > 0) sq *= sq;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace lrs2mc
