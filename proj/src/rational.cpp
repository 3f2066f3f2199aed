#include "pentagon/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pentagon {

Rational rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rat_from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash), 10);
        BigInt den(s.substr(slash + 1), 10);
        return rat(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return rat(BigInt(s, 10), BigInt(1));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0 || digits.empty()) throw std::invalid_argument("malformed decimal literal: " + s);
    return rat(BigInt(digits, 10), big_pow(10, frac_len));
}

BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(const BigInt& n, unsigned k) {
    if (n < 0) throw std::invalid_argument("binomial with negative n");
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rational& q, int digits) {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    bool neg = sgn(q) < 0;
    Rational a = abs(q);
    // round(|q| * 10^digits), ties away from zero
    BigInt scaled_num = a.get_num() * big_pow(10, digits) * 2 + a.get_den();
    BigInt scaled = scaled_num / (a.get_den() * 2);
    std::string s = scaled.get_str();
    std::string out;
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    out = s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    return neg && scaled != 0 ? "-" + out : out;
}

}  // namespace pentagon
