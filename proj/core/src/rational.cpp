#include "advgap/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "advgap/errors.hpp"

namespace advgap {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    // trim whitespace
    const auto b = s.find_first_not_of(" \t\r\n");
    const auto e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) throw ParseError("empty rational literal");
    s = s.substr(b, e - b + 1);

    bool negative = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        negative = (s[i] == '-');
        ++i;
    }
    std::string body = s.substr(i);
    if (body.empty()) throw ParseError("malformed rational '" + text + "'");

    Rational value;
    const auto slash = body.find('/');
    if (slash != std::string::npos) {
        const std::string num = body.substr(0, slash);
        const std::string den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed rational '" + text + "'");
        BigInt n(num, 10), d(den, 10);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        value = Rational(n, d);
        value.canonicalize();
    } else {
        // integer or decimal, optional exponent
        std::string mantissa = body;
        long exp10 = 0;
        const auto epos = body.find_first_of("eE");
        if (epos != std::string::npos) {
            mantissa = body.substr(0, epos);
            const std::string es = body.substr(epos + 1);
            std::string edigits = es;
            bool eneg = false;
            if (!edigits.empty() && (edigits[0] == '+' || edigits[0] == '-')) {
                eneg = (edigits[0] == '-');
                edigits = edigits.substr(1);
            }
            if (!all_digits(edigits) || edigits.size() > 6)
                throw ParseError("malformed exponent in '" + text + "'");
            exp10 = std::strtol(edigits.c_str(), nullptr, 10);
            if (eneg) exp10 = -exp10;
        }
        std::string digits = mantissa;
        long frac_len = 0;
        const auto dot = mantissa.find('.');
        if (dot != std::string::npos) {
            const std::string ip = mantissa.substr(0, dot);
            const std::string fp = mantissa.substr(dot + 1);
            if (fp.empty() || !all_digits(fp) || (!ip.empty() && !all_digits(ip)))
                throw ParseError("malformed rational '" + text + "'");
            digits = (ip.empty() ? "0" : ip) + fp;
            frac_len = static_cast<long>(fp.size());
        } else if (!all_digits(mantissa)) {
            throw ParseError("malformed rational '" + text + "'");
        }
        BigInt n(digits, 10);
        value = Rational(n);
        const long net = exp10 - frac_len;
        if (net > 0) {
            BigInt scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10u, static_cast<unsigned long>(net));
            value *= Rational(scale);
        } else if (net < 0) {
            BigInt scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10u, static_cast<unsigned long>(-net));
            value /= Rational(scale);
        }
        value.canonicalize();
    }
    if (negative) value = -value;
    return value;
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();  // raw (a,b) constructions may arrive uncanonicalized
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational pow_int(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    // num/den coprime implies num^e/den^e coprime, already canonical
    return r;
}

Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational dyadic_root(const Rational& q, unsigned long p, unsigned bits) {
    if (q < 0) throw ParseError("dyadic_root of negative value");
    if (p == 0) throw ParseError("dyadic_root with p = 0");
    // floor((q * 2^(p*bits))^(1/p)) / 2^bits
    BigInt scaled_num;
    mpz_mul_2exp(scaled_num.get_mpz_t(), q.get_num_mpz_t(),
                 static_cast<mp_bitcnt_t>(p) * bits);
    BigInt quotient;
    mpz_fdiv_q(quotient.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den_mpz_t());
    BigInt root;
    mpz_root(root.get_mpz_t(), quotient.get_mpz_t(), p);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2u, bits);
    Rational r(root, den);
    r.canonicalize();
    return r;
}

double to_double(const Rational& q) { return q.get_d(); }

std::vector<double> to_double(const std::vector<Rational>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(q.get_d());
    return out;
}

}  // namespace advgap
