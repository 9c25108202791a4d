#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcove {

// Exact rational scalar used everywhere arithmetic must stay exact.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat frac(long num, long den) {
    if (den == 0) throw std::invalid_argument("frac: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "7", "-3/4", "0.25". Throws std::invalid_argument on anything else.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    auto dot = s.find('.');
    try {
        if (dot != std::string::npos) {
            // decimal literal: digits.digits -> shift the point away
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            std::size_t places = s.size() - dot - 1;
            if (digits.empty() || places == 0) throw std::invalid_argument("bad decimal");
            for (std::size_t i = 0; i < digits.size(); ++i)
                if (!(std::isdigit(static_cast<unsigned char>(digits[i])) || (i == 0 && digits[i] == '-')))
                    throw std::invalid_argument("bad decimal");
            Rat num(digits, 10);
            Rat den(1);
            for (std::size_t i = 0; i < places; ++i) den *= 10;
            Rat q = num / den;
            q.canonicalize();
            return q;
        }
        Rat q(s, 10);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    }
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double rat_double(const Rat& q) { return q.get_d(); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("rat_pow: 0 to a negative power");
        return Rat(0);
    }
    Rat out;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), ae);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), ae);
    if (e < 0) out = 1 / out;
    out.canonicalize();
    return out;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace alcove
