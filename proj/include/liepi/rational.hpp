#ifndef LIEPI_RATIONAL_HPP
#define LIEPI_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <stdexcept>

namespace liepi {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// q as an Integer; throws if q has a nontrivial denominator
inline Integer to_integer(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("rational is not an integer: " + q.get_str());
    return q.get_num();
}

// 2^e for possibly negative e
inline Rational pow2(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(1, p) : Rational(p);
}

// FNV-1a, used for content hashing of exact data
struct Fnv {
    std::uint64_t h = 1469598103934665603ull;
    void feed(const void* data, std::size_t len) {
        auto p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) { h ^= p[i]; h *= 1099511628211ull; }
    }
    void feed(std::uint64_t v) { feed(&v, sizeof v); }
    void feed(long v) { feed(static_cast<std::uint64_t>(v)); }
    void feed(int v) { feed(static_cast<std::uint64_t>(v)); }
    void feed(const std::string& s) { feed(s.data(), s.size()); feed(s.size()); }
    void feed(const Integer& z) { feed(z.get_str()); }
    void feed(const Rational& q) { feed(q.get_num().get_str()); feed(q.get_den().get_str()); }
};

} // namespace liepi

#endif
