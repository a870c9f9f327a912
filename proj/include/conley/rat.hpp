#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace conley {

/// Exact rational on 64-bit words. Grid coordinates in this engine stay
/// tiny (denominators are grid steps), so 128-bit intermediates with an
/// overflow assert are enough; no bignum dependency.
struct Rat {
    long long num = 0;
    long long den = 1;  // > 0 always

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static Rat from128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = d;
        while (a) { __int128 t = g % a; g = a; a = t; }
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rat: 128-bit overflow after reduction");
        Rat r; r.num = (long long)n; r.den = (long long)d;
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from128((__int128)a.num * b.den + (__int128)b.num * a.den,
                       (__int128)a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from128((__int128)a.num * b.den - (__int128)b.num * a.den,
                       (__int128)a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return from128((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    /// Representative of this value mod `period` in [0, period).
    Rat mod(const Rat& period) const {
        __int128 n = (__int128)num * period.den;
        __int128 d = (__int128)den * period.num;  // compares x/period
        // floor division of n by d on the common denominator den*period.den
        __int128 q = n / d;
        if (n % d != 0 && ((n < 0) != (d < 0))) --q;
        Rat r = *this - Rat::from128(q, 1) * period;
        return r;
    }

    bool is_integer() const { return den == 1; }
    double to_double() const { return (double)num / (double)den; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.str();
    }
};

/// Parses "3", "-5/2", "1.5" (decimal with finite expansion).
Rat parse_rat(const std::string& text);

}  // namespace conley
