#pragma once
// Overflow-checked integer helpers and a small exact rational type.
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tfd {

using i64 = std::int64_t;

inline i64 add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}
inline i64 sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
    return r;
}
inline i64 mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n) : num(n), den(1) {}
    Rational(i64 n, i64 d) : num(n), den(d) {
        if (d == 0) throw std::domain_error("zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) { num = sub(0, num); den = sub(0, den); }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Rational operator+(Rational a, Rational b) {
        return {add(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den)};
    }
    friend Rational operator-(Rational a, Rational b) {
        return {sub(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den)};
    }
    friend Rational operator*(Rational a, Rational b) {
        return {mul(a.num, b.num), mul(a.den, b.den)};
    }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num == 0) throw std::domain_error("division by zero");
        return {mul(a.num, b.den), mul(a.den, b.num)};
    }
    Rational operator-() const { return {sub(0, num), den}; }

    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(Rational a, Rational b) { return mul(a.num, b.den) < mul(b.num, a.den); }
    friend bool operator>(Rational a, Rational b) { return b < a; }
    friend bool operator<=(Rational a, Rational b) { return !(b < a); }
    friend bool operator>=(Rational a, Rational b) { return !(a < b); }

    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
    bool is_integer() const { return den == 1; }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace tfd
