#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace signedflow {

// Exact rational number in canonical reduced form, denominator >= 1.
// All flow values, flow numbers and boundary sums in this library are
// Fractions; there is no floating point anywhere.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(std::int64_t n) : num_(n), den_(1) {}
    Fraction(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Fraction operator-() const { return Fraction(-num_, den_, unchecked{}); }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return Fraction(checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
                        checked(i128(a.den_) * b.den_));
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(checked(i128(a.num_) * b.num_), checked(i128(a.den_) * b.den_));
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.num_ == 0) throw std::domain_error("Fraction: division by zero");
        return Fraction(checked(i128(a.num_) * b.den_), checked(i128(a.den_) * b.num_));
    }

    Fraction& operator+=(const Fraction& b) { *this = *this + b; return *this; }
    Fraction& operator-=(const Fraction& b) { *this = *this - b; return *this; }
    Fraction& operator*=(const Fraction& b) { *this = *this * b; return *this; }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

    Fraction abs() const { return num_ < 0 ? -*this : *this; }

    std::int64_t ceil() const {
        std::int64_t q = num_ / den_;
        if (num_ > 0 && num_ % den_ != 0) ++q;
        return q;
    }

    // "11/3"; integers render without the denominator ("4").
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    // Always with an explicit denominator ("4/1"), used by certificate files.
    std::string str_slash() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p", "p/q", optional leading minus.
    static Fraction parse(const std::string& text);

private:
    using i128 = __int128;
    struct unchecked {};
    Fraction(std::int64_t n, std::int64_t d, unchecked) : num_(n), den_(d) {}

    static std::int64_t checked(i128 x) {
        if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("Fraction overflow");
        return static_cast<std::int64_t>(x);
    }

    void reduce() {
        if (den_ == 0) throw std::domain_error("Fraction: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace signedflow
