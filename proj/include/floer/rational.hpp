// rational.hpp
// Exact rational arithmetic on int64 numerator/denominator with __int128
// intermediates.  Any result outside the int64 range throws OverflowError;
// nothing ever wraps silently.  Denominators in this project stay tiny
// (they divide 4a with a <= 2300 in the largest acceptance run), so int64
// with checked products is ample and keeps the build free of bignum deps.
#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "floer/errors.hpp"

namespace floer {

using i64 = std::int64_t;
using i128 = __int128;

inline i64 checked_i64(i128 v, const char* ctx) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw OverflowError(std::string("int64 range exceeded in ") + ctx);
    return static_cast<i64>(v);
}

// Reduced fraction, den > 0.  Value semantics throughout.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(i64 n) : num_(n), den_(1) {}
    Rat(i64 n, i64 d) : num_(n), den_(d) { normalize(); }

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    friend Rat operator+(const Rat& x, const Rat& y) {
        i128 n = i128(x.num_) * y.den_ + i128(y.num_) * x.den_;
        i128 d = i128(x.den_) * y.den_;
        return from_i128(n, d, "Rat+");
    }
    friend Rat operator-(const Rat& x, const Rat& y) {
        i128 n = i128(x.num_) * y.den_ - i128(y.num_) * x.den_;
        i128 d = i128(x.den_) * y.den_;
        return from_i128(n, d, "Rat-");
    }
    friend Rat operator*(const Rat& x, const Rat& y) {
        return from_i128(i128(x.num_) * y.num_, i128(x.den_) * y.den_, "Rat*");
    }
    friend Rat operator/(const Rat& x, const Rat& y) {
        if (y.num_ == 0) throw OverflowError("division by zero rational");
        return from_i128(i128(x.num_) * y.den_, i128(x.den_) * y.num_, "Rat/");
    }
    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }

    friend bool operator==(const Rat& x, const Rat& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
    friend bool operator<(const Rat& x, const Rat& y) {
        return i128(x.num_) * y.den_ < i128(y.num_) * x.den_;
    }
    friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
    friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
    friend bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }

    // Representative of the value mod 1 in [0,1).
    Rat mod1() const {
        i64 q = num_ % den_;
        if (q < 0) q += den_;
        return Rat(q, den_);
    }

    // Distance to the nearest integer, in [0, 1/2].
    Rat dist_to_int() const {
        Rat f = mod1();
        Rat g = Rat(1) - f;
        return f < g ? f : g;
    }

    double to_double() const { return double(num_) / double(den_); }

    // Lowest-terms "p/q" (plain "p" when q = 1).
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Parses "p", "p/q", with optional leading '-'.
    static Rat parse(const std::string& s) {
        if (s.empty()) throw ParseError("empty fraction");
        auto slash = s.find('/');
        try {
            size_t used = 0;
            if (slash == std::string::npos) {
                i64 n = std::stoll(s, &used);
                if (used != s.size()) throw ParseError("trailing junk in fraction: " + s);
                return Rat(n);
            }
            i64 n = std::stoll(s.substr(0, slash), &used);
            if (used != slash) throw ParseError("bad numerator: " + s);
            i64 d = std::stoll(s.substr(slash + 1), &used);
            if (used != s.size() - slash - 1) throw ParseError("bad denominator: " + s);
            if (d == 0) throw ParseError("zero denominator: " + s);
            return Rat(n, d);
        } catch (const std::invalid_argument&) {
            throw ParseError("not a fraction: " + s);
        } catch (const std::out_of_range&) {
            throw OverflowError("fraction out of int64 range: " + s);
        }
    }

private:
    static Rat from_i128(i128 n, i128 d, const char* ctx) {
        if (d < 0) { n = -n; d = -d; }
        i128 a = n < 0 ? -n : n;
        i128 b = d;
        while (b) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        Rat r;
        r.num_ = checked_i64(n, ctx);
        r.den_ = checked_i64(d, ctx);
        return r;
    }

    void normalize() {
        if (den_ == 0) throw OverflowError("zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        i64 g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    i64 num_, den_;
};

// Rational extended with +infinity, used for filtration levels r and for
// the Q invariants.  Infinity compares greater than every rational.
class RatInf {
public:
    RatInf() : inf_(true) {}
    RatInf(const Rat& v) : inf_(false), v_(v) {}
    static RatInf infinity() { return RatInf(); }

    bool is_inf() const { return inf_; }
    const Rat& finite() const {
        if (inf_) throw InternalCheckFailure("finite() on infinity");
        return v_;
    }

    friend bool operator==(const RatInf& x, const RatInf& y) {
        if (x.inf_ || y.inf_) return x.inf_ && y.inf_;
        return x.v_ == y.v_;
    }
    friend bool operator!=(const RatInf& x, const RatInf& y) { return !(x == y); }
    friend bool operator<(const RatInf& x, const RatInf& y) {
        if (x.inf_) return false;
        if (y.inf_) return true;
        return x.v_ < y.v_;
    }
    friend bool operator<=(const RatInf& x, const RatInf& y) { return !(y < x); }
    friend bool operator>(const RatInf& x, const RatInf& y) { return y < x; }
    friend bool operator>=(const RatInf& x, const RatInf& y) { return !(x < y); }

    static RatInf min(const RatInf& x, const RatInf& y) { return x < y ? x : y; }

    std::string str() const { return inf_ ? "inf" : v_.str(); }

    // Parses "inf" or a fraction.
    static RatInf parse(const std::string& s) {
        if (s == "inf") return infinity();
        return RatInf(Rat::parse(s));
    }

private:
    bool inf_;
    Rat v_;
};

} // namespace floer
