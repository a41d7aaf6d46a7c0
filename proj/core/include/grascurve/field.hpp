#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "grascurve/errors.hpp"

namespace grascurve {

// Exact rationals. mpq_class keeps values in lowest terms with positive
// denominator, which is exactly the FieldScalar invariant.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r(s);
            r.canonicalize();
            return r;
        }
        Rat r(s.substr(0, slash) + "/" + s.substr(slash + 1));
        if (mpz_sgn(r.get_den().get_mpz_t()) == 0)
            throw ParseError("zero denominator in rational: " + s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational: " + s);
    }
}

// "num/den" with den omitted when 1.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Prime field GF(p), p prime < 2^31. Every element carries its modulus so
// generic code needs no field descriptor; mixing moduli throws.
class GFp {
public:
    GFp() : v_(0), p_(0) {}
    GFp(std::int64_t v, std::int64_t p) : p_(p) {
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }

    friend GFp operator+(const GFp& a, const GFp& b) {
        a.check(b);
        return GFp(a.v_ + b.v_, a.p_);
    }
    friend GFp operator-(const GFp& a, const GFp& b) {
        a.check(b);
        return GFp(a.v_ - b.v_, a.p_);
    }
    friend GFp operator*(const GFp& a, const GFp& b) {
        a.check(b);
        return GFp(a.v_ * b.v_, a.p_);
    }
    friend GFp operator/(const GFp& a, const GFp& b) { return a * b.inverse(); }
    GFp operator-() const { return GFp(-v_, p_); }
    GFp& operator+=(const GFp& o) { return *this = *this + o; }
    GFp& operator-=(const GFp& o) { return *this = *this - o; }
    GFp& operator*=(const GFp& o) { return *this = *this * o; }
    GFp& operator/=(const GFp& o) { return *this = *this / o; }
    friend bool operator==(const GFp& a, const GFp& b) {
        a.check(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }

    GFp inverse() const {
        if (v_ == 0) throw Error("DivisionByZero", "inverse of 0 in GF(p)");
        // extended Euclid
        std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
        while (m != 0) {
            std::int64_t q = a / m;
            std::int64_t t = a - q * m;
            a = m; m = t;
            t = x0 - q * x1;
            x0 = x1; x1 = t;
        }
        return GFp(x0, p_);
    }

private:
    void check(const GFp& o) const {
        if (p_ != o.p_) throw FieldMismatch("GF(p) elements with different moduli");
    }
    std::int64_t v_;
    std::int64_t p_;
};

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Uniform field interface for the generic linear algebra. `like` supplies the
// modulus for GF(p); it is ignored for Rat.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Rat> {
    static Rat zero(const Rat&) { return Rat(0); }
    static Rat one(const Rat&) { return Rat(1); }
    static bool is_zero(const Rat& x) { return sgn(x) == 0; }
    static Rat inv(const Rat& x) { return Rat(1) / x; }
    static std::string str(const Rat& x) { return rat_to_string(x); }
};

template <>
struct FieldOps<GFp> {
    static GFp zero(const GFp& like) { return GFp(0, like.modulus()); }
    static GFp one(const GFp& like) { return GFp(1, like.modulus()); }
    static bool is_zero(const GFp& x) { return x.value() == 0; }
    static GFp inv(const GFp& x) { return x.inverse(); }
    static std::string str(const GFp& x) { return std::to_string(x.value()); }
};

// Reduce a rational mod p; denominators divisible by p are a bad reduction.
inline GFp reduce_mod_p(const Rat& r, std::int64_t p) {
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class pz(static_cast<long>(p));
    mpz_class dm = den % pz;
    if (dm == 0) throw BadReduction("denominator divisible by p");
    mpz_class nm = num % pz;
    GFp n(nm.get_si(), p), d(dm.get_si(), p);
    return n / d;
}

}  // namespace grascurve
