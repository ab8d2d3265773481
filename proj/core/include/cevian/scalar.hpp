#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cevian/arith.hpp"
#include "cevian/errors.hpp"

namespace cevian {

// Exact element a + b*sqrt(d) of Q or of a real quadratic field Q(sqrt(d)).
// d is a squarefree integer > 1, or 0 for purely rational values.  Values are
// kept canonical: b == 0 forces d == 0, and fractions are fully reduced with
// positive denominator (mpq_class maintains the latter).
//
// Values from distinct extensions never combine; arithmetic between
// Q(sqrt(d)) and Q(sqrt(d')) with d != d' throws MixedDiscriminants.
class Scalar {
public:
    Scalar() : a_(0), b_(0), d_(0) {}
    Scalar(long n) : a_(n), b_(0), d_(0) {} // NOLINT: implicit on purpose
    Scalar(const Rat& r) : a_(r), b_(0), d_(0) {}
    Scalar(Rat a, Rat b, Int d);

    // r * sqrt(d).  d must be squarefree and > 1.
    static Scalar adjoin(const Rat& r, const Int& d);

    // Exact real square root of a nonnegative rational, extending the field
    // when needed; sqrt(12) comes back as 2*sqrt(3).
    static Scalar sqrt_rational(const Rat& r);

    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    const Int& discriminant() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    // Exact sign of the real value, computed without floating point.
    int sign() const;

    Scalar inverse() const;

    // Exact square root staying inside this value's field (or extending Q when
    // the value is rational).  nullopt when no such root exists.
    std::optional<Scalar> exact_sqrt() const;

    Scalar operator-() const { return Scalar(-a_, -b_, d_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    // Canonical forms are unique, so structural equality is value equality
    // (values in distinct real quadratic fields can only coincide in Q).
    friend bool operator==(const Scalar& s, const Scalar& t) {
        return s.d_ == t.d_ && s.a_ == t.a_ && s.b_ == t.b_;
    }
    friend bool operator!=(const Scalar& s, const Scalar& t) { return !(s == t); }

    // Sign of s - t; operands must be comparable.
    static int compare(const Scalar& s, const Scalar& t);

    double to_double() const;

    // Canonical literal: "3", "-4/7", "-4+1*sqrt(19)", "2*sqrt(6)".
    std::string str() const;
    static Scalar parse(std::string_view text);

private:
    Rat a_, b_;
    Int d_;

    void canonicalize();
    static const Int& common_discriminant(const Scalar& s, const Scalar& t);
};

inline Scalar operator+(long n, const Scalar& s) { return Scalar(n) + s; }
inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

} // namespace cevian
