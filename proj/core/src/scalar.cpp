#include "cevian/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace cevian {

Scalar::Scalar(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    canonicalize();
}

void Scalar::canonicalize() {
    if (d_ < 0)
        throw InternalError("negative discriminant");
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
        d_ = 0;
    }
    if (b_ == 0)
        d_ = 0;
    else if (d_ == 0) {
        a_ += b_; // sqrt(0) convention never arises; treat stray b as rational
        b_ = 0;
    }
}

Scalar Scalar::adjoin(const Rat& r, const Int& d) {
    if (d <= 1)
        throw NonSquarefreeDiscriminant("adjoin requires d > 1");
    if (squarefree_part(d) != d)
        throw NonSquarefreeDiscriminant();
    if (r == 0)
        return Scalar();
    return Scalar(Rat(0), r, d);
}

Scalar Scalar::sqrt_rational(const Rat& r) {
    if (r < 0)
        throw Error("sqrt of a negative rational");
    if (r == 0)
        return Scalar();
    // sqrt(num/den) = sqrt(num*den)/den
    Int radicand = r.get_num() * r.get_den();
    Int k;
    Int s = squarefree_part(radicand, &k);
    Rat coeff(k, r.get_den());
    coeff.canonicalize();
    if (s == 1)
        return Scalar(coeff);
    return Scalar(Rat(0), coeff, s);
}

const Int& Scalar::common_discriminant(const Scalar& s, const Scalar& t) {
    if (s.d_ == 0)
        return t.d_;
    if (t.d_ == 0 || s.d_ == t.d_)
        return s.d_;
    throw MixedDiscriminants();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = common_discriminant(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = common_discriminant(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    const Int d = common_discriminant(*this, o);
    Rat a = a_ * o.a_;
    if (d != 0)
        a += b_ * o.b_ * Rat(d);
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    canonicalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw DivisionByZero();
    if (is_rational())
        return Scalar(1 / a_);
    // (a + b sqrt d)^-1 = (a - b sqrt d) / (a^2 - b^2 d); the norm cannot
    // vanish for nonzero values since d is not a square.
    Rat norm = a_ * a_ - b_ * b_ * Rat(d_);
    if (norm == 0)
        throw InternalError("vanishing norm on a nonzero value");
    return Scalar(a_ / norm, -b_ / norm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

int Scalar::sign() const {
    const int sa = sgn(a_);
    if (is_rational())
        return sa;
    const int sb = sgn(b_);
    if (sa == 0)
        return sb;
    if (sb == 0 || sa == sb)
        return sa;
    // Opposite signs: compare a^2 against b^2 d.
    const Rat lhs = a_ * a_, rhs = b_ * b_ * Rat(d_);
    const int c = cmp(lhs, rhs);
    if (c > 0)
        return sa;
    if (c < 0)
        return sb;
    return 0; // unreachable for squarefree d > 1
}

int Scalar::compare(const Scalar& s, const Scalar& t) {
    return (s - t).sign();
}

std::optional<Scalar> Scalar::exact_sqrt() const {
    if (sign() < 0)
        return std::nullopt;
    if (is_zero())
        return Scalar();
    if (is_rational()) {
        return sqrt_rational(a_);
    }
    // Want x + y sqrt(d) with x^2 + y^2 d = a, 2xy = b.  Then x^2 and y^2 d
    // are the roots of T^2 - a T + b^2 d / 4, so a^2 - b^2 d must be a
    // rational square, and so must (a +- c)/2.
    const Rat norm = a_ * a_ - b_ * b_ * Rat(d_);
    Rat c;
    if (!rational_sqrt(norm, c))
        return std::nullopt;
    for (int pick = 0; pick < 2; ++pick) {
        const Rat x2 = pick == 0 ? (a_ + c) / 2 : (a_ - c) / 2;
        Rat x;
        if (x2 <= 0 || !rational_sqrt(x2, x))
            continue;
        const Rat y = b_ / (2 * x);
        Scalar candidate(x, y, d_);
        if (candidate * candidate == *this)
            return candidate.sign() >= 0 ? candidate : -candidate;
    }
    return std::nullopt;
}

double Scalar::to_double() const {
    double v = a_.get_d();
    if (!is_rational())
        v += b_.get_d() * std::sqrt(d_.get_d());
    return v;
}

namespace {

std::string rat_str(const Rat& r) {
    return r.get_str();
}

struct Cursor {
    std::string_view s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat_word(std::string_view w) {
        skip_ws();
        if (s.substr(i, w.size()) == w) {
            i += w.size();
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return i == s.size();
    }
};

bool parse_uint(Cursor& c, Int& out) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        ++c.i;
    if (c.i == start)
        return false;
    out = Int(std::string(c.s.substr(start, c.i - start)), 10);
    return true;
}

// rational := ['-'] UINT ['/' UINT]
bool parse_rational(Cursor& c, Rat& out, bool allow_sign = true) {
    c.skip_ws();
    bool neg = false;
    if (allow_sign && c.eat('-'))
        neg = true;
    else if (allow_sign && c.eat('+'))
        neg = false;
    Int num;
    if (!parse_uint(c, num))
        return false;
    Int den = 1;
    if (c.eat('/')) {
        if (!parse_uint(c, den) || den == 0)
            throw Error("bad rational literal");
    }
    out = Rat(neg ? -num : num, den);
    out.canonicalize();
    return true;
}

// part := rational | [rational '*'] 'sqrt' '(' UINT ')'
// Returns (rational part, radical coefficient, discriminant) of one part.
bool parse_part(Cursor& c, Rat& rat, Rat& rad, Int& d, bool allow_sign) {
    c.skip_ws();
    bool neg = false;
    if (allow_sign) {
        if (c.eat('-'))
            neg = true;
        else
            c.eat('+');
    }
    Rat coeff;
    const bool has_coeff = parse_rational(c, coeff, /*allow_sign=*/false);
    if (has_coeff) {
        if (!c.eat('*')) {
            rat = neg ? -coeff : coeff;
            rad = 0;
            d = 0;
            return true;
        }
        if (!c.eat_word("sqrt"))
            throw Error("expected sqrt after '*'");
    } else if (c.eat_word("sqrt")) {
        coeff = 1;
    } else {
        return false;
    }
    if (!c.eat('('))
        throw Error("expected '(' after sqrt");
    Int disc;
    if (!parse_uint(c, disc))
        throw Error("expected integer inside sqrt()");
    if (!c.eat(')'))
        throw Error("expected ')' after sqrt(");
    rat = 0;
    rad = neg ? -coeff : coeff;
    d = disc;
    return true;
}

} // namespace

std::string Scalar::str() const {
    if (is_rational())
        return rat_str(a_);
    std::ostringstream os;
    bool need_sign = false;
    if (a_ != 0) {
        os << rat_str(a_);
        need_sign = true;
    }
    if (b_ < 0)
        os << '-';
    else if (need_sign)
        os << '+';
    os << rat_str(abs(b_)) << "*sqrt(" << d_.get_str() << ')';
    return os.str();
}

Scalar Scalar::parse(std::string_view text) {
    Cursor c{text};
    Rat rat1, rad1;
    Int d1;
    if (!parse_part(c, rat1, rad1, d1, /*allow_sign=*/true))
        throw Error("empty scalar literal");
    Rat rat = rat1, rad = rad1;
    Int d = d1;
    c.skip_ws();
    if (!c.done()) {
        Rat rat2, rad2;
        Int d2;
        if (!parse_part(c, rat2, rad2, d2, /*allow_sign=*/true))
            throw Error("trailing characters in scalar literal");
        if ((rad != 0 && rad2 != 0) || (rat != 0 && rat2 != 0 && rad2 == 0))
            throw Error("scalar literal has more than one part of the same kind");
        rat += rat2;
        rad += rad2;
        if (rad2 != 0)
            d = d2;
    }
    if (!c.done())
        throw Error("trailing characters in scalar literal");
    if (rad == 0)
        return Scalar(rat);
    // Non-squarefree discriminants in literals are folded, sqrt(12) -> 2*sqrt(3).
    if (d <= 0)
        throw Error("sqrt argument must be positive");
    Scalar radical = sqrt_rational(Rat(d)) * Scalar(rad);
    return Scalar(rat) + radical;
}

} // namespace cevian
