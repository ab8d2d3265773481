#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cevian/scalar.hpp"

namespace cevian {

using Triple = std::array<Scalar, 3>;
using Mat3 = std::array<Triple, 3>;

// Projective point in homogeneous coordinates, kept in canonical scaling:
// the triple is divided by its first nonzero coordinate and then cleared of
// rational denominators and common integer content, so equal points have
// identical coordinate arrays.
class PPoint {
public:
    PPoint(Scalar x, Scalar y, Scalar z);
    explicit PPoint(Triple c);

    const Scalar& operator[](size_t i) const { return c_[i]; }
    const Triple& coords() const { return c_; }

    // Squarefree discriminant of the extension the coordinates live in;
    // 0 for rational points.
    Int discriminant() const;

    std::string str() const;

    friend bool operator==(const PPoint&, const PPoint&) = default;

private:
    Triple c_;
};

class PLine {
public:
    PLine(Scalar l, Scalar m, Scalar n);
    explicit PLine(Triple c);

    const Scalar& operator[](size_t i) const { return c_[i]; }
    const Triple& coords() const { return c_; }
    std::string str() const;

    friend bool operator==(const PLine&, const PLine&) = default;

private:
    Triple c_;
};

PLine join(const PPoint& p, const PPoint& q);
PPoint meet(const PLine& l, const PLine& m);
bool incident(const PPoint& p, const PLine& l);
Scalar dot(const PLine& l, const PPoint& p);

// Symmetric 3x3 form; point incidence is x^T M x = 0.  Entries are stored as
// (m00, m01, m02, m11, m12, m22) in canonical scaling.
class Conic {
public:
    explicit Conic(std::array<Scalar, 6> entries);
    static Conic from_matrix(const Mat3& m);

    const std::array<Scalar, 6>& entries() const { return e_; }
    Mat3 matrix() const;

    Scalar eval(const PPoint& p) const;
    bool contains(const PPoint& p) const { return eval(p).is_zero(); }
    Triple apply(const Triple& x) const; // M x

    Scalar det() const;
    bool degenerate() const { return det().is_zero(); }

    Int discriminant() const;

    friend bool operator==(const Conic&, const Conic&) = default;

private:
    std::array<Scalar, 6> e_;
};

enum class ConicType { ellipse, parabola, hyperbola };

// Invertible projective map that fixes the designated line at infinity as a
// set.  Acts on points by x -> T x.
class AffMap {
public:
    AffMap(Mat3 t, PLine linf);

    static AffMap identity(const PLine& linf);
    static AffMap from_triangles(const std::array<PPoint, 3>& src,
                                 const std::array<PPoint, 3>& dst,
                                 const PLine& linf);
    static AffMap homothety(const PPoint& center, const Scalar& ratio, const PLine& linf);
    static AffMap half_turn(const PPoint& center, const PLine& linf);
    // Harmonic homology fixing `axis` pointwise with the given center.
    static AffMap harmonic_homology(const PLine& axis, const PPoint& center, const PLine& linf);

    PPoint operator()(const PPoint& p) const;
    PLine apply_line(const PLine& l) const;
    Conic apply_conic(const Conic& c) const;

    // Composition: (f * g)(x) = f(g(x)).
    AffMap operator*(const AffMap& g) const;
    AffMap inverse() const;

    // Equality as projective maps (matrices proportional).
    bool same_map(const AffMap& o) const;

    const Mat3& matrix() const { return t_; }
    const PLine& line_at_infinity() const { return linf_; }

private:
    Mat3 t_;
    PLine linf_;
};

struct DilatationClass {
    enum class Kind { identity, translation, homothety, half_turn, not_dilatation };

    Kind kind = Kind::not_dilatation;
    std::optional<Scalar> ratio;      // homothety / half_turn
    std::optional<PPoint> center;     // homothety / half_turn
    std::optional<PPoint> direction;  // translation (a point on linf)

    bool is_dilatation() const { return kind != Kind::not_dilatation; }
    bool is_half_turn() const { return kind == Kind::half_turn; }

    static DilatationClass make_identity();
    static DilatationClass make_translation(PPoint dir);
    // Normalizes ratio -1 to half_turn; ratio must not be 1.
    static DilatationClass make_homothety(Scalar ratio, PPoint center);
    static DilatationClass make_not_dilatation();

    std::string kind_name() const;
};

DilatationClass classify_dilatation(const AffMap& t, const PLine& linf);

// --- conic construction and queries ---------------------------------------

// Unique conic through five points (exact null space of the incidence
// system).  Degenerate results are allowed; callers can test degenerate().
Conic conic_through_five(const PPoint& p1, const PPoint& p2, const PPoint& p3,
                         const PPoint& p4, const PPoint& p5);

// Conic with prescribed ordinary center through three points.
Conic conic_with_center_through(const PPoint& center, const PPoint& p1,
                                const PPoint& p2, const PPoint& p3,
                                const PLine& linf);

// Conic tangent to tangents[i] at points[i] (three tangency constraints).
Conic conic_tangent_to_three(const std::array<PPoint, 3>& points,
                             const std::array<PLine, 3>& tangents);

PPoint center(const Conic& c, const PLine& linf);
PLine polar(const PPoint& p, const Conic& c);
PPoint pole(const PLine& l, const Conic& c);
PLine tangent_at(const PPoint& p, const Conic& c);
ConicType conic_type(const Conic& c, const PLine& linf);

// Exact intersection; 0, 1 (tangency) or 2 points, possibly over an extended
// field when the restricted discriminant is not a square.
std::vector<PPoint> line_conic_intersect(const PLine& l, const Conic& c);

// Intersection of two conics inducing the same involution on linf, via the
// radical-line member of their pencil.  Up to two points.
std::vector<PPoint> conic_conic_intersect_shared_infinity(const Conic& c1, const Conic& c2,
                                                          const PLine& linf);

bool interior(const PPoint& p, const Conic& c, const PLine& linf);

// --- affine operations in the chart of linf --------------------------------

Triple normalize_affine(const PPoint& p, const PLine& linf); // linf . p == 1
PPoint midpoint(const PPoint& p, const PPoint& q, const PLine& linf);
PPoint reflect_in_point(const PPoint& p, const PPoint& c, const PLine& linf);
PPoint affine_combination(std::initializer_list<std::pair<Scalar, PPoint>> terms,
                          const PLine& linf);
PPoint centroid_of(const PPoint& p, const PPoint& q, const PPoint& r, const PLine& linf);
// (a - b) / (b - c) along a common line; a, b, c collinear, b != c.
Scalar signed_ratio(const PPoint& a, const PPoint& b, const PPoint& c, const PLine& linf);
bool collinear(const PPoint& a, const PPoint& b, const PPoint& c);

// Two independent points spanning a line.
std::array<Triple, 2> line_span(const PLine& l);

// --- exact linear algebra helpers ------------------------------------------

Mat3 mat_mul(const Mat3& a, const Mat3& b);
Triple mat_vec(const Mat3& m, const Triple& v);
Scalar det3(const Mat3& m);
Mat3 adjugate(const Mat3& m);
Mat3 transpose(const Mat3& m);
bool proportional(const Triple& u, const Triple& v);

} // namespace cevian
