#include "cevian/projective.hpp"

#include <algorithm>
#include <sstream>

namespace cevian {

namespace {

template <size_t N>
Int tuple_discriminant(const std::array<Scalar, N>& v) {
    Int d = 0;
    for (const auto& x : v) {
        if (x.discriminant() > 1) {
            if (d == 0)
                d = x.discriminant();
            else if (d != x.discriminant())
                throw MixedDiscriminants();
        }
    }
    return d;
}

// Canonical scaling of a homogeneous coordinate tuple: divide by the first
// nonzero entry, then clear denominators and common integer content.  Equal
// projective objects end up with identical entries.
template <size_t N>
void canonicalize_tuple(std::array<Scalar, N>& v) {
    size_t first = N;
    for (size_t i = 0; i < N; ++i) {
        if (!v[i].is_zero()) {
            first = i;
            break;
        }
    }
    if (first == N)
        throw ZeroTriple();
    const Scalar lead = v[first];
    for (auto& x : v)
        x = x / lead;
    Int denom_lcm = 1;
    for (const auto& x : v) {
        denom_lcm = lcm(denom_lcm, x.rational_part().get_den());
        if (!x.is_rational())
            denom_lcm = lcm(denom_lcm, x.radical_part().get_den());
    }
    Int content = 0;
    auto fold_num = [&](const Rat& r) {
        if (r != 0)
            content = gcd(content, r.get_num() * (denom_lcm / r.get_den()));
    };
    for (const auto& x : v) {
        fold_num(x.rational_part());
        fold_num(x.radical_part());
    }
    Rat scale(denom_lcm, content);
    scale.canonicalize();
    const Scalar s(scale);
    for (auto& x : v)
        x = x * s;
}

Triple cross(const Triple& a, const Triple& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

bool triple_zero(const Triple& t) {
    return t[0].is_zero() && t[1].is_zero() && t[2].is_zero();
}

Triple scale_triple(const Scalar& k, const Triple& t) {
    return {k * t[0], k * t[1], k * t[2]};
}

Triple add_triple(const Triple& a, const Triple& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Triple sub_triple(const Triple& a, const Triple& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Scalar dot3(const Triple& a, const Triple& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <size_t N>
std::string tuple_str(const std::array<Scalar, N>& v, char open, char close) {
    std::ostringstream os;
    os << open;
    for (size_t i = 0; i < N; ++i) {
        if (i)
            os << " : ";
        os << v[i].str();
    }
    os << close;
    return os.str();
}

} // namespace

bool proportional(const Triple& u, const Triple& v) {
    return triple_zero(cross(u, v));
}

// --- PPoint / PLine ---------------------------------------------------------

PPoint::PPoint(Scalar x, Scalar y, Scalar z) : c_{std::move(x), std::move(y), std::move(z)} {
    canonicalize_tuple(c_);
}

PPoint::PPoint(Triple c) : c_(std::move(c)) {
    canonicalize_tuple(c_);
}

Int PPoint::discriminant() const {
    return tuple_discriminant(c_);
}

std::string PPoint::str() const {
    return tuple_str(c_, '(', ')');
}

PLine::PLine(Scalar l, Scalar m, Scalar n) : c_{std::move(l), std::move(m), std::move(n)} {
    canonicalize_tuple(c_);
}

PLine::PLine(Triple c) : c_(std::move(c)) {
    canonicalize_tuple(c_);
}

std::string PLine::str() const {
    return tuple_str(c_, '[', ']');
}

PLine join(const PPoint& p, const PPoint& q) {
    Triple c = cross(p.coords(), q.coords());
    if (triple_zero(c))
        throw CoincidentArguments("join of coincident points");
    return PLine(std::move(c));
}

PPoint meet(const PLine& l, const PLine& m) {
    Triple c = cross(l.coords(), m.coords());
    if (triple_zero(c))
        throw CoincidentArguments("meet of coincident lines");
    return PPoint(std::move(c));
}

Scalar dot(const PLine& l, const PPoint& p) {
    return dot3(l.coords(), p.coords());
}

bool incident(const PPoint& p, const PLine& l) {
    return dot(l, p).is_zero();
}

// --- Conic ------------------------------------------------------------------

Conic::Conic(std::array<Scalar, 6> entries) : e_(std::move(entries)) {
    canonicalize_tuple(e_);
}

Conic Conic::from_matrix(const Mat3& m) {
    if (!(m[0][1] == m[1][0] && m[0][2] == m[2][0] && m[1][2] == m[2][1]))
        throw InternalError("conic matrix is not symmetric");
    return Conic({m[0][0], m[0][1], m[0][2], m[1][1], m[1][2], m[2][2]});
}

Mat3 Conic::matrix() const {
    return {Triple{e_[0], e_[1], e_[2]},
            Triple{e_[1], e_[3], e_[4]},
            Triple{e_[2], e_[4], e_[5]}};
}

Triple Conic::apply(const Triple& x) const {
    return mat_vec(matrix(), x);
}

Scalar Conic::eval(const PPoint& p) const {
    const Triple& x = p.coords();
    return dot3(x, apply(x));
}

Scalar Conic::det() const {
    return det3(matrix());
}

Int Conic::discriminant() const {
    return tuple_discriminant(e_);
}

// --- exact 3x3 helpers --------------------------------------------------

Triple mat_vec(const Mat3& m, const Triple& v) {
    return {dot3(m[0], v), dot3(m[1], v), dot3(m[2], v)};
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    return r;
}

Scalar det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 transpose(const Mat3& m) {
    Mat3 r;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            r[i][j] = m[j][i];
    return r;
}

Mat3 adjugate(const Mat3& m) {
    Mat3 r;
    for (size_t i = 0; i < 3; ++i) {
        for (size_t j = 0; j < 3; ++j) {
            const size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            r[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        }
    }
    return r;
}

// --- AffMap -------------------------------------------------------------

AffMap::AffMap(Mat3 t, PLine linf) : t_(std::move(t)), linf_(std::move(linf)) {
    if (det3(t_).is_zero())
        throw Error("affine map matrix is singular");
    const Triple row = mat_vec(transpose(t_), linf_.coords()); // linf^T T
    if (!proportional(row, linf_.coords()))
        throw Error("map does not fix the line at infinity");
}

AffMap AffMap::identity(const PLine& linf) {
    Mat3 m{Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}};
    return AffMap(std::move(m), linf);
}

AffMap AffMap::from_triangles(const std::array<PPoint, 3>& src,
                              const std::array<PPoint, 3>& dst,
                              const PLine& linf) {
    Mat3 s, d;
    for (size_t i = 0; i < 3; ++i) {
        const Triple hs = normalize_affine(src[i], linf);
        const Triple hd = normalize_affine(dst[i], linf);
        for (size_t r = 0; r < 3; ++r) {
            s[r][i] = hs[r];
            d[r][i] = hd[r];
        }
    }
    if (det3(s).is_zero() || det3(d).is_zero())
        throw CollinearTriple();
    return AffMap(mat_mul(d, adjugate(s)), linf);
}

AffMap AffMap::homothety(const PPoint& center, const Scalar& ratio, const PLine& linf) {
    if (ratio.is_zero())
        throw Error("homothety ratio must be nonzero");
    const Scalar w = dot(linf, center);
    if (w.is_zero())
        throw PointAtInfinity("homothety center at infinity");
    // x -> ratio * x + (1 - ratio) * center, homogeneously.
    Mat3 m{};
    const Scalar one_minus(Scalar(1) - ratio);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            m[i][j] = one_minus * center[i] * linf[j];
            if (i == j)
                m[i][j] += ratio * w;
        }
    return AffMap(std::move(m), linf);
}

AffMap AffMap::half_turn(const PPoint& center, const PLine& linf) {
    return homothety(center, Scalar(-1), linf);
}

AffMap AffMap::harmonic_homology(const PLine& axis, const PPoint& center, const PLine& linf) {
    const Scalar ac = dot(axis, center);
    if (ac.is_zero())
        throw DegenerateAxis("homology center lies on its axis");
    Mat3 m{};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            m[i][j] = Scalar(-2) * center[i] * axis[j];
            if (i == j)
                m[i][j] += ac;
        }
    return AffMap(std::move(m), linf);
}

PPoint AffMap::operator()(const PPoint& p) const {
    return PPoint(mat_vec(t_, p.coords()));
}

PLine AffMap::apply_line(const PLine& l) const {
    return PLine(mat_vec(transpose(adjugate(t_)), l.coords()));
}

Conic AffMap::apply_conic(const Conic& c) const {
    const Mat3 b = adjugate(t_);
    return Conic::from_matrix(mat_mul(transpose(b), mat_mul(c.matrix(), b)));
}

AffMap AffMap::operator*(const AffMap& g) const {
    return AffMap(mat_mul(t_, g.t_), linf_);
}

AffMap AffMap::inverse() const {
    return AffMap(adjugate(t_), linf_);
}

bool AffMap::same_map(const AffMap& o) const {
    size_t pi = 3, pj = 3;
    for (size_t i = 0; i < 3 && pi == 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            if (!t_[i][j].is_zero()) {
                pi = i;
                pj = j;
                break;
            }
    if (pi == 3)
        throw InternalError("zero matrix in AffMap");
    if (o.t_[pi][pj].is_zero())
        return false;
    const Scalar r = o.t_[pi][pj] / t_[pi][pj];
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            if (o.t_[i][j] != r * t_[i][j])
                return false;
    return true;
}

// --- dilatation classification -------------------------------------------

DilatationClass DilatationClass::make_identity() {
    DilatationClass c;
    c.kind = Kind::identity;
    c.ratio = Scalar(1);
    return c;
}

DilatationClass DilatationClass::make_translation(PPoint dir) {
    DilatationClass c;
    c.kind = Kind::translation;
    c.ratio = Scalar(1);
    c.direction = std::move(dir);
    return c;
}

DilatationClass DilatationClass::make_homothety(Scalar ratio, PPoint center) {
    if (ratio == Scalar(1))
        throw InternalError("homothety class with ratio 1");
    DilatationClass c;
    c.kind = ratio == Scalar(-1) ? Kind::half_turn : Kind::homothety;
    c.ratio = std::move(ratio);
    c.center = std::move(center);
    return c;
}

DilatationClass DilatationClass::make_not_dilatation() {
    return DilatationClass{};
}

std::string DilatationClass::kind_name() const {
    switch (kind) {
    case Kind::identity: return "identity";
    case Kind::translation: return "translation";
    case Kind::homothety: return "homothety";
    case Kind::half_turn: return "half_turn";
    case Kind::not_dilatation: return "not_dilatation";
    }
    return "?";
}

namespace {

// Two independent points spanning a line, as raw triples.
std::array<Triple, 2> span_of_line(const Triple& l) {
    const std::array<Triple, 3> units = {Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}};
    std::vector<Triple> candidates;
    for (const auto& e : units) {
        Triple c = cross(l, e);
        if (!triple_zero(c))
            candidates.push_back(std::move(c));
    }
    for (size_t i = 0; i < candidates.size(); ++i)
        for (size_t j = i + 1; j < candidates.size(); ++j)
            if (!proportional(candidates[i], candidates[j]))
                return {candidates[i], candidates[j]};
    throw InternalError("could not span line");
}

// Ratio Au / u for proportional nonzero triples.
Scalar proportionality_factor(const Triple& image, const Triple& original) {
    for (size_t i = 0; i < 3; ++i)
        if (!original[i].is_zero())
            return image[i] / original[i];
    throw InternalError("zero triple has no proportionality factor");
}

} // namespace

std::array<Triple, 2> line_span(const PLine& l) {
    return span_of_line(l.coords());
}

DilatationClass classify_dilatation(const AffMap& t, const PLine& linf) {
    const auto [u, v] = span_of_line(linf.coords());
    const Mat3& m = t.matrix();
    const Triple mu_vec = mat_vec(m, u);
    const Triple mv_vec = mat_vec(m, v);
    if (!proportional(mu_vec, u) || !proportional(mv_vec, v))
        return DilatationClass::make_not_dilatation();
    const Scalar alpha = proportionality_factor(mu_vec, u);
    if (alpha != proportionality_factor(mv_vec, v))
        return DilatationClass::make_not_dilatation();
    const Triple left = mat_vec(transpose(m), linf.coords());
    const Scalar mu = proportionality_factor(left, linf.coords());
    const Scalar k = alpha / mu;

    if (k == Scalar(1)) {
        // Translation or identity: displacement of any ordinary point.
        const std::array<Triple, 3> units = {Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}};
        for (const auto& e : units) {
            const Scalar w = dot3(linf.coords(), e);
            if (w.is_zero())
                continue;
            Triple ehat = scale_triple(w.inverse(), e);
            Triple disp = sub_triple(mat_vec(m, ehat), scale_triple(mu, ehat));
            if (triple_zero(disp))
                return DilatationClass::make_identity();
            return DilatationClass::make_translation(PPoint(std::move(disp)));
        }
        throw InternalError("no ordinary unit point");
    }

    // Fixed point: kernel of (T - mu I), a rank-2 matrix.
    Mat3 r = m;
    for (size_t i = 0; i < 3; ++i)
        r[i][i] -= mu;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) {
            Triple c = cross(r[i], r[j]);
            if (!triple_zero(c)) {
                PPoint center(std::move(c));
                if (!proportional(mat_vec(m, center.coords()), center.coords()))
                    throw InternalError("dilatation center is not fixed");
                return DilatationClass::make_homothety(k, std::move(center));
            }
        }
    throw InternalError("dilatation has no isolated fixed point");
}

// --- conic construction ---------------------------------------------------

namespace {

using Row6 = std::array<Scalar, 6>;

Row6 incidence_row(const PPoint& p) {
    const Scalar &x = p[0], &y = p[1], &z = p[2];
    return {x * x, 2 * (x * y), 2 * (x * z), y * y, 2 * (y * z), z * z};
}

// Rows expressing that the polar M p is proportional to the line l.
void polar_rows(const PPoint& p, const Triple& l, std::vector<Row6>& rows) {
    const Scalar &x = p[0], &y = p[1], &z = p[2];
    const Row6 mp[3] = {
        {x, y, z, Scalar(0), Scalar(0), Scalar(0)},
        {Scalar(0), x, Scalar(0), y, z, Scalar(0)},
        {Scalar(0), Scalar(0), x, Scalar(0), y, z},
    };
    const std::array<std::pair<size_t, size_t>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
    for (const auto& [i, j] : pairs) {
        Row6 row;
        for (size_t k = 0; k < 6; ++k)
            row[k] = l[j] * mp[i][k] - l[i] * mp[j][k];
        rows.push_back(std::move(row));
    }
}

// One-dimensional kernel of the stacked constraint rows.
Row6 conic_kernel(std::vector<Row6> rows) {
    constexpr size_t n = 6;
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
    for (size_t col = 0; col < n && rank < rows.size(); ++col) {
        size_t piv = rows.size();
        for (size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows.size())
            continue;
        std::swap(rows[rank], rows[piv]);
        const Scalar inv = rows[rank][col].inverse();
        for (size_t j = col; j < n; ++j)
            rows[rank][j] = rows[rank][j] * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero())
                continue;
            const Scalar f = rows[r][col];
            for (size_t j = col; j < n; ++j)
                rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    if (n - rank > 1)
        throw UnderdeterminedConic();
    if (n - rank == 0)
        throw InternalError("conic constraints admit only the zero form");
    std::array<bool, n> is_pivot{};
    for (size_t c : pivot_cols)
        is_pivot[c] = true;
    size_t free_col = n;
    for (size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    Row6 v{};
    v[free_col] = Scalar(1);
    for (size_t r = 0; r < rank; ++r)
        v[pivot_cols[r]] = -rows[r][free_col];
    return v;
}

} // namespace

Conic conic_through_five(const PPoint& p1, const PPoint& p2, const PPoint& p3,
                         const PPoint& p4, const PPoint& p5) {
    const std::array<const PPoint*, 5> pts = {&p1, &p2, &p3, &p4, &p5};
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = i + 1; j < 5; ++j)
            if (*pts[i] == *pts[j])
                throw CoincidentArguments("conic through five needs distinct points");
    std::vector<Row6> rows;
    rows.reserve(5);
    for (const PPoint* p : pts)
        rows.push_back(incidence_row(*p));
    return Conic(conic_kernel(std::move(rows)));
}

Conic conic_with_center_through(const PPoint& center, const PPoint& p1,
                                const PPoint& p2, const PPoint& p3,
                                const PLine& linf) {
    std::vector<Row6> rows;
    rows.push_back(incidence_row(p1));
    rows.push_back(incidence_row(p2));
    rows.push_back(incidence_row(p3));
    polar_rows(center, linf.coords(), rows);
    return Conic(conic_kernel(std::move(rows)));
}

Conic conic_tangent_to_three(const std::array<PPoint, 3>& points,
                             const std::array<PLine, 3>& tangents) {
    std::vector<Row6> rows;
    for (size_t i = 0; i < 3; ++i) {
        rows.push_back(incidence_row(points[i]));
        polar_rows(points[i], tangents[i].coords(), rows);
    }
    return Conic(conic_kernel(std::move(rows)));
}

PPoint center(const Conic& c, const PLine& linf) {
    if (c.degenerate())
        throw DegenerateConic();
    Triple p = mat_vec(adjugate(c.matrix()), linf.coords());
    if (triple_zero(p))
        throw InternalError("adjugate of a nondegenerate conic vanished");
    if (dot3(linf.coords(), p).is_zero())
        throw CenterAtInfinity();
    return PPoint(std::move(p));
}

PLine polar(const PPoint& p, const Conic& c) {
    if (c.degenerate())
        throw DegenerateConic();
    return PLine(c.apply(p.coords()));
}

PPoint pole(const PLine& l, const Conic& c) {
    if (c.degenerate())
        throw DegenerateConic();
    return PPoint(mat_vec(adjugate(c.matrix()), l.coords()));
}

PLine tangent_at(const PPoint& p, const Conic& c) {
    if (!c.contains(p))
        throw PointNotOnConic();
    return polar(p, c);
}

ConicType conic_type(const Conic& c, const PLine& linf) {
    const auto [u, v] = span_of_line(linf.coords());
    const Mat3 m = c.matrix();
    const Scalar a = dot3(u, mat_vec(m, u));
    const Scalar b = dot3(u, mat_vec(m, v));
    const Scalar cc = dot3(v, mat_vec(m, v));
    const int s = (b * b - a * cc).sign();
    if (s < 0)
        return ConicType::ellipse;
    if (s == 0)
        return ConicType::parabola;
    return ConicType::hyperbola;
}

std::vector<PPoint> line_conic_intersect(const PLine& l, const Conic& c) {
    if (c.degenerate())
        throw DegenerateConic();
    const auto [p0, p1] = span_of_line(l.coords());
    const Mat3 m = c.matrix();
    const Scalar a = dot3(p0, mat_vec(m, p0));
    const Scalar b = dot3(p0, mat_vec(m, p1));
    const Scalar cc = dot3(p1, mat_vec(m, p1));

    // Compatibility scope for any square root we may have to take.
    Int ambient = 0;
    for (const Scalar* s : {&a, &b, &cc}) {
        const Int& d = s->discriminant();
        if (d > 1) {
            if (ambient == 0)
                ambient = d;
            else if (ambient != d)
                throw MixedDiscriminants();
        }
    }

    std::vector<PPoint> out;
    auto emit = [&](const Scalar& s, const Scalar& t) {
        out.emplace_back(add_triple(scale_triple(s, p0), scale_triple(t, p1)));
    };

    if (a.is_zero()) {
        if (b.is_zero()) {
            if (cc.is_zero())
                throw InternalError("line lies on a nondegenerate conic");
            emit(Scalar(1), Scalar(0)); // double root at p0
            return out;
        }
        emit(Scalar(1), Scalar(0));
        emit(cc, Scalar(-2) * b);
        return out;
    }

    const Scalar disc = b * b - a * cc;
    const int s = disc.sign();
    if (s < 0)
        return out;
    if (s == 0) {
        emit(-b, a);
        return out;
    }
    const auto root = disc.exact_sqrt();
    if (!root)
        throw MixedDiscriminants("intersection needs an incompatible extension");
    if (root->discriminant() > 1 && ambient > 1 && root->discriminant() != ambient)
        throw MixedDiscriminants("intersection needs an incompatible extension");
    emit(-b + *root, a);
    emit(-b - *root, a);
    return out;
}

std::vector<PPoint> conic_conic_intersect_shared_infinity(const Conic& c1, const Conic& c2,
                                                          const PLine& linf) {
    if (c1.degenerate() || c2.degenerate())
        throw DegenerateConic();
    const auto [u, v] = span_of_line(linf.coords());
    const Mat3 m1 = c1.matrix(), m2 = c2.matrix();
    auto restrict3 = [&](const Mat3& m) {
        return Triple{dot3(u, mat_vec(m, u)), dot3(u, mat_vec(m, v)), dot3(v, mat_vec(m, v))};
    };
    const Triple r1 = restrict3(m1), r2 = restrict3(m2);
    if (triple_zero(r2) || triple_zero(r1))
        throw InternalError("nondegenerate conic contains the line at infinity");
    if (!proportional(r1, r2))
        throw NoSharedInvolution();
    const Scalar t = proportionality_factor(r1, r2);

    Mat3 pencil;
    bool all_zero = true;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            pencil[i][j] = m1[i][j] - t * m2[i][j];
            if (!pencil[i][j].is_zero())
                all_zero = false;
        }
    if (all_zero)
        throw CoincidentArguments("conics coincide");

    // pencil vanishes on linf, so it splits as linf * g; extract g.
    const std::array<Triple, 3> units = {Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}};
    for (const auto& e : units) {
        const Scalar w = dot3(linf.coords(), e);
        if (w.is_zero())
            continue;
        const Triple pe = mat_vec(pencil, e);
        const Scalar ee = dot3(e, pe);
        Triple g = sub_triple(scale_triple(2 * w, pe), scale_triple(ee, linf.coords()));
        if (triple_zero(g))
            throw InternalError("degenerate pencil member without radical line");
        if (proportional(g, linf.coords()))
            return {}; // double line at infinity: no ordinary common chord
        const PLine radical{std::move(g)};
        std::vector<PPoint> pts = line_conic_intersect(radical, c1);
        for (const PPoint& p : pts)
            if (!c2.contains(p))
                throw InternalError("radical-line intersection misses the second conic");
        return pts;
    }
    throw InternalError("no ordinary unit point for radical extraction");
}

bool interior(const PPoint& p, const Conic& c, const PLine& linf) {
    const PPoint z = center(c, linf);
    return c.eval(p).sign() == c.eval(z).sign();
}

// --- affine operations ------------------------------------------------------

Triple normalize_affine(const PPoint& p, const PLine& linf) {
    const Scalar w = dot(linf, p);
    if (w.is_zero())
        throw PointAtInfinity();
    const Scalar inv = w.inverse();
    return scale_triple(inv, p.coords());
}

PPoint midpoint(const PPoint& p, const PPoint& q, const PLine& linf) {
    return PPoint(add_triple(normalize_affine(p, linf), normalize_affine(q, linf)));
}

PPoint reflect_in_point(const PPoint& p, const PPoint& c, const PLine& linf) {
    const Triple ch = normalize_affine(c, linf);
    return PPoint(sub_triple(scale_triple(Scalar(2), ch), normalize_affine(p, linf)));
}

PPoint affine_combination(std::initializer_list<std::pair<Scalar, PPoint>> terms,
                          const PLine& linf) {
    Triple acc{Scalar(0), Scalar(0), Scalar(0)};
    for (const auto& [k, p] : terms)
        acc = add_triple(acc, scale_triple(k, normalize_affine(p, linf)));
    return PPoint(std::move(acc));
}

PPoint centroid_of(const PPoint& p, const PPoint& q, const PPoint& r, const PLine& linf) {
    return PPoint(add_triple(add_triple(normalize_affine(p, linf), normalize_affine(q, linf)),
                             normalize_affine(r, linf)));
}

bool collinear(const PPoint& a, const PPoint& b, const PPoint& c) {
    return det3({a.coords(), b.coords(), c.coords()}).is_zero();
}

Scalar signed_ratio(const PPoint& a, const PPoint& b, const PPoint& c, const PLine& linf) {
    if (b == c)
        throw CoincidentArguments("signed ratio needs b != c");
    if (!collinear(a, b, c))
        throw NotCollinear();
    const Triple ah = normalize_affine(a, linf);
    const Triple bh = normalize_affine(b, linf);
    const Triple ch = normalize_affine(c, linf);
    const Triple num = sub_triple(ah, bh);
    const Triple den = sub_triple(bh, ch);
    for (size_t i = 0; i < 3; ++i)
        if (!den[i].is_zero())
            return num[i] / den[i];
    throw InternalError("degenerate denominator in signed ratio");
}

} // namespace cevian
