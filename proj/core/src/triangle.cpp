#include "cevian/triangle.hpp"

namespace cevian {

const PLine& barycentric_linf() {
    static const PLine l(1, 1, 1);
    return l;
}

const PPoint& vertex_a() {
    static const PPoint p(1, 0, 0);
    return p;
}

const PPoint& vertex_b() {
    static const PPoint p(0, 1, 0);
    return p;
}

const PPoint& vertex_c() {
    static const PPoint p(0, 0, 1);
    return p;
}

const PPoint& centroid_g() {
    static const PPoint p(1, 1, 1);
    return p;
}

const PLine& side_bc() {
    static const PLine l(1, 0, 0);
    return l;
}

const PLine& side_ca() {
    static const PLine l(0, 1, 0);
    return l;
}

const PLine& side_ab() {
    static const PLine l(0, 0, 1);
    return l;
}

const AffMap& complement_map() {
    static const AffMap k(Mat3{Triple{0, 1, 1}, Triple{1, 0, 1}, Triple{1, 1, 0}},
                          barycentric_linf());
    return k;
}

const AffMap& anticomplement_map() {
    static const AffMap k(Mat3{Triple{-1, 1, 1}, Triple{1, -1, 1}, Triple{1, 1, -1}},
                          barycentric_linf());
    return k;
}

PPoint complement(const PPoint& p) {
    return PPoint(p[1] + p[2], p[2] + p[0], p[0] + p[1]);
}

PPoint anticomplement(const PPoint& p) {
    return PPoint(p[1] + p[2] - p[0], p[2] + p[0] - p[1], p[0] + p[1] - p[2]);
}

PPoint isotomic(const PPoint& p) {
    if (p[0].is_zero() || p[1].is_zero() || p[2].is_zero())
        throw PointOnSideline();
    return PPoint(p[1] * p[2], p[2] * p[0], p[0] * p[1]);
}

std::array<PPoint, 3> cevian_traces(const PPoint& p) {
    if (p[0].is_zero() || p[1].is_zero() || p[2].is_zero())
        throw PointOnSideline();
    return {PPoint(Scalar(0), p[1], p[2]),
            PPoint(p[0], Scalar(0), p[2]),
            PPoint(p[0], p[1], Scalar(0))};
}

PPoint dilatation_center_formula(const PPoint& p) {
    const Scalar &x = p[0], &y = p[1], &z = p[2];
    return PPoint(x * (y + z) * (y + z), y * (x + z) * (x + z), z * (x + y) * (x + y));
}

PPoint cevian_conic_center_formula(const PPoint& p) {
    const Scalar &x = p[0], &y = p[1], &z = p[2];
    return PPoint(x * (y - z) * (y - z), y * (z - x) * (z - x), z * (x - y) * (x - y));
}

namespace {

template <typename F>
auto attempt(F&& f) -> std::optional<decltype(f())> {
    try {
        return std::forward<F>(f)();
    } catch (const InternalError&) {
        throw;
    } catch (const Error&) {
        return std::nullopt;
    }
}

// Nine-point conic of the quadrangle ABCp: through the six side midpoints,
// with the three diagonal points (the cevian traces of p) asserted onto it.
Conic ninepoint_conic(const PPoint& p, const std::array<PPoint, 3>& diag) {
    const PLine& linf = barycentric_linf();
    const PPoint mab = midpoint(vertex_a(), vertex_b(), linf);
    const PPoint mac = midpoint(vertex_a(), vertex_c(), linf);
    const PPoint mbc = midpoint(vertex_b(), vertex_c(), linf);
    const PPoint map = midpoint(vertex_a(), p, linf);
    const PPoint mbp = midpoint(vertex_b(), p, linf);
    const PPoint mcp = midpoint(vertex_c(), p, linf);
    Conic c = conic_through_five(mab, mac, mbc, map, mbp);
    if (!c.contains(mcp))
        throw InternalError("nine-point conic misses a side midpoint");
    for (const PPoint& d : diag)
        if (!c.contains(d))
            throw InternalError("nine-point conic misses a diagonal point");
    return c;
}

} // namespace

TriangleConfig build_config(const PPoint& point) {
    const PLine& linf = barycentric_linf();
    const Scalar &x = point[0], &y = point[1], &z = point[2];

    if ((x + y + z).is_zero())
        throw PointAtInfinity("defining point is at infinity");
    if (x.is_zero() || y.is_zero() || z.is_zero())
        throw PointOnSideline();
    if (((y + z) * (z + x) * (x + y)).is_zero())
        throw PointOnAnticomplementarySide();

    const bool on_median = ((y - z) * (z - x) * (x - y)).is_zero();
    const bool on_steiner = (x * y + y * z + z * x).is_zero();

    PPoint p_prime = isotomic(point);
    PPoint q = complement(p_prime);
    PPoint q_prime = complement(point);

    auto traces = cevian_traces(point);
    auto traces_q = cevian_traces(q);
    auto traces_pp = cevian_traces(p_prime);

    const std::array<PPoint, 3> abc = {vertex_a(), vertex_b(), vertex_c()};
    AffMap t_p = AffMap::from_triangles(abc, traces, linf);
    AffMap t_pp = AffMap::from_triangles(abc, traces_pp, linf);
    AffMap m_map = t_p * anticomplement_map() * t_pp;
    AffMap lambda = t_pp * t_p.inverse();

    PPoint o = t_pp.inverse()(complement(q));
    PPoint o_prime = t_p.inverse()(complement(q_prime));
    PPoint h = anticomplement(o);
    PPoint h_prime = anticomplement(o_prime);
    PPoint n = complement(o);
    PPoint n_prime = complement(o_prime);

    const bool h_at_vertex = h == vertex_a() || h == vertex_b() || h == vertex_c();

    DilatationClass m_class = classify_dilatation(m_map, linf);
    if (!m_class.is_dilatation())
        throw InternalError("the circum-to-inconic map is not a dilatation");

    TriangleConfig cfg{.p = point,
                       .p_prime = std::move(p_prime),
                       .q = std::move(q),
                       .q_prime = std::move(q_prime),
                       .traces = std::move(traces),
                       .traces_q = std::move(traces_q),
                       .traces_p_prime = std::move(traces_pp),
                       .t_p = std::move(t_p),
                       .t_p_prime = std::move(t_pp),
                       .m_map = std::move(m_map),
                       .lambda = std::move(lambda),
                       .o = std::move(o),
                       .o_prime = std::move(o_prime),
                       .h = std::move(h),
                       .h_prime = std::move(h_prime),
                       .n = std::move(n),
                       .n_prime = std::move(n_prime),
                       .m_class = std::move(m_class),
                       .on_median = on_median,
                       .on_steiner = on_steiner,
                       .h_at_vertex = h_at_vertex};

    if (cfg.on_median)
        return cfg;

    cfg.cevian_conic = attempt([&] {
        return conic_through_five(vertex_a(), vertex_b(), vertex_c(), cfg.p, cfg.q);
    });
    if (cfg.cevian_conic)
        cfg.z = attempt([&] { return center(*cfg.cevian_conic, linf); });
    cfg.v = attempt([&] {
        return meet(join(cfg.p, cfg.q), join(cfg.p_prime, cfg.q_prime));
    });
    if (cfg.v)
        cfg.s = attempt([&] { return meet(join(cfg.o, cfg.q), join(centroid_g(), *cfg.v)); });
    if (cfg.z)
        cfg.z_tilde = attempt([&] {
            return reflect_in_point(anticomplement(*cfg.z), cfg.o, linf);
        });

    cfg.inconic = attempt([&] {
        return conic_tangent_to_three(cfg.traces, {side_bc(), side_ca(), side_ab()});
    });
    cfg.ninepoint_p = attempt([&] { return ninepoint_conic(cfg.p, cfg.traces); });
    cfg.ninepoint_p_prime =
        attempt([&] { return ninepoint_conic(cfg.p_prime, cfg.traces_p_prime); });

    // The circumconic attached to p both as the pulled-back nine-point conic
    // of p_prime and as the circumconic centered at o; the two must agree.
    std::optional<Conic> route1, route2;
    if (cfg.ninepoint_p_prime)
        route1 = attempt([&] { return cfg.t_p_prime.inverse().apply_conic(*cfg.ninepoint_p_prime); });
    route2 = attempt([&] {
        return conic_with_center_through(cfg.o, vertex_a(), vertex_b(), vertex_c(), linf);
    });
    if (route1 && route2 && !(*route1 == *route2))
        throw InternalError("circumconic routes disagree");
    cfg.circum_o = route1 ? route1 : route2;

    std::optional<Conic> route1p, route2p;
    if (cfg.ninepoint_p)
        route1p = attempt([&] { return cfg.t_p.inverse().apply_conic(*cfg.ninepoint_p); });
    route2p = attempt([&] {
        return conic_with_center_through(cfg.o_prime, vertex_a(), vertex_b(), vertex_c(), linf);
    });
    if (route1p && route2p && !(*route1p == *route2p))
        throw InternalError("circumconic routes disagree");
    cfg.circum_o_prime = route1p ? route1p : route2p;

    if (cfg.z)
        cfg.eta = attempt([&] {
            const PPoint dir = meet(join(cfg.p, cfg.p_prime), linf);
            return AffMap::harmonic_homology(join(centroid_g(), *cfg.z), dir, linf);
        });

    return cfg;
}

DilatationClass classify_m(const TriangleConfig& cfg) {
    const AffMap mirrored = cfg.t_p_prime * anticomplement_map() * cfg.t_p;
    if (!mirrored.same_map(cfg.m_map))
        throw InternalError("m_map is not symmetric in p and p_prime");
    return classify_dilatation(cfg.m_map, barycentric_linf());
}

bool HalfTurnReport::equivalent_conditions_agree() const {
    const bool r = m_half_turn;
    return p_on_circum_o_prime == r && p_prime_on_circum_o == r &&
           t_p_sends_p_to_o_prime == r && t_p_prime_sends_p_prime_to_o == r &&
           o_prime_on_ninepoint_p == r && o_on_ninepoint_p_prime == r;
}

bool HalfTurnReport::all_seven() const {
    return m_half_turn && equivalent_conditions_agree();
}

HalfTurnReport halfturn_report(const TriangleConfig& cfg) {
    if (cfg.on_median)
        throw HypothesisViolated("on_median");
    if (cfg.on_steiner)
        throw HypothesisViolated("on_steiner");
    if (cfg.h_at_vertex)
        throw HypothesisViolated("h_at_vertex");
    if (!cfg.cevian_conic || !cfg.z || !cfg.v || !cfg.s || !cfg.circum_o ||
        !cfg.circum_o_prime || !cfg.ninepoint_p || !cfg.ninepoint_p_prime)
        throw InternalError("config extras missing on an unflagged point");

    const PLine& linf = barycentric_linf();
    HalfTurnReport r;
    r.m_half_turn = cfg.m_class.is_half_turn();
    r.p_on_circum_o_prime = cfg.circum_o_prime->contains(cfg.p);
    r.p_prime_on_circum_o = cfg.circum_o->contains(cfg.p_prime);
    r.t_p_sends_p_to_o_prime = cfg.t_p(cfg.p) == cfg.o_prime;
    r.t_p_prime_sends_p_prime_to_o = cfg.t_p_prime(cfg.p_prime) == cfg.o;
    r.o_prime_on_ninepoint_p = cfg.ninepoint_p->contains(cfg.o_prime);
    r.o_on_ninepoint_p_prime = cfg.ninepoint_p_prime->contains(cfg.o);
    r.anticomplement_of_s_is_z = anticomplement(*cfg.s) == *cfg.z;
    r.parallelogram_qzpo =
        midpoint(cfg.q, cfg.p_prime, linf) == midpoint(*cfg.z, cfg.o, linf);

    if (r.m_half_turn) {
        r.o_prime_p_tangent = polar(cfg.p, *cfg.cevian_conic) == join(cfg.o_prime, cfg.p);
        r.o_p_prime_tangent = polar(cfg.p_prime, *cfg.cevian_conic) == join(cfg.o, cfg.p_prime);
        r.v_is_midpoint_of_oo_prime = *cfg.v == midpoint(cfg.o, cfg.o_prime, linf);
        r.oo_prime_is_anticomplement_of_pp_prime =
            join(cfg.o, cfg.o_prime) ==
            join(anticomplement(cfg.p), anticomplement(cfg.p_prime));
        r.ratio_gs_sv = signed_ratio(centroid_g(), *cfg.s, *cfg.v, linf);
        r.ratio_zg_gv = signed_ratio(*cfg.z, centroid_g(), *cfg.v, linf);
    }
    return r;
}

EtaReport eta_checks(const TriangleConfig& cfg) {
    if (!cfg.eta)
        throw DegenerateAxis("config carries no harmonic homology");
    const AffMap& e = *cfg.eta;
    EtaReport r;
    r.involution = (e * e).same_map(AffMap::identity(barycentric_linf()));
    r.maps_p_to_p_prime = e(cfg.p) == cfg.p_prime;
    r.maps_o_to_o_prime = e(cfg.o) == cfg.o_prime;
    r.conjugates_t_p_to_t_p_prime = (e * cfg.t_p).same_map(cfg.t_p_prime * e);
    r.commutes_with_complement =
        (e * complement_map()).same_map(complement_map() * e);
    return r;
}

} // namespace cevian
