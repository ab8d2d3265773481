#pragma once

#include <array>
#include <optional>

#include "cevian/projective.hpp"

namespace cevian {

// Everything here works in homogeneous barycentric coordinates for the
// reference triangle ABC = standard basis; the line at infinity is [1,1,1].

const PLine& barycentric_linf();
const PPoint& vertex_a();
const PPoint& vertex_b();
const PPoint& vertex_c();
const PPoint& centroid_g();
const PLine& side_bc(); // [1,0,0]
const PLine& side_ca();
const PLine& side_ab();

// Complement map K: homothety about the centroid with ratio -1/2; sends the
// reference triangle to its medial triangle.  anticomplement is its inverse.
const AffMap& complement_map();
const AffMap& anticomplement_map();

PPoint complement(const PPoint& p);
PPoint anticomplement(const PPoint& p);

// Isotomic conjugate (x:y:z) -> (yz:zx:xy); undefined on the sidelines.
PPoint isotomic(const PPoint& p);

// Cevian triangle of p: intersections of AP, BP, CP with the opposite sides.
std::array<PPoint, 3> cevian_traces(const PPoint& p);

// Closed-form centers, as functions of the defining point p = (x:y:z):
// the center of the dilatation taking the circumconic to the inconic, and
// the center of the cevian conic.
PPoint dilatation_center_formula(const PPoint& p);
PPoint cevian_conic_center_formula(const PPoint& p);

// The full derived bundle for (ABC, p).
struct TriangleConfig {
    PPoint p;       // defining point
    PPoint p_prime; // isotomic conjugate
    PPoint q;       // complement of p_prime; center of the inconic
    PPoint q_prime; // complement of p

    std::array<PPoint, 3> traces;         // cevian triangle of p
    std::array<PPoint, 3> traces_q;       // cevian triangle of q
    std::array<PPoint, 3> traces_p_prime; // cevian triangle of p_prime

    AffMap t_p;       // unique affine map ABC -> cevian triangle of p
    AffMap t_p_prime; // unique affine map ABC -> cevian triangle of p_prime
    AffMap m_map;     // t_p . anticomplement . t_p_prime
    AffMap lambda;    // t_p_prime . t_p^{-1}

    PPoint o;       // center of the circumconic attached to p
    PPoint o_prime; // same for p_prime
    PPoint h;       // generalized orthocenter, anticomplement of o
    PPoint h_prime;
    PPoint n;       // complement of o
    PPoint n_prime;

    DilatationClass m_class;

    bool on_median = false;
    bool on_steiner = false; // p on the Steiner circumellipse (p_prime infinite)
    bool h_at_vertex = false;

    // Derived conics and centers; skipped when p lies on a median (the cevian
    // conic degenerates there) and partially for the other flags.
    std::optional<Conic> cevian_conic;       // through A, B, C, p, q
    std::optional<Conic> inconic;            // tangent to the sides at the traces
    std::optional<Conic> circum_o;           // circumconic with center o
    std::optional<Conic> circum_o_prime;     // circumconic with center o_prime
    std::optional<Conic> ninepoint_p;        // nine-point conic of quadrangle ABCp
    std::optional<Conic> ninepoint_p_prime;  // same for p_prime
    std::optional<PPoint> z;        // center of the cevian conic
    std::optional<PPoint> v;        // PQ . P'Q'
    std::optional<PPoint> s;        // OQ . GV, center of m_map when it has one
    std::optional<PPoint> z_tilde;  // reflection of anticomplement(z) in o
    std::optional<AffMap> eta;      // harmonic homology, axis GZ, center PP'.linf

    bool flagged() const { return on_median || on_steiner || h_at_vertex; }
};

// Preconditions: p ordinary, off the sidelines of ABC and of the
// anticomplementary triangle.  Median/Steiner/orthocenter-at-vertex cases
// succeed but are flagged and leave the affected extras unset.
TriangleConfig build_config(const PPoint& p);

// Classification of m_map; also asserts its symmetry in p <-> p_prime.
DilatationClass classify_m(const TriangleConfig& cfg);

struct HalfTurnReport {
    // The seven equivalent conditions.
    bool m_half_turn = false;                  // (1)
    bool p_on_circum_o_prime = false;          // (2)
    bool p_prime_on_circum_o = false;          // (3)
    bool t_p_sends_p_to_o_prime = false;       // (4)
    bool t_p_prime_sends_p_prime_to_o = false; // (5)
    bool o_prime_on_ninepoint_p = false;       // (6)
    bool o_on_ninepoint_p_prime = false;       // (7)

    bool anticomplement_of_s_is_z = false;     // K^{-1}(S) = Z
    bool parallelogram_qzpo = false;           // QZP'O is a parallelogram

    // Present only when (1) holds.
    std::optional<bool> o_prime_p_tangent;     // O'P tangent to the cevian conic at P
    std::optional<bool> o_p_prime_tangent;     // OP' tangent at P'
    std::optional<bool> v_is_midpoint_of_oo_prime;
    std::optional<bool> oo_prime_is_anticomplement_of_pp_prime;
    std::optional<Scalar> ratio_gs_sv;         // 5/3 at a half-turn
    std::optional<Scalar> ratio_zg_gv;         // 5/4 at a half-turn

    bool equivalent_conditions_agree() const;
    bool all_seven() const;
};

// Evaluates the equivalence suite.  Throws HypothesisViolated when a flag of
// the config (median / Steiner / orthocenter at a vertex) is set.
HalfTurnReport halfturn_report(const TriangleConfig& cfg);

struct EtaReport {
    bool involution = false;
    bool maps_p_to_p_prime = false;
    bool maps_o_to_o_prime = false;
    bool conjugates_t_p_to_t_p_prime = false; // eta.t_p == t_p_prime.eta
    bool commutes_with_complement = false;
    bool all() const {
        return involution && maps_p_to_p_prime && maps_o_to_o_prime &&
               conjugates_t_p_to_t_p_prime && commutes_with_complement;
    }
};

// Throws DegenerateAxis when the config has no eta (p on a median).
EtaReport eta_checks(const TriangleConfig& cfg);

} // namespace cevian
