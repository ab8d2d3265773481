#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cevian {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a computation contradicts an identity the library itself
// guarantees.  Seeing one of these is a bug, not a bad input.
struct InternalError : Error {
    using Error::Error;
};

#define CEVIAN_DEFINE_ERROR(Name, default_msg)                                \
    struct Name : Error {                                                     \
        Name() : Error(default_msg) {}                                        \
        explicit Name(const std::string& msg) : Error(msg) {}                 \
    }

// field
CEVIAN_DEFINE_ERROR(NonSquarefreeDiscriminant, "discriminant has a square factor");
CEVIAN_DEFINE_ERROR(DivisionByZero, "division by zero");
CEVIAN_DEFINE_ERROR(MixedDiscriminants, "operands live in distinct quadratic extensions");

// projective kernel
CEVIAN_DEFINE_ERROR(ZeroTriple, "the zero triple is not a projective object");
CEVIAN_DEFINE_ERROR(CoincidentArguments, "arguments coincide");
CEVIAN_DEFINE_ERROR(UnderdeterminedConic, "conic constraints have nullity > 1");
CEVIAN_DEFINE_ERROR(DegenerateConic, "conic is degenerate");
CEVIAN_DEFINE_ERROR(CenterAtInfinity, "conic has no ordinary center");
CEVIAN_DEFINE_ERROR(PointNotOnConic, "point does not lie on the conic");
CEVIAN_DEFINE_ERROR(NoSharedInvolution, "conics do not induce the same involution at infinity");
CEVIAN_DEFINE_ERROR(CollinearTriple, "points are collinear");
CEVIAN_DEFINE_ERROR(PointAtInfinity, "point lies on the line at infinity");
CEVIAN_DEFINE_ERROR(NotCollinear, "points are not collinear");

// triangle bundle
CEVIAN_DEFINE_ERROR(PointOnSideline, "point lies on a side of the reference triangle");
CEVIAN_DEFINE_ERROR(PointOnAnticomplementarySide, "point lies on a side of the anticomplementary triangle");
CEVIAN_DEFINE_ERROR(DegenerateAxis, "homology axis is not determined");

// locus
CEVIAN_DEFINE_ERROR(PointNotOnCurve, "point does not lie on the cubic");
CEVIAN_DEFINE_ERROR(LineNotMeetingCurveProperly, "residual factor does not split over the working field");
CEVIAN_DEFINE_ERROR(SingularFiber, "map is undefined on this fiber");
CEVIAN_DEFINE_ERROR(ExceptionalFiber, "map is undefined on this fiber");

// construct
CEVIAN_DEFINE_ERROR(OutsideArc, "point is not on the admissible arc");

struct HypothesisViolated : Error {
    std::string flag;
    explicit HypothesisViolated(std::string which)
        : Error("hypothesis violated: " + which), flag(std::move(which)) {}
};

#undef CEVIAN_DEFINE_ERROR

} // namespace cevian
