#pragma once

#include <string>
#include <variant>

#include "relcheck/axioms.hpp"
#include "relcheck/worldview.hpp"

namespace relcheck {

/// Exact outcome of the no-faster-than-light inequality for one sighting
/// pair: pass means space2(e,f) <= c^2 * time2(e,f) held, and both exact
/// sides are returned for reporting.
struct NoFTLResult {
  bool pass = false;
  Scalar space2Side;  // space2(e, f)
  Scalar cTime2Side;  // cOf(m)^2 * time2(e, f)
};

/// Evaluate the inequality for observer m's two sightings of body k.
/// Preconditions: m and k are observers of the model; W(m,k,e) and W(m,k,f)
/// hold; e != f. Violations raise NotAnObserver / PreconditionViolated.
NoFTLResult checkNoFTL(const Model& model, const std::string& m,
                       const std::string& k, const Point& e, const Point& f);

/// A hypothetical faster-than-light observer, bundled with the coordinate
/// change that the hypothesis claims relates the judging observer m's
/// worldview to the hypothetical observer k's. Invariants: e != f; cM > 0;
/// cK > 0; purportedMap sends e and f onto the time axis (k must see itself
/// there).
struct FTLHypothesis {
  Point e;
  Point f;
  Scalar cM;
  CoordinateMap purportedMap;  // m-coordinates -> k-coordinates
  Scalar cK;
};

/// Trace steps of the contradiction construction, in execution order.
struct StepConverse {
  Scalar space2Side;  // space2(e, f)
  Scalar cTime2Side;  // cM^2 * time2(e, f); strictly below space2Side
};
struct StepECone {
  Cone eCone;  // Cone(e, cM)
};
struct StepTangent {
  Point g;            // touch point on eCone, != e and != f
  Plane tangentPlane; // based at g, contains e and f, tangent to eCone
};
struct StepTransform {
  Point wvte, wvtf, wvtg;  // images under purportedMap; pairwise distinct,
                           // wvte and wvtf on the time axis, wvtg off it
};
struct StepIntersect {
  Point wvtz;  // on line(wvte, wvtg) and on Cone(wvtf, cK)
  Point z;     // purportedMap^-1(wvtz)
  Cone fCone;  // Cone(f, cM)
};

/// The absurd conclusion: two parallel lines with a common point.
struct ParallelLinesMeetAt {
  Point at;
};
/// The localized failure: which axiom's concrete instance broke, with the
/// instantiating data.
struct AxiomViolated {
  AxiomId axiom = AxiomId::AxCones;
  Counterexample witness;
};
using WitnessVerdict = std::variant<ParallelLinesMeetAt, AxiomViolated>;

/// Full replayable trace: every recorded object re-validates against its
/// defining predicate, and the verdict is re-checkable from the trace alone.
struct ContradictionCertificate {
  StepConverse converseCheck;
  StepECone eCone;
  StepTangent tangent;
  StepTransform transform;
  StepIntersect intersect;
  Line lineA;  // lineJoining(e, g)
  Line lineB;  // lineJoining(f, z)
  WitnessVerdict verdict;
};

/// Execute the contradiction construction against the hypothesis. Either
/// every checked axiom instance holds and the certificate ends in the
/// parallel-lines absurdity, or the first failing instance is returned as
/// an axiom violation with its witness. Errors: BadHypothesis (invariants
/// of h fail), NotFTL (the pair is not faster-than-light), NotEuclidean
/// (rational mode where the construction needs an irrational root).
ContradictionCertificate buildFTLWitness(const FTLHypothesis& h,
                                         FieldMode mode);

/// Re-derive every recorded predicate of the certificate from scratch using
/// only field/geometry operations, then re-establish the verdict. Returns
/// false on the first mismatch; when firstMismatch is non-null it receives
/// a description of that mismatch.
bool validateCertificate(const ContradictionCertificate& cert,
                         const FTLHypothesis& h,
                         std::string* firstMismatch = nullptr);

}  // namespace relcheck
