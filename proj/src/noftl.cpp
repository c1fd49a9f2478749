#include "relcheck/noftl.hpp"

#include <utility>

namespace relcheck {

namespace {

/// Quadratic cone form on displacement vectors: Q(u) for the cone's vertex
/// translated to the origin.
Scalar coneQOf(const Cone& c, const Vector& u) {
  return coneForm(c, c.vertex + u);
}

/// Polarization of the cone form: B(u, w) with B(u, u) == Q(u).
Scalar coneBOf(const Cone& c, const Vector& u, const Vector& w) {
  return (coneQOf(c, u + w) - coneQOf(c, u) - coneQOf(c, w)) /
         Scalar(2);
}

bool independentDirs(const Vector& u, const Vector& v) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(u[i] * v[j] - u[j] * v[i]).isZero()) return true;
  return false;
}

bool sameLineSet(const Line& a, const Line& b) {
  return std::holds_alternative<LinesIdentical>(linesMeet(a, b));
}

/// The ordered axiom-instance chain shared by the witness generator and the
/// certificate validator, evaluated on the recorded trace objects. The
/// first failing instance determines the verdict.
WitnessVerdict runAxiomChain(const FTLHypothesis& h, const Cone& eCone,
                             const Plane& plane, const Point& g,
                             const Point& wvte, const Point& wvtf,
                             const Point& wvtg, const Point& wvtz,
                             const Point& z, const Cone& fCone,
                             const Line& lineA, const Line& lineB) {
  (void)wvtg;
  // Instance 1: z sits on the light cone at e. It reached this side as the
  // pullback of wvtz, so a miss indicts cone preservation.
  if (!onCone(eCone, z)) {
    Counterexample ce;
    ce.description =
        "pulled-back intersection point is off the light cone at e";
    ce.addPoint("vertex", eCone.vertex);
    ce.add("slope", eCone.slope);
    ce.addPoint("z", z);
    ce.add("coneForm", coneForm(eCone, z));
    return AxiomViolated{AxiomId::AxCones, std::move(ce)};
  }
  // Instance 2: the image of that cone point lies on the image cone.
  Cone eConeImage{wvte, h.cK};
  if (!onCone(eConeImage, wvtz)) {
    Counterexample ce;
    ce.description =
        "a light-cone point's image misses the transformed observer's cone";
    ce.addPoint("vertex", eCone.vertex);
    ce.addPoint("z", z);
    ce.addPoint("imageVertex", wvte);
    ce.addPoint("imagePoint", wvtz);
    ce.add("slope", h.cK);
    ce.add("coneForm", coneForm(eConeImage, wvtz));
    return AxiomViolated{AxiomId::AxCones, std::move(ce)};
  }
  // Instance 3: wvtz lies on the cone at wvtf by construction, so its
  // pullback must lie on the cone at f.
  if (!onCone(fCone, z)) {
    Counterexample ce;
    ce.description =
        "a light-cone point's preimage misses the source observer's cone";
    ce.addPoint("vertex", fCone.vertex);
    ce.addPoint("imageVertex", wvtf);
    ce.addPoint("imagePoint", wvtz);
    ce.addPoint("z", z);
    ce.add("slope", fCone.slope);
    ce.add("coneForm", coneForm(fCone, z));
    return AxiomViolated{AxiomId::AxCones, std::move(ce)};
  }
  // Instance 4: the tangent plane through f also plays the tangent plane
  // role for the cone at f at the shared point z.
  if (!samePlane(plane, tangentPlaneAt(z, fCone))) {
    Counterexample ce;
    ce.description =
        "tangent planes of the two same-slope cones differ at the shared "
        "point";
    ce.addPoint("eVertex", eCone.vertex);
    ce.addPoint("fVertex", fCone.vertex);
    ce.addPoint("g", g);
    ce.addPoint("z", z);
    ce.add("slope", fCone.slope);
    return AxiomViolated{AxiomId::AxParallelCones, std::move(ce)};
  }
  // Instance 5: the two tangency generators are parallel.
  if (!parallelLines(lineA, lineB)) {
    Counterexample ce;
    ce.description = "tangency generators of the two cones are not parallel";
    ce.addPoint("e", eCone.vertex);
    ce.addPoint("g", g);
    ce.addPoint("f", fCone.vertex);
    ce.addPoint("z", z);
    return AxiomViolated{AxiomId::AxParallelCones, std::move(ce)};
  }
  // Every instance held: two parallel lines share the point z.
  return ParallelLinesMeetAt{z};
}

bool sameVerdict(const WitnessVerdict& a, const WitnessVerdict& b) {
  if (a.index() != b.index()) return false;
  if (const auto* pa = std::get_if<ParallelLinesMeetAt>(&a))
    return pa->at == std::get<ParallelLinesMeetAt>(b).at;
  const auto& va = std::get<AxiomViolated>(a);
  const auto& vb = std::get<AxiomViolated>(b);
  return va.axiom == vb.axiom &&
         va.witness.description == vb.witness.description &&
         va.witness.data == vb.witness.data;
}

}  // namespace

NoFTLResult checkNoFTL(const Model& model, const std::string& m,
                       const std::string& k, const Point& e,
                       const Point& f) {
  Scalar c = cOf(model, m);  // validates that m is an observer
  const Body* kb = model.findBody(k);
  if (kb == nullptr || !kb->observer)
    throw NotAnObserver("\"" + k + "\" is not an observer of this model");
  if (e == f)
    throw PreconditionViolated("the two sightings must be distinct events");
  if (!W(model, m, k, e))
    throw PreconditionViolated(
        "observer \"" + m + "\" does not see \"" + k +
        "\" at the first event");
  if (!W(model, m, k, f))
    throw PreconditionViolated(
        "observer \"" + m + "\" does not see \"" + k +
        "\" at the second event");
  NoFTLResult res;
  res.space2Side = space2(e, f);
  res.cTime2Side = c * c * time2(e, f);
  res.pass = !(res.cTime2Side < res.space2Side);
  return res;
}

ContradictionCertificate buildFTLWitness(const FTLHypothesis& h,
                                         FieldMode mode) {
  // Hypothesis invariants.
  if (h.e == h.f) throw BadHypothesis("hypothesis requires e != f");
  if (h.cM.sign() <= 0)
    throw BadHypothesis("hypothesis light speed cM must be positive");
  if (h.cK.sign() <= 0)
    throw BadHypothesis("hypothesis light speed cK must be positive");
  const Point wvte = h.purportedMap.apply(h.e);
  const Point wvtf = h.purportedMap.apply(h.f);
  if (!onAxisT(wvte))
    throw BadHypothesis("purported map does not send e onto the time axis");
  if (!onAxisT(wvtf))
    throw BadHypothesis("purported map does not send f onto the time axis");

  ContradictionCertificate cert;

  // Step 1: the pair must be genuinely faster than light for m.
  cert.converseCheck.space2Side = space2(h.e, h.f);
  cert.converseCheck.cTime2Side = h.cM * h.cM * time2(h.e, h.f);
  if (!(cert.converseCheck.cTime2Side < cert.converseCheck.space2Side))
    throw NotFTL("the sighting pair is not faster than light for m");

  // Step 2: the light cone at e.
  cert.eCone.eCone = Cone{h.e, h.cM};

  // Step 3: tangent plane through the strictly-outside point f, touching
  // the cone at g.
  TangentAtOutside tangent =
      tangentPlaneThroughOutside(h.f, cert.eCone.eCone, mode);
  cert.tangent.g = tangent.touch;
  cert.tangent.tangentPlane = tangent.plane;
  if (cert.tangent.g == h.e || cert.tangent.g == h.f)
    throw PreconditionViolated("tangent touch point degenerated");

  // Step 4: transform e, f, g. For an invertible affine map the images are
  // pairwise distinct, and wvtg stays off the time axis: e, g, f are not
  // collinear (g is on the cone, f strictly outside), so their images
  // cannot all hit one line. The non-collinearity is checked directly.
  const Point wvtg = h.purportedMap.apply(cert.tangent.g);
  cert.transform.wvte = wvte;
  cert.transform.wvtf = wvtf;
  cert.transform.wvtg = wvtg;
  if (wvte == wvtf || wvtf == wvtg || wvtg == wvte)
    throw PreconditionViolated("transformed points degenerated");
  if (collinear(h.e, cert.tangent.g, h.f))
    throw PreconditionViolated("e, g, f are collinear");
  if (onAxisT(wvtg))
    throw PreconditionViolated("transformed touch point fell on the time axis");

  // Step 5: intersect the transformed generator with the cone at wvtf and
  // pull the first intersection back.
  std::vector<Point> roots =
      slopedPointOnLine(wvte, wvtf, wvtg, h.cK, mode);
  if (roots.empty())
    throw NotEuclidean(
        "the cone intersection has no root in the rational field");
  cert.intersect.wvtz = roots.front();
  cert.intersect.z = h.purportedMap.inverse().apply(cert.intersect.wvtz);
  cert.intersect.fCone = Cone{h.f, h.cM};

  cert.lineA = lineJoining(h.e, cert.tangent.g);
  cert.lineB = lineJoining(h.f, cert.intersect.z);

  cert.verdict = runAxiomChain(
      h, cert.eCone.eCone, cert.tangent.tangentPlane, cert.tangent.g, wvte,
      wvtf, wvtg, cert.intersect.wvtz, cert.intersect.z,
      cert.intersect.fCone, cert.lineA, cert.lineB);

  if (std::holds_alternative<ParallelLinesMeetAt>(cert.verdict)) {
    // The absurd branch claims a common point of two distinct parallel
    // lines; its content must actually hold.
    if (!onLine(cert.intersect.z, cert.lineA) ||
        !onLine(cert.intersect.z, cert.lineB) ||
        sameLineSet(cert.lineA, cert.lineB))
      throw PreconditionViolated("parallel-lines verdict is unsupported");
  }
  return cert;
}

bool validateCertificate(const ContradictionCertificate& cert,
                         const FTLHypothesis& h,
                         std::string* firstMismatch) {
  auto fail = [firstMismatch](const char* why) {
    if (firstMismatch != nullptr) *firstMismatch = why;
    return false;
  };

  // Hypothesis invariants.
  if (h.e == h.f) return fail("hypothesis has e == f");
  if (h.cM.sign() <= 0) return fail("light speed cM is not positive");
  if (h.cK.sign() <= 0) return fail("light speed cK is not positive");
  const Point wvte = h.purportedMap.apply(h.e);
  const Point wvtf = h.purportedMap.apply(h.f);
  if (!onAxisT(wvte))
    return fail("purported map does not send e onto the time axis");
  if (!onAxisT(wvtf))
    return fail("purported map does not send f onto the time axis");

  // Step 1: both recorded sides and the strict inequality.
  if (!(cert.converseCheck.space2Side == space2(h.e, h.f)))
    return fail("recorded spatial side disagrees with space2(e, f)");
  if (!(cert.converseCheck.cTime2Side == h.cM * h.cM * time2(h.e, h.f)))
    return fail("recorded temporal side disagrees with cM^2 * time2(e, f)");
  if (!(cert.converseCheck.cTime2Side < cert.converseCheck.space2Side))
    return fail("recorded pair is not faster than light");

  // Step 2: cone definition.
  const Cone& eCone = cert.eCone.eCone;
  if (!(eCone.vertex == h.e)) return fail("recorded cone is not based at e");
  if (!(eCone.slope == h.cM))
    return fail("recorded cone does not use m's light speed");

  // Step 3: the touch point and tangent plane, against their defining
  // predicates.
  const Point& g = cert.tangent.g;
  const Plane& pl = cert.tangent.tangentPlane;
  if (g == h.e) return fail("touch point coincides with the vertex");
  if (g == h.f) return fail("touch point coincides with the outside point");
  if (!onCone(eCone, g)) return fail("touch point is not on the cone");
  if (!(pl.base == g)) return fail("tangent plane is not based at g");
  if (!independentDirs(pl.d1, pl.d2))
    return fail("tangent plane directions are dependent");
  if (!inPlane(h.e, pl)) return fail("tangent plane misses the vertex e");
  if (!inPlane(h.f, pl))
    return fail("tangent plane misses the outside point f");
  {
    // Tangency: the cone form restricted to the plane is degenerate, so
    // the plane meets the cone in exactly the generator through g.
    Scalar q1 = coneQOf(eCone, pl.d1);
    Scalar q2 = coneQOf(eCone, pl.d2);
    Scalar b = coneBOf(eCone, pl.d1, pl.d2);
    if (!(b * b == q1 * q2))
      return fail("plane is not tangent to the cone");
  }

  // Step 4: transform images, axis conditions, distinctness.
  if (!(cert.transform.wvte == wvte))
    return fail("recorded image of e disagrees with the purported map");
  if (!(cert.transform.wvtf == wvtf))
    return fail("recorded image of f disagrees with the purported map");
  if (!(cert.transform.wvtg == h.purportedMap.apply(g)))
    return fail("recorded image of g disagrees with the purported map");
  const Point& wvtg = cert.transform.wvtg;
  if (cert.transform.wvte == cert.transform.wvtf ||
      cert.transform.wvtf == wvtg || wvtg == cert.transform.wvte)
    return fail("transformed points are not pairwise distinct");
  if (onAxisT(wvtg))
    return fail("transformed touch point lies on the time axis");

  // Step 5: the intersection point and its pullback.
  const Point& wvtz = cert.intersect.wvtz;
  const Point& z = cert.intersect.z;
  const Cone& fCone = cert.intersect.fCone;
  if (!(fCone.vertex == h.f)) return fail("second cone is not based at f");
  if (!(fCone.slope == h.cM))
    return fail("second cone does not use m's light speed");
  if (!collinear(wvte, wvtg, wvtz))
    return fail("intersection point is off the transformed generator");
  if (!onCone(Cone{wvtf, h.cK}, wvtz))
    return fail("intersection point is off the cone at the image of f");
  if (!(h.purportedMap.apply(z) == wvtz))
    return fail("purported map does not send z to wvtz");

  // Recorded lines match their defining joins.
  if (isZeroVector(cert.lineA.dir) || isZeroVector(cert.lineB.dir))
    return fail("recorded line has a zero direction");
  if (!sameLineSet(cert.lineA, lineJoining(h.e, g)))
    return fail("lineA is not the line joining e and g");
  if (z == h.f) return fail("z coincides with f");
  if (!sameLineSet(cert.lineB, lineJoining(h.f, z)))
    return fail("lineB is not the line joining f and z");
  if (sameLineSet(cert.lineA, cert.lineB))
    return fail("lineA and lineB coincide");

  // Verdict: re-run the instance chain on the recorded trace and compare.
  WitnessVerdict expected =
      runAxiomChain(h, eCone, pl, g, wvte, wvtf, wvtg, wvtz, z, fCone,
                    cert.lineA, cert.lineB);
  if (!sameVerdict(cert.verdict, expected))
    return fail("recorded verdict is not re-established by the trace");
  if (const auto* meet = std::get_if<ParallelLinesMeetAt>(&cert.verdict)) {
    if (!(meet->at == z) || !onLine(z, cert.lineA) ||
        !onLine(z, cert.lineB) || !parallelLines(cert.lineA, cert.lineB))
      return fail("parallel-lines verdict content does not hold");
  }
  return true;
}

}  // namespace relcheck
