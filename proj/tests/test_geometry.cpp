#include "doctest.h"

#include <optional>
#include <variant>

#include "relcheck/geometry.hpp"
#include "relcheck/sampling.hpp"

using namespace relcheck;

namespace {

Point pt(long t, long x, long y, long z) {
  return {Scalar(t), Scalar(x), Scalar(y), Scalar(z)};
}
Vector vec(long t, long x, long y, long z) {
  return {Scalar(t), Scalar(x), Scalar(y), Scalar(z)};
}
Scalar frac(long n, long d) { return Scalar(Rational(n, d)); }

const Cone kUnitCone{pt(0, 0, 0, 0), Scalar(1)};

Point randPoint(SplitMix64& rng, long numBound, long denBound) {
  return {randRational(rng, numBound, denBound),
          randRational(rng, numBound, denBound),
          randRational(rng, numBound, denBound),
          randRational(rng, numBound, denBound)};
}

Vector randDir(SplitMix64& rng) {
  while (true) {
    Vector v = {randRational(rng, 3, 3), randRational(rng, 3, 3),
                randRational(rng, 3, 3), randRational(rng, 3, 3)};
    if (!isZeroVector(v)) return v;
  }
}

// A point on the cone with exactly rational coordinates.
Point randConePoint(SplitMix64& rng, const Cone& c) {
  while (true) {
    PythQuad q = randPythQuad(rng, 3);
    Rational lambda = randNonzeroRational(rng, 3, 3);
    Vector g{Scalar(q.h), c.slope * Scalar(q.a), c.slope * Scalar(q.b),
             c.slope * Scalar(q.c)};
    if ((Scalar(lambda) * g.t).isZero()) continue;
    return c.vertex + Scalar(lambda) * g;
  }
}

// Independent verification of lineConeIntersect: recover the restricted
// quadratic by evaluating coneForm at three parameter values, decide the
// expected root count without square roots, then confirm the returned points
// by exact substitution, ordering, and vertex straddling.
void checkLineConeAgainstOracle(const Line& l, const Cone& c, FieldMode mode) {
  auto at = [&](const Scalar& lam) { return l.base + lam * l.dir; };
  auto qAt = [&](const Scalar& lam) { return coneForm(c, at(lam)); };
  const Scalar q0 = qAt(Scalar(0));
  const Scalar q1 = qAt(Scalar(1));
  const Scalar qm1 = qAt(Scalar(-1));
  const Scalar gamma = q0;
  const Scalar alpha = (q1 + qm1 - Scalar(2) * q0) / Scalar(2);
  const Scalar beta = (q1 - qm1) / Scalar(2);

  LineConeResult res;
  try {
    res = lineConeIntersect(l, c, mode);
  } catch (const NotEuclidean&) {
    REQUIRE(mode == FieldMode::rational);
    // The refusal is legitimate only if crossings exist but are irrational.
    LineConeResult er = lineConeIntersect(l, c, FieldMode::euclidean);
    REQUIRE(!er.points.empty());
    bool anyIrrational = false;
    for (const Point& z : er.points)
      for (int i = 0; i < 4; ++i)
        if (!z[i].isRational()) anyIrrational = true;
    REQUIRE(anyIrrational);
    return;
  }

  if (res.wholeLine) {
    REQUIRE(alpha.isZero());
    REQUIRE(beta.isZero());
    REQUIRE(gamma.isZero());
    REQUIRE(res.points.empty());
    return;
  }
  size_t expected = 0;
  if (alpha.isZero()) {
    REQUIRE(!(beta.isZero() && gamma.isZero()));  // would be the whole line
    expected = beta.isZero() ? 0 : 1;
  } else {
    const Scalar lamStar = -beta / (Scalar(2) * alpha);
    const int sv = qAt(lamStar).sign();
    if (sv == 0)
      expected = 1;
    else
      expected = sv == alpha.sign() ? 0 : 2;
  }
  REQUIRE(res.points.size() == expected);

  std::optional<Scalar> prev;
  for (const Point& z : res.points) {
    REQUIRE(coneForm(c, z).isZero());
    REQUIRE(onLine(z, l));
    Scalar lam;
    for (int i = 0; i < 4; ++i)
      if (!l.dir[i].isZero()) {
        lam = (z[i] - l.base[i]) / l.dir[i];
        break;
      }
    if (prev) REQUIRE(*prev < lam);
    prev = lam;
  }
  if (expected == 2 && !alpha.isZero()) {
    const Scalar lamStar = -beta / (Scalar(2) * alpha);
    Scalar lam0, lam1;
    for (int i = 0; i < 4; ++i)
      if (!l.dir[i].isZero()) {
        lam0 = (res.points[0][i] - l.base[i]) / l.dir[i];
        lam1 = (res.points[1][i] - l.base[i]) / l.dir[i];
        break;
      }
    REQUIRE(lam0 < lamStar);
    REQUIRE(lamStar < lam1);
  }
}

}  // namespace

TEST_CASE("spatial and temporal separation match hand-computed values") {
  CHECK(space2(pt(0, 0, 0, 0), pt(7, 3, 4, 0)) == Scalar(25));
  CHECK(time2(pt(0, 0, 0, 0), pt(7, 3, 4, 0)) == Scalar(49));
  CHECK(space2(pt(1, 1, 1, 1), pt(1, 1, 1, 1)) == Scalar(0));
  // Symmetry.
  CHECK(space2(pt(7, 3, 4, 0), pt(0, 0, 0, 0)) == Scalar(25));
  CHECK(time2(pt(7, 3, 4, 0), pt(0, 0, 0, 0)) == Scalar(49));
}

TEST_CASE("plane membership finds exact coefficients") {
  Plane pl{pt(1, 0, 1, 0), vec(1, 0, 1, 0), vec(0, 1, 0, 0)};
  Point p = pt(0, 1, 0, 0);
  REQUIRE(inPlane(p, pl));
  auto coeff = planeCoefficients(p, pl);
  REQUIRE(coeff.has_value());
  CHECK(coeff->first == Scalar(-1));
  CHECK(coeff->second == Scalar(1));
  CHECK(pl.base + coeff->first * pl.d1 + coeff->second * pl.d2 == p);

  CHECK_FALSE(inPlane(pt(0, 0, 0, 1), pl));
  CHECK(inPlane(pl.base, pl));
}

TEST_CASE("samePlane recognizes equal spans and rejects different ones") {
  Plane a{pt(0, 0, 0, 0), vec(1, 1, 0, 0), vec(0, 0, 1, 0)};
  // Same plane, shifted base and mixed directions.
  Plane b{pt(2, 2, 3, 0), vec(1, 1, 1, 0), vec(1, 1, -1, 0)};
  CHECK(samePlane(a, b));
  CHECK(samePlane(b, a));
  Plane c{pt(0, 0, 0, 1), vec(1, 1, 0, 0), vec(0, 0, 1, 0)};  // parallel
  CHECK_FALSE(samePlane(a, c));
  Plane d{pt(0, 0, 0, 0), vec(1, 1, 0, 0), vec(0, 0, 0, 1)};
  CHECK_FALSE(samePlane(a, d));
}

TEST_CASE("cone region classification") {
  CHECK(coneClassify(kUnitCone, pt(1, 0, 0, 0)) == ConeRegion::insideCone);
  CHECK(coneClassify(kUnitCone, pt(0, 1, 0, 0)) == ConeRegion::outsideCone);
  CHECK(coneClassify(kUnitCone, pt(1, 1, 0, 0)) == ConeRegion::onCone);
  CHECK(coneClassify(kUnitCone, pt(0, 0, 0, 0)) == ConeRegion::onCone);
  CHECK(onCone(kUnitCone, pt(5, 3, 4, 0)));
  // Slope 1/2: (2, 1, 0, 0) is lightlike.
  Cone half{pt(0, 0, 0, 0), frac(1, 2)};
  CHECK(onCone(half, pt(2, 1, 0, 0)));
  CHECK(coneClassify(half, pt(2, 2, 0, 0)) == ConeRegion::outsideCone);
}

TEST_CASE("canonicalDirection normalizes rational and irrational vectors") {
  CHECK(canonicalDirection(vec(0, -4, 3, 0)) == vec(0, 4, -3, 0));
  CHECK(canonicalDirection({Scalar(3), frac(9, 5), frac(12, 5), Scalar(0)}) ==
        vec(5, 3, 4, 0));
  CHECK(canonicalDirection(vec(0, 0, -6, -9)) == vec(0, 0, 2, 3));
  Scalar r2 = sqrtScalar(Scalar(2), FieldMode::euclidean);
  Vector v{r2, r2, Scalar(0), Scalar(2)};
  Vector c = canonicalDirection(v);
  CHECK(c.t == Scalar(1));
  CHECK(c.x == Scalar(1));
  CHECK(c.y == Scalar(0));
  CHECK(c.z == r2);  // 2/sqrt(2)
  CHECK_THROWS_AS(canonicalDirection(vec(0, 0, 0, 0)), DegenerateLine);
}

TEST_CASE("line construction, membership, and meeting") {
  CHECK_THROWS_AS(lineJoining(pt(1, 2, 3, 4), pt(1, 2, 3, 4)),
                  DegenerateLine);
  Line l = lineJoining(pt(0, 0, 0, 0), pt(1, 1, 0, 0));
  CHECK(onLine(pt(2, 2, 0, 0), l));
  CHECK_FALSE(onLine(pt(2, 1, 0, 0), l));
  CHECK(collinear(pt(0, 0, 0, 0), pt(1, 1, 0, 0), pt(-3, -3, 0, 0)));
  CHECK_FALSE(collinear(pt(0, 0, 0, 0), pt(1, 1, 0, 0), pt(1, 1, 1, 0)));
  // Degenerate triples count as collinear.
  CHECK(collinear(pt(1, 1, 1, 1), pt(1, 1, 1, 1), pt(2, 0, 0, 0)));

  // Two lines through a shared point meet exactly there.
  Line a{pt(1, 2, 0, 0), vec(1, 0, 1, 0)};
  Line b{pt(1, 2, 0, 0) + vec(-2, 0, 0, -2), vec(1, 0, 0, 1)};
  LineMeet m = linesMeet(a, b);
  REQUIRE(std::holds_alternative<LinesMeetAt>(m));
  CHECK(std::get<LinesMeetAt>(m).at == pt(1, 2, 0, 0));

  // Parallel distinct lines are disjoint; identical lines are identical.
  CHECK(std::holds_alternative<LinesDisjoint>(
      linesMeet(a, Line{pt(0, 0, 0, 1), vec(2, 0, 2, 0)})));
  CHECK(parallelLines(a, Line{pt(0, 0, 0, 1), vec(2, 0, 2, 0)}));
  CHECK(std::holds_alternative<LinesIdentical>(
      linesMeet(a, Line{pt(2, 2, 1, 0), vec(-3, 0, -3, 0)})));

  // Skew lines are disjoint.
  CHECK(std::holds_alternative<LinesDisjoint>(
      linesMeet(Line{pt(0, 0, 0, 0), vec(0, 1, 0, 0)},
                Line{pt(0, 0, 0, 1), vec(0, 0, 1, 0)})));
}

TEST_CASE("plane-cone classification matches hand-worked splittings") {
  // Restricting the cone to a*d1 + b*d2 gives b^2: touches along d1.
  Plane tangent{pt(0, 0, 0, 0), vec(1, 1, 0, 0), vec(0, 0, 1, 0)};
  auto r1 = planeConeClassify(tangent, kUnitCone, FieldMode::rational);
  REQUIRE(std::holds_alternative<PlaneConeOneLine>(r1));
  CHECK(std::get<PlaneConeOneLine>(r1).line.dir == vec(1, 1, 0, 0));
  CHECK(std::get<PlaneConeOneLine>(r1).line.base == pt(0, 0, 0, 0));

  // Restriction -4ab: splits along d1 (listed first) and d2.
  Plane crossing{pt(0, 0, 0, 0), vec(1, 1, 0, 0), vec(1, -1, 0, 0)};
  auto r2 = planeConeClassify(crossing, kUnitCone, FieldMode::rational);
  REQUIRE(std::holds_alternative<PlaneConeTwoLines>(r2));
  CHECK(std::get<PlaneConeTwoLines>(r2).first.dir == vec(1, 1, 0, 0));
  CHECK(std::get<PlaneConeTwoLines>(r2).second.dir == vec(1, -1, 0, 0));

  // Restriction a^2 + b^2: vertex only.
  Plane spatial{pt(0, 0, 0, 0), vec(0, 1, 0, 0), vec(0, 0, 1, 0)};
  CHECK(std::holds_alternative<PlaneConeVertexOnly>(
      planeConeClassify(spatial, kUnitCone, FieldMode::rational)));

  // A plane missing the vertex classifies as such.
  Plane off{pt(0, 0, 0, 1), vec(1, 1, 0, 0), vec(0, 0, 1, 0)};
  CHECK(std::holds_alternative<PlaneConeNotThroughVertex>(
      planeConeClassify(off, kUnitCone, FieldMode::rational)));
}

TEST_CASE("plane-cone classification properties on sampled planes") {
  SplitMix64 rng(404);
  int twoLineCount = 0, oneLineCount = 0, vertexOnlyCount = 0;
  for (int i = 0; i < 120; ++i) {
    Cone c{randPoint(rng, 2, 2), Scalar(Rational(rng.rangeInt(1, 3),
                                                 rng.rangeInt(1, 3)))};
    Vector d1 = randDir(rng);
    Vector d2 = randDir(rng);
    if (parallelLines(Line{c.vertex, d1}, Line{c.vertex, d2}))
      continue;  // dependent directions sampled; not a plane
    Plane pl{c.vertex, d1, d2};
    PlaneConeClass cls = planeConeClassify(pl, c, FieldMode::euclidean);
    auto checkGenerator = [&](const Line& ln) {
      CHECK(ln.base == c.vertex);
      CHECK(onCone(c, ln.base + ln.dir));
      CHECK(onCone(c, ln.base + Scalar(-2) * ln.dir));
      CHECK(inPlane(ln.base + ln.dir, pl));
    };
    if (std::holds_alternative<PlaneConeOneLine>(cls)) {
      ++oneLineCount;
      checkGenerator(std::get<PlaneConeOneLine>(cls).line);
    } else if (std::holds_alternative<PlaneConeTwoLines>(cls)) {
      ++twoLineCount;
      const auto& two = std::get<PlaneConeTwoLines>(cls);
      checkGenerator(two.first);
      checkGenerator(two.second);
      CHECK_FALSE(parallelLines(two.first, two.second));
    } else if (std::holds_alternative<PlaneConeVertexOnly>(cls)) {
      ++vertexOnlyCount;
      for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
          if (a != 0 || b != 0)
            CHECK_FALSE(
                onCone(c, c.vertex + Scalar(a) * pl.d1 + Scalar(b) * pl.d2));
    }
  }
  // The sampler must exercise the real branches.
  CHECK(twoLineCount > 10);
  CHECK(vertexOnlyCount > 10);
}

TEST_CASE("tangent plane at a cone point matches the worked examples") {
  Plane p1 = tangentPlaneAt(pt(1, 0, 1, 0), kUnitCone);
  CHECK(p1.base == pt(1, 0, 1, 0));
  CHECK(p1.d1 == vec(1, 0, 1, 0));
  CHECK(p1.d2 == vec(0, 1, 0, 0));

  Plane p2 = tangentPlaneAt(pt(1, 1, 0, 0), kUnitCone);
  CHECK(p2.base == pt(1, 1, 0, 0));
  CHECK(p2.d1 == vec(1, 1, 0, 0));
  CHECK(p2.d2 == vec(0, 0, 1, 0));

  CHECK_THROWS_AS(tangentPlaneAt(pt(1, 2, 0, 0), kUnitCone), NotOnCone);
  CHECK_THROWS_AS(tangentPlaneAt(pt(0, 0, 0, 0), kUnitCone), VertexInput);
}

TEST_CASE("tangent plane at sampled cone points touches along one generator") {
  SplitMix64 rng(505);
  for (int i = 0; i < 60; ++i) {
    Cone c{randPoint(rng, 2, 2),
           Scalar(Rational(rng.rangeInt(1, 3), rng.rangeInt(1, 3)))};
    Point e = randConePoint(rng, c);
    Plane pl = tangentPlaneAt(e, c);
    CHECK(pl.base == e);
    CHECK(inPlane(c.vertex, pl));
    auto cls = planeConeClassify(pl, c, FieldMode::euclidean);
    REQUIRE(std::holds_alternative<PlaneConeOneLine>(cls));
    const Line& gen = std::get<PlaneConeOneLine>(cls).line;
    CHECK(onLine(e, gen));
  }
}

TEST_CASE("tangent plane through an outside point: worked example") {
  TangentAtOutside t =
      tangentPlaneThroughOutside(pt(3, 5, 0, 0), kUnitCone,
                                 FieldMode::rational);
  CHECK(t.touch == pt(5, 3, 4, 0));
  CHECK(t.plane.base == pt(5, 3, 4, 0));
  CHECK(t.plane.d1 == vec(5, 3, 4, 0));
  CHECK(t.plane.d2 == vec(0, 4, -3, 0));
  auto coeff = planeCoefficients(pt(3, 5, 0, 0), t.plane);
  REQUIRE(coeff.has_value());
  CHECK(coeff->first == frac(-2, 5));
  CHECK(coeff->second == frac(4, 5));
}

TEST_CASE("tangent plane through an outside point: spatial and error cases") {
  TangentAtOutside t = tangentPlaneThroughOutside(pt(0, 1, 0, 0), kUnitCone,
                                                  FieldMode::rational);
  CHECK(t.touch == pt(1, 0, 1, 0));
  CHECK(inPlane(pt(0, 1, 0, 0), t.plane));

  // Requires sqrt(3): refused over the rationals, fine in euclidean mode.
  CHECK_THROWS_AS(tangentPlaneThroughOutside(pt(1, 2, 0, 0), kUnitCone,
                                             FieldMode::rational),
                  NotEuclidean);
  TangentAtOutside te = tangentPlaneThroughOutside(pt(1, 2, 0, 0), kUnitCone,
                                                   FieldMode::euclidean);
  CHECK(onCone(kUnitCone, te.touch));
  CHECK(inPlane(pt(1, 2, 0, 0), te.plane));

  CHECK_THROWS_AS(tangentPlaneThroughOutside(pt(1, 0, 0, 0), kUnitCone,
                                             FieldMode::rational),
                  NotOutside);
  CHECK_THROWS_AS(tangentPlaneThroughOutside(pt(1, 1, 0, 0), kUnitCone,
                                             FieldMode::rational),
                  NotOutside);
  CHECK_THROWS_AS(tangentPlaneThroughOutside(pt(0, 0, 0, 0), kUnitCone,
                                             FieldMode::rational),
                  NotOutside);
}

TEST_CASE("tangent plane through sampled outside points") {
  SplitMix64 rng(606);
  auto checkResult = [](const TangentAtOutside& t, const Point& f,
                        const Cone& c) {
    CHECK(onCone(c, t.touch));
    CHECK(inPlane(f, t.plane));
    CHECK(inPlane(t.touch, t.plane));
    CHECK(inPlane(c.vertex, t.plane));
    auto cls = planeConeClassify(t.plane, c, FieldMode::euclidean);
    REQUIRE(std::holds_alternative<PlaneConeOneLine>(cls));
    CHECK(onLine(t.touch, std::get<PlaneConeOneLine>(cls).line));
  };

  // Euclidean mode: arbitrary outside points, including time-dominant axes.
  for (int i = 0; i < 40; ++i) {
    Cone c{randPoint(rng, 2, 2),
           Scalar(Rational(rng.rangeInt(1, 3), rng.rangeInt(1, 2)))};
    Point f = c.vertex + Vector{randRational(rng, 3, 2),
                                randRational(rng, 4, 2),
                                randRational(rng, 4, 2),
                                randRational(rng, 4, 2)};
    if (coneForm(c, f).sign() <= 0) continue;
    checkResult(tangentPlaneThroughOutside(f, c, FieldMode::euclidean), f, c);
  }
  // z-dominant outside points that defeat the x-y rotation route.
  for (long z = 2; z <= 6; ++z) {
    Point f = pt(1, 0, 0, z);
    checkResult(tangentPlaneThroughOutside(f, kUnitCone,
                                           FieldMode::euclidean),
                f, kUnitCone);
  }
  // Rational mode: outside points built inside a known tangent plane always
  // admit a rational answer.
  for (int i = 0; i < 40; ++i) {
    Cone c{randPoint(rng, 2, 2), Scalar(Rational(rng.rangeInt(1, 3)))};
    PythQuad qd = randPythQuad(rng, 3);
    if (qd.a.isZero() && qd.b.isZero()) continue;
    Vector g{Scalar(qd.h), c.slope * Scalar(qd.a), c.slope * Scalar(qd.b),
             c.slope * Scalar(qd.c)};
    Vector w{Scalar(0), -g.y, g.x, Scalar(0)};
    Scalar a = Scalar(randNonzeroRational(rng, 3, 3));
    Scalar b = Scalar(randNonzeroRational(rng, 3, 3));
    Point f = c.vertex + a * g + b * w;
    REQUIRE(coneForm(c, f).sign() > 0);
    checkResult(tangentPlaneThroughOutside(f, c, FieldMode::rational), f, c);
  }
}

TEST_CASE("line-cone intersection matches the worked examples") {
  LineConeResult r1 = lineConeIntersect(Line{pt(0, 2, 0, 0), vec(1, 0, 0, 0)},
                                        kUnitCone, FieldMode::rational);
  REQUIRE(r1.points.size() == 2);
  CHECK_FALSE(r1.wholeLine);
  CHECK(r1.points[0] == pt(-2, 2, 0, 0));
  CHECK(r1.points[1] == pt(2, 2, 0, 0));

  LineConeResult r2 = lineConeIntersect(Line{pt(0, 0, 0, 0), vec(1, 1, 0, 0)},
                                        kUnitCone, FieldMode::rational);
  CHECK(r2.wholeLine);
  CHECK(r2.points.empty());

  LineConeResult r3 = lineConeIntersect(Line{pt(0, 3, 0, 0), vec(0, 0, 1, 0)},
                                        kUnitCone, FieldMode::rational);
  CHECK_FALSE(r3.wholeLine);
  CHECK(r3.points.empty());
}

TEST_CASE("line-cone intersection agrees with the evaluation oracle") {
  SplitMix64 rng(707);
  for (int i = 0; i < 60; ++i) {
    Cone c{randPoint(rng, 2, 2),
           Scalar(Rational(rng.rangeInt(1, 3), rng.rangeInt(1, 2)))};
    // Random lines, plus lines forced through a cone point, plus generators.
    Line l{randPoint(rng, 3, 2), randDir(rng)};
    FieldMode mode = rng.coin() ? FieldMode::rational : FieldMode::euclidean;
    checkLineConeAgainstOracle(l, c, mode);

    Point e = randConePoint(rng, c);
    checkLineConeAgainstOracle(Line{e, randDir(rng)}, c, mode);
    checkLineConeAgainstOracle(Line{e, e - c.vertex}, c, mode);  // generator

    // Tangent line: meets the cone at exactly one point.
    Vector g = e - c.vertex;
    Vector w{Scalar(0), -g.y, g.x, Scalar(0)};
    if (!isZeroVector(w)) {
      checkLineConeAgainstOracle(Line{e, w}, c, mode);
      LineConeResult rt = lineConeIntersect(Line{e, w}, c,
                                            FieldMode::euclidean);
      REQUIRE(rt.points.size() == 1);
      CHECK(rt.points[0] == e);
    }
  }
}

TEST_CASE("sloped point search matches the worked examples") {
  const Point e = pt(0, 0, 0, 0);
  const Point f = pt(4, 0, 0, 0);

  auto r1 = slopedPointOnLine(e, f, pt(1, 0, 1, 0), Scalar(1),
                              FieldMode::rational);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == pt(2, 0, 2, 0));

  // 3 lambda^2 + 8 lambda - 16 = 0: roots -4 and 4/3, ascending.
  auto r2 = slopedPointOnLine(e, f, pt(1, 0, 2, 0), Scalar(1),
                              FieldMode::rational);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == pt(-4, 0, -8, 0));
  CHECK(r2[1] == Point{frac(4, 3), Scalar(0), frac(8, 3), Scalar(0)});

  // Discriminant 128: irrational, so rational mode refuses and euclidean
  // mode succeeds.
  CHECK_THROWS_AS(slopedPointOnLine(e, f, pt(1, 0, 1, 1), Scalar(1),
                                    FieldMode::rational),
                  NotEuclidean);
  auto r3 = slopedPointOnLine(e, f, pt(1, 0, 1, 1), Scalar(1),
                              FieldMode::euclidean);
  REQUIRE(r3.size() == 2);
  for (const Point& z : r3) {
    CHECK(onCone(Cone{f, Scalar(1)}, z));
    CHECK(collinear(e, pt(1, 0, 1, 1), z));
  }
}

TEST_CASE("sloped point search rejects malformed inputs") {
  const Point e = pt(0, 0, 0, 0);
  const Point f = pt(4, 0, 0, 0);
  const Point g = pt(1, 0, 1, 0);
  CHECK_THROWS_AS(slopedPointOnLine(e, e, g, Scalar(1), FieldMode::rational),
                  PreconditionViolated);
  CHECK_THROWS_AS(slopedPointOnLine(pt(0, 1, 0, 0), f, g, Scalar(1),
                                    FieldMode::rational),
                  PreconditionViolated);
  CHECK_THROWS_AS(slopedPointOnLine(e, f, pt(3, 0, 0, 0), Scalar(1),
                                    FieldMode::rational),
                  PreconditionViolated);
  CHECK_THROWS_AS(slopedPointOnLine(e, f, g, Scalar(0), FieldMode::rational),
                  PreconditionViolated);
  CHECK_THROWS_AS(slopedPointOnLine(e, f, g, Scalar(-1), FieldMode::rational),
                  PreconditionViolated);
}

TEST_CASE("sloped point search always finds a point in euclidean mode") {
  SplitMix64 rng(808);
  for (int i = 0; i < 50; ++i) {
    Rational et = randRational(rng, 3, 2);
    Rational ft = randRational(rng, 3, 2);
    if (et == ft) continue;
    Point e{Scalar(et), Scalar(0), Scalar(0), Scalar(0)};
    Point f{Scalar(ft), Scalar(0), Scalar(0), Scalar(0)};
    Point g = randPoint(rng, 3, 2);
    if (onAxisT(g)) continue;
    Scalar s(Rational(rng.rangeInt(1, 3), rng.rangeInt(1, 2)));
    auto zs = slopedPointOnLine(e, f, g, s, FieldMode::euclidean);
    REQUIRE(!zs.empty());
    for (const Point& z : zs) {
      CHECK(onCone(Cone{f, s}, z));
      CHECK(collinear(e, g, z));
    }
  }
}
