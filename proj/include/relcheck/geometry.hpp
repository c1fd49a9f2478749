#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "relcheck/errors.hpp"
#include "relcheck/scalar.hpp"

namespace relcheck {

/// Spacetime coordinates (t, x, y, z) over the active field.
struct Point {
  Scalar t, x, y, z;
  Scalar& operator[](int i);
  const Scalar& operator[](int i) const;
};

/// Coordinate displacement.
struct Vector {
  Scalar t, x, y, z;
  Scalar& operator[](int i);
  const Scalar& operator[](int i) const;
};

bool operator==(const Point& a, const Point& b);
inline bool operator!=(const Point& a, const Point& b) { return !(a == b); }
bool operator==(const Vector& a, const Vector& b);
inline bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

Vector operator-(const Point& a, const Point& b);
Point operator+(const Point& p, const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);
Vector operator-(const Vector& v);

bool isZeroVector(const Vector& v);

/// Squared spatial distance between a and b.
Scalar space2(const Point& a, const Point& b);
/// Squared time separation between a and b.
Scalar time2(const Point& a, const Point& b);

/// True when every spatial coordinate is zero (the point sits on the time
/// axis).
bool onAxisT(const Point& p);

/// Line through base in direction dir (dir never zero).
struct Line {
  Point base;
  Vector dir;
};

/// Line through two distinct points. Throws DegenerateLine when a == b.
Line lineJoining(const Point& a, const Point& b);

bool onLine(const Point& p, const Line& l);
bool collinear(const Point& a, const Point& b, const Point& c);

/// Same direction up to a nonzero scale (identical lines count as parallel).
bool parallelLines(const Line& a, const Line& b);

struct LinesIdentical {};
struct LinesMeetAt {
  Point at;
};
struct LinesDisjoint {};
using LineMeet = std::variant<LinesIdentical, LinesMeetAt, LinesDisjoint>;

/// Exact affine intersection of two lines (parallel-and-distinct and skew
/// lines are both disjoint).
LineMeet linesMeet(const Line& a, const Line& b);

/// Plane through base spanned by two linearly independent directions.
struct Plane {
  Point base;
  Vector d1, d2;
};

/// Coefficients (a, b) with p == base + a*d1 + b*d2, when they exist.
std::optional<std::pair<Scalar, Scalar>> planeCoefficients(const Point& p,
                                                           const Plane& pl);
bool inPlane(const Point& p, const Plane& pl);

/// Same point set: equal affine spans.
bool samePlane(const Plane& a, const Plane& b);

/// Light cone of a given speed: the points p with
/// space2(vertex, p) == slope^2 * time2(vertex, p).
struct Cone {
  Point vertex;
  Scalar slope;  // > 0
};

/// space2(vertex, p) - slope^2 * time2(vertex, p): zero exactly on the cone,
/// negative strictly inside, positive strictly outside.
Scalar coneForm(const Cone& c, const Point& p);

enum class ConeRegion { onCone, insideCone, outsideCone };
ConeRegion coneClassify(const Cone& c, const Point& p);
bool onCone(const Cone& c, const Point& p);

/// Canonical representative of a direction: rational directions become
/// primitive integer vectors whose first nonzero component is positive;
/// otherwise the vector is scaled so its first nonzero component is 1.
/// Throws DegenerateLine on the zero vector.
Vector canonicalDirection(const Vector& v);

/// How a plane meets a cone.
struct PlaneConeVertexOnly {};
struct PlaneConeOneLine {
  Line line;
};
struct PlaneConeTwoLines {
  Line first, second;
};
struct PlaneConeNotThroughVertex {};
using PlaneConeClass = std::variant<PlaneConeVertexOnly, PlaneConeOneLine,
                                    PlaneConeTwoLines,
                                    PlaneConeNotThroughVertex>;

/// Classifies the intersection of a plane through the cone's vertex with the
/// cone: just the vertex, one generator line, or two generator lines. Planes
/// that miss the vertex classify as PlaneConeNotThroughVertex. May throw
/// NotEuclidean in rational mode when the split requires an irrational root.
PlaneConeClass planeConeClassify(const Plane& pl, const Cone& c,
                                 FieldMode mode);

/// Tangent plane to the cone at a point e on it: the plane through e
/// containing the generator line of e whose intersection with the cone is
/// exactly that generator. Throws NotOnCone / VertexInput.
Plane tangentPlaneAt(const Point& e, const Cone& c);

/// Tangent plane to the cone through a point strictly outside it, plus the
/// touch point where the plane meets the cone.
struct TangentAtOutside {
  Point touch;   // point e on the cone whose generator the plane contains
  Plane plane;   // tangent plane; contains f and the generator through e
};

/// Throws NotOutside when f is not strictly outside; NotEuclidean in
/// rational mode when no rational tangent construction exists.
TangentAtOutside tangentPlaneThroughOutside(const Point& f, const Cone& c,
                                            FieldMode mode);

/// Intersection of a line with a cone: the whole line (a generator) or a
/// finite point set, ascending along the line parameter. May throw
/// NotEuclidean in rational mode.
struct LineConeResult {
  bool wholeLine = false;
  std::vector<Point> points;
};
LineConeResult lineConeIntersect(const Line& l, const Cone& c, FieldMode mode);

/// Points z on the line through e and g lying on the cone of speed s at f,
/// ascending along the parameter from e to g. Preconditions (else
/// PreconditionViolated): e and f both on the time axis, e != f, g off the
/// time axis, s > 0. The result is never empty in euclidean mode.
std::vector<Point> slopedPointOnLine(const Point& e, const Point& f,
                                     const Point& g, const Scalar& s,
                                     FieldMode mode);

}  // namespace relcheck
