#include "relcheck/geometry.hpp"

#include <utility>

namespace relcheck {

namespace {

Scalar& comp(auto& v, int i) {
  switch (i) {
    case 0: return v.t;
    case 1: return v.x;
    case 2: return v.y;
    default: return v.z;
  }
}

/// Bilinear form of the cone's quadric: u.v spatial minus slope^2 * ut*vt.
Scalar coneBilinear(const Cone& c, const Vector& u, const Vector& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z - c.slope * c.slope * u.t * v.t;
}

Scalar coneQ(const Cone& c, const Vector& u) { return coneBilinear(c, u, u); }

/// All 2x2 minors of (u, v) vanish: the vectors are linearly dependent.
bool vectorsDependent(const Vector& u, const Vector& v) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(u[i] * v[j] - u[j] * v[i]).isZero()) return false;
  return true;
}

/// Exact solution (a, b) of a*u + b*v == w, if one exists.
std::optional<std::pair<Scalar, Scalar>> solveSpan2(const Vector& u,
                                                    const Vector& v,
                                                    const Vector& w) {
  auto verified = [&](const Scalar& a, const Scalar& b)
      -> std::optional<std::pair<Scalar, Scalar>> {
    for (int i = 0; i < 4; ++i)
      if (!(a * u[i] + b * v[i] - w[i]).isZero()) return std::nullopt;
    return std::make_pair(a, b);
  };
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Scalar det = u[i] * v[j] - u[j] * v[i];
      if (det.isZero()) continue;
      Scalar a = (w[i] * v[j] - w[j] * v[i]) / det;
      Scalar b = (u[i] * w[j] - u[j] * w[i]) / det;
      return verified(a, b);
    }
  }
  // u and v are dependent; try each alone.
  for (int i = 0; i < 4; ++i) {
    if (!u[i].isZero()) return verified(w[i] / u[i], Scalar(0));
    if (!v[i].isZero()) return verified(Scalar(0), w[i] / v[i]);
  }
  return verified(Scalar(0), Scalar(0));  // u == v == 0: solvable iff w == 0
}

bool inSpan2(const Vector& w, const Vector& u, const Vector& v) {
  return solveSpan2(u, v, w).has_value();
}

}  // namespace

Scalar& Point::operator[](int i) { return comp(*this, i); }
const Scalar& Point::operator[](int i) const {
  return comp(const_cast<Point&>(*this), i);
}
Scalar& Vector::operator[](int i) { return comp(*this, i); }
const Scalar& Vector::operator[](int i) const {
  return comp(const_cast<Vector&>(*this), i);
}

bool operator==(const Point& a, const Point& b) {
  return a.t == b.t && a.x == b.x && a.y == b.y && a.z == b.z;
}
bool operator==(const Vector& a, const Vector& b) {
  return a.t == b.t && a.x == b.x && a.y == b.y && a.z == b.z;
}

Vector operator-(const Point& a, const Point& b) {
  return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
}
Point operator+(const Point& p, const Vector& v) {
  return {p.t + v.t, p.x + v.x, p.y + v.y, p.z + v.z};
}
Vector operator+(const Vector& a, const Vector& b) {
  return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
}
Vector operator-(const Vector& a, const Vector& b) {
  return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
}
Vector operator*(const Scalar& c, const Vector& v) {
  return {c * v.t, c * v.x, c * v.y, c * v.z};
}
Vector operator-(const Vector& v) { return {-v.t, -v.x, -v.y, -v.z}; }

bool isZeroVector(const Vector& v) {
  return v.t.isZero() && v.x.isZero() && v.y.isZero() && v.z.isZero();
}

Scalar space2(const Point& a, const Point& b) {
  Vector d = b - a;
  return d.x * d.x + d.y * d.y + d.z * d.z;
}

Scalar time2(const Point& a, const Point& b) {
  Scalar dt = b.t - a.t;
  return dt * dt;
}

bool onAxisT(const Point& p) {
  return p.x.isZero() && p.y.isZero() && p.z.isZero();
}

Line lineJoining(const Point& a, const Point& b) {
  if (a == b)
    throw DegenerateLine("line through two equal points is not determined");
  return Line{a, b - a};
}

bool onLine(const Point& p, const Line& l) {
  return vectorsDependent(p - l.base, l.dir);
}

bool collinear(const Point& a, const Point& b, const Point& c) {
  return vectorsDependent(b - a, c - a);
}

bool parallelLines(const Line& a, const Line& b) {
  return vectorsDependent(a.dir, b.dir);
}

LineMeet linesMeet(const Line& a, const Line& b) {
  if (parallelLines(a, b)) {
    if (onLine(b.base, a)) return LinesIdentical{};
    return LinesDisjoint{};
  }
  auto sol = solveSpan2(a.dir, -b.dir, b.base - a.base);
  if (!sol) return LinesDisjoint{};  // skew
  return LinesMeetAt{a.base + sol->first * a.dir};
}

std::optional<std::pair<Scalar, Scalar>> planeCoefficients(const Point& p,
                                                           const Plane& pl) {
  return solveSpan2(pl.d1, pl.d2, p - pl.base);
}

bool inPlane(const Point& p, const Plane& pl) {
  return planeCoefficients(p, pl).has_value();
}

bool samePlane(const Plane& a, const Plane& b) {
  return inPlane(b.base, a) && inSpan2(b.d1, a.d1, a.d2) &&
         inSpan2(b.d2, a.d1, a.d2) && inPlane(a.base, b) &&
         inSpan2(a.d1, b.d1, b.d2) && inSpan2(a.d2, b.d1, b.d2);
}

Scalar coneForm(const Cone& c, const Point& p) {
  return coneQ(c, p - c.vertex);
}

ConeRegion coneClassify(const Cone& c, const Point& p) {
  int s = coneForm(c, p).sign();
  if (s == 0) return ConeRegion::onCone;
  return s < 0 ? ConeRegion::insideCone : ConeRegion::outsideCone;
}

bool onCone(const Cone& c, const Point& p) {
  return coneClassify(c, p) == ConeRegion::onCone;
}

Vector canonicalDirection(const Vector& v) {
  if (isZeroVector(v))
    throw DegenerateLine("zero vector has no canonical direction");
  bool allRational = true;
  for (int i = 0; i < 4; ++i)
    if (!v[i].isRational()) {
      allRational = false;
      break;
    }
  if (!allRational) {
    for (int i = 0; i < 4; ++i) {
      if (v[i].sign() != 0) {
        Scalar inv = Scalar(1) / v[i];
        return inv * v;
      }
    }
  }
  mpz_class l(1);
  for (int i = 0; i < 4; ++i) l = lcm(l, v[i].asRational()->den());
  mpz_class g(0);
  mpz_class m[4];
  for (int i = 0; i < 4; ++i) {
    const Rational r = *v[i].asRational();
    m[i] = r.num() * (l / r.den());
    g = gcd(g, m[i]);
  }
  g = abs(g);
  Vector out;
  int lead = 0;
  for (int i = 0; i < 4; ++i) {
    m[i] /= g;
    if (lead == 0) lead = sgn(m[i]);
  }
  for (int i = 0; i < 4; ++i)
    out[i] = Scalar(Rational(lead < 0 ? mpz_class(-m[i]) : m[i]));
  return out;
}

PlaneConeClass planeConeClassify(const Plane& pl, const Cone& c,
                                 FieldMode mode) {
  if (!inPlane(c.vertex, pl)) return PlaneConeNotThroughVertex{};
  // Restrict the quadric to vertex + a*d1 + b*d2: the value is
  // A a^2 + 2 B a b + C b^2, and its zero lines are classified by the
  // discriminant B^2 - A C.
  const Scalar A = coneQ(c, pl.d1);
  const Scalar B = coneBilinear(c, pl.d1, pl.d2);
  const Scalar C = coneQ(c, pl.d2);
  const Scalar delta = B * B - A * C;
  const int sd = delta.sign();
  if (sd < 0) return PlaneConeVertexOnly{};
  const int sA = A.sign();
  if (sA == 0 && B.sign() == 0 && C.sign() == 0)
    throw PreconditionViolated(
        "plane directions degenerate: the whole plane lies on the cone");
  if (sd == 0) {
    // One double root: the plane touches the cone along one generator.
    Vector dir = sA != 0 ? canonicalDirection(-B * pl.d1 + A * pl.d2)
                         : canonicalDirection(pl.d1);  // A=0, B=0, C!=0: b=0
    return PlaneConeOneLine{Line{c.vertex, dir}};
  }
  if (sA == 0) {
    // b (2 B a + C b) = 0: the d1 generator, then the second root.
    Vector second =
        canonicalDirection((-C / (Scalar(2) * B)) * pl.d1 + pl.d2);
    return PlaneConeTwoLines{Line{c.vertex, canonicalDirection(pl.d1)},
                             Line{c.vertex, second}};
  }
  Scalar r = sqrtScalar(delta, mode);
  Scalar mu1 = (-B - r) / A;
  Scalar mu2 = (-B + r) / A;
  if (mu2 < mu1) std::swap(mu1, mu2);
  return PlaneConeTwoLines{
      Line{c.vertex, canonicalDirection(mu1 * pl.d1 + pl.d2)},
      Line{c.vertex, canonicalDirection(mu2 * pl.d1 + pl.d2)}};
}

Plane tangentPlaneAt(const Point& e, const Cone& c) {
  Vector g = e - c.vertex;
  if (isZeroVector(g))
    throw VertexInput("tangent plane requested at the cone vertex");
  if (!onCone(c, e))
    throw NotOnCone("tangent plane requested at a point off the cone");
  // A spatial direction orthogonal to g's spatial part is tangent: the
  // first nonzero of these patterns (all conjugate to g under the cone's
  // bilinear form).
  Vector candidates[3] = {
      Vector{Scalar(0), -g.y, g.x, Scalar(0)},
      Vector{Scalar(0), -g.z, Scalar(0), g.x},
      Vector{Scalar(0), Scalar(0), -g.z, g.y},
  };
  for (const Vector& w : candidates) {
    if (isZeroVector(w)) continue;
    return Plane{e, canonicalDirection(g), canonicalDirection(w)};
  }
  // Unreachable: a spatially-zero direction on the cone forces g == 0.
  throw VertexInput("tangent plane requested at the cone vertex");
}

TangentAtOutside tangentPlaneThroughOutside(const Point& f, const Cone& c,
                                            FieldMode mode) {
  const Vector phi = f - c.vertex;
  const Scalar q = coneQ(c, phi);
  if (q.sign() <= 0)
    throw NotOutside("tangent planes exist only through points strictly "
                     "outside the cone");
  const Scalar s2 = c.slope * c.slope;
  const Scalar bigT = s2 * phi.t * phi.t - phi.z * phi.z;
  if (bigT.sign() > 0) {
    // Rotate phi's (x, y) part onto the cone while keeping t and z: with
    // b = -sqrt(q / T), the direction below is lightlike and its tangent
    // plane passes through f.
    Scalar b = -sqrtScalar(q / bigT, mode);
    Scalar den = Scalar(1) + b * b;
    Vector g{phi.t, (phi.x + b * phi.y) / den, (phi.y - b * phi.x) / den,
             phi.z};
    Point e = c.vertex + canonicalDirection(g);
    return TangentAtOutside{e, tangentPlaneAt(e, c)};
  }
  // General construction: pick the lightlike direction g = (1, G) with
  // G = alpha*Phi + beta*Psi (Phi = spatial part of phi, Psi spatial and
  // orthogonal to it); the tangency condition fixes alpha, the cone fixes
  // beta. The plane spanned by g and phi meets the cone in exactly the
  // generator of g and contains f.
  const Scalar sp = phi.x * phi.x + phi.y * phi.y + phi.z * phi.z;
  Vector psi{Scalar(0), -phi.y, phi.x, Scalar(0)};
  if (isZeroVector(psi)) psi = Vector{Scalar(0), -phi.z, Scalar(0), phi.x};
  if (isZeroVector(psi)) psi = Vector{Scalar(0), Scalar(0), -phi.z, phi.y};
  const Scalar psi2 = psi.x * psi.x + psi.y * psi.y + psi.z * psi.z;
  const Scalar alpha = s2 * phi.t / sp;
  const Scalar beta = sqrtScalar(s2 * q / (sp * psi2), mode);
  Vector g = alpha * Vector{Scalar(0), phi.x, phi.y, phi.z} + beta * psi;
  g.t = Scalar(1);
  Point e = c.vertex + canonicalDirection(g);
  return TangentAtOutside{
      e, Plane{e, canonicalDirection(g), canonicalDirection(phi)}};
}

LineConeResult lineConeIntersect(const Line& l, const Cone& c,
                                 FieldMode mode) {
  const Vector u = l.base - c.vertex;
  const Scalar alpha = coneQ(c, l.dir);
  const Scalar beta = Scalar(2) * coneBilinear(c, u, l.dir);
  const Scalar gamma = coneQ(c, u);
  LineConeResult res;
  if (alpha.sign() == 0) {
    if (beta.sign() == 0) {
      res.wholeLine = gamma.sign() == 0;
      return res;
    }
    res.points.push_back(l.base + (-gamma / beta) * l.dir);
    return res;
  }
  const Scalar disc = beta * beta - Scalar(4) * alpha * gamma;
  const int sd = disc.sign();
  if (sd < 0) return res;
  const Scalar twoAlpha = Scalar(2) * alpha;
  if (sd == 0) {
    res.points.push_back(l.base + (-beta / twoAlpha) * l.dir);
    return res;
  }
  const Scalar r = sqrtScalar(disc, mode);
  Scalar l1 = (-beta - r) / twoAlpha;
  Scalar l2 = (-beta + r) / twoAlpha;
  if (l2 < l1) std::swap(l1, l2);
  res.points.push_back(l.base + l1 * l.dir);
  res.points.push_back(l.base + l2 * l.dir);
  return res;
}

std::vector<Point> slopedPointOnLine(const Point& e, const Point& f,
                                     const Point& g, const Scalar& s,
                                     FieldMode mode) {
  if (!onAxisT(e) || !onAxisT(f))
    throw PreconditionViolated(
        "sloped-point search requires e and f on the time axis");
  if (e == f)
    throw PreconditionViolated("sloped-point search requires e != f");
  if (onAxisT(g))
    throw PreconditionViolated(
        "sloped-point search requires g off the time axis");
  if (s.sign() <= 0)
    throw PreconditionViolated("sloped-point search requires a positive slope");
  return lineConeIntersect(lineJoining(e, g), Cone{f, s}, mode).points;
}

}  // namespace relcheck
