// Acceptance suite: eight end-to-end criteria, one [PASS]/[FAIL] line each,
// exit 0 only when every criterion holds. Case counts and runtime bounds are
// pinned below; every arithmetic check is exact (no tolerances anywhere).

#include <sys/wait.h>

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "relcheck/axioms.hpp"
#include "relcheck/geometry.hpp"
#include "relcheck/noftl.hpp"
#include "relcheck/sampling.hpp"
#include "relcheck/scene.hpp"
#include "relcheck/worldview.hpp"

using namespace relcheck;

namespace {

// Pinned minimums and bounds.
constexpr long kFieldLawCases = 10000;
constexpr long kSqrtRoundTrips = 1000;
constexpr double kFieldSeconds = 10.0;
constexpr long kParallelPairs = 1000;
constexpr long kConeSamples = 500;
constexpr long kOutsideSamples = 200;
constexpr double kConeSeconds = 60.0;
constexpr long kOraclePairs = 200;
constexpr long kAuditModels = 100;
constexpr long kTheoremInstances = 1000;
constexpr long kWitnessHypotheses = 50;
constexpr double kWitnessSeconds = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using steady = std::chrono::steady_clock;

double secondsSince(steady::time_point t0) {
  return std::chrono::duration_cast<std::chrono::duration<double>>(
             steady::now() - t0)
      .count();
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, ap);
  va_end(ap);
  return std::string(buf);
}

Point randPointQ(SplitMix64& rng, long nb, long db) {
  return Point{Scalar(randRational(rng, nb, db)),
               Scalar(randRational(rng, nb, db)),
               Scalar(randRational(rng, nb, db)),
               Scalar(randRational(rng, nb, db))};
}

Vector randDirQ(SplitMix64& rng, long nb, long db) {
  for (;;) {
    Vector v{Scalar(randRational(rng, nb, db)),
             Scalar(randRational(rng, nb, db)),
             Scalar(randRational(rng, nb, db)),
             Scalar(randRational(rng, nb, db))};
    if (!isZeroVector(v)) return v;
  }
}

/// Invertible affine map sending e to the origin and f to (1,0,0,0):
/// complete f-e to a basis with standard vectors and invert. Requires
/// e != f.
CoordinateMap axisMap(const Point& e, const Point& f) {
  Vector d = f - e;
  int pivot = -1;
  for (int i = 0; i < 4 && pivot < 0; ++i)
    if (!d[i].isZero()) pivot = i;
  Matrix4 basis{};
  for (int r = 0; r < 4; ++r) basis[r][0] = d[r];
  int col = 1;
  for (int j = 0; j < 4; ++j) {
    if (j == pivot) continue;
    basis[j][col] = Scalar(1);
    ++col;
  }
  Vector zero{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
  CoordinateMap lin = CoordinateMap(basis, zero).inverse();
  Matrix4 id{};
  for (int i = 0; i < 4; ++i) id[i][i] = Scalar(1);
  CoordinateMap shift(id, Point{Scalar(0), Scalar(0), Scalar(0), Scalar(0)} -
                              e);
  return lin.compose(shift);
}

std::string capture(const std::string& cmd, int* exitCode) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) {
    if (exitCode != nullptr) *exitCode = -1;
    return std::string();
  }
  std::string out;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  if (exitCode != nullptr) {
    *exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1. Ordered-field laws, square-root round-trips, rational refusal.
// ---------------------------------------------------------------------------

Outcome criterion1() {
  const auto t0 = steady::now();
  SplitMix64 rng(101);
  long lawCases = 0;
  long roots = 0;
  std::string fail;

  auto euclidScalar = [&]() {
    Scalar a(randRational(rng, 4, 4));
    Scalar b(randRational(rng, 4, 4));
    Scalar d(rng.rangeInt(2, 7));
    return a + b * sqrtScalar(d, FieldMode::euclidean);
  };

  auto law = [&](bool ok, const char* what) {
    ++lawCases;
    if (!ok && fail.empty()) fail = what;
  };

  auto checkLaws = [&](const Scalar& a, const Scalar& b, const Scalar& c) {
    law(a + b == b + a, "addition is not commutative");
    law((a + b) + c == a + (b + c), "addition is not associative");
    law(a * b == b * a, "multiplication is not commutative");
    law((a * b) * c == a * (b * c), "multiplication is not associative");
    law(a * (b + c) == a * b + a * c, "multiplication does not distribute");
    law(a + Scalar(0) == a, "zero is not the additive identity");
    law(a * Scalar(1) == a, "one is not the multiplicative identity");
    law((a - a).isZero(), "additive inverse fails");
    if (!a.isZero()) law(a / a == Scalar(1), "multiplicative inverse fails");
    const int tri = (a < b ? 1 : 0) + (a == b ? 1 : 0) + (b < a ? 1 : 0);
    law(tri == 1, "trichotomy fails");
    if (a < b) {
      law(a + c < b + c, "order does not respect addition");
      if (c.sign() > 0) {
        law(a * c < b * c, "order does not respect positive scaling");
      }
    }
  };

  for (int i = 0; i < 850 && fail.empty(); ++i) {
    checkLaws(Scalar(randRational(rng, 9, 7)), Scalar(randRational(rng, 9, 7)),
              Scalar(randRational(rng, 9, 7)));
  }
  for (int i = 0; i < 220 && fail.empty(); ++i) {
    checkLaws(euclidScalar(), euclidScalar(), euclidScalar());
  }

  for (int i = 0; i < 1050 && fail.empty(); ++i) {
    Scalar x;
    if (i % 3 == 2) {
      Scalar y = euclidScalar();
      x = y * y;  // nonnegative by construction, generally irrational
    } else {
      x = Scalar(randRational(rng, 60, 20));
      if (x.sign() < 0) x = -x;
    }
    const Scalar s = sqrtScalar(x, FieldMode::euclidean);
    ++roots;
    if (!(s * s == x) || s.sign() < 0) fail = "sqrt round-trip failed";
  }

  bool refused = false;
  try {
    sqrtScalar(Scalar(2), FieldMode::rational);
  } catch (const NotEuclidean&) {
    refused = true;
  }
  if (!refused && fail.empty()) {
    fail = "sqrt(2) did not raise the rational-mode refusal";
  }

  const double secs = secondsSince(t0);
  Outcome o;
  if (!fail.empty()) {
    o.pass = false;
    o.detail = fail;
  } else if (lawCases < kFieldLawCases || roots < kSqrtRoundTrips) {
    o.pass = false;
    o.detail = fmt("insufficient coverage: %ld law cases, %ld roots",
                   lawCases, roots);
  } else if (secs >= kFieldSeconds) {
    o.pass = false;
    o.detail = fmt("too slow: %.2f s (bound %.0f s)", secs, kFieldSeconds);
  } else {
    o.detail = fmt(
        "%ld exact law cases, %ld square-root round-trips, rational "
        "refusal confirmed (%.2f s < %.0f s)",
        lawCases, roots, secs, kFieldSeconds);
  }
  return o;
}

// ---------------------------------------------------------------------------
// 2. Distinct parallel lines never meet.
// ---------------------------------------------------------------------------

Outcome criterion2() {
  SplitMix64 rng(202);
  long pairs = 0;
  std::string fail;
  while (pairs < 1200 && fail.empty()) {
    Line a{randPointQ(rng, 4, 3), randDirQ(rng, 4, 3)};
    Point base2 = randPointQ(rng, 4, 3);
    if (onLine(base2, a)) continue;  // need a distinct parallel line
    Line b{base2, Scalar(randNonzeroRational(rng, 5, 3)) * a.dir};
    ++pairs;
    if (!parallelLines(a, b)) {
      fail = "a scaled-direction pair was not recognized as parallel";
      break;
    }
    if (!std::holds_alternative<LinesDisjoint>(linesMeet(a, b))) {
      fail = "distinct parallel lines were reported to meet";
    }
  }
  Outcome o;
  if (!fail.empty()) {
    o.pass = false;
    o.detail = fail;
  } else if (pairs < kParallelPairs) {
    o.pass = false;
    o.detail = fmt("only %ld pairs generated", pairs);
  } else {
    o.detail = fmt("%ld distinct parallel pairs, all exactly disjoint",
                   pairs);
  }
  return o;
}

// ---------------------------------------------------------------------------
// 3. Tangent-plane constructions satisfy the cone axioms.
// ---------------------------------------------------------------------------

Outcome criterion3() {
  const auto t0 = steady::now();
  SplitMix64 rng(303);
  long cones = 0;
  long outs = 0;
  std::string fail;

  while (cones < 600 && fail.empty()) {
    Cone c{randPointQ(rng, 3, 2),
           Scalar(Rational(rng.rangeInt(1, 4), rng.rangeInt(1, 3)))};
    PythQuad q = randPythQuad(rng, 4);
    Vector dir{Scalar(q.h), c.slope * Scalar(q.a), c.slope * Scalar(q.b),
               c.slope * Scalar(q.c)};
    Point e = c.vertex + Scalar(randNonzeroRational(rng, 4, 3)) * dir;
    ++cones;

    Plane p = tangentPlaneAt(e, c);
    if (!(p.base == e)) {
      fail = "tangent plane is not based at its cone point";
      break;
    }
    if (!inPlane(c.vertex, p)) {
      fail = "tangent plane misses the cone vertex";
      break;
    }
    auto cls = planeConeClassify(p, c, FieldMode::euclidean);
    const auto* one = std::get_if<PlaneConeOneLine>(&cls);
    if (one == nullptr) {
      fail = "tangent plane does not meet the cone in exactly one line";
      break;
    }
    if (!onLine(e, one->line) || !onLine(c.vertex, one->line)) {
      fail = "the single intersection line misses the defining points";
      break;
    }

    // Induced same-slope cone with vertex inside the tangent plane: tangent
    // planes coincide and the touched generators are parallel.
    Point vf = p.base + Scalar(randNonzeroRational(rng, 3, 2)) * p.d1 +
               Scalar(randNonzeroRational(rng, 3, 2)) * p.d2;
    Cone c2{vf, c.slope};
    Point f2 = vf + Scalar(randNonzeroRational(rng, 3, 2)) * (e - c.vertex);
    Plane p2 = tangentPlaneAt(f2, c2);
    if (!samePlane(p, p2)) {
      fail = "induced same-slope cone has a different tangent plane";
      break;
    }
    if (!parallelLines(lineJoining(c.vertex, e), lineJoining(vf, f2))) {
      fail = "touched generators of the induced cone pair are not parallel";
      break;
    }
  }

  while (outs < 240 && fail.empty()) {
    Cone c{randPointQ(rng, 2, 2),
           Scalar(Rational(rng.rangeInt(1, 3), rng.rangeInt(1, 2)))};
    Point f = randPointQ(rng, 4, 2);
    if (coneForm(c, f).sign() <= 0) continue;  // need strictly outside
    ++outs;
    TangentAtOutside r = tangentPlaneThroughOutside(f, c,
                                                    FieldMode::euclidean);
    if (!onCone(c, r.touch) || r.touch == c.vertex) {
      fail = "touch point is not a proper cone point";
      break;
    }
    if (!(r.plane.base == r.touch)) {
      fail = "outside tangent plane is not based at its touch point";
      break;
    }
    if (!inPlane(f, r.plane) || !inPlane(c.vertex, r.plane)) {
      fail = "outside tangent plane misses the outside point or the vertex";
      break;
    }
    auto cls = planeConeClassify(r.plane, c, FieldMode::euclidean);
    const auto* one = std::get_if<PlaneConeOneLine>(&cls);
    if (one == nullptr || !onLine(r.touch, one->line)) {
      fail = "outside tangent plane does not touch along one generator";
    }
  }

  const double secs = secondsSince(t0);
  Outcome o;
  if (!fail.empty()) {
    o.pass = false;
    o.detail = fail;
  } else if (cones < kConeSamples || outs < kOutsideSamples) {
    o.pass = false;
    o.detail = fmt("insufficient coverage: %ld cones, %ld outside points",
                   cones, outs);
  } else if (secs >= kConeSeconds) {
    o.pass = false;
    o.detail = fmt("too slow: %.2f s (bound %.0f s)", secs, kConeSeconds);
  } else {
    o.detail = fmt(
        "%ld tangent constructions and %ld outside-point constructions "
        "verified (%.2f s < %.0f s)",
        cones, outs, secs, kConeSeconds);
  }
  return o;
}

// ---------------------------------------------------------------------------
// 4. Line-cone intersection agrees with a sign-scan oracle.
// ---------------------------------------------------------------------------

Outcome criterion4() {
  SplitMix64 rng(404);
  long pairs = 0;
  std::string fail;

  while (pairs < 240 && fail.empty()) {
    Cone c{randPointQ(rng, 3, 2),
           Scalar(Rational(rng.rangeInt(1, 3), rng.rangeInt(1, 2)))};
    Line l{randPointQ(rng, 3, 2), randDirQ(rng, 3, 2)};
    const int kind = static_cast<int>(pairs % 3);
    if (kind >= 1) {
      // Force the line through a cone point; kind 2 takes the generator.
      PythQuad q = randPythQuad(rng, 3);
      Vector dir{Scalar(q.h), c.slope * Scalar(q.a), c.slope * Scalar(q.b),
                 c.slope * Scalar(q.c)};
      Point e = c.vertex + Scalar(randNonzeroRational(rng, 3, 2)) * dir;
      l = kind == 1 ? Line{e, randDirQ(rng, 3, 2)} : Line{e, e - c.vertex};
    }
    ++pairs;

    // Independent quadratic reconstruction by exact evaluation: the cone
    // form along the line is alpha*lam^2 + beta*lam + gamma.
    auto qAt = [&](const Scalar& lam) {
      return coneForm(c, l.base + lam * l.dir);
    };
    const Scalar g0 = qAt(Scalar(0));
    const Scalar g1 = qAt(Scalar(1));
    const Scalar gm = qAt(Scalar(-1));
    const Scalar alpha = (g1 + gm - Scalar(2) * g0) / Scalar(2);
    const Scalar beta = (g1 - gm) / Scalar(2);
    const Scalar gamma = g0;

    LineConeResult res = lineConeIntersect(l, c, FieldMode::euclidean);

    if (alpha.isZero() && beta.isZero() && gamma.isZero()) {
      if (!res.wholeLine || !res.points.empty()) {
        fail = "a generator line was not classified as whole-line";
      }
      continue;
    }
    size_t expected = 0;
    if (alpha.isZero()) {
      expected = beta.isZero() ? 0 : 1;
    } else {
      // Sign scan at the extremum decides the crossing count.
      const Scalar lamStar = -beta / (Scalar(2) * alpha);
      const int sv = qAt(lamStar).sign();
      expected = sv == 0 ? 1 : (sv == alpha.sign() ? 0 : 2);
    }
    if (res.wholeLine || res.points.size() != expected) {
      fail = fmt("crossing count mismatch: got %zu, oracle expects %zu",
                 res.points.size(), expected);
      break;
    }
    // Exact substitution of every returned point, in ascending order.
    std::vector<Scalar> lams;
    for (const Point& z : res.points) {
      if (!coneForm(c, z).isZero() || !onLine(z, l)) {
        fail = "a returned crossing fails exact substitution";
        break;
      }
      for (int i = 0; i < 4; ++i) {
        if (!l.dir[i].isZero()) {
          lams.push_back((z[i] - l.base[i]) / l.dir[i]);
          break;
        }
      }
    }
    for (size_t i = 0; i + 1 < lams.size() && fail.empty(); ++i) {
      if (!(lams[i] < lams[i + 1])) {
        fail = "crossings are not in ascending line order";
      }
    }
  }

  Outcome o;
  if (!fail.empty()) {
    o.pass = false;
    o.detail = fail;
  } else if (pairs < kOraclePairs) {
    o.pass = false;
    o.detail = fmt("only %ld pairs checked", pairs);
  } else {
    o.detail = fmt("%ld line/cone pairs match the sign-scan oracle exactly",
                   pairs);
  }
  return o;
}

// ---------------------------------------------------------------------------
// 5. Boost-model audits: clean over the euclidean field, exactly the
//    square-root axiom over the rationals, and mutants never pass.
// ---------------------------------------------------------------------------

Outcome criterion5(std::vector<Model>* auditedModels) {
  SplitMix64 rng(505);
  std::string fail;
  SamplingConfig cfg;
  cfg.seed = 2468;
  cfg.gridRadius = 1;
  cfg.randomCount = 2;
  cfg.denominatorBound = 5;

  long audited = 0;
  for (int i = 0; i < 110 && fail.empty(); ++i) {
    BoostSpec spec;
    spec.triple = randPythTriple(rng);
    spec.kOrigin = randPointQ(rng, 2, 2);

    Model em = buildBoostModel(spec, FieldMode::euclidean);
    for (const AxiomReport& rep : auditAll(em, cfg)) {
      if (rep.verdict != Verdict::pass) {
        fail = fmt("euclidean audit: %s is not a pass",
                   axiomName(rep.axiom).c_str());
        break;
      }
    }
    if (!fail.empty()) break;
    auditedModels->push_back(std::move(em));

    Model rm = buildBoostModel(spec, FieldMode::rational);
    for (const AxiomReport& rep : auditAll(rm, cfg)) {
      const bool isRootAxiom = rep.axiom == AxiomId::AxEuclidean;
      if (isRootAxiom && rep.verdict != Verdict::fail) {
        fail = "rational audit did not fail the square-root axiom";
        break;
      }
      if (!isRootAxiom && rep.verdict != Verdict::pass) {
        fail = fmt("rational audit: unexpected non-pass on %s",
                   axiomName(rep.axiom).c_str());
        break;
      }
    }
    ++audited;
  }

  // Mutation runs: perturb one frame matrix entry, confirm the perturbation
  // really moves some light-cone image off the cone (pure reflections are
  // legitimate symmetries), then require a non-clean audit.
  long mutants = 0;
  SamplingConfig mcfg = cfg;
  mcfg.randomCount = 4;
  for (int i = 0; i < 25 && fail.empty(); ++i) {
    BoostSpec spec;
    spec.triple = randPythTriple(rng);
    Model base = buildBoostModel(spec, FieldMode::euclidean);
    const Frame kf = base.frameOf("k");

    for (int attempt = 0; attempt < 60; ++attempt) {
      Matrix4 mm = kf.map.linear();
      const int r = static_cast<int>(rng.rangeInt(0, 3));
      const int cc = static_cast<int>(rng.rangeInt(0, 3));
      mm[r][cc] += Scalar(Rational(rng.rangeInt(1, 3), rng.rangeInt(5, 9)));
      CoordinateMap cand;
      try {
        cand = CoordinateMap(mm, kf.map.translation());
      } catch (const PreconditionViolated&) {
        continue;  // singular perturbation; resample
      }
      Model mut = base;
      mut.frames["k"] = Frame{cand, std::nullopt};

      bool breaksCones = false;
      const Vector probes[4] = {
          Vector{Scalar(1), Scalar(1), Scalar(0), Scalar(0)},
          Vector{Scalar(1), Scalar(0), Scalar(1), Scalar(0)},
          Vector{Scalar(1), Scalar(0), Scalar(0), Scalar(1)},
          Vector{Scalar(5), Scalar(3), Scalar(4), Scalar(0)}};
      for (const Vector& d : probes) {
        const Point x{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
        const Point y = x + d;
        const Point xk = wvt(mut, "k", "m", x);
        const Point yk = wvt(mut, "k", "m", y);
        if (!onCone(Cone{xk, Scalar(1)}, yk)) {
          breaksCones = true;
          break;
        }
      }
      if (!breaksCones) continue;

      ++mutants;
      if (overallPass(auditAll(mut, mcfg))) {
        fail = "a cone-breaking mutant audited clean";
      }
      break;
    }
  }

  Outcome o;
  if (!fail.empty()) {
    o.pass = false;
    o.detail = fail;
  } else if (audited < kAuditModels) {
    o.pass = false;
    o.detail = fmt("only %ld models audited", audited);
  } else if (mutants < 20) {
    o.pass = false;
    o.detail = fmt("only %ld effective mutants constructed", mutants);
  } else {
    o.detail = fmt(
        "%ld boost models clean over the square-root field and failing "
        "exactly the square-root axiom over the rationals; %ld mutants all "
        "caught",
        audited, mutants);
  }
  return o;
}

// ---------------------------------------------------------------------------
// 6. The speed inequality holds on every audited model.
// ---------------------------------------------------------------------------

Outcome criterion6(const std::vector<Model>& auditedModels) {
  SplitMix64 rng(606);
  std::string fail;
  long instances = 0;
  if (auditedModels.empty()) {
    return Outcome{false, "no audited models available"};
  }
  const std::string ids[2] = {"m", "k"};
  size_t mi = 0;
  while (instances < 1100 && fail.empty()) {
    const Model& model = auditedModels[mi % auditedModels.size()];
    ++mi;
    for (const std::string& a : ids) {
      for (const std::string& b : ids) {
        const Rational t1 = randRational(rng, 5, 3);
        Rational t2 = randRational(rng, 5, 3);
        if (t2 == t1) t2 = t1 + Rational(1);
        const Point e = wvt(model, a, b,
                            Point{Scalar(t1), Scalar(0), Scalar(0),
                                  Scalar(0)});
        const Point f = wvt(model, a, b,
                            Point{Scalar(t2), Scalar(0), Scalar(0),
                                  Scalar(0)});
        const NoFTLResult res = checkNoFTL(model, a, b, e, f);
        ++instances;
        if (!res.pass || res.cTime2Side < res.space2Side) {
          fail = "an audited model produced a faster-than-light sighting";
          break;
        }
      }
      if (!fail.empty()) break;
    }
  }
  Outcome o;
  if (!fail.empty()) {
    o.pass = false;
    o.detail = fail;
  } else if (instances < kTheoremInstances) {
    o.pass = false;
    o.detail = fmt("only %ld instances checked", instances);
  } else {
    o.detail = fmt(
        "%ld sighting pairs across %zu audited models satisfy the exact "
        "inequality",
        instances, auditedModels.size());
  }
  return o;
}

// ---------------------------------------------------------------------------
// 7. Witness pipeline: every certificate validates, none reaches the
//    parallel-lines absurdity, and the worked example is reproduced.
// ---------------------------------------------------------------------------

Outcome criterion7() {
  const auto t0 = steady::now();
  SplitMix64 rng(707);
  std::string fail;
  long built = 0;

  // Worked example: the frozen touch point.
  {
    FTLHypothesis h;
    h.e = Point{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    h.f = Point{Scalar(3), Scalar(5), Scalar(0), Scalar(0)};
    h.cM = Scalar(1);
    h.cK = Scalar(1);
    h.purportedMap = axisMap(h.e, h.f);
    ContradictionCertificate cert = buildFTLWitness(h, FieldMode::euclidean);
    const Point want{Scalar(5), Scalar(3), Scalar(4), Scalar(0)};
    if (!(cert.tangent.g == want)) {
      fail = "worked example does not reproduce the expected touch point";
    } else if (std::holds_alternative<ParallelLinesMeetAt>(cert.verdict)) {
      fail = "worked example reached the parallel-lines absurdity";
    } else {
      std::string why;
      if (!validateCertificate(cert, h, &why)) {
        fail = "worked example certificate rejected: " + why;
      }
    }
  }

  while (built < 55 && fail.empty()) {
    const Point e = randPointQ(rng, 3, 2);
    const Vector d = randDirQ(rng, 3, 2);
    const Point f = e + d;
    const Scalar cM(Rational(rng.rangeInt(1, 3), rng.rangeInt(1, 2)));
    const Scalar cK(Rational(rng.rangeInt(1, 3), rng.rangeInt(1, 2)));
    if (!(cM * cM * time2(e, f) < space2(e, f))) continue;  // need FTL
    FTLHypothesis h;
    h.e = e;
    h.f = f;
    h.cM = cM;
    h.cK = cK;
    h.purportedMap = axisMap(e, f);
    ++built;

    ContradictionCertificate cert = buildFTLWitness(h, FieldMode::euclidean);
    if (std::holds_alternative<ParallelLinesMeetAt>(cert.verdict)) {
      fail = "a certificate carries the parallel-lines absurdity";
      break;
    }
    std::string why;
    if (!validateCertificate(cert, h, &why)) {
      fail = "certificate rejected by the validator: " + why;
    }
  }

  const double secs = secondsSince(t0);
  Outcome o;
  if (!fail.empty()) {
    o.pass = false;
    o.detail = fail;
  } else if (built < kWitnessHypotheses) {
    o.pass = false;
    o.detail = fmt("only %ld hypotheses processed", built);
  } else if (secs >= kWitnessSeconds) {
    o.pass = false;
    o.detail = fmt("too slow: %.2f s (bound %.0f s)", secs, kWitnessSeconds);
  } else {
    o.detail = fmt(
        "worked example reproduced; %ld random hypotheses all yield "
        "validated axiom-violation certificates (%.2f s < %.0f s)",
        built, secs, kWitnessSeconds);
  }
  return o;
}

// ---------------------------------------------------------------------------
// 8. Determinism: identical seeds give byte-identical machine reports,
//    in-process and through the installed binary when provided.
// ---------------------------------------------------------------------------

const char* kDeterminismScene = R"({
  "fieldMode": "euclidean",
  "model": {"boost": {"triple": [3, 4, 5]}},
  "sampling": {"seed": 9, "randomCount": 3},
  "noftl": [{"m": "m", "k": "k", "e": [0, 0, 0, 0], "f": ["5", "3", 0, 0]}],
  "witness": [{
    "e": [0, 0, 0, 0],
    "f": ["3", "5", "0", "0"],
    "cM": "1",
    "cK": "1",
    "map": {"matrix": [["1/3", "0", "0", "0"],
                       ["-5/3", "1", "0", "0"],
                       ["0", "0", "1", "0"],
                       ["0", "0", "0", "1"]]}
  }]
})";

Outcome criterion8(const std::string& binPath) {
  auto fullRun = [&]() -> std::string {
    SceneFile scene = parseScene(kDeterminismScene);
    std::string out;
    {
      Report r;
      r.command = "audit";
      r.mode = scene.mode;
      r.sceneDigest = scene.digest;
      r.sampling = scene.sampling;
      r.samplingUsed = true;
      r.axioms = auditAll(scene.model, scene.sampling);
      r.overall = overallPass(r.axioms);
      out += reportToJson(r);
    }
    {
      Report r;
      r.command = "noftl";
      r.mode = scene.mode;
      r.sceneDigest = scene.digest;
      for (const NoFTLCheck& check : scene.noftlChecks) {
        NoFTLResult res =
            checkNoFTL(scene.model, check.m, check.k, check.e, check.f);
        r.overall = r.overall && res.pass;
        r.noftlResults.push_back({check, res});
      }
      out += reportToJson(r);
    }
    {
      Report r;
      r.command = "witness";
      r.mode = scene.mode;
      r.sceneDigest = scene.digest;
      for (const FTLHypothesis& h : scene.hypotheses) {
        ContradictionCertificate cert = buildFTLWitness(h, scene.mode);
        std::string why;
        const bool valid = validateCertificate(cert, h, &why);
        r.overall = r.overall && valid &&
                    std::holds_alternative<AxiomViolated>(cert.verdict);
        r.certEntries.push_back({std::move(cert), h, valid, std::move(why)});
      }
      out += reportToJson(r);
    }
    return out;
  };

  const std::string first = fullRun();
  const std::string second = fullRun();
  if (first != second || first.empty()) {
    return Outcome{false, "in-process reports differ between runs"};
  }

  if (binPath.empty()) {
    return Outcome{true,
                   "in-process reports byte-identical (no binary provided "
                   "for process-level check)"};
  }

  const std::string scenePath = "/tmp/relcheck_acceptance_scene.json";
  {
    std::ofstream out(scenePath);
    out << kDeterminismScene;
  }
  for (const char* cmd : {"audit", "noftl", "witness"}) {
    int code1 = -1;
    int code2 = -1;
    const std::string run1 =
        capture(binPath + " " + cmd + " " + scenePath, &code1);
    const std::string run2 =
        capture(binPath + " " + cmd + " " + scenePath, &code2);
    if (run1 != run2 || run1.empty() || code1 != code2) {
      return Outcome{false,
                     fmt("process-level %s reports differ between runs",
                         cmd)};
    }
  }
  return Outcome{true,
                 "in-process and process-level reports byte-identical "
                 "across consecutive runs"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite: exact end-to-end criteria"};
  std::string binPath;
  app.add_option("--relcheck-bin", binPath,
                 "path to the command-line binary for process-level checks");
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  const auto emit = [&](int idx, const char* label, const Outcome& o) {
    std::printf("[%s] %d. %s — %s\n", o.pass ? "PASS" : "FAIL", idx, label,
                o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  };

  emit(1, "ordered-field laws and square roots", criterion1());
  emit(2, "distinct parallel lines are disjoint", criterion2());
  emit(3, "tangent-plane cone constructions", criterion3());
  emit(4, "line-cone intersection vs sign-scan oracle", criterion4());
  std::vector<Model> auditedModels;
  emit(5, "boost-model audits and mutation runs", criterion5(&auditedModels));
  emit(6, "speed inequality on audited models", criterion6(auditedModels));
  emit(7, "contradiction-witness pipeline", criterion7());
  emit(8, "byte-identical reports", criterion8(binPath));

  std::printf("%s\n", all ? "ACCEPTANCE: all criteria hold"
                          : "ACCEPTANCE: at least one criterion failed");
  return all ? 0 : 1;
}
