#include "relcheck/axioms.hpp"

#include <cstdint>
#include <exception>
#include <utility>
#include <variant>

namespace relcheck {

namespace {

constexpr const char* kAxiomNames[] = {
    "AxPh",          "AxEv",      "AxSelf",        "AxSym",
    "AxWVT",         "AxWVTSym",  "AxLines",       "AxPlanes",
    "AxCones",       "AxEuclidean", "AxTangentBase", "AxTangentVertex",
    "AxConeTangent", "AxParallelCones", "AxParallelConesE",
};

std::string pointCoordName(const std::string& name, int i) {
  static const char* suffix[] = {".t", ".x", ".y", ".z"};
  return name + suffix[i];
}

// ---------------------------------------------------------------------------
// Instance runner: the parallel kernel and its serial reference twin.
//
// Instances are generated up front in a fixed order by a sampling stream
// derived from (seed, axiom). Evaluations are pure, so the two policies can
// only differ in scheduling; both evaluate every instance and report the
// counterexample of the lowest failing index, which makes their reports
// identical by construction.
// ---------------------------------------------------------------------------

struct InstanceOutcome {
  bool failed = false;
  Counterexample ce;
};

template <typename Eval, typename Inst>
InstanceOutcome evalSafe(const Eval& eval, const Inst& inst) {
  try {
    std::optional<Counterexample> ce = eval(inst);
    if (ce) return {true, std::move(*ce)};
    return {};
  } catch (const std::exception& ex) {
    Counterexample ce;
    ce.description = std::string("evaluation raised an error: ") + ex.what();
    return {true, std::move(ce)};
  }
}

template <typename Inst, typename Eval>
AxiomReport runInstances(AxiomId id, const std::vector<Inst>& insts,
                         const Eval& eval, ExecPolicy policy) {
  const std::int64_t n = static_cast<std::int64_t>(insts.size());
  std::vector<InstanceOutcome> out(insts.size());
  if (policy == ExecPolicy::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t i = 0; i < n; ++i) out[i] = evalSafe(eval, insts[i]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) out[i] = evalSafe(eval, insts[i]);
  }
  AxiomReport report;
  report.axiom = id;
  report.verdict = Verdict::pass;
  report.instancesChecked = n;
  for (std::int64_t i = 0; i < n; ++i) {
    if (out[i].failed) {
      report.verdict = Verdict::fail;
      report.counterexample = std::move(out[i].ce);
      break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Sampling helpers. Every axiom draws from its own stream so results do not
// depend on which other axioms run or in what order.
// ---------------------------------------------------------------------------

SplitMix64 axiomStream(const SamplingConfig& cfg, AxiomId id) {
  const std::uint64_t salt =
      0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(id) + 1);
  return SplitMix64(static_cast<std::uint64_t>(cfg.seed) + salt);
}

Scalar randScalar(SplitMix64& rng, const SamplingConfig& cfg) {
  return Scalar(randRational(rng, 5, cfg.denominatorBound));
}

Point randPoint(SplitMix64& rng, const SamplingConfig& cfg) {
  return Point{randScalar(rng, cfg), randScalar(rng, cfg),
               randScalar(rng, cfg), randScalar(rng, cfg)};
}

Vector randVector(SplitMix64& rng, const SamplingConfig& cfg) {
  return Vector{randScalar(rng, cfg), randScalar(rng, cfg),
                randScalar(rng, cfg), randScalar(rng, cfg)};
}

Vector randNonzeroVector(SplitMix64& rng, const SamplingConfig& cfg) {
  for (;;) {
    Vector v = randVector(rng, cfg);
    if (!isZeroVector(v)) return v;
  }
}

Scalar randNonzeroScalar(SplitMix64& rng, const SamplingConfig& cfg) {
  return Scalar(randNonzeroRational(rng, 5, cfg.denominatorBound));
}

/// Direction along a cone of the given slope: space2 == slope^2 * time2,
/// exactly, with nonzero time part.
Vector onConeDir(SplitMix64& rng, const Scalar& slope) {
  PythQuad q = randPythQuad(rng, 4);
  return Vector{Scalar(q.h), slope * Scalar(q.a), slope * Scalar(q.b),
                slope * Scalar(q.c)};
}

/// Like onConeDir but with a nonzero x/y spatial part, so the canonical
/// tangent construction stays within rational arithmetic.
Vector onConeDirXY(SplitMix64& rng, const Scalar& slope) {
  for (;;) {
    PythQuad q = randPythQuad(rng, 4);
    if (q.a.isZero() && q.b.isZero()) continue;
    return Vector{Scalar(q.h), slope * Scalar(q.a), slope * Scalar(q.b),
                  slope * Scalar(q.c)};
  }
}

std::vector<Point> gridPoints(int radius) {
  std::vector<Point> out;
  for (long t = -radius; t <= radius; ++t)
    for (long x = -radius; x <= radius; ++x)
      for (long y = -radius; y <= radius; ++y)
        for (long z = -radius; z <= radius; ++z)
          out.push_back(Point{Scalar(t), Scalar(x), Scalar(y), Scalar(z)});
  return out;
}

struct ObserverPair {
  std::string m, k;
};

std::vector<ObserverPair> observerPairs(const Model& model,
                                        bool includeEqual) {
  std::vector<ObserverPair> out;
  std::vector<std::string> obs = model.observerIds();
  for (const std::string& m : obs)
    for (const std::string& k : obs)
      if (includeEqual || m != k) out.push_back({m, k});
  return out;
}

void requireObservers(const Model& model, const char* axiom) {
  if (model.observerIds().empty())
    throw NotApplicable(std::string(axiom) +
                        " needs at least one observer in the model");
}

Scalar randPositiveSlope(SplitMix64& rng) {
  return Scalar(Rational(static_cast<long>(rng.rangeInt(1, 4)),
                         static_cast<long>(rng.rangeInt(1, 3))));
}

/// A cone plus a sampled point on it distinct from the vertex.
struct SampledCone {
  Cone cone;
  Point e;
};

SampledCone sampleConeWithPoint(SplitMix64& rng, const Model& model,
                                const SamplingConfig& cfg, bool xySpatial) {
  std::vector<Scalar> slopes;
  for (const std::string& id : model.observerIds())
    slopes.push_back(cOf(model, id));
  slopes.push_back(randPositiveSlope(rng));
  Scalar slope = slopes[rng.below(slopes.size())];
  if (slope.sign() <= 0) slope = Scalar(1);
  Point v = randPoint(rng, cfg);
  Vector dir =
      xySpatial ? onConeDirXY(rng, slope) : onConeDir(rng, slope);
  Scalar lambda = randNonzeroScalar(rng, cfg);
  return SampledCone{Cone{v, slope}, v + lambda * dir};
}

bool spatialTwoIndependent(const Vector& u, const Vector& v) {
  // Independence of two vectors via the six 2x2 minors.
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(u[i] * v[j] - u[j] * v[i]).isZero()) return true;
  return false;
}

Scalar det3(const Vector& a, const Vector& b, const Vector& c, int i, int j,
            int k) {
  return a[i] * (b[j] * c[k] - b[k] * c[j]) -
         a[j] * (b[i] * c[k] - b[k] * c[i]) +
         a[k] * (b[i] * c[j] - b[j] * c[i]);
}

/// Rank of {a, b, c} at most two: all four 3x3 minors vanish.
bool rankAtMostTwo(const Vector& a, const Vector& b, const Vector& c) {
  static const int idx[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& t : idx)
    if (!det3(a, b, c, t[0], t[1], t[2]).isZero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// AxPh
// ---------------------------------------------------------------------------

AxiomReport checkAxPh(const Model& model, const SamplingConfig& cfg,
                      ExecPolicy policy) {
  requireObservers(model, "AxPh");
  SplitMix64 rng = axiomStream(cfg, AxiomId::AxPh);

  for (const std::string& m : model.observerIds()) {
    if (cOf(model, m).sign() <= 0) {
      AxiomReport rep;
      rep.axiom = AxiomId::AxPh;
      rep.verdict = Verdict::fail;
      rep.instancesChecked = 1;
      Counterexample ce;
      ce.description = "light speed is not positive";
      ce.add("observer", m);
      ce.add("c", cOf(model, m));
      rep.counterexample = ce;
      return rep;
    }
  }

  if (model.photonPlenum) {
    struct Inst {
      std::string m;
      Point x, y;
    };
    std::vector<Inst> insts;
    for (const std::string& m : model.observerIds()) {
      Scalar c = cOf(model, m);
      for (int i = 0; i < cfg.randomCount; ++i) {
        // Exactly light-separated pair.
        Point x = randPoint(rng, cfg);
        Vector d = onConeDir(rng, c);
        insts.push_back({m, x, x + randNonzeroScalar(rng, cfg) * d});
        // Unconstrained pair.
        insts.push_back({m, randPoint(rng, cfg), randPoint(rng, cfg)});
        // Pair separated in time only.
        Point x2 = randPoint(rng, cfg);
        Point y2 = x2;
        y2.t = y2.t + randNonzeroScalar(rng, cfg);
        insts.push_back({m, x2, y2});
      }
    }
    auto eval = [&model](const Inst& in) -> std::optional<Counterexample> {
      Scalar c = cOf(model, in.m);
      bool hasPhoton = existsPhotonThrough(model, in.m, in.x, in.y);
      Scalar lhs = space2(in.x, in.y);
      Scalar rhs = c * c * time2(in.x, in.y);
      bool lightSeparated = (lhs == rhs);
      if (hasPhoton == lightSeparated) return std::nullopt;
      Counterexample ce;
      ce.description =
          "photon existence does not match the light-speed separation "
          "condition";
      ce.add("observer", in.m);
      ce.addPoint("x", in.x);
      ce.addPoint("y", in.y);
      ce.add("space2", lhs);
      ce.add("c2time2", rhs);
      ce.add("photonExists", hasPhoton ? "true" : "false");
      return ce;
    };
    return runInstances(AxiomId::AxPh, insts, eval, policy);
  }

  // Extensional photons: audit that each declared photon's worldline is
  // lightlike at every observer's light speed. The existential direction
  // (a photon through every light-separated pair) is not checkable from a
  // finite photon list.
  struct Inst {
    std::string m, photon;
    Line worldline;
    Scalar l1, l2;
  };
  std::vector<Inst> insts;
  for (const std::string& m : model.observerIds()) {
    for (const Body& b : model.bodies) {
      if (!b.photon || !b.worldline) continue;
      std::vector<std::pair<Scalar, Scalar>> params = {
          {Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(2)}};
      for (int i = 0; i < cfg.randomCount; ++i) {
        Scalar a = randScalar(rng, cfg);
        Scalar b2 = a + randNonzeroScalar(rng, cfg);
        params.push_back({a, b2});
      }
      for (const auto& [l1, l2] : params)
        insts.push_back({m, b.id, *b.worldline, l1, l2});
    }
  }
  auto eval = [&model](const Inst& in) -> std::optional<Counterexample> {
    Frame fm = model.frameOf(in.m);
    Point x = fm.toFrame(in.worldline.base + in.l1 * in.worldline.dir);
    Point y = fm.toFrame(in.worldline.base + in.l2 * in.worldline.dir);
    Scalar c = cOf(model, in.m);
    Scalar lhs = space2(x, y);
    Scalar rhs = c * c * time2(x, y);
    if (lhs == rhs) return std::nullopt;
    Counterexample ce;
    ce.description =
        "a declared photon's worldline is not lightlike at the observer's "
        "light speed";
    ce.add("observer", in.m);
    ce.add("photon", in.photon);
    ce.addPoint("x", x);
    ce.addPoint("y", y);
    ce.add("space2", lhs);
    ce.add("c2time2", rhs);
    return ce;
  };
  AxiomReport rep = runInstances(AxiomId::AxPh, insts, eval, policy);
  if (rep.verdict == Verdict::pass) {
    rep.verdict = Verdict::notCheckable;
    rep.note =
        "existential photon coverage is not checkable from an explicit "
        "photon list; the lightlike-speed sub-check on declared photons "
        "passed";
  } else {
    rep.note = "lightlike-speed sub-check on declared photons failed";
  }
  return rep;
}

// ---------------------------------------------------------------------------
// AxEv
// ---------------------------------------------------------------------------

AxiomReport checkAxEv(const Model& model, const SamplingConfig& cfg,
                      ExecPolicy policy) {
  requireObservers(model, "AxEv");
  SplitMix64 rng = axiomStream(cfg, AxiomId::AxEv);
  struct Inst {
    std::string m, k;
    Point x;
  };
  std::vector<Inst> insts;
  for (const ObserverPair& pr : observerPairs(model, true)) {
    for (const Point& x : gridPoints(cfg.gridRadius))
      insts.push_back({pr.m, pr.k, x});
    for (int i = 0; i < cfg.randomCount; ++i)
      insts.push_back({pr.m, pr.k, randPoint(rng, cfg)});
  }
  auto eval = [&model](const Inst& in) -> std::optional<Counterexample> {
    Point y = wvt(model, in.k, in.m, in.x);
    for (const Body& b : model.bodies) {
      bool seenByM = W(model, in.m, b.id, in.x);
      bool seenByK = W(model, in.k, b.id, y);
      if (seenByM != seenByK) {
        Counterexample ce;
        ce.description =
            "the instantiated shared event does not equalize the worldview "
            "relation for some body";
        ce.add("m", in.m);
        ce.add("k", in.k);
        ce.add("body", b.id);
        ce.addPoint("x", in.x);
        ce.addPoint("y", y);
        ce.add("W_m_b_x", seenByM ? "true" : "false");
        ce.add("W_k_b_y", seenByK ? "true" : "false");
        return ce;
      }
    }
    return std::nullopt;
  };
  AxiomReport rep = runInstances(AxiomId::AxEv, insts, eval, policy);
  rep.note = "existential event instantiated as y = wvt(k, m, x)";
  return rep;
}

// ---------------------------------------------------------------------------
// AxSelf
// ---------------------------------------------------------------------------

AxiomReport checkAxSelf(const Model& model, const SamplingConfig& cfg,
                        ExecPolicy policy) {
  requireObservers(model, "AxSelf");
  SplitMix64 rng = axiomStream(cfg, AxiomId::AxSelf);
  struct Inst {
    std::string m;
    Point x;
  };
  std::vector<Inst> insts;
  for (const std::string& m : model.observerIds()) {
    // On-axis points: the observer must see itself at every one of these.
    for (long t = -cfg.gridRadius; t <= cfg.gridRadius; ++t)
      insts.push_back(
          {m, Point{Scalar(t), Scalar(0), Scalar(0), Scalar(0)}});
    for (int i = 0; i < cfg.randomCount; ++i)
      insts.push_back({m, Point{randScalar(rng, cfg), Scalar(0), Scalar(0),
                                Scalar(0)}});
    // If the observer carries an explicit worldline, sweep its image in the
    // observer's own frame: those sightings must land on the time axis, so
    // any worldline/frame mismatch is caught from the sighting side too.
    const Body* body = model.findBody(m);
    if (body != nullptr && body->worldline) {
      Frame fm = model.frameOf(m);
      std::vector<Scalar> params = {Scalar(-2), Scalar(-1), Scalar(0),
                                    Scalar(1), Scalar(2)};
      for (int i = 0; i < cfg.randomCount; ++i)
        params.push_back(randScalar(rng, cfg));
      for (const Scalar& l : params)
        insts.push_back(
            {m, fm.toFrame(body->worldline->base + l * body->worldline->dir)});
    }
    // Off-axis points: no self-sighting allowed there.
    for (const Point& x : gridPoints(cfg.gridRadius)) {
      if (!onAxisT(x)) insts.push_back({m, x});
    }
    for (int i = 0; i < cfg.randomCount; ++i) {
      Point x = randPoint(rng, cfg);
      if (onAxisT(x)) x.x = x.x + Scalar(1);
      insts.push_back({m, x});
    }
  }
  auto eval = [&model](const Inst& in) -> std::optional<Counterexample> {
    bool sees = W(model, in.m, in.m, in.x);
    bool onAxis = onAxisT(in.x);
    if (sees == onAxis) return std::nullopt;
    Counterexample ce;
    ce.description = sees ? "observer sees itself off the time axis"
                          : "observer does not see itself on its time axis";
    ce.add("observer", in.m);
    ce.addPoint("x", in.x);
    ce.add("seesSelf", sees ? "true" : "false");
    return ce;
  };
  return runInstances(AxiomId::AxSelf, insts, eval, policy);
}

// ---------------------------------------------------------------------------
// AxSym
// ---------------------------------------------------------------------------

AxiomReport checkAxSym(const Model& model, const SamplingConfig& cfg,
                       ExecPolicy policy) {
  requireObservers(model, "AxSym");
  if (!model.photonPlenum) {
    AxiomReport rep;
    rep.axiom = AxiomId::AxSym;
    rep.verdict = Verdict::notCheckable;
    rep.note =
        "symmetric-distance instances need body witnesses at arbitrary "
        "events, which only the photon plenum guarantees";
    return rep;
  }
  SplitMix64 rng = axiomStream(cfg, AxiomId::AxSym);
  struct Inst {
    std::string m, k;
    Point x, y;
  };
  std::vector<Inst> insts;
  for (const ObserverPair& pr : observerPairs(model, false)) {
    // Events simultaneous for m have equal t; to be simultaneous for k as
    // well, the difference must also be killed by the t-row of the affine
    // part of the m->k transform. Solve that intersection directly —
    // rejection sampling would almost never land on it.
    CoordinateMap cand = affineWvt(model, pr.k, pr.m);
    const auto& row = cand.linear()[0];
    Scalar w1 = row[1], w2 = row[2], w3 = row[3];
    Vector b1{Scalar(0), Scalar(1), Scalar(0), Scalar(0)};
    Vector b2{Scalar(0), Scalar(0), Scalar(1), Scalar(0)};
    if (!(w1.isZero() && w2.isZero() && w3.isZero())) {
      std::vector<Vector> cands = {
          Vector{Scalar(0), -w2, w1, Scalar(0)},
          Vector{Scalar(0), -w3, Scalar(0), w1},
          Vector{Scalar(0), Scalar(0), -w3, w2},
      };
      std::vector<Vector> picked;
      for (const Vector& c : cands) {
        if (isZeroVector(c)) continue;
        if (picked.empty()) {
          picked.push_back(c);
        } else if (spatialTwoIndependent(picked[0], c)) {
          picked.push_back(c);
          break;
        }
      }
      b1 = picked.at(0);
      b2 = picked.at(1);
    }
    for (int i = 0; i < 3 * cfg.randomCount; ++i) {
      Point x = randPoint(rng, cfg);
      Scalar a = randScalar(rng, cfg);
      Scalar b = randScalar(rng, cfg);
      if (a.isZero() && b.isZero()) a = Scalar(1);
      insts.push_back({pr.m, pr.k, x, x + a * b1 + b * b2});
    }
  }
  auto eval = [&model](const Inst& in) -> std::optional<Counterexample> {
    if (!(in.x.t == in.y.t)) return std::nullopt;  // not simultaneous for m
    Point xk = wvt(model, in.k, in.m, in.x);
    Point yk = wvt(model, in.k, in.m, in.y);
    if (!(xk.t == yk.t)) return std::nullopt;  // not simultaneous for k
    Scalar dm = space2(in.x, in.y);
    Scalar dk = space2(xk, yk);
    if (dm == dk) return std::nullopt;
    Counterexample ce;
    ce.description =
        "observers disagree on the spatial distance of two events "
        "simultaneous for both";
    ce.add("m", in.m);
    ce.add("k", in.k);
    ce.addPoint("x", in.x);
    ce.addPoint("y", in.y);
    ce.addPoint("xInK", xk);
    ce.addPoint("yInK", yk);
    ce.add("space2InM", dm);
    ce.add("space2InK", dk);
    return ce;
  };
  AxiomReport rep = runInstances(AxiomId::AxSym, insts, eval, policy);
  if (rep.verdict == Verdict::pass && rep.instancesChecked == 0)
    rep.note = "single observer: no distinct observer pairs to compare";
  return rep;
}

// ---------------------------------------------------------------------------
// AxWVT / AxWVTSym
// ---------------------------------------------------------------------------

AxiomReport checkAxWVT(const Model& model, const SamplingConfig& cfg,
                       ExecPolicy policy) {
  requireObservers(model, "AxWVT");
  SplitMix64 rng = axiomStream(cfg, AxiomId::AxWVT);
  struct Inst {
    std::string m, k, body;
    Point x;
  };
  std::vector<Inst> insts;
  for (const ObserverPair& pr : observerPairs(model, true)) {
    Frame fk = model.frameOf(pr.k);
    for (const Body& b : model.bodies) {
      // Points on b's worldline as k charts it: the biconditional is
      // non-vacuous there.
      std::vector<Point> worldPoints;
      if (b.worldline) {
        for (long l : {-1L, 0L, 2L})
          worldPoints.push_back(b.worldline->base +
                                Scalar(l) * b.worldline->dir);
      } else if (b.observer) {
        Frame fb = model.frameOf(b.id);
        for (long t : {-1L, 0L, 3L})
          worldPoints.push_back(fb.fromFrame(
              Point{Scalar(t), Scalar(0), Scalar(0), Scalar(0)}));
      }
      for (const Point& w : worldPoints)
        insts.push_back({pr.m, pr.k, b.id, fk.toFrame(w)});
      for (int i = 0; i < cfg.randomCount; ++i)
        insts.push_back({pr.m, pr.k, b.id, randPoint(rng, cfg)});
    }
  }
  auto eval = [&model](const Inst& in) -> std::optional<Counterexample> {
    bool lhs = W(model, in.k, in.body, in.x);
    Point mapped = wvt(model, in.m, in.k, in.x);
    bool rhs = W(model, in.m, in.body, mapped);
    if (lhs == rhs) return std::nullopt;
    Counterexample ce;
    ce.description =
        "sighting of a body does not carry across the worldview transform";
    ce.add("m", in.m);
    ce.add("k", in.k);
    ce.add("body", in.body);
    ce.addPoint("x", in.x);
    ce.addPoint("mapped", mapped);
    ce.add("W_k_b_x", lhs ? "true" : "false");
    ce.add("W_m_b_mapped", rhs ? "true" : "false");
    return ce;
  };
  return runInstances(AxiomId::AxWVT, insts, eval, policy);
}

AxiomReport checkAxWVTSym(const Model& model, const SamplingConfig& cfg,
                          ExecPolicy policy) {
  requireObservers(model, "AxWVTSym");
  SplitMix64 rng = axiomStream(cfg, AxiomId::AxWVTSym);
  struct Inst {
    std::string m, k;
    Point x;
  };
  std::vector<Inst> insts;
  for (const ObserverPair& pr : observerPairs(model, true)) {
    for (const Point& x : gridPoints(cfg.gridRadius))
      insts.push_back({pr.m, pr.k, x});
    for (int i = 0; i < cfg.randomCount; ++i)
      insts.push_back({pr.m, pr.k, randPoint(rng, cfg)});
  }
  auto eval = [&model](const Inst& in) -> std::optional<Counterexample> {
    Point y = wvt(model, in.k, in.m, in.x);
    Point back = wvt(model, in.m, in.k, y);
    if (back == in.x) return std::nullopt;
    Counterexample ce;
    ce.description =
        "the two directions of the worldview transform are not mutually "
        "inverse";
    ce.add("m", in.m);
    ce.add("k", in.k);
    ce.addPoint("x", in.x);
    ce.addPoint("y", y);
    ce.addPoint("roundTrip", back);
    return ce;
  };
  return runInstances(AxiomId::AxWVTSym, insts, eval, policy);
}

// ---------------------------------------------------------------------------
// AxLines / AxPlanes / AxCones
// ---------------------------------------------------------------------------

AxiomReport checkAxLines(const Model& model, const SamplingConfig& cfg,
                         ExecPolicy policy) {
  requireObservers(model, "AxLines");
  SplitMix64 rng = axiomStream(cfg, AxiomId::AxLines);
  struct Inst {
    std::string m, k;
    Point x1, x2, x3;
  };
  std::vector<Inst> insts;
  for (const ObserverPair& pr : observerPairs(model, false)) {
    for (int i = 0; i < 2 * cfg.randomCount; ++i) {
      Point base = randPoint(rng, cfg);
      Vector dir = randNonzeroVector(rng, cfg);
      Scalar l = randScalar(rng, cfg);
      if (l.isZero() || l == Scalar(1)) l = Scalar(2);
      insts.push_back({pr.m, pr.k, base, base + dir, base + l * dir});
    }
  }
  auto eval = [&model](const Inst& in) -> std::optional<Counterexample> {
    Point y1 = wvt(model, in.k, in.m, in.x1);
    Point y2 = wvt(model, in.k, in.m, in.x2);
    Point y3 = wvt(model, in.k, in.m, in.x3);
    if (collinear(y1, y2, y3)) return std::nullopt;
    Counterexample ce;
    ce.description = "a collinear triple maps to a non-collinear triple";
    ce.add("m", in.m);
    ce.add("k", in.k);
    ce.addPoint("x1", in.x1);
    ce.addPoint("x2", in.x2);
    ce.addPoint("x3", in.x3);
    ce.addPoint("y1", y1);
    ce.addPoint("y2", y2);
    ce.addPoint("y3", y3);
    return ce;
  };
  AxiomReport rep = runInstances(AxiomId::AxLines, insts, eval, policy);
  if (rep.verdict == Verdict::pass && rep.instancesChecked == 0)
    rep.note = "single observer: no distinct observer pairs to compare";
  return rep;
}

AxiomReport checkAxPlanes(const Model& model, const SamplingConfig& cfg,
                          ExecPolicy policy) {
  requireObservers(model, "AxPlanes");
  SplitMix64 rng = axiomStream(cfg, AxiomId::AxPlanes);
  struct Inst {
    std::string m, k;
    Point x1, x2, x3, x4;
  };
  std::vector<Inst> insts;
  for (const ObserverPair& pr : observerPairs(model, false)) {
    for (int i = 0; i < 2 * cfg.randomCount; ++i) {
      Point base = randPoint(rng, cfg);
      Vector d1 = randNonzeroVector(rng, cfg);
      Vector d2 = randNonzeroVector(rng, cfg);
      while (!spatialTwoIndependent(d1, d2))
        d2 = randNonzeroVector(rng, cfg);
      Scalar a = randScalar(rng, cfg);
      Scalar b = randScalar(rng, cfg);
      insts.push_back(
          {pr.m, pr.k, base, base + d1, base + d2, base + a * d1 + b * d2});
    }
  }
  auto eval = [&model](const Inst& in) -> std::optional<Counterexample> {
    Point y1 = wvt(model, in.k, in.m, in.x1);
    Point y2 = wvt(model, in.k, in.m, in.x2);
    Point y3 = wvt(model, in.k, in.m, in.x3);
    Point y4 = wvt(model, in.k, in.m, in.x4);
    if (rankAtMostTwo(y2 - y1, y3 - y1, y4 - y1)) return std::nullopt;
    Counterexample ce;
    ce.description = "a coplanar quadruple maps to a non-coplanar quadruple";
    ce.add("m", in.m);
    ce.add("k", in.k);
    ce.addPoint("x1", in.x1);
    ce.addPoint("x2", in.x2);
    ce.addPoint("x3", in.x3);
    ce.addPoint("x4", in.x4);
    ce.addPoint("y1", y1);
    ce.addPoint("y2", y2);
    ce.addPoint("y3", y3);
    ce.addPoint("y4", y4);
    return ce;
  };
  AxiomReport rep = runInstances(AxiomId::AxPlanes, insts, eval, policy);
  if (rep.verdict == Verdict::pass && rep.instancesChecked == 0)
    rep.note = "single observer: no distinct observer pairs to compare";
  return rep;
}

AxiomReport checkAxCones(const Model& model, const SamplingConfig& cfg,
                         ExecPolicy policy) {
  requireObservers(model, "AxCones");
  SplitMix64 rng = axiomStream(cfg, AxiomId::AxCones);
  struct Inst {
    std::string m, k;
    Point v, p;
  };
  std::vector<Inst> insts;
  for (const ObserverPair& pr : observerPairs(model, false)) {
    Scalar cm = cOf(model, pr.m);
    for (int i = 0; i < 3 * cfg.randomCount; ++i) {
      Point v = randPoint(rng, cfg);
      Vector dir = onConeDir(rng, cm);
      insts.push_back({pr.m, pr.k, v, v + randNonzeroScalar(rng, cfg) * dir});
    }
  }
  auto eval = [&model](const Inst& in) -> std::optional<Counterexample> {
    Cone source = lightconeAt(model, in.m, in.v);
    if (!onCone(source, in.p)) {
      Counterexample ce;
      ce.description = "sampled point is not on the source light cone";
      ce.addPoint("v", in.v);
      ce.addPoint("p", in.p);
      return ce;
    }
    Point vk = wvt(model, in.k, in.m, in.v);
    Point pk = wvt(model, in.k, in.m, in.p);
    Cone target = lightconeAt(model, in.k, vk);
    if (onCone(target, pk)) return std::nullopt;
    Counterexample ce;
    ce.description =
        "a light cone point does not map onto the target observer's light "
        "cone";
    ce.add("m", in.m);
    ce.add("k", in.k);
    ce.addPoint("v", in.v);
    ce.addPoint("p", in.p);
    ce.addPoint("vInK", vk);
    ce.addPoint("pInK", pk);
    ce.add("coneForm", coneForm(target, pk));
    return ce;
  };
  AxiomReport rep = runInstances(AxiomId::AxCones, insts, eval, policy);
  if (rep.verdict == Verdict::pass && rep.instancesChecked == 0)
    rep.note = "single observer: no distinct observer pairs to compare";
  return rep;
}

// ---------------------------------------------------------------------------
// AxEuclidean
// ---------------------------------------------------------------------------

AxiomReport checkAxEuclidean(const Model& model, const SamplingConfig& cfg,
                             ExecPolicy policy) {
  SplitMix64 rng = axiomStream(cfg, AxiomId::AxEuclidean);
  struct Inst {
    Scalar x;
  };
  std::vector<Inst> insts;
  insts.push_back({Scalar(2)});
  insts.push_back({Scalar(0)});
  insts.push_back({Scalar(1)});
  insts.push_back({Scalar(Rational(9, 4))});
  for (int i = 0; i < cfg.randomCount; ++i) {
    Rational r = randRational(rng, 6, cfg.denominatorBound);
    insts.push_back({Scalar(r < Rational(0) ? -r : r)});
  }
  const FieldMode mode = model.mode;
  auto eval = [mode](const Inst& in) -> std::optional<Counterexample> {
    try {
      Scalar r = sqrtScalar(in.x, mode);
      if (r.sign() >= 0 && r * r == in.x) return std::nullopt;
      Counterexample ce;
      ce.description = "square root does not square back to its input";
      ce.add("x", in.x);
      ce.add("root", r);
      return ce;
    } catch (const NotEuclidean&) {
      Counterexample ce;
      ce.description =
          "a nonnegative quantity has no square root in the field";
      ce.add("x", in.x);
      return ce;
    }
  };
  return runInstances(AxiomId::AxEuclidean, insts, eval, policy);
}

// ---------------------------------------------------------------------------
// Cone axioms: AxTangentBase, AxTangentVertex, AxConeTangent,
// AxParallelCones, AxParallelConesE
// ---------------------------------------------------------------------------

AxiomReport checkAxTangentBase(const Model& model, const SamplingConfig& cfg,
                               ExecPolicy policy) {
  SplitMix64 rng = axiomStream(cfg, AxiomId::AxTangentBase);
  std::vector<SampledCone> insts;
  for (int i = 0; i < 3 * cfg.randomCount; ++i)
    insts.push_back(sampleConeWithPoint(rng, model, cfg, false));
  auto eval = [](const SampledCone& in) -> std::optional<Counterexample> {
    Plane p = tangentPlaneAt(in.e, in.cone);
    if (p.base == in.e) return std::nullopt;
    Counterexample ce;
    ce.description = "tangent plane is not based at its defining point";
    ce.addPoint("e", in.e);
    ce.addPoint("base", p.base);
    return ce;
  };
  return runInstances(AxiomId::AxTangentBase, insts, eval, policy);
}

AxiomReport checkAxTangentVertex(const Model& model,
                                 const SamplingConfig& cfg,
                                 ExecPolicy policy) {
  SplitMix64 rng = axiomStream(cfg, AxiomId::AxTangentVertex);
  std::vector<SampledCone> insts;
  for (int i = 0; i < 3 * cfg.randomCount; ++i)
    insts.push_back(sampleConeWithPoint(rng, model, cfg, false));
  auto eval = [](const SampledCone& in) -> std::optional<Counterexample> {
    Plane p = tangentPlaneAt(in.e, in.cone);
    if (inPlane(in.cone.vertex, p)) return std::nullopt;
    Counterexample ce;
    ce.description = "tangent plane does not contain the cone's vertex";
    ce.addPoint("e", in.e);
    ce.addPoint("vertex", in.cone.vertex);
    return ce;
  };
  return runInstances(AxiomId::AxTangentVertex, insts, eval, policy);
}

AxiomReport checkAxConeTangent(const Model& model, const SamplingConfig& cfg,
                               ExecPolicy policy) {
  SplitMix64 rng = axiomStream(cfg, AxiomId::AxConeTangent);
  struct Inst {
    Cone cone;
    Point e, pt;
  };
  std::vector<Inst> insts;
  for (int i = 0; i < cfg.randomCount; ++i) {
    SampledCone sc = sampleConeWithPoint(rng, model, cfg, false);
    Plane p = tangentPlaneAt(sc.e, sc.cone);
    // Along the generator: both sides of the biconditional should be true.
    for (long mu : {0L, 2L, -1L}) {
      Point pt = sc.cone.vertex + Scalar(mu) * (sc.e - sc.cone.vertex);
      insts.push_back({sc.cone, sc.e, pt});
    }
    // In the plane but off the generator: tangency demands these stay off
    // the cone.
    for (int j = 0; j < 3; ++j) {
      Scalar a = randScalar(rng, cfg);
      Scalar b = randNonzeroScalar(rng, cfg);
      insts.push_back({sc.cone, sc.e, p.base + a * p.d1 + b * p.d2});
    }
    // Unconstrained points.
    for (int j = 0; j < 2; ++j)
      insts.push_back({sc.cone, sc.e, randPoint(rng, cfg)});
  }
  auto eval = [](const Inst& in) -> std::optional<Counterexample> {
    Plane p = tangentPlaneAt(in.e, in.cone);
    bool onIntersection = inPlane(in.pt, p) && onCone(in.cone, in.pt);
    bool onGenerator = collinear(in.cone.vertex, in.e, in.pt);
    if (onIntersection == onGenerator) return std::nullopt;
    Counterexample ce;
    ce.description =
        "tangent plane intersection with the cone differs from the "
        "generator line";
    ce.addPoint("vertex", in.cone.vertex);
    ce.add("slope", in.cone.slope);
    ce.addPoint("e", in.e);
    ce.addPoint("pt", in.pt);
    ce.add("inPlaneAndOnCone", onIntersection ? "true" : "false");
    ce.add("collinearWithGenerator", onGenerator ? "true" : "false");
    return ce;
  };
  return runInstances(AxiomId::AxConeTangent, insts, eval, policy);
}

AxiomReport checkAxParallelCones(const Model& model,
                                 const SamplingConfig& cfg,
                                 ExecPolicy policy) {
  SplitMix64 rng = axiomStream(cfg, AxiomId::AxParallelCones);
  struct Inst {
    Cone econe;
    Point e, vf;
    Scalar lambda;
  };
  std::vector<Inst> insts;
  for (int i = 0; i < 2 * cfg.randomCount; ++i) {
    SampledCone sc = sampleConeWithPoint(rng, model, cfg, false);
    Plane p = tangentPlaneAt(sc.e, sc.cone);
    // A second cone of the same slope with vertex anywhere in the tangent
    // plane, and a point f on it along the shared generator direction.
    Scalar a = randScalar(rng, cfg);
    Scalar b = randScalar(rng, cfg);
    Point vf = p.base + a * p.d1 + b * p.d2;
    insts.push_back({sc.cone, sc.e, vf, randNonzeroScalar(rng, cfg)});
  }
  auto eval = [](const Inst& in) -> std::optional<Counterexample> {
    Plane p = tangentPlaneAt(in.e, in.econe);
    Cone fcone{in.vf, in.econe.slope};
    Point f = in.vf + in.lambda * (in.e - in.econe.vertex);
    auto fault = [&](const char* what) {
      Counterexample ce;
      ce.description = what;
      ce.addPoint("eVertex", in.econe.vertex);
      ce.add("slope", in.econe.slope);
      ce.addPoint("e", in.e);
      ce.addPoint("fVertex", in.vf);
      ce.addPoint("f", f);
      return ce;
    };
    // Hypotheses (the vertex-in-plane condition reflects the geometric
    // reading: the tangent plane is tangent to cones with vertex in it).
    if (!onCone(fcone, f) || f == in.vf)
      return fault("sampled point is not a proper point of the second cone");
    if (!inPlane(f, p) || !inPlane(in.vf, p))
      return fault("sampled configuration left the tangent plane");
    // Conclusions.
    if (!samePlane(p, tangentPlaneAt(f, fcone)))
      return fault(
          "tangent planes of the two cones differ on a shared tangent "
          "configuration");
    Line genE = lineJoining(in.econe.vertex, in.e);
    Line genF = lineJoining(in.vf, f);
    if (!parallelLines(genE, genF))
      return fault("tangency generators of the two cones are not parallel");
    return std::nullopt;
  };
  return runInstances(AxiomId::AxParallelCones, insts, eval, policy);
}

AxiomReport checkAxParallelConesE(const Model& model,
                                  const SamplingConfig& cfg,
                                  ExecPolicy policy) {
  SplitMix64 rng = axiomStream(cfg, AxiomId::AxParallelConesE);
  struct Inst {
    Cone cone;
    Point f;
  };
  std::vector<Inst> insts;
  for (int i = 0; i < 2 * cfg.randomCount; ++i) {
    if (model.mode == FieldMode::euclidean) {
      // Any strictly outside point works: rejection sampling.
      for (;;) {
        Point v = randPoint(rng, cfg);
        Scalar slope = randPositiveSlope(rng);
        Point f = randPoint(rng, cfg);
        Cone c{v, slope};
        if (coneClassify(c, f) == ConeRegion::outsideCone) {
          insts.push_back({c, f});
          break;
        }
      }
    } else {
      // Rational mode: build the outside point from an on-cone direction
      // and its in-plane companion, which keeps the tangent construction
      // inside rational arithmetic.
      Point v = randPoint(rng, cfg);
      Scalar slope = randPositiveSlope(rng);
      Vector g = onConeDirXY(rng, slope);
      Vector w{Scalar(0), -g.y, g.x, Scalar(0)};
      Scalar a = randNonzeroScalar(rng, cfg);
      Scalar b = randNonzeroScalar(rng, cfg);
      insts.push_back({Cone{v, slope}, v + a * g + b * w});
    }
  }
  const FieldMode mode = model.mode;
  auto eval = [mode](const Inst& in) -> std::optional<Counterexample> {
    auto fault = [&](const char* what) {
      Counterexample ce;
      ce.description = what;
      ce.addPoint("vertex", in.cone.vertex);
      ce.add("slope", in.cone.slope);
      ce.addPoint("f", in.f);
      return ce;
    };
    if (coneClassify(in.cone, in.f) != ConeRegion::outsideCone)
      return fault("sampled point is not strictly outside the cone");
    TangentAtOutside r = tangentPlaneThroughOutside(in.f, in.cone, mode);
    if (!onCone(in.cone, r.touch) || r.touch == in.cone.vertex)
      return fault("touch point is not a proper point of the cone");
    if (!(r.plane.base == r.touch))
      return fault("tangent plane is not based at the touch point");
    if (!inPlane(in.cone.vertex, r.plane))
      return fault("tangent plane does not contain the vertex");
    if (!inPlane(in.f, r.plane))
      return fault("tangent plane does not contain the outside point");
    PlaneConeClass cls = planeConeClassify(r.plane, in.cone, mode);
    const auto* one = std::get_if<PlaneConeOneLine>(&cls);
    if (one == nullptr)
      return fault("plane through the outside point is not tangent");
    if (!onLine(r.touch, one->line))
      return fault("tangency line does not pass through the touch point");
    return std::nullopt;
  };
  return runInstances(AxiomId::AxParallelConesE, insts, eval, policy);
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

std::string axiomName(AxiomId id) {
  return kAxiomNames[static_cast<int>(id)];
}

std::optional<AxiomId> axiomFromName(const std::string& name) {
  for (AxiomId id : kAllAxioms)
    if (name == kAxiomNames[static_cast<int>(id)]) return id;
  return std::nullopt;
}

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::notCheckable:
      return "notCheckable";
  }
  return "unknown";
}

void Counterexample::add(const std::string& name, const Scalar& value) {
  data.emplace_back(name, value.str());
}

void Counterexample::add(const std::string& name, const std::string& value) {
  data.emplace_back(name, value);
}

void Counterexample::addPoint(const std::string& name, const Point& p) {
  for (int i = 0; i < 4; ++i) data.emplace_back(pointCoordName(name, i), p[i].str());
}

std::optional<std::string> Counterexample::find(
    const std::string& name) const {
  for (const auto& [key, value] : data)
    if (key == name) return value;
  return std::nullopt;
}

std::optional<Point> Counterexample::findPoint(const std::string& name,
                                               FieldMode mode) const {
  Point p;
  for (int i = 0; i < 4; ++i) {
    std::optional<std::string> v = find(pointCoordName(name, i));
    if (!v) return std::nullopt;
    p[i] = parseScalar(*v, mode);
  }
  return p;
}

AxiomReport checkAxiom(const Model& model, AxiomId axiom,
                       const SamplingConfig& cfg, ExecPolicy policy) {
  switch (axiom) {
    case AxiomId::AxPh:
      return checkAxPh(model, cfg, policy);
    case AxiomId::AxEv:
      return checkAxEv(model, cfg, policy);
    case AxiomId::AxSelf:
      return checkAxSelf(model, cfg, policy);
    case AxiomId::AxSym:
      return checkAxSym(model, cfg, policy);
    case AxiomId::AxWVT:
      return checkAxWVT(model, cfg, policy);
    case AxiomId::AxWVTSym:
      return checkAxWVTSym(model, cfg, policy);
    case AxiomId::AxLines:
      return checkAxLines(model, cfg, policy);
    case AxiomId::AxPlanes:
      return checkAxPlanes(model, cfg, policy);
    case AxiomId::AxCones:
      return checkAxCones(model, cfg, policy);
    case AxiomId::AxEuclidean:
      return checkAxEuclidean(model, cfg, policy);
    case AxiomId::AxTangentBase:
      return checkAxTangentBase(model, cfg, policy);
    case AxiomId::AxTangentVertex:
      return checkAxTangentVertex(model, cfg, policy);
    case AxiomId::AxConeTangent:
      return checkAxConeTangent(model, cfg, policy);
    case AxiomId::AxParallelCones:
      return checkAxParallelCones(model, cfg, policy);
    case AxiomId::AxParallelConesE:
      return checkAxParallelConesE(model, cfg, policy);
  }
  throw PreconditionViolated("unknown axiom id");
}

std::vector<AxiomReport> auditAll(const Model& model,
                                  const SamplingConfig& cfg,
                                  ExecPolicy policy) {
  std::vector<AxiomReport> out;
  out.reserve(kAllAxioms.size());
  for (AxiomId id : kAllAxioms) {
    try {
      out.push_back(checkAxiom(model, id, cfg, policy));
    } catch (const NotApplicable& ex) {
      AxiomReport rep;
      rep.axiom = id;
      rep.verdict = Verdict::notCheckable;
      rep.note = ex.what();
      out.push_back(rep);
    }
  }
  return out;
}

bool overallPass(const std::vector<AxiomReport>& reports) {
  for (const AxiomReport& r : reports)
    if (r.verdict == Verdict::fail) return false;
  return true;
}

}  // namespace relcheck
