#include "relcheck/scene.hpp"

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "relcheck/errors.hpp"

namespace relcheck {
namespace {

using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Strict traversal helpers. Every reader takes the JSON path of the node it
// reads so that rejections name the exact location.
// ---------------------------------------------------------------------------

const ojson& expectObject(const ojson& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected a JSON object");
  return j;
}

const ojson& expectArray(const ojson& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected a JSON array");
  return j;
}

const ojson& expectArraySized(const ojson& j, const std::string& path,
                              size_t n) {
  expectArray(j, path);
  if (j.size() != n) {
    throw SchemaError(path + ": expected an array of " + std::to_string(n) +
                      " elements, got " + std::to_string(j.size()));
  }
  return j;
}

/// Reject any key outside the allowed set, naming its path.
void checkKeys(const ojson& obj, const std::string& path,
               std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) throw SchemaError("unknown field " + path + "/" + it.key());
  }
}

const ojson& expectField(const ojson& obj, const std::string& path,
                         const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(path + ": missing required field \"" + key + "\"");
  }
  return *it;
}

std::string stringFrom(const ojson& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path + ": expected a string");
  return j.get<std::string>();
}

bool boolFrom(const ojson& j, const std::string& path) {
  if (!j.is_boolean()) throw SchemaError(path + ": expected a boolean");
  return j.get<bool>();
}

long long intFrom(const ojson& j, const std::string& path) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    throw SchemaError(path + ": expected an integer");
  }
  return j.get<long long>();
}

/// Exact scalar: a literal string ("3", "-1/2", "sqrt(2)") or a JSON
/// integer. Decimal floats carry binary rounding, so they are rejected.
Scalar scalarFrom(const ojson& j, const std::string& path, FieldMode mode) {
  if (j.is_string()) {
    try {
      return parseScalar(j.get<std::string>(), mode);
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  if (j.is_number_integer() || j.is_number_unsigned()) {
    return parseScalar(std::to_string(j.get<long long>()), mode);
  }
  if (j.is_number_float()) {
    throw ParseError(path +
                     ": decimal literals are not supported; use exact "
                     "fractions like \"1/2\"");
  }
  throw SchemaError(path + ": expected an exact scalar literal");
}

Point pointFrom(const ojson& j, const std::string& path, FieldMode mode) {
  expectArraySized(j, path, 4);
  return Point{scalarFrom(j[0], path + "/0", mode),
               scalarFrom(j[1], path + "/1", mode),
               scalarFrom(j[2], path + "/2", mode),
               scalarFrom(j[3], path + "/3", mode)};
}

Vector vectorFrom(const ojson& j, const std::string& path, FieldMode mode) {
  expectArraySized(j, path, 4);
  return Vector{scalarFrom(j[0], path + "/0", mode),
                scalarFrom(j[1], path + "/1", mode),
                scalarFrom(j[2], path + "/2", mode),
                scalarFrom(j[3], path + "/3", mode)};
}

Matrix4 matrixFrom(const ojson& j, const std::string& path, FieldMode mode) {
  expectArraySized(j, path, 4);
  Matrix4 m;
  for (size_t r = 0; r < 4; ++r) {
    const std::string rowPath = path + "/" + std::to_string(r);
    expectArraySized(j[r], rowPath, 4);
    for (size_t c = 0; c < 4; ++c) {
      m[r][c] = scalarFrom(j[r][c], rowPath + "/" + std::to_string(c), mode);
    }
  }
  return m;
}

Matrix4 identityMatrix() {
  Matrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m[r][c] = Scalar(r == c ? 1 : 0);
  }
  return m;
}

Vector zeroVector() {
  return Vector{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
}

/// {"matrix": 4x4, "translation": [4]} — translation defaults to zero.
CoordinateMap mapFrom(const ojson& j, const std::string& path,
                      FieldMode mode) {
  expectObject(j, path);
  checkKeys(j, path, {"matrix", "translation"});
  Matrix4 m = matrixFrom(expectField(j, path, "matrix"), path + "/matrix",
                         mode);
  Vector b = zeroVector();
  if (j.contains("translation")) {
    b = vectorFrom(j["translation"], path + "/translation", mode);
  }
  return CoordinateMap(m, b);
}

bool isZero(const Vector& v) {
  const Scalar zero(0);
  return v.t == zero && v.x == zero && v.y == zero && v.z == zero;
}

FieldMode modeFromName(const std::string& name, const std::string& path) {
  if (name == "rational") return FieldMode::rational;
  if (name == "euclidean") return FieldMode::euclidean;
  throw SchemaError(path + ": expected \"rational\" or \"euclidean\", got \"" +
                    name + "\"");
}

// ---------------------------------------------------------------------------
// Scene sections
// ---------------------------------------------------------------------------

Model modelFrom(const ojson& j, const std::string& path, FieldMode mode) {
  expectObject(j, path);
  checkKeys(j, path,
            {"photonPlenum", "boost", "bodies", "frames", "lightSpeeds"});

  bool plenum = true;
  if (j.contains("photonPlenum")) {
    plenum = boolFrom(j["photonPlenum"], path + "/photonPlenum");
  }

  Model model;
  if (j.contains("boost")) {
    const std::string bp = path + "/boost";
    const ojson& b = expectObject(j["boost"], bp);
    checkKeys(b, bp, {"triple", "velocity", "c", "kOrigin"});
    BoostSpec spec;
    spec.photonPlenum = plenum;
    const bool hasTriple = b.contains("triple");
    const bool hasVelocity = b.contains("velocity");
    if (hasTriple == hasVelocity) {
      throw SchemaError(
          bp + ": exactly one of \"triple\" and \"velocity\" is required");
    }
    if (hasTriple) {
      const std::string tp = bp + "/triple";
      const ojson& t = expectArraySized(b["triple"], tp, 3);
      PythTriple triple;
      triple.a = static_cast<long>(intFrom(t[0], tp + "/0"));
      triple.b = static_cast<long>(intFrom(t[1], tp + "/1"));
      triple.h = static_cast<long>(intFrom(t[2], tp + "/2"));
      spec.triple = triple;
    } else {
      spec.velocity = scalarFrom(b["velocity"], bp + "/velocity", mode);
    }
    if (b.contains("c")) {
      spec.lightSpeed = scalarFrom(b["c"], bp + "/c", mode);
    }
    if (b.contains("kOrigin")) {
      spec.kOrigin = pointFrom(b["kOrigin"], bp + "/kOrigin", mode);
    }
    model = buildBoostModel(spec, mode);
  } else {
    model.mode = mode;
  }
  model.photonPlenum = plenum;

  if (j.contains("bodies")) {
    const std::string ap = path + "/bodies";
    const ojson& arr = expectArray(j["bodies"], ap);
    for (size_t i = 0; i < arr.size(); ++i) {
      const std::string bp = ap + "/" + std::to_string(i);
      const ojson& item = expectObject(arr[i], bp);
      checkKeys(item, bp, {"id", "observer", "photon", "worldline"});
      Body body;
      body.id = stringFrom(expectField(item, bp, "id"), bp + "/id");
      if (body.id.empty()) {
        throw SchemaError(bp + "/id: body id must be nonempty");
      }
      if (model.findBody(body.id) != nullptr) {
        throw SchemaError(bp + "/id: duplicate body id \"" + body.id + "\"");
      }
      if (item.contains("observer")) {
        body.observer = boolFrom(item["observer"], bp + "/observer");
      }
      if (item.contains("photon")) {
        body.photon = boolFrom(item["photon"], bp + "/photon");
      }
      if (item.contains("worldline")) {
        const std::string wp = bp + "/worldline";
        const ojson& w = expectObject(item["worldline"], wp);
        checkKeys(w, wp, {"base", "dir"});
        Line line;
        line.base = pointFrom(expectField(w, wp, "base"), wp + "/base", mode);
        line.dir = vectorFrom(expectField(w, wp, "dir"), wp + "/dir", mode);
        if (isZero(line.dir)) {
          throw SchemaError(wp + "/dir: direction must be nonzero");
        }
        body.worldline = line;
      }
      if (!body.observer && !body.worldline) {
        throw SchemaError(bp +
                          ": a body without a coordinate frame needs a "
                          "worldline");
      }
      model.bodies.push_back(std::move(body));
    }
  }

  if (j.contains("frames")) {
    const std::string fp = path + "/frames";
    const ojson& frames = expectObject(j["frames"], fp);
    for (auto it = frames.begin(); it != frames.end(); ++it) {
      const std::string id = it.key();
      const std::string p = fp + "/" + id;
      const Body* body = model.findBody(id);
      if (body == nullptr || !body->observer) {
        throw SchemaError(p + ": no observer with this id");
      }
      const ojson& f = expectObject(it.value(), p);
      checkKeys(f, p, {"matrix", "translation", "warp"});
      const bool hasMatrix = f.contains("matrix");
      const bool hasTranslation = f.contains("translation");
      const bool hasWarp = f.contains("warp");
      if (!hasMatrix && !hasTranslation && !hasWarp) {
        throw SchemaError(p + ": frame entry sets nothing");
      }
      Frame frame;
      auto existing = model.frames.find(id);
      if (existing != model.frames.end()) frame = existing->second;
      if (hasMatrix || hasTranslation) {
        Matrix4 m = hasMatrix ? matrixFrom(f["matrix"], p + "/matrix", mode)
                              : identityMatrix();
        Vector b = hasTranslation
                       ? vectorFrom(f["translation"], p + "/translation", mode)
                       : zeroVector();
        frame.map = CoordinateMap(m, b);
      }
      if (hasWarp) {
        const std::string wp = p + "/warp";
        const ojson& w = expectObject(f["warp"], wp);
        checkKeys(w, wp, {"target", "source", "coeff"});
        CoordinateWarp warp;
        warp.target = static_cast<int>(
            intFrom(expectField(w, wp, "target"), wp + "/target"));
        warp.source = static_cast<int>(
            intFrom(expectField(w, wp, "source"), wp + "/source"));
        warp.coeff =
            scalarFrom(expectField(w, wp, "coeff"), wp + "/coeff", mode);
        if (warp.target < 0 || warp.target > 3 || warp.source < 0 ||
            warp.source > 3 || warp.target == warp.source) {
          throw SchemaError(
              wp + ": target and source must be distinct coordinates 0..3");
        }
        frame.warp = warp;
      }
      model.frames[id] = frame;
    }
  }

  if (j.contains("lightSpeeds")) {
    const std::string lp = path + "/lightSpeeds";
    const ojson& speeds = expectObject(j["lightSpeeds"], lp);
    for (auto it = speeds.begin(); it != speeds.end(); ++it) {
      const std::string id = it.key();
      const std::string p = lp + "/" + id;
      const Body* body = model.findBody(id);
      if (body == nullptr || !body->observer) {
        throw SchemaError(p + ": no observer with this id");
      }
      model.lightSpeeds[id] = scalarFrom(it.value(), p, mode);
    }
  }

  return model;
}

SamplingConfig samplingFrom(const ojson& j, const std::string& path) {
  expectObject(j, path);
  checkKeys(j, path, {"seed", "gridRadius", "randomCount", "denominatorBound"});
  SamplingConfig cfg;
  if (j.contains("seed")) {
    const long long s = intFrom(j["seed"], path + "/seed");
    if (s < 0) throw SchemaError(path + "/seed: seed must be nonnegative");
    cfg.seed = static_cast<uint64_t>(s);
  }
  if (j.contains("gridRadius")) {
    const long long r = intFrom(j["gridRadius"], path + "/gridRadius");
    if (r < 0 || r > 8) {
      throw SchemaError(path + "/gridRadius: expected a radius in 0..8");
    }
    cfg.gridRadius = static_cast<int>(r);
  }
  if (j.contains("randomCount")) {
    const long long n = intFrom(j["randomCount"], path + "/randomCount");
    if (n < 0 || n > 1000000) {
      throw SchemaError(path + "/randomCount: expected a count in 0..1000000");
    }
    cfg.randomCount = static_cast<int>(n);
  }
  if (j.contains("denominatorBound")) {
    const long long d = intFrom(j["denominatorBound"],
                                path + "/denominatorBound");
    if (d < 1 || d > 1000000) {
      throw SchemaError(path +
                        "/denominatorBound: expected a bound in 1..1000000");
    }
    cfg.denominatorBound = static_cast<int>(d);
  }
  return cfg;
}

NoFTLCheck noftlCheckFrom(const ojson& j, const std::string& path,
                          FieldMode mode) {
  expectObject(j, path);
  checkKeys(j, path, {"m", "k", "e", "f"});
  NoFTLCheck check;
  check.m = stringFrom(expectField(j, path, "m"), path + "/m");
  check.k = stringFrom(expectField(j, path, "k"), path + "/k");
  check.e = pointFrom(expectField(j, path, "e"), path + "/e", mode);
  check.f = pointFrom(expectField(j, path, "f"), path + "/f", mode);
  return check;
}

FTLHypothesis hypothesisFrom(const ojson& j, const std::string& path,
                             FieldMode mode) {
  expectObject(j, path);
  checkKeys(j, path, {"e", "f", "cM", "cK", "map"});
  FTLHypothesis h;
  h.e = pointFrom(expectField(j, path, "e"), path + "/e", mode);
  h.f = pointFrom(expectField(j, path, "f"), path + "/f", mode);
  h.cM = scalarFrom(expectField(j, path, "cM"), path + "/cM", mode);
  h.cK = scalarFrom(expectField(j, path, "cK"), path + "/cK", mode);
  h.purportedMap = mapFrom(expectField(j, path, "map"), path + "/map", mode);
  return h;
}

// ---------------------------------------------------------------------------
// Emission helpers. Scalars always serialize as canonical literal strings so
// that reading the value back reproduces it exactly.
// ---------------------------------------------------------------------------

ojson pointJson(const Point& p) {
  return ojson::array({p.t.str(), p.x.str(), p.y.str(), p.z.str()});
}

ojson vectorJson(const Vector& v) {
  return ojson::array({v.t.str(), v.x.str(), v.y.str(), v.z.str()});
}

ojson lineJson(const Line& l) {
  ojson j;
  j["base"] = pointJson(l.base);
  j["dir"] = vectorJson(l.dir);
  return j;
}

ojson planeJson(const Plane& p) {
  ojson j;
  j["base"] = pointJson(p.base);
  j["d1"] = vectorJson(p.d1);
  j["d2"] = vectorJson(p.d2);
  return j;
}

ojson coneJson(const Cone& c) {
  ojson j;
  j["vertex"] = pointJson(c.vertex);
  j["slope"] = c.slope.str();
  return j;
}

ojson mapJson(const CoordinateMap& m) {
  ojson rows = ojson::array();
  for (int r = 0; r < 4; ++r) {
    ojson row = ojson::array();
    for (int c = 0; c < 4; ++c) row.push_back(m.linear()[r][c].str());
    rows.push_back(std::move(row));
  }
  ojson j;
  j["matrix"] = std::move(rows);
  j["translation"] = vectorJson(m.translation());
  return j;
}

ojson hypothesisJson(const FTLHypothesis& h) {
  ojson j;
  j["e"] = pointJson(h.e);
  j["f"] = pointJson(h.f);
  j["cM"] = h.cM.str();
  j["cK"] = h.cK.str();
  j["map"] = mapJson(h.purportedMap);
  return j;
}

ojson counterexampleJson(const Counterexample& ce) {
  ojson j;
  j["description"] = ce.description;
  ojson data = ojson::array();
  for (const auto& [name, value] : ce.data) {
    data.push_back(ojson::array({name, value}));
  }
  j["data"] = std::move(data);
  return j;
}

ojson verdictJson(const WitnessVerdict& verdict) {
  ojson j;
  if (const auto* meet = std::get_if<ParallelLinesMeetAt>(&verdict)) {
    j["type"] = "parallelLinesMeetAt";
    j["at"] = pointJson(meet->at);
  } else {
    const auto& v = std::get<AxiomViolated>(verdict);
    j["type"] = "axiomViolated";
    j["axiom"] = axiomName(v.axiom);
    j["witness"] = counterexampleJson(v.witness);
  }
  return j;
}

constexpr const char* kCertificateFormat = "relcheck-certificate/1";

ojson certificateJsonValue(const ContradictionCertificate& cert,
                           const FTLHypothesis& hypothesis, FieldMode mode) {
  ojson j;
  j["format"] = kCertificateFormat;
  j["fieldMode"] = fieldModeName(mode);
  j["hypothesis"] = hypothesisJson(hypothesis);
  ojson steps;
  {
    ojson s;
    s["space2"] = cert.converseCheck.space2Side.str();
    s["cTime2"] = cert.converseCheck.cTime2Side.str();
    steps["converse"] = std::move(s);
  }
  steps["eCone"] = coneJson(cert.eCone.eCone);
  {
    ojson s;
    s["g"] = pointJson(cert.tangent.g);
    s["plane"] = planeJson(cert.tangent.tangentPlane);
    steps["tangent"] = std::move(s);
  }
  {
    ojson s;
    s["wvte"] = pointJson(cert.transform.wvte);
    s["wvtf"] = pointJson(cert.transform.wvtf);
    s["wvtg"] = pointJson(cert.transform.wvtg);
    steps["transform"] = std::move(s);
  }
  {
    ojson s;
    s["wvtz"] = pointJson(cert.intersect.wvtz);
    s["z"] = pointJson(cert.intersect.z);
    s["fCone"] = coneJson(cert.intersect.fCone);
    steps["intersect"] = std::move(s);
  }
  j["steps"] = std::move(steps);
  j["lineA"] = lineJson(cert.lineA);
  j["lineB"] = lineJson(cert.lineB);
  j["verdict"] = verdictJson(cert.verdict);
  return j;
}

// ---------------------------------------------------------------------------
// Certificate readers
// ---------------------------------------------------------------------------

Line lineFrom(const ojson& j, const std::string& path, FieldMode mode) {
  expectObject(j, path);
  checkKeys(j, path, {"base", "dir"});
  Line l;
  l.base = pointFrom(expectField(j, path, "base"), path + "/base", mode);
  l.dir = vectorFrom(expectField(j, path, "dir"), path + "/dir", mode);
  return l;
}

Plane planeFrom(const ojson& j, const std::string& path, FieldMode mode) {
  expectObject(j, path);
  checkKeys(j, path, {"base", "d1", "d2"});
  Plane p;
  p.base = pointFrom(expectField(j, path, "base"), path + "/base", mode);
  p.d1 = vectorFrom(expectField(j, path, "d1"), path + "/d1", mode);
  p.d2 = vectorFrom(expectField(j, path, "d2"), path + "/d2", mode);
  return p;
}

Cone coneFrom(const ojson& j, const std::string& path, FieldMode mode) {
  expectObject(j, path);
  checkKeys(j, path, {"vertex", "slope"});
  Cone c;
  c.vertex = pointFrom(expectField(j, path, "vertex"), path + "/vertex", mode);
  c.slope = scalarFrom(expectField(j, path, "slope"), path + "/slope", mode);
  return c;
}

Counterexample counterexampleFrom(const ojson& j, const std::string& path) {
  expectObject(j, path);
  checkKeys(j, path, {"description", "data"});
  Counterexample ce;
  ce.description = stringFrom(expectField(j, path, "description"),
                              path + "/description");
  const std::string dp = path + "/data";
  const ojson& data = expectArray(expectField(j, path, "data"), dp);
  for (size_t i = 0; i < data.size(); ++i) {
    const std::string ep = dp + "/" + std::to_string(i);
    expectArraySized(data[i], ep, 2);
    ce.data.emplace_back(stringFrom(data[i][0], ep + "/0"),
                         stringFrom(data[i][1], ep + "/1"));
  }
  return ce;
}

WitnessVerdict verdictFrom(const ojson& j, const std::string& path,
                           FieldMode mode) {
  expectObject(j, path);
  const std::string type =
      stringFrom(expectField(j, path, "type"), path + "/type");
  if (type == "parallelLinesMeetAt") {
    checkKeys(j, path, {"type", "at"});
    return ParallelLinesMeetAt{
        pointFrom(expectField(j, path, "at"), path + "/at", mode)};
  }
  if (type == "axiomViolated") {
    checkKeys(j, path, {"type", "axiom", "witness"});
    const std::string name =
        stringFrom(expectField(j, path, "axiom"), path + "/axiom");
    auto id = axiomFromName(name);
    if (!id) {
      throw SchemaError(path + "/axiom: unknown axiom \"" + name + "\"");
    }
    return AxiomViolated{
        *id, counterexampleFrom(expectField(j, path, "witness"),
                                path + "/witness")};
  }
  throw SchemaError(path + "/type: expected \"parallelLinesMeetAt\" or "
                    "\"axiomViolated\", got \"" + type + "\"");
}

ojson parseJsonDocument(const std::string& bytes, const char* what) {
  try {
    return ojson::parse(bytes);
  } catch (const std::exception& ex) {
    throw ParseError(std::string(what) + " is not valid JSON: " + ex.what());
  }
}

// ---------------------------------------------------------------------------
// Text report helpers
// ---------------------------------------------------------------------------

std::string pointText(const Point& p) {
  return "(" + p.t.str() + ", " + p.x.str() + ", " + p.y.str() + ", " +
         p.z.str() + ")";
}

void appendCounterexampleText(std::string& out, const Counterexample& ce,
                              const std::string& indent) {
  out += indent + ce.description + "\n";
  for (const auto& [name, value] : ce.data) {
    out += indent + "  " + name + " = " + value + "\n";
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

std::string fnv1a64Hex(const std::string& bytes) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return std::string("fnv1a64:") + buf;
}

SceneFile parseScene(const std::string& bytes,
                     std::optional<FieldMode> modeOverride) {
  SceneFile out;
  out.digest = fnv1a64Hex(bytes);

  const ojson root = parseJsonDocument(bytes, "scene");
  expectObject(root, "scene");
  checkKeys(root, "scene", {"fieldMode", "model", "sampling", "noftl",
                            "witness"});

  const std::string declared = stringFrom(
      expectField(root, "scene", "fieldMode"), "scene/fieldMode");
  FieldMode mode = modeFromName(declared, "scene/fieldMode");
  if (modeOverride) mode = *modeOverride;
  out.mode = mode;

  out.model = modelFrom(expectField(root, "scene", "model"), "scene/model",
                        mode);

  if (root.contains("sampling")) {
    out.sampling = samplingFrom(root["sampling"], "scene/sampling");
  }

  if (root.contains("noftl")) {
    const std::string np = "scene/noftl";
    const ojson& arr = expectArray(root["noftl"], np);
    for (size_t i = 0; i < arr.size(); ++i) {
      out.noftlChecks.push_back(
          noftlCheckFrom(arr[i], np + "/" + std::to_string(i), mode));
    }
  }

  if (root.contains("witness")) {
    const std::string wp = "scene/witness";
    const ojson& arr = expectArray(root["witness"], wp);
    for (size_t i = 0; i < arr.size(); ++i) {
      out.hypotheses.push_back(
          hypothesisFrom(arr[i], wp + "/" + std::to_string(i), mode));
    }
  }

  return out;
}

std::string certificateToJson(const ContradictionCertificate& cert,
                              const FTLHypothesis& hypothesis,
                              FieldMode mode) {
  return certificateJsonValue(cert, hypothesis, mode).dump(2) + "\n";
}

CertificateFile certificateFromJson(const std::string& bytes) {
  const ojson root = parseJsonDocument(bytes, "certificate");
  const std::string path = "certificate";
  expectObject(root, path);
  checkKeys(root, path, {"format", "fieldMode", "hypothesis", "steps",
                         "lineA", "lineB", "verdict"});

  const std::string format =
      stringFrom(expectField(root, path, "format"), path + "/format");
  if (format != kCertificateFormat) {
    throw SchemaError(path + "/format: expected \"" +
                      std::string(kCertificateFormat) + "\", got \"" + format +
                      "\"");
  }

  CertificateFile file;
  file.mode = modeFromName(
      stringFrom(expectField(root, path, "fieldMode"), path + "/fieldMode"),
      path + "/fieldMode");
  file.hypothesis = hypothesisFrom(expectField(root, path, "hypothesis"),
                                   path + "/hypothesis", file.mode);

  const std::string sp = path + "/steps";
  const ojson& steps = expectObject(expectField(root, path, "steps"), sp);
  checkKeys(steps, sp, {"converse", "eCone", "tangent", "transform",
                        "intersect"});
  {
    const std::string p = sp + "/converse";
    const ojson& s = expectObject(expectField(steps, sp, "converse"), p);
    checkKeys(s, p, {"space2", "cTime2"});
    file.cert.converseCheck.space2Side =
        scalarFrom(expectField(s, p, "space2"), p + "/space2", file.mode);
    file.cert.converseCheck.cTime2Side =
        scalarFrom(expectField(s, p, "cTime2"), p + "/cTime2", file.mode);
  }
  file.cert.eCone.eCone =
      coneFrom(expectField(steps, sp, "eCone"), sp + "/eCone", file.mode);
  {
    const std::string p = sp + "/tangent";
    const ojson& s = expectObject(expectField(steps, sp, "tangent"), p);
    checkKeys(s, p, {"g", "plane"});
    file.cert.tangent.g =
        pointFrom(expectField(s, p, "g"), p + "/g", file.mode);
    file.cert.tangent.tangentPlane =
        planeFrom(expectField(s, p, "plane"), p + "/plane", file.mode);
  }
  {
    const std::string p = sp + "/transform";
    const ojson& s = expectObject(expectField(steps, sp, "transform"), p);
    checkKeys(s, p, {"wvte", "wvtf", "wvtg"});
    file.cert.transform.wvte =
        pointFrom(expectField(s, p, "wvte"), p + "/wvte", file.mode);
    file.cert.transform.wvtf =
        pointFrom(expectField(s, p, "wvtf"), p + "/wvtf", file.mode);
    file.cert.transform.wvtg =
        pointFrom(expectField(s, p, "wvtg"), p + "/wvtg", file.mode);
  }
  {
    const std::string p = sp + "/intersect";
    const ojson& s = expectObject(expectField(steps, sp, "intersect"), p);
    checkKeys(s, p, {"wvtz", "z", "fCone"});
    file.cert.intersect.wvtz =
        pointFrom(expectField(s, p, "wvtz"), p + "/wvtz", file.mode);
    file.cert.intersect.z =
        pointFrom(expectField(s, p, "z"), p + "/z", file.mode);
    file.cert.intersect.fCone =
        coneFrom(expectField(s, p, "fCone"), p + "/fCone", file.mode);
  }

  file.cert.lineA =
      lineFrom(expectField(root, path, "lineA"), path + "/lineA", file.mode);
  file.cert.lineB =
      lineFrom(expectField(root, path, "lineB"), path + "/lineB", file.mode);
  file.cert.verdict = verdictFrom(expectField(root, path, "verdict"),
                                  path + "/verdict", file.mode);
  return file;
}

std::string reportToJson(const Report& r) {
  ojson j;
  j["tool"] = kToolVersion;
  j["command"] = r.command;
  j["fieldMode"] = fieldModeName(r.mode);
  if (!r.sceneDigest.empty()) j["sceneDigest"] = r.sceneDigest;
  if (r.samplingUsed) {
    ojson s;
    s["seed"] = r.sampling.seed;
    s["gridRadius"] = r.sampling.gridRadius;
    s["randomCount"] = r.sampling.randomCount;
    s["denominatorBound"] = r.sampling.denominatorBound;
    j["sampling"] = std::move(s);
  }

  if (r.command == "audit") {
    ojson arr = ojson::array();
    for (const AxiomReport& rep : r.axioms) {
      ojson a;
      a["axiom"] = axiomName(rep.axiom);
      a["verdict"] = verdictName(rep.verdict);
      a["instances"] = rep.instancesChecked;
      if (rep.counterexample) {
        a["counterexample"] = counterexampleJson(*rep.counterexample);
      }
      if (!rep.note.empty()) a["note"] = rep.note;
      arr.push_back(std::move(a));
    }
    j["axioms"] = std::move(arr);
  }

  if (r.command == "noftl") {
    ojson arr = ojson::array();
    for (const Report::NoFTLEntry& entry : r.noftlResults) {
      ojson n;
      n["m"] = entry.check.m;
      n["k"] = entry.check.k;
      n["e"] = pointJson(entry.check.e);
      n["f"] = pointJson(entry.check.f);
      n["pass"] = entry.result.pass;
      n["space2"] = entry.result.space2Side.str();
      n["cTime2"] = entry.result.cTime2Side.str();
      arr.push_back(std::move(n));
    }
    j["noftl"] = std::move(arr);
  }

  if (r.command == "witness") {
    ojson arr = ojson::array();
    for (const Report::CertEntry& entry : r.certEntries) {
      ojson c;
      c["certificate"] =
          certificateJsonValue(entry.cert, entry.hypothesis, r.mode);
      c["valid"] = entry.valid;
      if (!entry.mismatch.empty()) c["mismatch"] = entry.mismatch;
      arr.push_back(std::move(c));
    }
    j["certificates"] = std::move(arr);
  }

  if (r.command == "validate") {
    ojson arr = ojson::array();
    for (const Report::ValidationEntry& entry : r.validations) {
      ojson v;
      v["file"] = entry.file;
      v["valid"] = entry.valid;
      if (!entry.mismatch.empty()) v["mismatch"] = entry.mismatch;
      arr.push_back(std::move(v));
    }
    j["validations"] = std::move(arr);
  }

  j["overall"] = r.overall ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string reportToText(const Report& r) {
  std::string out;
  out += std::string(kToolVersion) + " — " + r.command + " (" +
         fieldModeName(r.mode) + ")\n";
  if (!r.sceneDigest.empty()) {
    out += "scene digest: " + r.sceneDigest + "\n";
  }
  if (r.samplingUsed) {
    out += "sampling: seed " + std::to_string(r.sampling.seed) +
           ", grid radius " + std::to_string(r.sampling.gridRadius) +
           ", random count " + std::to_string(r.sampling.randomCount) +
           ", denominator bound " +
           std::to_string(r.sampling.denominatorBound) + "\n";
  }

  if (r.command == "audit") {
    out += "\naxioms:\n";
    for (const AxiomReport& rep : r.axioms) {
      std::string tag;
      switch (rep.verdict) {
        case Verdict::pass:
          tag = "[pass]         ";
          break;
        case Verdict::fail:
          tag = "[FAIL]         ";
          break;
        case Verdict::notCheckable:
          tag = "[not checkable]";
          break;
      }
      out += "  " + tag + " " + axiomName(rep.axiom) + " (" +
             std::to_string(rep.instancesChecked) + " instances)\n";
      if (rep.counterexample) {
        appendCounterexampleText(out, *rep.counterexample, "      ");
      }
      if (!rep.note.empty()) {
        out += "      note: " + rep.note + "\n";
      }
    }
  }

  if (r.command == "noftl") {
    out += "\nno-FTL checks:\n";
    for (const Report::NoFTLEntry& entry : r.noftlResults) {
      out += std::string("  ") + (entry.result.pass ? "[pass]" : "[FAIL]") +
             " " + entry.check.m + " sees " + entry.check.k + ": e = " +
             pointText(entry.check.e) + ", f = " + pointText(entry.check.f) +
             "; space2 = " + entry.result.space2Side.str() +
             (entry.result.pass ? " <= " : " > ") + "c^2 time2 = " +
             entry.result.cTime2Side.str() + "\n";
    }
  }

  if (r.command == "witness") {
    out += "\nwitnesses:\n";
    for (size_t i = 0; i < r.certEntries.size(); ++i) {
      const Report::CertEntry& entry = r.certEntries[i];
      out += "  [" + std::to_string(i) + "] ";
      if (const auto* meet =
              std::get_if<ParallelLinesMeetAt>(&entry.cert.verdict)) {
        out += "parallel lines meet at " + pointText(meet->at) + "\n";
      } else {
        const auto& v = std::get<AxiomViolated>(entry.cert.verdict);
        out += "axiom violated: " + axiomName(v.axiom) + "\n";
        appendCounterexampleText(out, v.witness, "      ");
      }
      out += std::string("      certificate re-validates: ") +
             (entry.valid ? "yes" : "NO") + "\n";
      if (!entry.mismatch.empty()) {
        out += "      mismatch: " + entry.mismatch + "\n";
      }
    }
  }

  if (r.command == "validate") {
    out += "\nvalidations:\n";
    for (const Report::ValidationEntry& entry : r.validations) {
      out += "  " + entry.file + ": " +
             (entry.valid ? "valid" : "INVALID") + "\n";
      if (!entry.mismatch.empty()) {
        out += "      mismatch: " + entry.mismatch + "\n";
      }
    }
  }

  out += std::string("\noverall: ") + (r.overall ? "pass" : "FAIL") + "\n";
  return out;
}

}  // namespace relcheck
