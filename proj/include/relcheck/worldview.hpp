#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relcheck/geometry.hpp"
#include "relcheck/sampling.hpp"

namespace relcheck {

using Matrix4 = std::array<std::array<Scalar, 4>, 4>;  // rows t, x, y, z

/// Invertible affine coordinate change p -> A p + b with exact inverse and
/// composition. Throws PreconditionViolated when A is singular.
class CoordinateMap {
 public:
  CoordinateMap();  // identity
  CoordinateMap(const Matrix4& linear, const Vector& translation);

  Point apply(const Point& p) const;
  Vector applyLinear(const Vector& v) const;
  CoordinateMap inverse() const;
  /// (outer).compose(inner): apply inner first, then outer.
  CoordinateMap compose(const CoordinateMap& inner) const;

  const Matrix4& linear() const { return m_; }
  const Vector& translation() const { return b_; }

 private:
  Matrix4 m_;
  Vector b_;
};

/// Exactly invertible non-affine distortion: coordinate `target` gains
/// coeff * (coordinate `source`)^2. Lets a model bend worldlines while
/// keeping its coordinate transforms exactly invertible. Requires
/// target != source, both in 0..3.
struct CoordinateWarp {
  int target = 1;
  int source = 0;
  Scalar coeff;

  Point apply(const Point& p) const;
  Point invert(const Point& p) const;
};

/// An observer's coordinate system: an affine world->frame map, optionally
/// followed by a warp.
struct Frame {
  CoordinateMap map;
  std::optional<CoordinateWarp> warp;

  Point toFrame(const Point& world) const;
  Point fromFrame(const Point& local) const;
};

struct Body {
  std::string id;
  bool photon = false;
  bool observer = false;
  /// World-chart worldline. Observers may omit it (it is derived from the
  /// frame: the preimage of the time axis); other bodies must provide it.
  std::optional<Line> worldline;
};

struct Model {
  FieldMode mode = FieldMode::rational;
  bool photonPlenum = true;
  std::vector<Body> bodies;
  std::map<std::string, Frame> frames;       // keyed by observer id
  std::map<std::string, Scalar> lightSpeeds;  // keyed by observer id

  const Body* findBody(const std::string& id) const;
  /// Frame of an observer (identity when none was given).
  /// Throws NotAnObserver for unknown ids and non-observers.
  Frame frameOf(const std::string& id) const;
  std::vector<std::string> observerIds() const;
};

/// Light speed declared by observer m (1 when none was given).
/// Observers may declare different light speeds. Throws NotAnObserver.
Scalar cOf(const Model& model, const std::string& m);

/// The light cone observer m assigns to vertex v: slope cOf(m).
Cone lightconeAt(const Model& model, const std::string& m, const Point& v);

/// Worldview transform: k's coordinates of the event whose coordinates in
/// m's frame are p.
Point wvt(const Model& model, const std::string& k, const std::string& m,
          const Point& p);

/// Affine part of the m->k worldview transform, ignoring warps. This is a
/// candidate generator only — callers must verify conclusions against wvt
/// itself, which includes warps.
CoordinateMap affineWvt(const Model& model, const std::string& k,
                        const std::string& m);

/// Worldview relation: body b occupies the event whose coordinates in m's
/// frame are p.
bool W(const Model& model, const std::string& m, const std::string& b,
       const Point& p);

/// Some photon passes through both events (coordinates of observer m). With
/// the photon plenum enabled, any pair separated at light speed qualifies;
/// otherwise an explicit photon body must cover both events.
bool existsPhotonThrough(const Model& model, const std::string& m,
                         const Point& x, const Point& y);

/// Specification of a two-observer model: "m" at rest, "k" boosted along x.
struct BoostSpec {
  /// With (a, b, h), a^2 + b^2 = h^2: v = (a/h) c and gamma = h/b, both
  /// exactly rational.
  std::optional<PythTriple> triple;
  /// Used when no triple is given; gamma may need a square root
  /// (NotEuclidean in rational mode).
  std::optional<Scalar> velocity;
  Scalar lightSpeed = Scalar(1);
  /// World event of k's coordinate origin.
  Point kOrigin{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
  bool photonPlenum = true;
};

/// Throws SuperluminalBoost when |v| >= lightSpeed, NotEuclidean when gamma
/// does not exist in the field, PreconditionViolated on malformed input.
Model buildBoostModel(const BoostSpec& spec, FieldMode mode);

}  // namespace relcheck
