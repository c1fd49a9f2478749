#include "relcheck/worldview.hpp"

namespace relcheck {

namespace {

Matrix4 identityMatrix() {
  Matrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = Scalar(i == j ? 1 : 0);
  return m;
}

Vector zeroVector() { return {Scalar(0), Scalar(0), Scalar(0), Scalar(0)}; }

void checkWarp(const CoordinateWarp& w) {
  if (w.target < 0 || w.target > 3 || w.source < 0 || w.source > 3 ||
      w.target == w.source)
    throw PreconditionViolated(
        "coordinate warp needs distinct target and source coordinates in "
        "t,x,y,z");
}

}  // namespace

CoordinateMap::CoordinateMap() : m_(identityMatrix()), b_(zeroVector()) {}

CoordinateMap::CoordinateMap(const Matrix4& linear, const Vector& translation)
    : m_(linear), b_(translation) {
  // Reject singular matrices up front so inverse() cannot fail later:
  // exact Gaussian elimination to echelon form.
  Matrix4 a = m_;
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int row = col; row < 4; ++row)
      if (a[row][col].sign() != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0)
      throw PreconditionViolated("coordinate map matrix is singular");
    std::swap(a[pivot], a[col]);
    for (int row = col + 1; row < 4; ++row) {
      Scalar f = a[row][col] / a[col][col];
      for (int j = col; j < 4; ++j) a[row][j] = a[row][j] - f * a[col][j];
    }
  }
}

Point CoordinateMap::apply(const Point& p) const {
  Point out;
  for (int i = 0; i < 4; ++i) {
    Scalar acc = b_[i];
    for (int j = 0; j < 4; ++j) acc = acc + m_[i][j] * p[j];
    out[i] = acc;
  }
  return out;
}

Vector CoordinateMap::applyLinear(const Vector& v) const {
  Vector out;
  for (int i = 0; i < 4; ++i) {
    Scalar acc(0);
    for (int j = 0; j < 4; ++j) acc = acc + m_[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

CoordinateMap CoordinateMap::inverse() const {
  // Gauss-Jordan on [M | I]; exact arithmetic throughout.
  Matrix4 a = m_;
  Matrix4 inv = identityMatrix();
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int row = col; row < 4; ++row)
      if (a[row][col].sign() != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0)
      throw PreconditionViolated("coordinate map matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Scalar d = a[col][col];
    for (int j = 0; j < 4; ++j) {
      a[col][j] = a[col][j] / d;
      inv[col][j] = inv[col][j] / d;
    }
    for (int row = 0; row < 4; ++row) {
      if (row == col) continue;
      Scalar f = a[row][col];
      if (f.isZero()) continue;
      for (int j = 0; j < 4; ++j) {
        a[row][j] = a[row][j] - f * a[col][j];
        inv[row][j] = inv[row][j] - f * inv[col][j];
      }
    }
  }
  // x = M^-1 (y - b): translation of the inverse is -M^-1 b.
  CoordinateMap out;
  out.m_ = inv;
  Vector nb = zeroVector();
  for (int i = 0; i < 4; ++i) {
    Scalar acc(0);
    for (int j = 0; j < 4; ++j) acc = acc + inv[i][j] * b_[j];
    nb[i] = -acc;
  }
  out.b_ = nb;
  return out;
}

CoordinateMap CoordinateMap::compose(const CoordinateMap& inner) const {
  CoordinateMap out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Scalar acc(0);
      for (int k = 0; k < 4; ++k) acc = acc + m_[i][k] * inner.m_[k][j];
      out.m_[i][j] = acc;
    }
  Point shifted = apply(Point{inner.b_.t, inner.b_.x, inner.b_.y, inner.b_.z});
  out.b_ = Vector{shifted.t, shifted.x, shifted.y, shifted.z};
  return out;
}

Point CoordinateWarp::apply(const Point& p) const {
  checkWarp(*this);
  Point out = p;
  out[target] = out[target] + coeff * p[source] * p[source];
  return out;
}

Point CoordinateWarp::invert(const Point& p) const {
  checkWarp(*this);
  // source != target, so p[source] is the original source coordinate.
  Point out = p;
  out[target] = out[target] - coeff * p[source] * p[source];
  return out;
}

Point Frame::toFrame(const Point& world) const {
  Point local = map.apply(world);
  if (warp) local = warp->apply(local);
  return local;
}

Point Frame::fromFrame(const Point& local) const {
  Point p = local;
  if (warp) p = warp->invert(p);
  return map.inverse().apply(p);
}

const Body* Model::findBody(const std::string& id) const {
  for (const Body& b : bodies)
    if (b.id == id) return &b;
  return nullptr;
}

Frame Model::frameOf(const std::string& id) const {
  const Body* b = findBody(id);
  if (b == nullptr || !b->observer)
    throw NotAnObserver("\"" + id + "\" is not an observer of this model");
  auto it = frames.find(id);
  return it == frames.end() ? Frame{} : it->second;
}

std::vector<std::string> Model::observerIds() const {
  std::vector<std::string> out;
  for (const Body& b : bodies)
    if (b.observer) out.push_back(b.id);
  return out;
}

Scalar cOf(const Model& model, const std::string& m) {
  (void)model.frameOf(m);  // validates that m is an observer
  auto it = model.lightSpeeds.find(m);
  return it == model.lightSpeeds.end() ? Scalar(1) : it->second;
}

Cone lightconeAt(const Model& model, const std::string& m, const Point& v) {
  return Cone{v, cOf(model, m)};
}

Point wvt(const Model& model, const std::string& k, const std::string& m,
          const Point& p) {
  return model.frameOf(k).toFrame(model.frameOf(m).fromFrame(p));
}

CoordinateMap affineWvt(const Model& model, const std::string& k,
                        const std::string& m) {
  return model.frameOf(k).map.compose(model.frameOf(m).map.inverse());
}

namespace {

bool occupiesWorldEvent(const Model& model, const Body& b,
                        const Point& world) {
  if (b.worldline) return onLine(world, *b.worldline);
  if (b.observer) return onAxisT(model.frameOf(b.id).toFrame(world));
  throw PreconditionViolated("body \"" + b.id +
                             "\" has no worldline and no frame");
}

}  // namespace

bool W(const Model& model, const std::string& m, const std::string& b,
       const Point& p) {
  const Body* body = model.findBody(b);
  if (body == nullptr)
    throw PreconditionViolated("unknown body \"" + b + "\"");
  Point world = model.frameOf(m).fromFrame(p);
  return occupiesWorldEvent(model, *body, world);
}

bool existsPhotonThrough(const Model& model, const std::string& m,
                         const Point& x, const Point& y) {
  if (model.photonPlenum) {
    Scalar c = cOf(model, m);
    return (space2(x, y) - c * c * time2(x, y)).isZero();
  }
  Frame fm = model.frameOf(m);
  Point wx = fm.fromFrame(x);
  Point wy = fm.fromFrame(y);
  for (const Body& b : model.bodies) {
    if (!b.photon) continue;
    if (occupiesWorldEvent(model, b, wx) && occupiesWorldEvent(model, b, wy))
      return true;
  }
  return false;
}

Model buildBoostModel(const BoostSpec& spec, FieldMode mode) {
  const Scalar c = spec.lightSpeed;
  if (c.sign() <= 0)
    throw PreconditionViolated("light speed must be positive");
  Scalar v, gamma;
  if (spec.triple) {
    long a = spec.triple->a, b = spec.triple->b, h = spec.triple->h;
    if (h <= 0 || b == 0 || a * a + b * b != h * h)
      throw PreconditionViolated(
          "boost triple (a, b, h) must satisfy a^2 + b^2 = h^2 with h > 0 "
          "and b != 0");
    v = Scalar(Rational(a, h)) * c;
    gamma = Scalar(Rational(h < 0 ? -h : h, b < 0 ? -b : b));
  } else if (spec.velocity) {
    v = *spec.velocity;
    Scalar ratio = Scalar(1) - (v * v) / (c * c);
    if (ratio.sign() <= 0)
      throw SuperluminalBoost(
          "boost speed must be strictly below the light speed");
    gamma = Scalar(1) / sqrtScalar(ratio, mode);
  } else {
    throw PreconditionViolated("boost needs a triple or a velocity");
  }
  if ((v * v - c * c).sign() >= 0)
    throw SuperluminalBoost(
        "boost speed must be strictly below the light speed");

  Matrix4 boost = identityMatrix();
  boost[0][0] = gamma;
  boost[0][1] = -gamma * v / (c * c);
  boost[1][0] = -gamma * v;
  boost[1][1] = gamma;

  // k's frame first recenters on the world event of k's origin, then boosts.
  Matrix4 id = identityMatrix();
  Vector shift = Point{Scalar(0), Scalar(0), Scalar(0), Scalar(0)} -
                 spec.kOrigin;
  CoordinateMap recenter(id, shift);
  CoordinateMap kMap = CoordinateMap(boost, zeroVector()).compose(recenter);

  Model model;
  model.mode = mode;
  model.photonPlenum = spec.photonPlenum;
  model.bodies.push_back(Body{"m", false, true, std::nullopt});
  model.bodies.push_back(Body{"k", false, true, std::nullopt});
  model.frames["m"] = Frame{CoordinateMap(), std::nullopt};
  model.frames["k"] = Frame{kMap, std::nullopt};
  model.lightSpeeds["m"] = c;
  model.lightSpeeds["k"] = c;
  return model;
}

}  // namespace relcheck
