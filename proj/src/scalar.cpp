#include "relcheck/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace relcheck {

const char* fieldModeName(FieldMode mode) {
  return mode == FieldMode::rational ? "rational" : "euclidean";
}

std::optional<FieldMode> fieldModeFromName(std::string_view name) {
  if (name == "rational") return FieldMode::rational;
  if (name == "euclidean") return FieldMode::euclidean;
  return std::nullopt;
}

namespace detail {

struct Access {
  static const std::vector<Term>& terms(const Scalar& s) { return s.terms_; }
  static Scalar fromCanonical(std::vector<Term> t) {
    Scalar s;
    s.terms_ = std::move(t);
    return s;
  }
};

}  // namespace detail

namespace {

using detail::Access;
using detail::Atom;
using detail::AtomPtr;
using detail::Monomial;
using detail::Term;

const std::vector<Term>& termsOf(const Scalar& s) { return Access::terms(s); }

int atomCompare(const AtomPtr& a, const AtomPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->height != b->height) return a->height < b->height ? -1 : 1;
  return Scalar::structuralCompare(a->radicand, b->radicand);
}

int monoCompare(const Monomial& a, const Monomial& b) {
  size_t n = std::min(a.atoms.size(), b.atoms.size());
  for (size_t i = 0; i < n; ++i) {
    int c = atomCompare(a.atoms[i], b.atoms[i]);
    if (c != 0) return c;
  }
  if (a.atoms.size() != b.atoms.size())
    return a.atoms.size() < b.atoms.size() ? -1 : 1;
  return 0;
}

/// Sorts terms, merges equal monomials, drops zero coefficients.
Scalar fromTerms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return monoCompare(x.mono, y.mono) < 0;
  });
  std::vector<Term> out;
  for (auto& t : terms) {
    if (!out.empty() && monoCompare(out.back().mono, t.mono) == 0) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.isZero()) out.pop_back();
    } else if (!t.coeff.isZero()) {
      out.push_back(std::move(t));
    }
  }
  return Access::fromCanonical(std::move(out));
}

Scalar makeSingle(Monomial mono, Rational coeff) {
  if (coeff.isZero()) return Scalar();
  std::vector<Term> t;
  t.push_back(Term{std::move(mono), std::move(coeff)});
  return Access::fromCanonical(std::move(t));
}

Scalar atomScalar(const AtomPtr& a) {
  return makeSingle(Monomial{{a}}, Rational(1));
}

AtomPtr makeIntegerAtom(const mpz_class& m) {
  return std::make_shared<const Atom>(Atom{Scalar(Rational(m)), 1});
}

int maxAtomHeight(const Scalar& s) {
  int h = 0;
  for (const Term& t : termsOf(s))
    for (const AtomPtr& a : t.mono.atoms) h = std::max(h, a->height);
  return h;
}

AtomPtr makeAtom(const Scalar& radicand) {
  return std::make_shared<const Atom>(
      Atom{radicand, 1 + maxAtomHeight(radicand)});
}

Scalar scaleTerms(const Scalar& s, const Rational& c) {
  if (c.isZero()) return Scalar();
  std::vector<Term> out = termsOf(s);
  for (Term& t : out) t.coeff *= c;
  return Access::fromCanonical(std::move(out));
}

// ---------------------------------------------------------------------------
// Multiplication
// ---------------------------------------------------------------------------

struct MonoProduct {
  Scalar factor;  // leftover factor from merged atoms (sqrt(r)^2 = r)
  Monomial mono;
};

Scalar mulScalar(const Scalar& a, const Scalar& b);

MonoProduct mulMono(const Monomial& x, const Monomial& y) {
  MonoProduct r;
  r.factor = Scalar(1);
  std::vector<AtomPtr> out;
  size_t i = 0, j = 0;
  while (i < x.atoms.size() && j < y.atoms.size()) {
    int c = atomCompare(x.atoms[i], y.atoms[j]);
    if (c < 0) {
      out.push_back(x.atoms[i++]);
    } else if (c > 0) {
      out.push_back(y.atoms[j++]);
    } else {
      r.factor = mulScalar(r.factor, x.atoms[i]->radicand);
      ++i;
      ++j;
    }
  }
  while (i < x.atoms.size()) out.push_back(x.atoms[i++]);
  while (j < y.atoms.size()) out.push_back(y.atoms[j++]);

  // Integer-radicand atoms sort first (height 1) and each input carries at
  // most one, so an unmerged pair can only sit at the front. Combine them:
  // sqrt(n1)*sqrt(n2) = gcd * sqrt((n1/g)(n2/g)), square parts extracted.
  if (out.size() >= 2 && out[0]->radicand.isRational() &&
      out[1]->radicand.isRational()) {
    mpz_class n1 = out[0]->radicand.asRational()->num();
    mpz_class n2 = out[1]->radicand.asRational()->num();
    mpz_class g = gcd(n1, n2);
    mpz_class rest = (n1 / g) * (n2 / g);
    out.erase(out.begin(), out.begin() + 2);
    mpz_class s, m;
    extractSquarePart(rest, s, m);
    r.factor = scaleTerms(r.factor, Rational(mpz_class(g * s)));
    if (m != 1) out.insert(out.begin(), makeIntegerAtom(m));
  }
  r.mono.atoms = std::move(out);
  return r;
}

Scalar mulScalar(const Scalar& a, const Scalar& b) {
  if (auto ra = a.asRational()) return scaleTerms(b, *ra);
  if (auto rb = b.asRational()) return scaleTerms(a, *rb);
  std::vector<Term> acc;
  for (const Term& ta : termsOf(a)) {
    for (const Term& tb : termsOf(b)) {
      MonoProduct mp = mulMono(ta.mono, tb.mono);
      Rational c = ta.coeff * tb.coeff;
      if (auto fr = mp.factor.asRational()) {
        acc.push_back(Term{std::move(mp.mono), c * *fr});
      } else {
        // sqrt(r)^2 collisions left a non-rational factor; multiply it back
        // in (its atoms sit strictly below the collided atom, so recursion
        // bottoms out).
        Scalar sub = mulScalar(mp.factor, makeSingle(std::move(mp.mono), c));
        for (const Term& t : termsOf(sub)) acc.push_back(t);
      }
    }
  }
  return fromTerms(std::move(acc));
}

// ---------------------------------------------------------------------------
// Numeric sign determination
// ---------------------------------------------------------------------------
//
// Structural form decides the easy cases. Otherwise the value is boxed in a
// shrinking exact-rational interval; if the interval's width falls below a
// separation bound computed from the value's algebraic degree and height,
// the value is exactly zero.

struct QIv {
  Rational lo, hi;
};

QIv ivAdd(const QIv& a, const QIv& b) { return {a.lo + b.lo, a.hi + b.hi}; }

QIv ivMul(const QIv& a, const QIv& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo,
           p4 = a.hi * b.hi;
  Rational lo = p1, hi = p1;
  for (const Rational& p : {p2, p3, p4}) {
    if (p < lo) lo = p;
    if (p > hi) hi = p;
  }
  return {lo, hi};
}

// floor(sqrt(q) * 2^prec) / 2^prec, exact.
Rational sqrtLowerQ(const Rational& q, unsigned prec) {
  mpz_class t = q.num() * q.den();
  t <<= 2 * prec;
  mpz_class root = isqrtFloor(t);
  return Rational(root, q.den() << prec);
}

Rational sqrtUpperQ(const Rational& q, unsigned prec) {
  mpz_class t = q.num() * q.den();
  t <<= 2 * prec;
  mpz_class root = isqrtFloor(t);
  if (root * root != t) root += 1;
  return Rational(root, q.den() << prec);
}

using IvMemo = std::map<const Atom*, QIv>;

QIv atomIv(const AtomPtr& a, unsigned prec, IvMemo& memo);

QIv evalScalarIv(const Scalar& x, unsigned prec, IvMemo& memo) {
  QIv acc{Rational(0), Rational(0)};
  for (const Term& t : termsOf(x)) {
    QIv cur{t.coeff, t.coeff};
    for (const AtomPtr& a : t.mono.atoms) cur = ivMul(cur, atomIv(a, prec, memo));
    acc = ivAdd(acc, cur);
  }
  return acc;
}

QIv atomIv(const AtomPtr& a, unsigned prec, IvMemo& memo) {
  auto it = memo.find(a.get());
  if (it != memo.end()) return it->second;
  QIv r = evalScalarIv(a->radicand, prec, memo);
  // The radicand is semantically positive; clamp numeric slack at zero.
  if (r.lo.sign() < 0) r.lo = Rational(0);
  if (r.hi.sign() < 0) r.hi = Rational(0);
  QIv out{sqrtLowerQ(r.lo, prec), sqrtUpperQ(r.hi, prec)};
  memo.emplace(a.get(), out);
  return out;
}

void collectAtoms(const Scalar& x, std::vector<AtomPtr>& atoms) {
  for (const Term& t : termsOf(x)) {
    for (const AtomPtr& a : t.mono.atoms) {
      bool seen = false;
      for (const AtomPtr& known : atoms) {
        if (atomCompare(known, a) == 0) {
          seen = true;
          break;
        }
      }
      if (!seen) {
        atoms.push_back(a);
        collectAtoms(a->radicand, atoms);
      }
    }
  }
}

struct ZB {
  mpz_class u, v;  // every conjugate of the value has |.| <= u/v; v*value is
                   // an algebraic integer
};

ZB boundsScalar(const Scalar& x, std::map<const Atom*, ZB>& memo);

ZB boundsAtom(const AtomPtr& a, std::map<const Atom*, ZB>& memo) {
  auto it = memo.find(a.get());
  if (it != memo.end()) return it->second;
  ZB r = boundsScalar(a->radicand, memo);
  mpz_class prod = r.u * r.v;
  mpz_class root = isqrtFloor(prod);
  if (root * root != prod) root += 1;
  ZB out{root, r.v};
  memo.emplace(a.get(), out);
  return out;
}

ZB boundsScalar(const Scalar& x, std::map<const Atom*, ZB>& memo) {
  ZB acc{0, 1};
  for (const Term& t : termsOf(x)) {
    ZB cur{abs(t.coeff.num()), t.coeff.den()};
    for (const AtomPtr& a : t.mono.atoms) {
      ZB ab = boundsAtom(a, memo);
      cur.u *= ab.u;
      cur.v *= ab.v;
    }
    acc = ZB{acc.u * cur.v + cur.u * acc.v, acc.v * cur.v};
  }
  if (acc.u == 0) acc.u = 1;
  return acc;
}

// Bits b such that |x| != 0 implies |x| > 2^-b: from |N(x)| >= V^-D and
// |N(x)| <= |x| (U/V)^(D-1), D = 2^(#distinct atoms), follows
// |x| >= 1 / (U^(D-1) V).
unsigned long long separationTargetBits(const Scalar& x) {
  std::vector<AtomPtr> atoms;
  collectAtoms(x, atoms);
  std::map<const Atom*, ZB> memo;
  ZB b = boundsScalar(x, memo);
  unsigned long long bitsU = mpz_sizeinbase(b.u.get_mpz_t(), 2);
  unsigned long long bitsV = mpz_sizeinbase(b.v.get_mpz_t(), 2);
  unsigned k = static_cast<unsigned>(atoms.size());
  unsigned long long dMinus1 =
      k >= 62 ? ~0ull >> 1 : ((1ull << k) - 1);
  unsigned long long prodBits;
  if (__builtin_mul_overflow(dMinus1, bitsU, &prodBits)) prodBits = ~0ull >> 1;
  unsigned long long target;
  if (__builtin_add_overflow(prodBits, bitsV + 4, &target)) target = ~0ull >> 1;
  return target;
}

int signNumeric(const Scalar& x) {
  std::optional<unsigned long long> target;
  for (unsigned prec = 64;; prec *= 2) {
    IvMemo memo;
    QIv iv = evalScalarIv(x, prec, memo);
    if (iv.lo.sign() > 0) return 1;
    if (iv.hi.sign() < 0) return -1;
    if (!target) target = separationTargetBits(x);
    Rational w = iv.hi - iv.lo;
    mpz_class scaled = w.num() << static_cast<unsigned long>(*target);
    if (scaled < w.den()) return 0;
  }
}

// ---------------------------------------------------------------------------
// Inversion
// ---------------------------------------------------------------------------

struct TopSplit {
  AtomPtr atom;
  Scalar u, v;  // x = u + v * atom, v structurally nonzero
};

TopSplit splitTopAtom(const Scalar& x) {
  AtomPtr top;
  for (const Term& t : termsOf(x))
    for (const AtomPtr& a : t.mono.atoms)
      if (!top || atomCompare(top, a) < 0) top = a;
  TopSplit s;
  s.atom = top;
  std::vector<Term> uTerms, vTerms;
  for (const Term& t : termsOf(x)) {
    Term stripped = t;
    bool contains = false;
    for (size_t i = 0; i < stripped.mono.atoms.size(); ++i) {
      if (atomCompare(stripped.mono.atoms[i], top) == 0) {
        stripped.mono.atoms.erase(stripped.mono.atoms.begin() +
                                  static_cast<long>(i));
        contains = true;
        break;
      }
    }
    (contains ? vTerms : uTerms).push_back(std::move(stripped));
  }
  s.u = Access::fromCanonical(std::move(uTerms));
  s.v = Access::fromCanonical(std::move(vTerms));
  return s;
}

// Precondition: the caller has established sign(x) != 0.
Scalar invertScalar(const Scalar& x) {
  if (auto r = x.asRational()) return Scalar(Rational(1) / *r);
  TopSplit s = splitTopAtom(x);
  // 1/x = conj / (x * conj) with conj = u - v*a and x*conj = u^2 - v^2 r,
  // which lives in the subfield without the top atom.
  Scalar d = s.u * s.u - s.v * s.v * s.atom->radicand;
  if (d.sign() != 0) return mulScalar(s.u - s.v * atomScalar(s.atom),
                                      invertScalar(d));
  // u^2 = v^2 r with x != 0 forces u = v*sqrt(r), so x = 2u.
  return invertScalar(s.u + s.u);
}

// ---------------------------------------------------------------------------
// Square roots
// ---------------------------------------------------------------------------

// Exact square root within the already-represented field, if one exists.
// Precondition: sign(x) >= 0.
std::optional<Scalar> trySquareRootInField(const Scalar& x) {
  if (auto r = x.asRational()) {
    auto rt = r->sqrtExact();
    if (!rt) return std::nullopt;
    return Scalar(*rt);
  }
  TopSplit s = splitTopAtom(x);
  // Seek w = alpha + beta*a with w^2 = u + v*a: then alpha^2 + beta^2 r = u
  // and 2 alpha beta = v, so alpha^2 is a root of t^2 - u t + v^2 r / 4.
  Scalar d = s.u * s.u - s.v * s.v * s.atom->radicand;
  if (d.sign() < 0) return std::nullopt;
  auto w = trySquareRootInField(d);
  if (!w) return std::nullopt;
  const Scalar half(Rational(1, 2));
  for (const Scalar& t : {(s.u + *w) * half, (s.u - *w) * half}) {
    if (t.sign() <= 0) continue;
    auto alpha = trySquareRootInField(t);
    if (!alpha || alpha->sign() == 0) continue;
    Scalar beta = s.v * invertScalar(*alpha + *alpha);
    Scalar cand = *alpha + beta * atomScalar(s.atom);
    if (cand * cand == x) return cand.sign() < 0 ? -cand : cand;
  }
  return std::nullopt;
}

// Precondition: r > 0.
Scalar sqrtRationalValue(const Rational& r, FieldMode mode) {
  mpz_class n = r.num() * r.den();
  mpz_class s, m;
  extractSquarePart(n, s, m);
  Rational ratPart(s, r.den());
  if (m == 1) return Scalar(ratPart);
  if (mode == FieldMode::rational)
    throw NotEuclidean("sqrt(" + r.str() +
                       ") does not exist in the rational field");
  return makeSingle(Monomial{{makeIntegerAtom(m)}}, ratPart);
}

// x = c * y with c a positive rational and y having integer coefficients
// with gcd 1 (so equal values share one atom representation).
std::pair<Rational, Scalar> contentSplit(const Scalar& x) {
  mpz_class g = 0, l = 1;
  for (const Term& t : termsOf(x)) {
    g = gcd(g, t.coeff.num());
    l = lcm(l, t.coeff.den());
  }
  g = abs(g);
  Rational c(g, l);
  Scalar y = scaleTerms(x, Rational(l, g));
  return {c, y};
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalar members
// ---------------------------------------------------------------------------

Scalar::Scalar(long n) : Scalar(Rational(n)) {}

Scalar::Scalar(const Rational& r) {
  if (!r.isZero()) terms_.push_back(Term{Monomial{}, r});
}

bool Scalar::isRational() const { return asRational().has_value(); }

std::optional<Rational> Scalar::asRational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].mono.atoms.empty())
    return terms_[0].coeff;
  return std::nullopt;
}

int Scalar::sign() const {
  if (terms_.empty()) return 0;
  // Monomials are strictly positive (square roots of positive values), so a
  // uniform coefficient sign decides immediately.
  int first = terms_[0].coeff.sign();
  bool uniform = true;
  for (const Term& t : terms_)
    if (t.coeff.sign() != first) {
      uniform = false;
      break;
    }
  if (uniform) return first;
  return signNumeric(*this);
}

Scalar Scalar::operator-() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = -t.coeff;
  return Access::fromCanonical(std::move(out));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  std::vector<Term> acc = termsOf(a);
  for (const Term& t : termsOf(b)) acc.push_back(t);
  return fromTerms(std::move(acc));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) { return mulScalar(a, b); }

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (auto rb = b.asRational()) {
    if (rb->isZero()) throw DivisionByZero("division by zero");
    return scaleTerms(a, Rational(1) / *rb);
  }
  if (b.sign() == 0) throw DivisionByZero("division by zero");
  return mulScalar(a, invertScalar(b));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (Scalar::structuralCompare(a, b) == 0) return true;
  return (a - b).sign() == 0;
}

bool operator<(const Scalar& a, const Scalar& b) {
  return compareScalar(a, b) < 0;
}
bool operator<=(const Scalar& a, const Scalar& b) {
  return compareScalar(a, b) <= 0;
}
bool operator>(const Scalar& a, const Scalar& b) {
  return compareScalar(a, b) > 0;
}
bool operator>=(const Scalar& a, const Scalar& b) {
  return compareScalar(a, b) >= 0;
}

int compareScalar(const Scalar& a, const Scalar& b) {
  if (Scalar::structuralCompare(a, b) == 0) return 0;
  return (a - b).sign();
}

int Scalar::structuralCompare(const Scalar& a, const Scalar& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = monoCompare(a.terms_[i].mono, b.terms_[i].mono);
    if (c != 0) return c;
    c = cmp3(a.terms_[i].coeff, b.terms_[i].coeff);
    if (c != 0) return c;
  }
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  auto atomStr = [](const AtomPtr& a) {
    return "sqrt(" + a->radicand.str() + ")";
  };
  auto termStr = [&](const Term& t) {
    if (t.mono.atoms.empty()) return t.coeff.str();
    std::string prod;
    for (const AtomPtr& a : t.mono.atoms) {
      if (!prod.empty()) prod += "*";
      prod += atomStr(a);
    }
    if (t.coeff == Rational(1)) return prod;
    if (t.coeff == Rational(-1)) return "-" + prod;
    return t.coeff.str() + "*" + prod;
  };
  std::string out = termStr(terms_[0]);
  for (size_t i = 1; i < terms_.size(); ++i) {
    std::string s = termStr(terms_[i]);
    if (!s.empty() && s[0] == '-')
      out += " - " + s.substr(1);
    else
      out += " + " + s;
  }
  return out;
}

// ---------------------------------------------------------------------------
// sqrt and parsing
// ---------------------------------------------------------------------------

Scalar sqrtScalar(const Scalar& x, FieldMode mode) {
  int s = x.sign();
  if (s < 0) throw NegativeInput("sqrt of negative value " + x.str());
  if (s == 0) return Scalar();
  if (auto r = x.asRational()) return sqrtRationalValue(*r, mode);
  if (mode == FieldMode::rational)
    throw NotEuclidean("sqrt(" + x.str() +
                       ") does not exist in the rational field");
  if (auto w = trySquareRootInField(x)) return *w;
  auto [c, y] = contentSplit(x);
  if (auto wy = trySquareRootInField(y))
    return sqrtRationalValue(c, mode) * *wy;
  return sqrtRationalValue(c, mode) * atomScalar(makeAtom(y));
}

namespace {

class ScalarParser {
 public:
  ScalarParser(const std::string& text, FieldMode mode)
      : s_(text), mode_(mode) {}

  Scalar run() {
    Scalar v = expr();
    skipWs();
    if (i_ != s_.size())
      throw ParseError("unexpected trailing input at offset " +
                       std::to_string(i_) + " in scalar literal \"" + s_ +
                       "\"");
    return v;
  }

 private:
  void skipWs() {
    while (i_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }
  char peek() {
    skipWs();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError("expected '" + std::string(1, c) +
                       "' at offset " + std::to_string(i_) +
                       " in scalar literal \"" + s_ + "\"");
    ++i_;
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++i_;
        v = v + term();
      } else if (c == '-') {
        ++i_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++i_;
        v = v * factor();
      } else if (c == '/') {
        ++i_;
        v = v / factor();
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    if (peek() == '-') {
      ++i_;
      return -factor();
    }
    return primary();
  }

  Scalar primary() {
    char c = peek();
    if (c == '(') {
      ++i_;
      Scalar v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string ident;
      while (i_ < s_.size() &&
             std::isalpha(static_cast<unsigned char>(s_[i_])))
        ident += s_[i_++];
      if (ident == "sqrt") {
        expect('(');
        Scalar v = expr();
        expect(')');
        return sqrtScalar(v, mode_);
      }
      throw ParseError("unknown name \"" + ident + "\" in scalar literal \"" +
                       s_ + "\"");
    }
    throw ParseError("expected a value at offset " + std::to_string(i_) +
                     " in scalar literal \"" + s_ + "\"");
  }

  Scalar number() {
    size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
      ++i_;
    if (i_ < s_.size() && (s_[i_] == '.' || s_[i_] == 'e' || s_[i_] == 'E'))
      throw ParseError(
          "decimal literals are not supported; use exact fractions like "
          "\"1/2\" (in scalar literal \"" +
          s_ + "\")");
    return Scalar(Rational(mpz_class(s_.substr(start, i_ - start))));
  }

  const std::string& s_;
  size_t i_ = 0;
  FieldMode mode_;
};

}  // namespace

Scalar parseScalar(const std::string& text, FieldMode mode) {
  return ScalarParser(text, mode).run();
}

}  // namespace relcheck
