#include "relcheck/rational.hpp"

#include <cctype>
#include <vector>

namespace relcheck {

namespace {

bool scanDigits(const std::string& s, size_t& i) {
  size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  return i > start;
}

// Odd primes below 1000, for square-part extraction (2 is handled with them).
const std::vector<long>& smallPrimes() {
  static const std::vector<long> primes = [] {
    std::vector<long> out;
    std::vector<bool> sieve(1000, true);
    for (long p = 2; p < 1000; ++p) {
      if (!sieve[p]) continue;
      out.push_back(p);
      for (long q = p * p; q < 1000; q += p) sieve[q] = false;
    }
    return out;
  }();
  return primes;
}

}  // namespace

std::optional<Rational> Rational::parse(const std::string& s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && s[i] == '-') {
    neg = true;
    ++i;
  }
  size_t numStart = i;
  if (!scanDigits(s, i)) return std::nullopt;
  mpz_class num(s.substr(numStart, i - numStart));
  mpz_class den(1);
  if (i < s.size() && s[i] == '/') {
    ++i;
    size_t denStart = i;
    if (!scanDigits(s, i)) return std::nullopt;
    den = mpz_class(s.substr(denStart, i - denStart));
    if (den == 0) return std::nullopt;
  }
  if (i != s.size()) return std::nullopt;
  if (neg) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (isInteger()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::optional<Rational> Rational::sqrtExact() const {
  if (sign() < 0) return std::nullopt;
  mpz_class rn, rd;
  if (!isPerfectSquare(num(), &rn)) return std::nullopt;
  if (!isPerfectSquare(den(), &rd)) return std::nullopt;
  return Rational(rn, rd);
}

mpz_class isqrtFloor(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool isPerfectSquare(const mpz_class& n, mpz_class* root) {
  if (sgn(n) < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (root != nullptr) *root = isqrtFloor(n);
  return true;
}

void extractSquarePart(const mpz_class& n, mpz_class& s, mpz_class& m) {
  s = 1;
  m = n;
  mpz_class root;
  if (isPerfectSquare(m, &root)) {
    s = root;
    m = 1;
    return;
  }
  for (long p : smallPrimes()) {
    mpz_class p2 = mpz_class(p) * p;
    if (p2 > m) break;
    while (mpz_divisible_p(m.get_mpz_t(), p2.get_mpz_t()) != 0) {
      m /= p2;
      s *= p;
    }
  }
  if (isPerfectSquare(m, &root)) {
    s *= root;
    m = 1;
  }
}

}  // namespace relcheck
