#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcove {

using Int = mpz_class;
using Rat = mpq_class;

// Error taxonomy shared across modules.  The CLI maps kinds to exit codes.
enum class ErrKind {
  Parse,           // malformed input
  Budget,          // node/step budget exceeded
  Domain,          // precondition violated (ObjectMismatch, ExceptionalPoint, ...)
  CheckFailed,     // a verification suite found a counterexample
  FitFailed,       // quasi-polynomial fit has nonzero residual
};

struct Error : std::runtime_error {
  ErrKind kind;
  Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) { throw Error(k, msg); }

inline Int rat_floor(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Parses "p/q" or "p"; exact.
inline Rat rat_parse(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(ErrKind::Parse, "bad rational: '" + s + "'");
  }
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// First-order infinitesimal extension a + b*eps with eps > 0 smaller than any
// positive rational.  Used for the delta -> 0+ limit of the wall arrangement
// (prime = infinity) and for symbolic side-of-wall tags on points.
struct RatEps {
  Rat a, b;

  RatEps() : a(0), b(0) {}
  RatEps(const Rat& a_) : a(a_), b(0) {}
  RatEps(const Rat& a_, const Rat& b_) : a(a_), b(b_) {}
  RatEps(int v) : a(v), b(0) {}

  bool pure() const { return b == 0; }

  RatEps operator+(const RatEps& o) const { return {a + o.a, b + o.b}; }
  RatEps operator-(const RatEps& o) const { return {a - o.a, b - o.b}; }
  RatEps operator-() const { return {-a, -b}; }
  RatEps& operator+=(const RatEps& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  RatEps& operator-=(const RatEps& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  // Scaling by an honest rational (all we ever need: constants combine
  // linearly under elimination; eps*eps never arises).
  friend RatEps operator*(const Rat& c, const RatEps& v) { return {c * v.a, c * v.b}; }
  RatEps operator/(const Rat& c) const { return {a / c, b / c}; }

  int cmp(const RatEps& o) const {
    int c = ::cmp(a, o.a);
    if (c != 0) return c;
    return ::cmp(b, o.b);
  }
  bool operator==(const RatEps& o) const { return a == o.a && b == o.b; }
  bool operator!=(const RatEps& o) const { return !(*this == o); }
  bool operator<(const RatEps& o) const { return cmp(o) < 0; }
  bool operator<=(const RatEps& o) const { return cmp(o) <= 0; }
  bool operator>(const RatEps& o) const { return cmp(o) > 0; }
  bool operator>=(const RatEps& o) const { return cmp(o) >= 0; }

  bool is_int() const { return b == 0 && is_integer(a); }

  // floor(a + b*eps): the eps term only matters when a is an integer.
  Int floor() const {
    if (!is_integer(a)) return rat_floor(a);
    Int f(a.get_num());
    if (b < 0) f -= 1;
    return f;
  }

  std::string str() const {
    if (b == 0) return a.get_str();
    return a.get_str() + (b > 0 ? "+" : "") + b.get_str() + "e";
  }
};

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;
using EVec = std::vector<RatEps>;  // points, possibly with infinitesimal tags

inline Rat dot(const IntVec& c, const RatVec& x) {
  Rat s(0);
  for (size_t j = 0; j < c.size(); ++j) s += Rat(c[j]) * x[j];
  return s;
}

inline RatEps dot(const IntVec& c, const EVec& x) {
  RatEps s;
  for (size_t j = 0; j < c.size(); ++j) s += Rat(c[j]) * x[j];
  return s;
}

inline Rat dot(const RatVec& c, const RatVec& x) {
  Rat s(0);
  for (size_t j = 0; j < c.size(); ++j) s += c[j] * x[j];
  return s;
}

inline RatEps dot(const RatVec& c, const EVec& x) {
  RatEps s;
  for (size_t j = 0; j < c.size(); ++j) s += c[j] * x[j];
  return s;
}

inline Int dot(const IntVec& c, const IntVec& x) {
  Int s(0);
  for (size_t j = 0; j < c.size(); ++j) s += c[j] * x[j];
  return s;
}

inline EVec to_evec(const RatVec& v) {
  EVec e(v.size());
  for (size_t i = 0; i < v.size(); ++i) e[i] = RatEps(v[i]);
  return e;
}

// Dense square integer matrix, row-major.
struct IntMat {
  int n = 0;
  IntVec m;  // n*n entries

  IntMat() = default;
  explicit IntMat(int n_) : n(n_), m(n_ * n_, Int(0)) {}

  static IntMat identity(int n_) {
    IntMat I(n_);
    for (int i = 0; i < n_; ++i) I.at(i, i) = 1;
    return I;
  }

  Int& at(int i, int j) { return m[i * n + j]; }
  const Int& at(int i, int j) const { return m[i * n + j]; }

  bool operator==(const IntMat& o) const { return n == o.n && m == o.m; }

  IntMat mul(const IntMat& o) const {
    IntMat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    return r;
  }

  template <class V>
  V apply(const V& x) const {
    V r(n);
    for (int i = 0; i < n; ++i) {
      typename V::value_type s{};
      for (int j = 0; j < n; ++j) s += Rat(at(i, j)) * x[j];
      r[i] = s;
    }
    return r;
  }

  IntVec apply_int(const IntVec& x) const {
    IntVec r(n, Int(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i] += at(i, j) * x[j];
    return r;
  }

  // Row covector composition: (c . A) as used for weights pulled back along
  // the linear map A.
  IntVec pre_apply(const IntVec& c) const {
    IntVec r(n, Int(0));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) r[j] += c[i] * at(i, j);
    return r;
  }

  Int det() const {
    // Fraction-free Gaussian elimination (Bareiss) on a copy.
    if (n == 0) return 1;
    std::vector<Rat> a(n * n);
    for (int i = 0; i < n * n; ++i) a[i] = Rat(m[i]);
    Rat d(1);
    for (int c = 0; c < n; ++c) {
      int piv = -1;
      for (int r = c; r < n; ++r)
        if (a[r * n + c] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      if (piv != c) {
        for (int j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
        d = -d;
      }
      d *= a[c * n + c];
      for (int r = c + 1; r < n; ++r) {
        Rat f = a[r * n + c] / a[c * n + c];
        for (int j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
      }
    }
    if (!is_integer(d)) fail(ErrKind::Domain, "non-integer determinant");
    return Int(d.get_num());
  }

  // Inverse of a unimodular matrix (|det| = 1), exact over the integers.
  IntMat inverse_unimodular() const {
    Int d = det();
    if (d != 1 && d != -1) fail(ErrKind::Domain, "matrix is not invertible over the integers");
    // Gauss-Jordan over Q, then round (entries are integers by unimodularity).
    int N = n;
    std::vector<Rat> a(N * 2 * N, Rat(0));
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) a[i * 2 * N + j] = Rat(m[i * N + j]);
      a[i * 2 * N + N + i] = 1;
    }
    for (int c = 0; c < N; ++c) {
      int piv = -1;
      for (int r = c; r < N; ++r)
        if (a[r * 2 * N + c] != 0) {
          piv = r;
          break;
        }
      for (int j = 0; j < 2 * N; ++j) std::swap(a[piv * 2 * N + j], a[c * 2 * N + j]);
      Rat p = a[c * 2 * N + c];
      for (int j = 0; j < 2 * N; ++j) a[c * 2 * N + j] /= p;
      for (int r = 0; r < N; ++r) {
        if (r == c) continue;
        Rat f = a[r * 2 * N + c];
        if (f == 0) continue;
        for (int j = 0; j < 2 * N; ++j) a[r * 2 * N + j] -= f * a[c * 2 * N + j];
      }
    }
    IntMat inv(N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        Rat e = a[i * 2 * N + N + j];
        if (!is_integer(e)) fail(ErrKind::Domain, "unimodular inverse not integral");
        inv.at(i, j) = Int(e.get_num());
      }
    return inv;
  }
};

}  // namespace alcove
