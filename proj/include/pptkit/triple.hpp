#pragma once

#include "pptkit/bigint.hpp"
#include "pptkit/errors.hpp"

#include <string>
#include <utility>

namespace pptkit {

namespace detail {

inline std::string triple_str(const BigInt& a, const BigInt& b, const BigInt& c) {
  return "(" + a.str() + "," + b.str() + "," + c.str() + ")";
}

}  // namespace detail

/// A primitive Pythagorean triple in canonical form: a is the odd leg,
/// b the even leg, c the hypotenuse. Construction validates all
/// invariants, so a live Ppt is always primitive.
class Ppt {
 public:
  Ppt(BigInt a, BigInt b, BigInt c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ < 3 || b_ < 4 || c_ < 5)
      throw ValidationError("triple components out of range: " + to_string());
    if (!is_odd(a_) || !is_even(b_))
      throw ValidationError("triple not in canonical form (odd leg, even leg, hypotenuse): " +
                            to_string());
    if (a_ * a_ + b_ * b_ != c_ * c_)
      throw ValidationError("not a Pythagorean triple: " + to_string());
    if (gcd(a_, b_) != 1) throw ValidationError("triple is not primitive: " + to_string());
  }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }

  std::string to_string() const { return detail::triple_str(a_, b_, c_); }

  friend bool operator==(const Ppt&, const Ppt&) = default;

 private:
  BigInt a_, b_, c_;
};

/// Generator pair for a primitive triple: s > t >= 1, both odd, coprime.
class StPair {
 public:
  StPair(BigInt s, BigInt t) : s_(std::move(s)), t_(std::move(t)) {
    if (t_ < 1 || s_ <= t_)
      throw ValidationError("generator pair requires s > t >= 1: " + to_string());
    if (!is_odd(s_) || !is_odd(t_))
      throw ValidationError("generator pair components must both be odd: " + to_string());
    if (gcd(s_, t_) != 1)
      throw ValidationError("generator pair components must be coprime: " + to_string());
  }

  const BigInt& s() const { return s_; }
  const BigInt& t() const { return t_; }

  std::string to_string() const { return "(" + s_.str() + "," + t_.str() + ")"; }

  friend bool operator==(const StPair&, const StPair&) = default;

 private:
  BigInt s_, t_;
};

/// Four consecutive terms (g, e, f, h) of a Fibonacci-rule sequence:
/// f = g + e and h = g + 2e. The quadruple is primitive when g is odd
/// and gcd(g, e) = 1; f and h are linear in g and e, so gcd(g, e)
/// already fixes the gcd of all four components.
class GhQuad {
 public:
  GhQuad(BigInt g, BigInt e, BigInt f, BigInt h)
      : g_(std::move(g)), e_(std::move(e)), f_(std::move(f)), h_(std::move(h)) {
    if (g_ < 1 || e_ < 1) throw ValidationError("quadruple components must be positive: " + to_string());
    if (f_ != g_ + e_ || h_ != g_ + 2 * e_)
      throw ValidationError("quadruple breaks the recurrence f = g+e, h = g+2e: " + to_string());
  }

  const BigInt& g() const { return g_; }
  const BigInt& e() const { return e_; }
  const BigInt& f() const { return f_; }
  const BigInt& h() const { return h_; }

  bool is_primitive() const { return is_odd(g_) && gcd(g_, e_) == 1; }

  std::string to_string() const {
    return "(" + g_.str() + "," + e_.str() + "," + f_.str() + "," + h_.str() + ")";
  }

  friend bool operator==(const GhQuad&, const GhQuad&) = default;

 private:
  BigInt g_, e_, f_, h_;
};

/// a = st, b = (s^2 - t^2)/2, c = (s^2 + t^2)/2.
inline Ppt ppt_from_st(const StPair& p) {
  const BigInt& s = p.s();
  const BigInt& t = p.t();
  return Ppt(s * t, (s * s - t * t) / 2, (s * s + t * t) / 2);
}

/// Inverts ppt_from_st via s = sqrt(c+b), t = sqrt(c-b).
inline StPair st_from_ppt(const Ppt& x) {
  auto s = exact_sqrt(x.c() + x.b());
  auto t = exact_sqrt(x.c() - x.b());
  if (!s || !t)
    throw ValidationError("c+b and c-b are not both perfect squares; " + x.to_string() +
                          " is not a primitive triple");
  return StPair(*s, *t);
}

enum class TripleKind { Primitive, NonPrimitivePythagorean, NotPythagorean };

inline const char* to_string(TripleKind kind) {
  switch (kind) {
    case TripleKind::Primitive: return "primitive";
    case TripleKind::NonPrimitivePythagorean: return "non-primitive-pythagorean";
    case TripleKind::NotPythagorean: return "not-pythagorean";
  }
  return "?";
}

/// Three-way check for raw input. Components may arrive in any order;
/// the largest is taken as the hypotenuse candidate.
inline TripleKind validate_triple(const BigInt& x, const BigInt& y, const BigInt& z) {
  if (x < 1 || y < 1 || z < 1)
    throw ValidationError("triple components must be positive: " + detail::triple_str(x, y, z));
  BigInt p = x, q = y, r = z;
  if (p > q) swap(p, q);
  if (q > r) swap(q, r);
  if (p > q) swap(p, q);
  if (p * p + q * q != r * r) return TripleKind::NotPythagorean;
  return gcd(p, q) == 1 ? TripleKind::Primitive : TripleKind::NonPrimitivePythagorean;
}

/// Builds the canonical Ppt (odd leg first) from a primitive triple whose
/// legs may be given in either order.
inline Ppt canonical_ppt(const BigInt& x, const BigInt& y, const BigInt& z) {
  if (validate_triple(x, y, z) != TripleKind::Primitive)
    throw ValidationError("not a primitive Pythagorean triple: " + detail::triple_str(x, y, z));
  BigInt p = x, q = y, r = z;
  if (p > q) swap(p, q);
  if (q > r) swap(q, r);
  if (p > q) swap(p, q);
  if (is_even(p)) swap(p, q);
  return Ppt(p, q, r);
}

/// a = g*h, b = 2*e*f, c = e^2 + f^2. Requires a primitive quadruple;
/// an even g makes c even and the triple non-primitive.
inline Ppt ppt_from_gh(const GhQuad& q) {
  if (!q.is_primitive()) throw ValidationError("non-primitive quadruple: " + q.to_string());
  return Ppt(q.g() * q.h(), 2 * q.e() * q.f(), q.e() * q.e() + q.f() * q.f());
}

/// The quadruple (t, (s-t)/2, (s+t)/2, s) generating the same triple as p.
inline GhQuad gh_from_st(const StPair& p) {
  const BigInt& s = p.s();
  const BigInt& t = p.t();
  return GhQuad(t, (s - t) / 2, (s + t) / 2, s);
}

/// The n-th member of the family (2n+1, 2n^2+2n, 2n^2+2n+1); its
/// hypotenuse always exceeds the even leg by exactly one.
inline Ppt polynomial_family(const BigInt& n) {
  if (n < 1) throw ValidationError("family index must be >= 1");
  return Ppt(2 * n + 1, 2 * n * n + 2 * n, 2 * n * n + 2 * n + 1);
}

}  // namespace pptkit
