#pragma once

#include "pptkit/triple.hpp"

#include <cstdint>
#include <stdexcept>

namespace pptkit {

/// The six divisibility classes of a primitive triple, with the fixed
/// digit assignment A=0 .. F=5.
enum class ClassLabel : std::uint8_t { A = 0, B, C, D, E, F };

constexpr int class_digit(ClassLabel l) { return static_cast<int>(l); }
constexpr char class_char(ClassLabel l) { return static_cast<char>('A' + static_cast<int>(l)); }

inline ClassLabel class_from_char(char ch) {
  if (ch < 'A' || ch > 'F')
    throw ValidationError(std::string("not a class letter (A-F): '") + ch + "'");
  return static_cast<ClassLabel>(ch - 'A');
}

inline ClassLabel class_from_digit(int d) {
  if (d < 0 || d > 5) throw ValidationError("not a class digit (0-5): " + std::to_string(d));
  return static_cast<ClassLabel>(d);
}

/// Names a component of (a, b, c).
enum class Component : std::uint8_t { A, B, C };

constexpr char component_char(Component m) {
  return m == Component::A ? 'a' : m == Component::B ? 'b' : 'c';
}

/// Where 3 and 5 land in a primitive triple. 3 divides exactly one of
/// {a, b} and never c; 5 divides exactly one of {a, b, c}; 4 always
/// divides b, so it carries no information and is not stored.
struct DivisibilityProfile {
  Component div3;  // A or B
  Component div5;  // A, B or C

  friend bool operator==(const DivisibilityProfile&, const DivisibilityProfile&) = default;
};

inline DivisibilityProfile profile(const Ppt& x) {
  const bool a3 = mod_small(x.a(), 3) == 0;
  const bool b3 = mod_small(x.b(), 3) == 0;
  const bool c3 = mod_small(x.c(), 3) == 0;
  const bool a5 = mod_small(x.a(), 5) == 0;
  const bool b5 = mod_small(x.b(), 5) == 0;
  const bool c5 = mod_small(x.c(), 5) == 0;
  if (c3 || a3 == b3)
    throw std::logic_error("mod-3 invariant violated for " + x.to_string());
  if (static_cast<int>(a5) + static_cast<int>(b5) + static_cast<int>(c5) != 1)
    throw std::logic_error("mod-5 invariant violated for " + x.to_string());
  if (mod_small(x.b(), 4) != 0)
    throw std::logic_error("mod-4 invariant violated for " + x.to_string());
  return DivisibilityProfile{a3 ? Component::A : Component::B,
                             a5 ? Component::A : (b5 ? Component::B : Component::C)};
}

/// Class from a profile:
///   A: 3|a, 5|c    B: 3|b, 5|a    C: 3|a, 5|a
///   D: 3|b, 5|c    E: 3|a, 5|b    F: 3|b, 5|b
inline ClassLabel class_of(const DivisibilityProfile& p) {
  if (p.div3 == Component::A) {
    switch (p.div5) {
      case Component::C: return ClassLabel::A;
      case Component::A: return ClassLabel::C;
      case Component::B: return ClassLabel::E;
    }
  } else {
    switch (p.div5) {
      case Component::A: return ClassLabel::B;
      case Component::C: return ClassLabel::D;
      case Component::B: return ClassLabel::F;
    }
  }
  throw std::logic_error("no class matches profile");
}

inline ClassLabel classify(const Ppt& x) { return class_of(profile(x)); }

/// Same result as classify(ppt_from_st(p)), computed from the residues
/// (s mod 3, t mod 3, s mod 5, t mod 5) without forming the triple.
/// 3 | st exactly when 3 divides s or t, otherwise s^2 = t^2 = 1 (mod 3)
/// and 3 divides (s^2 - t^2)/2. For 5 the same applies to st, and when
/// neither s nor t is a multiple of 5 the squares are +-1 (mod 5), so 5
/// divides either the even leg (s^2 = t^2) or the hypotenuse (s^2 = -t^2).
inline ClassLabel classify_from_st(const StPair& p) {
  const int s3 = mod_small(p.s(), 3);
  const int t3 = mod_small(p.t(), 3);
  const int s5 = mod_small(p.s(), 5);
  const int t5 = mod_small(p.t(), 5);
  const Component div3 = (s3 == 0 || t3 == 0) ? Component::A : Component::B;
  Component div5 = Component::C;
  if (s5 == 0 || t5 == 0)
    div5 = Component::A;
  else if ((s5 * s5 - t5 * t5) % 5 == 0)
    div5 = Component::B;
  return class_of(DivisibilityProfile{div3, div5});
}

}  // namespace pptkit
