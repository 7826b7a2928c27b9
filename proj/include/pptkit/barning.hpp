#pragma once

#include "pptkit/triple.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pptkit {

using Mat3 = std::array<std::array<int, 3>, 3>;

/// The three unimodular transformations generating the ternary tree of
/// all primitive triples from the root (3,4,5). Fixed child order
/// (left, middle, right): from generators (s,t) the child odd legs are
/// s(2s-t), s(2s+t) and t(s+2t) respectively.
inline constexpr Mat3 kBarningLeft{{{-1, 2, 2}, {-2, 1, 2}, {-2, 2, 3}}};
inline constexpr Mat3 kBarningMiddle{{{1, 2, 2}, {2, 1, 2}, {2, 2, 3}}};
inline constexpr Mat3 kBarningRight{{{1, -2, 2}, {2, -1, 2}, {2, -2, 3}}};

inline constexpr std::array<Mat3, 3> kBarningMatrices{kBarningLeft, kBarningMiddle, kBarningRight};

constexpr int determinant(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

static_assert(determinant(kBarningLeft) == 1);
static_assert(determinant(kBarningMiddle) == -1);
static_assert(determinant(kBarningRight) == 1);

inline Ppt transform(const Mat3& m, const Ppt& x) {
  const std::array<const BigInt*, 3> v{&x.a(), &x.b(), &x.c()};
  std::array<BigInt, 3> out;
  for (int i = 0; i < 3; ++i)
    out[i] = m[i][0] * *v[0] + m[i][1] * *v[1] + m[i][2] * *v[2];
  return Ppt(std::move(out[0]), std::move(out[1]), std::move(out[2]));
}

inline Ppt tree_root() { return Ppt(3, 4, 5); }

/// The three children of x, in (left, middle, right) order. Every child
/// hypotenuse strictly exceeds the parent's: the c rows give
/// c' - c = 2(b + c - a), 2(a + b + c) and 2(a - b + c), all positive.
inline std::array<Ppt, 3> matrix_children(const Ppt& x) {
  return {transform(kBarningLeft, x), transform(kBarningMiddle, x), transform(kBarningRight, x)};
}

/// Odd legs of the three children of ppt_from_st(p), without forming the
/// triples: s(2s-t), s(2s+t), t(s+2t).
inline std::array<BigInt, 3> successor_a_values(const StPair& p) {
  const BigInt& s = p.s();
  const BigInt& t = p.t();
  return {s * (2 * s - t), s * (2 * s + t), t * (s + 2 * t)};
}

/// Children in quadruple form; maps to matrix_children component-wise
/// under ppt_from_gh (left, middle, right respectively).
inline std::array<GhQuad, 3> gh_children(const GhQuad& q) {
  if (!q.is_primitive()) throw ValidationError("non-primitive quadruple: " + q.to_string());
  const BigInt& g = q.g();
  const BigInt& e = q.e();
  const BigInt& f = q.f();
  const BigInt& h = q.h();
  return {GhQuad(h, e, h + e, h + 2 * e), GhQuad(h, f, h + f, h + 2 * f),
          GhQuad(g, g + e, 2 * g + e, 3 * g + 2 * e)};
}

enum class Step : std::uint8_t { Left, Middle, Right };

/// Address of a tree node; the empty path is the root.
using TreePath = std::vector<Step>;

constexpr char step_char(Step s) {
  return s == Step::Left ? 'L' : s == Step::Middle ? 'M' : 'R';
}

inline TreePath parse_path(std::string_view text) {
  TreePath path;
  path.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'L': path.push_back(Step::Left); break;
      case 'M': path.push_back(Step::Middle); break;
      case 'R': path.push_back(Step::Right); break;
      default: throw ValidationError(std::string("path steps must be L, M or R, got '") + ch + "'");
    }
  }
  return path;
}

inline std::string path_string(const TreePath& path) {
  std::string out;
  out.reserve(path.size());
  for (Step s : path) out.push_back(step_char(s));
  return out;
}

/// Guards against runaway expansion; callers may override per call.
inline constexpr std::size_t kDefaultDepthBound = 64;

inline constexpr std::size_t kUnboundedDepth = std::numeric_limits<std::size_t>::max();

inline Ppt child(const Ppt& x, Step step) {
  return transform(kBarningMatrices[static_cast<std::size_t>(step)], x);
}

inline Ppt node_at(const TreePath& path, std::size_t depth_bound = kDefaultDepthBound) {
  if (path.size() > depth_bound)
    throw ValidationError("path length " + std::to_string(path.size()) +
                          " exceeds depth bound " + std::to_string(depth_bound));
  Ppt node = tree_root();
  for (Step s : path) node = child(node, s);
  return node;
}

/// All 3^(k-1) nodes of generation k (the root is generation 1), in
/// path-lexicographic order with L < M < R.
inline std::vector<Ppt> generation(std::size_t k, std::size_t depth_bound = kDefaultDepthBound) {
  if (k < 1) throw ValidationError("generation index must be >= 1");
  if (k - 1 > depth_bound)
    throw ValidationError("generation " + std::to_string(k) + " exceeds depth bound " +
                          std::to_string(depth_bound));
  std::vector<Ppt> level{tree_root()};
  for (std::size_t g = 1; g < k; ++g) {
    std::vector<Ppt> next;
    next.reserve(level.size() * 3);
    for (const Ppt& node : level)
      for (const Ppt& ch : matrix_children(node)) next.push_back(ch);
    level = std::move(next);
  }
  return level;
}

/// Lazy pre-order walk of the tree, for streaming without materializing
/// whole generations. Optionally prunes subtrees once the hypotenuse
/// exceeds max_c (sound: c strictly increases toward the leaves).
class TreeWalker {
 public:
  struct Node {
    TreePath path;
    Ppt triple;
  };

  explicit TreeWalker(std::size_t max_depth = kDefaultDepthBound,
                      std::optional<BigInt> max_c = std::nullopt)
      : max_depth_(max_depth), max_c_(std::move(max_c)) {
    Ppt root = tree_root();
    if (!max_c_ || root.c() <= *max_c_) stack_.push_back(Node{{}, std::move(root)});
  }

  std::optional<Node> next() {
    if (stack_.empty()) return std::nullopt;
    Node node = std::move(stack_.back());
    stack_.pop_back();
    if (node.path.size() < max_depth_) {
      auto children = matrix_children(node.triple);
      for (int i = 2; i >= 0; --i) {  // push right first so left pops first
        if (max_c_ && children[i].c() > *max_c_) continue;
        TreePath child_path = node.path;
        child_path.push_back(static_cast<Step>(i));
        stack_.push_back(Node{std::move(child_path), std::move(children[i])});
      }
    }
    return node;
  }

 private:
  std::vector<Node> stack_;
  std::size_t max_depth_;
  std::optional<BigInt> max_c_;
};

/// h-components along the middle-child chain starting at (1,1,2,3):
/// 3, 7, 17, 41, 99, ... with h(n) = 2h(n-1) + h(n-2).
inline std::vector<BigInt> middle_child_h_sequence(std::size_t count) {
  if (count < 1) throw ValidationError("need at least one term");
  std::vector<BigInt> hs;
  hs.reserve(count);
  GhQuad q(1, 1, 2, 3);
  hs.push_back(q.h());
  for (std::size_t i = 1; i < count; ++i) {
    q = gh_children(q)[1];
    hs.push_back(q.h());
  }
  return hs;
}

/// h(depth) / h(depth-1) along the middle-child chain. Converges to the
/// positive root of r^2 - 2r - 1 = 0, i.e. 1 + sqrt(2).
inline double middle_child_ratio(std::size_t depth) {
  if (depth < 2) throw ValidationError("ratio needs depth >= 2");
  auto hs = middle_child_h_sequence(depth);
  return hs[depth - 1].convert_to<double>() / hs[depth - 2].convert_to<double>();
}

}  // namespace pptkit
