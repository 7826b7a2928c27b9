#pragma once

#include "pptkit/triple.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace pptkit {

/// Traversal orders over the (s,t) half-array of generator pairs.
///   ByColumn:     fixed s, ascending t; columns in ascending s.
///   ByRow:        fixed t, ascending s; see row notes below.
///   ByDiagonal:   constant s+t, ascending t; anti-diagonals in ascending s+t.
///   ByHypotenuse: ascending c, ties broken by ascending a.
enum class Ordering { ByColumn, ByRow, ByDiagonal, ByHypotenuse };

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::ByColumn: return "column";
    case Ordering::ByRow: return "row";
    case Ordering::ByDiagonal: return "diagonal";
    case Ordering::ByHypotenuse: return "hypotenuse";
  }
  return "?";
}

/// Stop conditions for an enumeration stream; at least one must be set.
/// All set limits apply simultaneously.
struct EnumLimits {
  std::optional<BigInt> max_s;
  std::optional<BigInt> max_c;
  std::optional<std::uint64_t> max_count;

  bool any() const { return max_s || max_c || max_count; }
};

struct StEntry {
  StPair st;
  Ppt triple;
};

namespace detail {

inline BigInt c_of(const BigInt& s, const BigInt& t) { return (s * s + t * t) / 2; }

inline StEntry make_entry(BigInt s, BigInt t) {
  StPair p(std::move(s), std::move(t));
  Ppt x = ppt_from_st(p);
  return StEntry{std::move(p), std::move(x)};
}

struct OrderImpl {
  virtual ~OrderImpl() = default;
  virtual std::optional<StEntry> next() = 0;
};

/// Column s = 3, 5, 7, ...; within a column t = 1, 3, ..., s-2 (coprime
/// cells only). c grows with t inside a column, so a c-limit ends the
/// column at the first violation.
struct ColumnImpl final : OrderImpl {
  EnumLimits lim;
  BigInt s{3}, t{1};

  explicit ColumnImpl(EnumLimits l) : lim(std::move(l)) {}

  std::optional<StEntry> next() override {
    while (true) {
      if (lim.max_s && s > *lim.max_s) return std::nullopt;
      if (lim.max_c && c_of(s, BigInt(1)) > *lim.max_c) return std::nullopt;
      if (t >= s) {
        s += 2;
        t = 1;
        continue;
      }
      if (lim.max_c && c_of(s, t) > *lim.max_c) {
        s += 2;
        t = 1;
        continue;
      }
      BigInt cur_t = t;
      t += 2;
      if (gcd(s, cur_t) == 1) return make_entry(s, std::move(cur_t));
    }
  }
};

/// Row-major traversal: row t = 1, 3, 5, ... in full, each from s = t+2
/// up to max_s. Only valid when max_s is given (rows are infinite).
struct RowMajorImpl final : OrderImpl {
  EnumLimits lim;
  BigInt t{1}, s{3};

  explicit RowMajorImpl(EnumLimits l) : lim(std::move(l)) {}

  std::optional<StEntry> next() override {
    while (true) {
      if (t + 2 > *lim.max_s) return std::nullopt;
      if (s > *lim.max_s || (lim.max_c && c_of(s, t) > *lim.max_c)) {
        t += 2;
        s = t + 2;
        continue;
      }
      BigInt cur_s = s;
      s += 2;
      if (gcd(cur_s, t) == 1) return make_entry(std::move(cur_s), t);
    }
  }
};

/// Round-robin over rows when no s-limit bounds them: round r serves one
/// entry from each of rows 1..r (row i holds t = 2i-1), then opens row
/// r+1. Keeps every row productive without starving deep rows.
struct RowRoundRobinImpl final : OrderImpl {
  EnumLimits lim;

  struct RowState {
    BigInt t;
    BigInt next_s;
    bool retired = false;
  };
  std::vector<RowState> rows;
  std::size_t active = 0;  // rows participating in the current round
  std::size_t idx = 0;

  explicit RowRoundRobinImpl(EnumLimits l) : lim(std::move(l)) {}

  std::optional<StEntry> next() override {
    while (true) {
      if (idx >= active) {
        // open the next round (and one more row)
        BigInt t = BigInt(2 * (active + 1) - 1);
        if (lim.max_c && c_of(t + 2, t) > *lim.max_c) {
          // the new row starts beyond the c-limit, as will all later rows
          if (all_retired()) return std::nullopt;
        } else {
          rows.push_back(RowState{t, t + 2});
        }
        active = rows.size();
        idx = 0;
        if (active == 0) return std::nullopt;
        continue;
      }
      RowState& row = rows[idx];
      if (row.retired) {
        ++idx;
        continue;
      }
      while (gcd(row.next_s, row.t) != 1) row.next_s += 2;
      if (lim.max_c && c_of(row.next_s, row.t) > *lim.max_c) {
        row.retired = true;  // c grows with s, the row is spent
        ++idx;
        continue;
      }
      BigInt s = row.next_s;
      row.next_s += 2;
      ++idx;
      return make_entry(std::move(s), row.t);
    }
  }

  bool all_retired() const {
    return std::all_of(rows.begin(), rows.end(), [](const RowState& r) { return r.retired; });
  }
};

/// Anti-diagonals d = s+t = 4, 6, 8, ...; within one, t ascends (so s
/// descends). Every entry of diagonal d has c >= d^2/4, which bounds the
/// scan under a c-limit.
struct DiagonalImpl final : OrderImpl {
  EnumLimits lim;
  BigInt d{4}, t{1};

  explicit DiagonalImpl(EnumLimits l) : lim(std::move(l)) {}

  std::optional<StEntry> next() override {
    while (true) {
      if (lim.max_s && d > 2 * *lim.max_s - 2) return std::nullopt;
      if (lim.max_c && d * d > 4 * *lim.max_c) return std::nullopt;
      if (2 * t >= d) {
        d += 2;
        t = 1;
        continue;
      }
      BigInt s = d - t;
      BigInt cur_t = t;
      t += 2;
      if (lim.max_s && s > *lim.max_s) continue;        // later t shrinks s
      if (lim.max_c && c_of(s, cur_t) > *lim.max_c) continue;  // c shrinks as t grows
      if (gcd(s, cur_t) == 1) return make_entry(std::move(s), std::move(cur_t));
    }
  }
};

/// Progressive sieve for hypotenuse order. All pairs with s <= B are
/// buffered and sorted by (c, a); entries with c <= (B^2+1)/2 are final,
/// because any unscanned s > B yields c >= (s^2+1)/2 beyond that
/// frontier. B doubles whenever the safe prefix drains.
struct HypotenuseImpl final : OrderImpl {
  EnumLimits lim;
  BigInt scanned{1};
  BigInt frontier{0};
  std::vector<StEntry> buf;
  std::size_t pos = 0;
  bool exhausted = false;  // no further (s,t) cells can matter

  explicit HypotenuseImpl(EnumLimits l) : lim(std::move(l)) {}

  std::optional<StEntry> next() override {
    while (true) {
      if (pos < buf.size() && (exhausted || buf[pos].triple.c() <= frontier)) {
        const StEntry& e = buf[pos];
        if (lim.max_c && e.triple.c() > *lim.max_c) return std::nullopt;  // sorted: all later exceed too
        return buf[pos++];
      }
      if (exhausted) return std::nullopt;
      grow();
    }
  }

  void grow() {
    BigInt new_bound = scanned < 3 ? BigInt(5) : BigInt(scanned * 2 + 1);
    if (lim.max_s && new_bound > *lim.max_s) new_bound = *lim.max_s;

    buf.erase(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(pos));
    pos = 0;
    const std::size_t old_size = buf.size();
    for (BigInt s = scanned + 2; s <= new_bound; s += 2) {
      for (BigInt t = 1; t < s; t += 2) {
        if (gcd(s, t) != 1) continue;
        StEntry e = make_entry(s, t);
        if (lim.max_c && e.triple.c() > *lim.max_c) continue;
        buf.push_back(std::move(e));
      }
    }
    auto by_c_then_a = [](const StEntry& lhs, const StEntry& rhs) {
      if (lhs.triple.c() != rhs.triple.c()) return lhs.triple.c() < rhs.triple.c();
      return lhs.triple.a() < rhs.triple.a();
    };
    std::sort(buf.begin() + static_cast<std::ptrdiff_t>(old_size), buf.end(), by_c_then_a);
    std::inplace_merge(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(old_size), buf.end(),
                       by_c_then_a);

    scanned = new_bound;
    frontier = (scanned * scanned + 1) / 2;
    if (lim.max_s && scanned >= *lim.max_s) exhausted = true;
    if (lim.max_c && frontier >= *lim.max_c) exhausted = true;
  }
};

}  // namespace detail

/// Streams (generator pair, triple) entries in the requested order. Each
/// instance owns private cursor state; run independent instances from
/// different threads, not one instance from many.
class StEnumerator {
 public:
  StEnumerator(Ordering order, EnumLimits limits) {
    if (!limits.any())
      throw ValidationError("unbounded enumeration rejected: set max_s, max_c or max_count");
    max_count_ = limits.max_count;
    switch (order) {
      case Ordering::ByColumn:
        impl_ = std::make_unique<detail::ColumnImpl>(std::move(limits));
        break;
      case Ordering::ByRow:
        if (limits.max_s)
          impl_ = std::make_unique<detail::RowMajorImpl>(std::move(limits));
        else
          impl_ = std::make_unique<detail::RowRoundRobinImpl>(std::move(limits));
        break;
      case Ordering::ByDiagonal:
        impl_ = std::make_unique<detail::DiagonalImpl>(std::move(limits));
        break;
      case Ordering::ByHypotenuse:
        impl_ = std::make_unique<detail::HypotenuseImpl>(std::move(limits));
        break;
    }
  }

  std::optional<StEntry> next() {
    if (max_count_ && emitted_ >= *max_count_) return std::nullopt;
    auto e = impl_->next();
    if (e) ++emitted_;
    return e;
  }

  /// Drains the stream into a vector.
  std::vector<StEntry> collect() {
    std::vector<StEntry> out;
    while (auto e = next()) out.push_back(std::move(*e));
    return out;
  }

 private:
  std::unique_ptr<detail::OrderImpl> impl_;
  std::optional<std::uint64_t> max_count_;
  std::uint64_t emitted_ = 0;
};

namespace detail {

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace detail

/// Number of generator pairs with s <= n: for odd s the odd residues
/// coprime to s are exactly half of phi(s), since t and s-t have opposite
/// parity. Bounded above by u(u+1)/2 with u = (n-1)/2.
inline std::uint64_t theta(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) throw ValidationError("theta requires an odd argument >= 3");
  std::uint64_t total = 0;
  for (std::uint64_t s = 3; s <= n; s += 2) total += detail::euler_phi(s) / 2;
  return total;
}

/// The n-th triple under (c, then a) ascending order, 1-based.
inline Ppt nth_by_hypotenuse(std::uint64_t n) {
  if (n < 1) throw ValidationError("index must be >= 1");
  StEnumerator en(Ordering::ByHypotenuse, EnumLimits{.max_count = n});
  std::optional<StEntry> last;
  while (auto e = en.next()) last = std::move(e);
  return last->triple;
}

}  // namespace pptkit
