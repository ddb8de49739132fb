#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace dynmatch {

/// Value of a constrained optimum matching: a non-negative total (cardinality,
/// or weight in weighted mode) or null when the boundary colouring is not
/// realizable. Addition absorbs null; max treats null as bottom.
class MatchValue {
 public:
  constexpr MatchValue() = default;
  constexpr MatchValue(std::int64_t v) : has_(true), v_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr MatchValue null() { return MatchValue{}; }

  constexpr bool is_null() const { return !has_; }
  constexpr std::int64_t value() const { return v_; }

  friend constexpr bool operator==(MatchValue a, MatchValue b) {
    return a.has_ == b.has_ && (!a.has_ || a.v_ == b.v_);
  }

  std::string str() const;  // "$" for null

 private:
  bool has_ = false;
  std::int64_t v_ = 0;
};

constexpr MatchValue operator+(MatchValue a, MatchValue b) {
  if (a.is_null() || b.is_null()) return MatchValue::null();
  return MatchValue(a.value() + b.value());
}

constexpr MatchValue vmax(MatchValue a, MatchValue b) {
  if (a.is_null()) return b;
  if (b.is_null()) return a;
  return MatchValue(a.value() > b.value() ? a.value() : b.value());
}

/// Boundary colour states of a cluster, indexed (first<<1)|second where
/// 1 means black (matched). Order: ww, wb, bw, bb.
enum : int { kWW = 0, kWB = 1, kBW = 2, kBB = 3 };

inline constexpr int state_of(int first_black, int second_black) {
  return (first_black << 1) | second_black;
}
inline constexpr int state_swapped(int s) { return ((s & 1) << 1) | ((s >> 1) & 1); }

/// The four constrained optimum values of a cluster, stored in the cluster's
/// boundary order (first-vertex colour, second-vertex colour).
struct MatchTable {
  std::array<MatchValue, 4> v{};

  MatchValue& operator[](int s) { return v[static_cast<std::size_t>(s)]; }
  const MatchValue& operator[](int s) const { return v[static_cast<std::size_t>(s)]; }

  friend bool operator==(const MatchTable& a, const MatchTable& b) { return a.v == b.v; }
};

inline MatchTable make_table(MatchValue ww, MatchValue wb, MatchValue bw, MatchValue bb) {
  return MatchTable{{ww, wb, bw, bb}};
}

/// Join of two tables over a shared interior vertex, before the outer
/// boundary states are projected. Indexed [first-state][shared-colour][last-state].
struct JoinedTable {
  std::array<MatchValue, 8> v{};

  MatchValue& at(int a_black, int b_black, int c_black) {
    return v[static_cast<std::size_t>((a_black << 2) | (b_black << 1) | c_black)];
  }
  const MatchValue& at(int a_black, int b_black, int c_black) const {
    return v[static_cast<std::size_t>((a_black << 2) | (b_black << 1) | c_black)];
  }
};

/// Single-edge cluster table: ww = 0 (empty matching), wb = bw = null,
/// bb = 1 (or the edge weight in weighted mode).
MatchTable table_base(std::int64_t w, bool weighted);

/// Combine tables P (shared vertex second) and Q (shared vertex first) at
/// their shared vertex. A shared-vertex colouring is valid when at most one
/// side matches an edge there; the joined colour is the OR of the sides.
JoinedTable merge_at_shared(const MatchTable& p, const MatchTable& q);

/// Compress of P = (A,B) with Q = (B,C): boundary (A,C); B maximized out.
MatchTable table_compress(const MatchTable& p, const MatchTable& q);

/// Rake of leaf P = (A,B), A dangling, onto Q = (B,C): boundary (B,C);
/// A maximized out, the shared colour at B is kept.
MatchTable table_rake(const MatchTable& leaf, const MatchTable& onto);

/// Optimum over all four boundary states.
MatchValue table_best(const MatchTable& t);

/// Reverses the stored boundary orientation (swaps wb and bw). Involutive.
MatchTable table_swap(const MatchTable& t);

/// Text form used by golden files and the debug dump: "(a,b,c,d)" with "$"
/// for null.
std::string table_text(const MatchTable& t);

/// Cardinality-mode sanity bounds: removing the at most two boundary-matched
/// edges relates the four entries. Meaningful for unweighted tables only.
bool table_slack_ok(const MatchTable& t);

}  // namespace dynmatch
