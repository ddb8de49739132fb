#include "dynmatch/match_table.hpp"

namespace dynmatch {

std::string MatchValue::str() const {
  if (!has_) return "$";
  return std::to_string(v_);
}

MatchTable table_base(std::int64_t w, bool weighted) {
  return make_table(MatchValue(0), MatchValue::null(), MatchValue::null(),
                    MatchValue(weighted ? w : 1));
}

JoinedTable merge_at_shared(const MatchTable& p, const MatchTable& q) {
  JoinedTable j;
  for (int x = 0; x < 2; ++x) {
    for (int z = 0; z < 2; ++z) {
      // white shared vertex: both sides leave it unmatched
      j.at(x, 0, z) = p[state_of(x, 0)] + q[state_of(0, z)];
      // black shared vertex: exactly one side matches an edge there
      j.at(x, 1, z) = vmax(p[state_of(x, 0)] + q[state_of(1, z)],
                           p[state_of(x, 1)] + q[state_of(0, z)]);
    }
  }
  return j;
}

MatchTable table_compress(const MatchTable& p, const MatchTable& q) {
  JoinedTable j = merge_at_shared(p, q);
  MatchTable r;
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z) r[state_of(x, z)] = vmax(j.at(x, 0, z), j.at(x, 1, z));
  return r;
}

MatchTable table_rake(const MatchTable& leaf, const MatchTable& onto) {
  JoinedTable j = merge_at_shared(leaf, onto);
  MatchTable r;
  for (int y = 0; y < 2; ++y)
    for (int z = 0; z < 2; ++z) r[state_of(y, z)] = vmax(j.at(0, y, z), j.at(1, y, z));
  return r;
}

MatchValue table_best(const MatchTable& t) {
  return vmax(vmax(t[kWW], t[kWB]), vmax(t[kBW], t[kBB]));
}

MatchTable table_swap(const MatchTable& t) {
  return make_table(t[kWW], t[kBW], t[kWB], t[kBB]);
}

std::string table_text(const MatchTable& t) {
  return "(" + t[kWW].str() + "," + t[kWB].str() + "," + t[kBW].str() + "," + t[kBB].str() + ")";
}

bool table_slack_ok(const MatchTable& t) {
  if (t[kWW].is_null()) return false;
  const std::int64_t ww = t[kWW].value();
  auto ge = [](std::int64_t a, MatchValue b, std::int64_t slack) {
    return b.is_null() || a >= b.value() - slack;
  };
  if (!ge(ww, t[kWB], 1) || !ge(ww, t[kBW], 1) || !ge(ww, t[kBB], 2)) return false;
  if (!t[kWB].is_null() && !ge(t[kWB].value(), t[kBB], 1)) return false;
  if (!t[kBW].is_null() && !ge(t[kBW].value(), t[kBB], 1)) return false;
  return true;
}

}  // namespace dynmatch
