#include "dynmatch/script.hpp"

#include <cstdint>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "dynmatch/errors.hpp"
#include "dynmatch/queries.hpp"
#include "dynmatch/top_forest.hpp"

namespace dynmatch {

namespace {

class NameMap {
 public:
  VertexId get(TopForest& tf, std::uint64_t name) {
    auto [it, inserted] = ids_.emplace(name, 0);
    if (inserted) it->second = tf.add_vertex();
    return it->second;
  }

 private:
  std::unordered_map<std::uint64_t, VertexId> ids_;
};

bool parse_u64(const std::string& tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  std::uint64_t v = 0;
  for (char ch : tok) {
    if (ch < '0' || ch > '9') return false;
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  out = v;
  return true;
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::vector<std::string> toks;
  std::istringstream is(s);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

struct LineError {
  Errc code;
};

std::uint64_t need_u64(const std::vector<std::string>& toks, std::size_t i) {
  std::uint64_t v;
  if (i >= toks.size() || !parse_u64(toks[i], v)) throw LineError{Errc::ParseError};
  return v;
}

}  // namespace

ScriptResult run_script(const std::string& input, bool weighted) {
  ScriptResult res;
  std::ostringstream out;
  TopForest tf(weighted);
  NameMap names;

  std::istringstream in(input);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      // matchedif has a parenthesized constraint list; normalize it first
      std::string body = line;
      std::vector<EdgeConstraint> constraints;
      bool is_matchedif = false;
      auto toks0 = tokens_of(line);
      if (!toks0.empty() && toks0[0] == "matchedif") {
        is_matchedif = true;
        auto open = line.find('(');
        auto close = line.find(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
          throw LineError{Errc::ParseError};
        std::string inside = line.substr(open + 1, close - open - 1);
        body = "matchedif " + line.substr(close + 1);
        std::istringstream cs(inside);
        std::string item;
        std::vector<std::string> items;
        while (std::getline(cs, item, ';')) items.push_back(item);
        if (items.size() > 8) throw LineError{Errc::TooManyConstraints};
        for (const std::string& raw : items) {
          auto ct = tokens_of(raw);
          if (ct.empty()) continue;
          if (ct.size() != 3 || (ct[2] != "m" && ct[2] != "u")) throw LineError{Errc::ParseError};
          std::uint64_t a, b;
          if (!parse_u64(ct[0], a) || !parse_u64(ct[1], b)) throw LineError{Errc::ParseError};
          VertexId u = names.get(tf, a), v = names.get(tf, b);
          EdgeId e = tf.forest().edge_between(u, v);
          constraints.push_back(EdgeConstraint{e, ct[2] == "m"});
        }
      }

      auto toks = tokens_of(body);
      if (toks.empty()) continue;
      const std::string& cmd = toks[0];

      if (cmd == "link") {
        if (toks.size() < 3 || toks.size() > 4) throw LineError{Errc::ParseError};
        VertexId u = names.get(tf, need_u64(toks, 1));
        VertexId v = names.get(tf, need_u64(toks, 2));
        std::int64_t w = toks.size() == 4 ? static_cast<std::int64_t>(need_u64(toks, 3)) : 1;
        tf.link(u, v, w);
      } else if (cmd == "cut") {
        if (toks.size() != 3) throw LineError{Errc::ParseError};
        VertexId u = names.get(tf, need_u64(toks, 1));
        VertexId v = names.get(tf, need_u64(toks, 2));
        tf.cut(u, v);
      } else if (cmd == "card") {
        if (toks.size() != 2) throw LineError{Errc::ParseError};
        VertexId v = names.get(tf, need_u64(toks, 1));
        out << tf.matching_cardinality(v).value() << "\n";
      } else if (cmd == "total") {
        if (toks.size() != 1) throw LineError{Errc::ParseError};
        out << tf.total_cardinality().value() << "\n";
      } else if (cmd == "matched") {
        if (toks.size() != 3) throw LineError{Errc::ParseError};
        VertexId u = names.get(tf, need_u64(toks, 1));
        VertexId v = names.get(tf, need_u64(toks, 2));
        EdgeId e = tf.forest().edge_between(u, v);
        out << (edge_in_some_maximum(tf, e) ? "yes" : "no") << "\n";
      } else if (is_matchedif && cmd == "matchedif") {
        if (toks.size() != 3) throw LineError{Errc::ParseError};
        VertexId u = names.get(tf, need_u64(toks, 1));
        VertexId v = names.get(tf, need_u64(toks, 2));
        EdgeId e = tf.forest().edge_between(u, v);
        Tristate t = edge_matched_given(tf, constraints, e);
        out << (t == Tristate::Matched ? "yes" : t == Tristate::Unmatched ? "no" : "infeasible")
            << "\n";
      } else if (cmd == "check") {
        if (toks.size() != 1) throw LineError{Errc::ParseError};
        std::string bad = tf.check();
        if (bad.empty()) {
          out << "ok\n";
        } else {
          out << bad << "\n";
          res.failed = true;
        }
      } else {
        throw LineError{Errc::ParseError};
      }
    } catch (const LineError& le) {
      out << "error " << line_no << " " << errc_name(le.code) << "\n";
      res.failed = true;
    } catch (const Error& err) {
      out << "error " << line_no << " " << errc_name(err.code()) << "\n";
      res.failed = true;
    }
  }
  res.output = out.str();
  return res;
}

}  // namespace dynmatch
