// Copyright 2026 The zerocenter Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reading annotated discourse files and writing resolution results.
//
// Discourse files are line oriented. `#` starts a comment, blank lines are
// ignored, and PRED/ARG lines are indented under their `U` header:
//
//   DISCOURSE introduce
//   CONTEXT CB=TAROO CF=TAROO,HANAKO
//   U u1
//     PRED shookaisuru
//     ARG SUBJ ga LYN
//     ARG OBJ ZERO z1
//
// Roles are SUBJ, OBJ2, OBJ, ADJ; markers are wa, ga, o, ni, `-`.

#pragma once

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zerocenter/core.hpp"
#include "zerocenter/engine.hpp"
#include "zerocenter/salience.hpp"

namespace zerocenter {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  // 0 when the error is not tied to a line.
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

inline bool valid_symbol(const std::string& s) {
  return !s.empty() && s.find_first_of(",;=") == std::string::npos;
}

class DiscourseParser {
 public:
  Discourse parse(std::istream& in) {
    std::string raw;
    for (int lineno = 1; std::getline(in, raw); ++lineno) {
      line_ = lineno;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::string text = raw.substr(0, raw.find('#'));
      auto tokens = tokenize(text);
      if (tokens.empty()) continue;
      bool indented = std::isspace(static_cast<unsigned char>(text.front()));
      if (indented)
        body_line(tokens);
      else
        header_line(tokens, text);
    }
    line_ = 0;
    finish_unit();
    if (!have_header_) throw ParseError(0, "missing DISCOURSE header");
    if (d_.units.empty()) throw ParseError(0, "no utterances");
    return std::move(d_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, message);
  }

  void header_line(const std::vector<std::string>& tokens, const std::string& text) {
    const std::string& key = tokens[0];
    if (key == "DISCOURSE") {
      if (have_header_) fail("duplicate DISCOURSE header");
      if (tokens.size() < 2) fail("DISCOURSE needs a name");
      auto start = text.find_first_not_of(" \t", text.find("DISCOURSE") + 9);
      std::string name = text.substr(start);
      name.erase(name.find_last_not_of(" \t") + 1);
      d_.name = name;
      have_header_ = true;
      return;
    }
    if (!have_header_) fail("expected DISCOURSE header before " + key);
    if (key == "CONTEXT") {
      context_line(tokens);
    } else if (key == "U") {
      finish_unit();
      if (tokens.size() != 2 || !valid_symbol(tokens[1])) fail("expected `U uid`");
      if (!uids_.insert(tokens[1]).second) fail("duplicate utterance id " + tokens[1]);
      open_ = Utterance{};
      open_->uid = tokens[1];
      open_line_ = line_;
      have_pred_ = false;
    } else if (key == "PRED" || key == "ARG") {
      fail(key + " line must be indented under a U block");
    } else {
      fail("unknown directive " + key);
    }
  }

  void context_line(const std::vector<std::string>& tokens) {
    if (d_.context) fail("duplicate CONTEXT line");
    if (open_ || !d_.units.empty()) fail("CONTEXT must precede the first utterance");
    if (tokens.size() < 2 || tokens.size() > 3 || tokens[1].rfind("CB=", 0) != 0)
      fail("malformed context line: expected `CONTEXT CB=entity [CF=e1,e2,...]`");
    DiscourseContext ctx;
    std::string cb = tokens[1].substr(3);
    if (!valid_symbol(cb)) fail("malformed context line: bad CB entity");
    ctx.cb = Entity(cb);
    if (tokens.size() == 3) {
      if (tokens[2].rfind("CF=", 0) != 0) fail("malformed context line: expected CF=");
      std::set<std::string> seen;
      for (auto& e : split(tokens[2].substr(3), ',')) {
        if (!valid_symbol(e)) fail("malformed context line: bad CF entity");
        if (!seen.insert(e).second) fail("malformed context line: " + e + " listed twice");
        ctx.cf.emplace_back(e);
      }
      if (!seen.count(cb)) fail("malformed context line: CB must be a member of CF");
    }
    d_.context = std::move(ctx);
  }

  void body_line(const std::vector<std::string>& tokens) {
    if (!open_) fail(tokens[0] + " line outside of a U block");
    if (tokens[0] == "PRED") {
      pred_line(tokens);
    } else if (tokens[0] == "ARG") {
      if (!have_pred_) fail("ARG before PRED");
      arg_line(tokens);
    } else {
      fail("unknown directive " + tokens[0]);
    }
  }

  void pred_line(const std::vector<std::string>& tokens) {
    if (have_pred_) fail("duplicate PRED line");
    if (tokens.size() < 2 || tokens.size() > 3)
      fail("expected `PRED lemma(+suffix)* [EMPATHY=role]`");
    auto parts = split(tokens[1], '+');
    for (const auto& p : parts)
      if (p.empty()) fail("empty lemma or suffix in " + tokens[1]);
    Predicate pred;
    pred.lemma = parts.front();
    pred.suffixes.assign(parts.begin() + 1, parts.end());
    if (tokens.size() == 3) {
      if (tokens[2].rfind("EMPATHY=", 0) != 0) fail("expected EMPATHY=role");
      auto role = parse_role(tokens[2].substr(8));
      if (!role) fail("unknown role " + tokens[2].substr(8));
      pred.explicit_empathy = role;
    }
    open_->predicate = std::move(pred);
    have_pred_ = true;
  }

  void arg_line(const std::vector<std::string>& tokens) {
    if (tokens.size() != 4) fail("expected `ARG role marker entity` or `ARG role ZERO zid`");
    auto role = parse_role(tokens[1]);
    if (!role) fail("unknown role " + tokens[1]);
    ArgumentSlot slot;
    slot.role = *role;
    if (tokens[2] == "ZERO") {
      if (!valid_symbol(tokens[3])) fail("bad zero id " + tokens[3]);
      slot.realization = Zero{tokens[3]};
    } else {
      auto marker = parse_marker(tokens[2]);
      if (!marker) fail("unknown marker " + tokens[2]);
      if (!valid_symbol(tokens[3])) fail("bad entity " + tokens[3]);
      slot.realization = Overt{Entity(tokens[3]), *marker};
    }
    open_->slots.push_back(std::move(slot));
    if (auto problem = open_->well_formedness_error()) fail(*problem);
  }

  void finish_unit() {
    if (!open_) return;
    if (!have_pred_) throw ParseError(open_line_, "utterance " + open_->uid + " has no PRED line");
    d_.units.push_back(std::move(*open_));
    open_.reset();
  }

  Discourse d_;
  bool have_header_ = false;
  std::optional<Utterance> open_;
  bool have_pred_ = false;
  int open_line_ = 0;
  int line_ = 0;
  std::set<std::string> uids_;
};

}  // namespace detail

inline Discourse parse_discourse(std::istream& in) {
  return detail::DiscourseParser().parse(in);
}

inline Discourse parse_discourse(const std::string& text) {
  std::istringstream in(text);
  return parse_discourse(in);
}

// Canonical text form of a discourse: no comments, two-space indentation,
// one blank line before each U block.
inline std::string format_discourse(const Discourse& d) {
  std::ostringstream out;
  out << "DISCOURSE " << d.name << '\n';
  if (d.context) {
    out << "CONTEXT CB=" << d.context->cb.id();
    if (!d.context->cf.empty()) {
      out << " CF=";
      for (std::size_t i = 0; i < d.context->cf.size(); ++i)
        out << (i ? "," : "") << d.context->cf[i].id();
    }
    out << '\n';
  }
  for (const auto& u : d.units) {
    out << "\nU " << u.uid << "\n  PRED " << u.predicate.lemma;
    for (const auto& s : u.predicate.suffixes) out << '+' << s;
    if (u.predicate.explicit_empathy)
      out << " EMPATHY=" << role_name(*u.predicate.explicit_empathy);
    out << '\n';
    for (const auto& slot : u.slots) {
      out << "  ARG " << role_name(slot.role) << ' ';
      if (const Zero* z = slot.zero())
        out << "ZERO " << z->zid;
      else
        out << marker_name(slot.overt()->marker) << ' ' << slot.overt()->entity.id();
      out << '\n';
    }
  }
  return out.str();
}

inline std::string canonicalize(const std::string& text) {
  return format_discourse(parse_discourse(text));
}

// --- results ------------------------------------------------------------------

enum class OutputMode { Trace, Records };

namespace detail {

inline std::string status_gloss(StatusSet statuses) {
  std::string out;
  for (Status s : kAllStatuses) {
    if (!statuses.contains(s)) continue;
    if (!out.empty()) out += '/';
    for (char c : status_name(s)) out += static_cast<char>(std::tolower(c));
  }
  return out;
}

inline std::string join_cf(const CfList& cf, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    if (i) out += sep;
    out += cf[i].entity.id();
  }
  return out;
}

inline std::string join_assignment(const Assignment& a) {
  if (a.empty()) return "-";
  std::string out;
  for (const auto& [zid, e] : a) {
    if (!out.empty()) out += ';';
    out += zid + "=" + e.id();
  }
  return out;
}

inline std::string transition_or_dash(const Anchor& a) {
  return a.transition ? std::string(transition_name(*a.transition)) : "-";
}

inline std::string record_line(const std::string& uid, const Anchor& a) {
  std::string line = uid;
  line += '\t' + a.cb.str();
  line += '\t' + join_cf(a.cf, ",");
  line += '\t' + transition_or_dash(a);
  line += '\t' + join_assignment(a.assignment);
  line += '\t' + a.zero_topic_grant.value_or("-");
  return line;
}

// "[TAROO, HANAKO]" with the status glosses aligned underneath.
inline void write_cf_box(std::ostream& out, const std::string& indent, const CfList& cf) {
  std::vector<std::string> cells, glosses;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    std::string cell = (i == 0 ? "[" : "") + cf[i].entity.id() +
                       (i + 1 == cf.size() ? "]" : ",");
    cells.push_back(cell);
    glosses.push_back((i == 0 ? " " : "") + status_gloss(cf[i].statuses));
  }
  std::string top, bottom;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::size_t w = std::max(cells[i].size(), glosses[i].size()) + 1;
    cells[i].resize(w, ' ');
    glosses[i].resize(w, ' ');
    top += cells[i];
    bottom += glosses[i];
  }
  if (cf.empty()) top = "[] ";
  auto rstrip = [](std::string s) {
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
  };
  out << indent << "Cf: " << rstrip(top) << '\n';
  if (!cf.empty()) out << indent << "    " << rstrip(bottom) << '\n';
}

inline void write_interpretation(std::ostream& out, const std::string& indent,
                                 const Interpretation& i) {
  const Anchor& a = i.anchor;
  out << indent << "Cb: " << (a.cb.is_established() ? a.cb.str() : "[?]");
  if (a.transition) out << "  (" << transition_name(*a.transition) << ")";
  out << '\n';
  write_cf_box(out, indent, a.cf);
  if (!i.gloss.empty()) out << indent << "reading: " << i.gloss << '\n';
  if (a.zero_topic_grant) out << indent << "zero topic: " << *a.zero_topic_grant << '\n';
  out << indent << "from anchor: " << i.source_anchor + 1 << '\n';
}

}  // namespace detail

inline std::string serialize_result(const std::vector<ResolutionResult>& results,
                                    OutputMode mode, bool verbose = false) {
  for (const auto& r : results)
    if (r.preferred.empty())
      throw std::invalid_argument("result for " + r.uid + " has no preferred interpretation");
  std::ostringstream out;
  if (mode == OutputMode::Records) {
    for (const auto& r : results)
      for (const auto& p : r.preferred) out << detail::record_line(r.uid, p.anchor) << '\n';
    return out.str();
  }
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& r = results[k];
    if (k) out << '\n';
    out << "U " << r.uid << "  (" << r.preferred.size() << " preferred)\n";
    for (std::size_t i = 0; i < r.preferred.size(); ++i) {
      out << "  #" << i + 1 << '\n';
      detail::write_interpretation(out, "    ", r.preferred[i]);
    }
    if (verbose && !r.rejected.empty()) {
      out << "  rejected:\n";
      for (const auto& rej : r.rejected) {
        const Anchor& a = rej.interpretation.anchor;
        out << "    " << reject_reason_name(rej.reason) << "  " << rej.interpretation.gloss
            << "  Cb: " << a.cb.str() << "  Cf: [" << detail::join_cf(a.cf, ", ") << "]  "
            << detail::transition_or_dash(a);
        if (a.zero_topic_grant) out << "  zero topic: " << *a.zero_topic_grant;
        out << "  from anchor: " << rej.interpretation.source_anchor + 1 << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace zerocenter
