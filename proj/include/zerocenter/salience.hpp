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

// Forward-center ranking. The only language-specific input to the engine is
// a LanguageConfig: the salience status order, the empathy-loaded verb
// lexicon, and whether zero topics may be assigned.

#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "zerocenter/core.hpp"

namespace zerocenter {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when the engine cannot produce an interpretation. `kind` is a
// stable machine-readable tag; what() carries the human message.
class ResolutionError : public std::runtime_error {
 public:
  enum class Kind {
    IncompleteAssignment,
    UnresolvableInitialZero,
    NoAntecedentCandidates,
    NoAdmissibleInterpretation,
  };

  ResolutionError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

enum class EmpathyRule { Subj, Obj2ElseObj };

constexpr std::string_view empathy_rule_name(EmpathyRule r) {
  return r == EmpathyRule::Subj ? "SUBJ" : "OBJ2_ELSE_OBJ";
}

inline std::optional<EmpathyRule> parse_empathy_rule(std::string_view s) {
  if (s == "SUBJ") return EmpathyRule::Subj;
  if (s == "OBJ2_ELSE_OBJ") return EmpathyRule::Obj2ElseObj;
  return std::nullopt;
}

// The argument position a predicate marks as empathy locus, before it is
// bound to a concrete slot: bind to `primary` if the utterance has that
// role, else to `fallback`.
struct EmpathyLocus {
  Role primary = Role::Subj;
  std::optional<Role> fallback;

  static EmpathyLocus from_rule(EmpathyRule r) {
    if (r == EmpathyRule::Subj) return {Role::Subj, std::nullopt};
    return {Role::Obj2, Role::Obj};
  }

  friend bool operator==(const EmpathyLocus&, const EmpathyLocus&) = default;
};

struct LanguageConfig {
  std::vector<Status> status_order;  // highest salience first
  std::map<std::string, EmpathyRule> empathy_lexicon;
  bool zero_topic_enabled = false;

  // Position of `s` in the order; statuses the language does not rank sort
  // after every ranked one.
  int rank_of(Status s) const {
    auto it = std::find(status_order.begin(), status_order.end(), s);
    return static_cast<int>(it - status_order.begin());
  }

  void validate() const {
    std::set<Status> seen;
    for (Status s : status_order) {
      if (!seen.insert(s).second)
        throw ConfigError("status order lists " +
                          std::string(status_name(s)) + " twice");
    }
    for (Status required : {Status::Subj, Status::Obj2, Status::Obj}) {
      if (!seen.count(required))
        throw ConfigError("status order must contain " +
                          std::string(status_name(required)));
    }
  }

  friend bool operator==(const LanguageConfig&,
                         const LanguageConfig&) = default;
};

inline std::map<std::string, EmpathyRule> japanese_empathy_lexicon() {
  return {{"yaru", EmpathyRule::Subj},
          {"iku", EmpathyRule::Subj},
          {"kureru", EmpathyRule::Obj2ElseObj},
          {"kuru", EmpathyRule::Obj2ElseObj}};
}

inline LanguageConfig japanese_config() {
  return {{Status::Topic, Status::Empathy, Status::Subj, Status::Obj2,
           Status::Obj, Status::Adj},
          japanese_empathy_lexicon(),
          true};
}

inline LanguageConfig english_config() {
  return {{Status::Subj, Status::Obj2, Status::Obj, Status::Adj}, {}, false};
}

// --- annotated utterances ---------------------------------------------------

struct Predicate {
  std::string lemma;
  std::vector<std::string> suffixes;  // surface order, innermost first
  std::optional<Role> explicit_empathy;

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

struct Overt {
  Entity entity;
  Marker marker = Marker::None;
  friend bool operator==(const Overt&, const Overt&) = default;
};

struct Zero {
  std::string zid;
  friend bool operator==(const Zero&, const Zero&) = default;
};

struct ArgumentSlot {
  Role role = Role::Subj;
  std::variant<Overt, Zero> realization;

  bool is_zero() const { return std::holds_alternative<Zero>(realization); }
  const Zero* zero() const { return std::get_if<Zero>(&realization); }
  const Overt* overt() const { return std::get_if<Overt>(&realization); }
  bool is_topic_marked() const {
    const Overt* o = overt();
    return o && o->marker == Marker::Wa;
  }

  friend bool operator==(const ArgumentSlot&, const ArgumentSlot&) = default;
};

struct Utterance {
  std::string uid;
  Predicate predicate;
  std::vector<ArgumentSlot> slots;  // surface order

  bool has_topic_marker() const {
    return std::any_of(slots.begin(), slots.end(),
                       [](const ArgumentSlot& s) { return s.is_topic_marked(); });
  }

  std::vector<std::string> zero_ids() const {
    std::vector<std::string> out;
    for (const auto& s : slots)
      if (const Zero* z = s.zero()) out.push_back(z->zid);
    return out;
  }

  // Returns a description of the first well-formedness violation, if any.
  std::optional<std::string> well_formedness_error() const {
    std::set<Role> roles;
    std::set<std::string> zids;
    int topics = 0;
    for (const auto& s : slots) {
      if (s.role != Role::Adj && !roles.insert(s.role).second)
        return "duplicate role " + std::string(role_name(s.role));
      if (const Zero* z = s.zero()) {
        if (!zids.insert(z->zid).second) return "duplicate zero id " + z->zid;
      }
      if (s.is_topic_marked() && ++topics > 1)
        return "more than one wa-marked argument";
    }
    return std::nullopt;
  }

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

using Assignment = std::map<std::string, Entity>;  // zid -> entity

struct CfEntry {
  Entity entity;
  StatusSet statuses;
  friend bool operator==(const CfEntry&, const CfEntry&) = default;
};

// Highest salience first; the head is the preferred center.
using CfList = std::vector<CfEntry>;

inline std::optional<Entity> preferred_center(const CfList& cf) {
  if (cf.empty()) return std::nullopt;
  return cf.front().entity;
}

inline std::vector<Entity> entities_of(const CfList& cf) {
  std::vector<Entity> out;
  out.reserve(cf.size());
  for (const auto& e : cf) out.push_back(e.entity);
  return out;
}

// --- ranking ----------------------------------------------------------------

// An explicit annotation wins. Otherwise the outermost suffix that is an
// empathy-loaded verb decides, then the lemma itself.
inline std::optional<EmpathyLocus> empathy_locus(const Predicate& predicate,
                                                 const LanguageConfig& config) {
  if (predicate.explicit_empathy) return EmpathyLocus{*predicate.explicit_empathy, {}};
  for (auto it = predicate.suffixes.rbegin(); it != predicate.suffixes.rend();
       ++it) {
    auto hit = config.empathy_lexicon.find(*it);
    if (hit != config.empathy_lexicon.end())
      return EmpathyLocus::from_rule(hit->second);
  }
  auto hit = config.empathy_lexicon.find(predicate.lemma);
  if (hit != config.empathy_lexicon.end())
    return EmpathyLocus::from_rule(hit->second);
  return std::nullopt;
}

// Index of the slot the locus binds to in `u`, if any.
inline std::optional<std::size_t> bind_locus(const Utterance& u,
                                             const EmpathyLocus& locus) {
  auto find_role = [&](Role r) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < u.slots.size(); ++i)
      if (u.slots[i].role == r) return i;
    return std::nullopt;
  };
  if (auto i = find_role(locus.primary)) return i;
  if (locus.fallback) return find_role(*locus.fallback);
  return std::nullopt;
}

inline StatusSet salience_statuses(std::size_t slot_index, const Utterance& u,
                                   const std::optional<EmpathyLocus>& locus,
                                   const std::optional<std::string>& zero_topic_grant,
                                   const LanguageConfig& /*config*/) {
  const ArgumentSlot& slot = u.slots.at(slot_index);
  StatusSet statuses{status_of(slot.role)};
  if (slot.is_topic_marked()) statuses.insert(Status::Topic);
  if (zero_topic_grant && slot.is_zero() &&
      slot.zero()->zid == *zero_topic_grant)
    statuses.insert(Status::Topic);
  if (locus && bind_locus(u, *locus) == slot_index)
    statuses.insert(Status::Empathy);
  return statuses;
}

// The best (lowest) rank any of `statuses` attains under `config`.
inline int best_rank(StatusSet statuses, const LanguageConfig& config) {
  int best = static_cast<int>(config.status_order.size());
  for (Status s : kAllStatuses)
    if (statuses.contains(s)) best = std::min(best, config.rank_of(s));
  return best;
}

inline Entity realized_entity(const ArgumentSlot& slot,
                              const Assignment& assignment) {
  if (const Overt* o = slot.overt()) return o->entity;
  auto it = assignment.find(slot.zero()->zid);
  if (it == assignment.end())
    throw ResolutionError(ResolutionError::Kind::IncompleteAssignment,
                          "incomplete assignment: zero " + slot.zero()->zid +
                              " has no antecedent");
  return it->second;
}

inline CfList rank_cf(const Utterance& u, const Assignment& assignment,
                      const std::optional<EmpathyLocus>& locus,
                      const std::optional<std::string>& zero_topic_grant,
                      const LanguageConfig& config) {
  struct Pending {
    CfEntry entry;
    int rank;
    std::size_t surface;  // slot that contributed `rank`
  };
  std::vector<Pending> pending;
  for (std::size_t i = 0; i < u.slots.size(); ++i) {
    Entity e = realized_entity(u.slots[i], assignment);
    StatusSet st = salience_statuses(i, u, locus, zero_topic_grant, config);
    int rank = best_rank(st, config);
    auto it = std::find_if(pending.begin(), pending.end(),
                           [&](const Pending& p) { return p.entry.entity == e; });
    if (it == pending.end()) {
      pending.push_back({{std::move(e), st}, rank, i});
      continue;
    }
    it->entry.statuses |= st;
    if (rank < it->rank) {
      it->rank = rank;
      it->surface = i;
    }
  }
  std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    return std::tie(a.rank, a.surface) < std::tie(b.rank, b.surface);
  });
  CfList cf;
  cf.reserve(pending.size());
  for (auto& p : pending) cf.push_back(std::move(p.entry));
  return cf;
}

inline CfList rank_cf(const Utterance& u, const Assignment& assignment,
                      const std::optional<std::string>& zero_topic_grant,
                      const LanguageConfig& config) {
  return rank_cf(u, assignment, empathy_locus(u.predicate, config),
                 zero_topic_grant, config);
}

// --- language files ---------------------------------------------------------

namespace detail {

inline std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace detail

// One entry per line: `lemma<TAB>SUBJ|OBJ2_ELSE_OBJ`. `#` starts a comment.
inline std::map<std::string, EmpathyRule> parse_empathy_lexicon(std::istream& in) {
  std::map<std::string, EmpathyRule> lexicon;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    auto fields = detail::split_ws(detail::strip_comment(line));
    if (fields.empty()) continue;
    std::optional<EmpathyRule> rule;
    if (fields.size() == 2) rule = parse_empathy_rule(fields[1]);
    if (!rule)
      throw ConfigError("lexicon line " + std::to_string(lineno) +
                        ": expected `lemma<TAB>SUBJ|OBJ2_ELSE_OBJ`");
    lexicon[fields[0]] = *rule;
  }
  return lexicon;
}

// Language config file:
//
//   order TOPIC EMPATHY SUBJ OBJ2 OBJ ADJ
//   zero_topic on
//   empathy kureru OBJ2_ELSE_OBJ
//
// `order` is required; `zero_topic` defaults to off.
inline LanguageConfig parse_language_config(std::istream& in) {
  LanguageConfig config;
  bool have_order = false;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    auto fields = detail::split_ws(detail::strip_comment(line));
    if (fields.empty()) continue;
    auto fail = [&](const std::string& what) {
      return ConfigError("config line " + std::to_string(lineno) + ": " + what);
    };
    const std::string& key = fields[0];
    if (key == "order") {
      config.status_order.clear();
      for (std::size_t i = 1; i < fields.size(); ++i) {
        auto s = parse_status(fields[i]);
        if (!s) throw fail("unknown status " + fields[i]);
        config.status_order.push_back(*s);
      }
      have_order = true;
    } else if (key == "zero_topic") {
      if (fields.size() != 2 || (fields[1] != "on" && fields[1] != "off"))
        throw fail("expected `zero_topic on|off`");
      config.zero_topic_enabled = fields[1] == "on";
    } else if (key == "empathy") {
      std::optional<EmpathyRule> rule;
      if (fields.size() == 3) rule = parse_empathy_rule(fields[2]);
      if (!rule) throw fail("expected `empathy lemma SUBJ|OBJ2_ELSE_OBJ`");
      config.empathy_lexicon[fields[1]] = *rule;
    } else {
      throw fail("unknown directive " + key);
    }
  }
  if (!have_order) throw ConfigError("config has no `order` line");
  config.validate();
  return config;
}

}  // namespace zerocenter
