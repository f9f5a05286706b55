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

// The centering algorithm for zero pronouns.
//
// For every live anchor (one hypothesis about the previous utterance's Cb and
// Cf) the engine enumerates antecedent assignments for the zeros of the new
// utterance, computes the Cb each implies, filters by Rule 1 and
// contra-indexing, ranks the Cf, classifies the transition and, when no
// continuation is available, adds zero-topic readings. Per anchor, the
// assignments whose best transition is maximal survive; the union over all
// anchors is the preferred set and becomes the next state. Anchors never
// compete with one another.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zerocenter/core.hpp"
#include "zerocenter/salience.hpp"

namespace zerocenter {

enum class RejectReason { Constraint3, Rule1, Contraindex, Dominated };

constexpr std::string_view reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::Constraint3: return "CONSTRAINT3";
    case RejectReason::Rule1: return "RULE1";
    case RejectReason::Contraindex: return "CONTRAINDEX";
    case RejectReason::Dominated: return "DOMINATED";
  }
  return "?";
}

// One live hypothesis about an utterance.
struct Anchor {
  Cb cb;
  CfList cf;
  Assignment assignment;
  std::optional<Transition> transition;
  std::optional<std::string> zero_topic_grant;

  friend bool operator==(const Anchor&, const Anchor&) = default;
};

struct Interpretation {
  Anchor anchor;
  std::size_t source_anchor = 0;  // index into the predecessor state
  std::string gloss;              // "SUBJ=TAROO OBJ=HANAKO"
};

struct Rejection {
  Interpretation interpretation;
  RejectReason reason;
};

struct ResolutionResult {
  std::string uid;
  std::vector<Interpretation> preferred;
  std::vector<Rejection> rejected;
};

struct CenteringState {
  std::vector<Anchor> live_anchors;
  std::size_t utterance_index = 0;
};

struct Step {
  ResolutionResult result;
  CenteringState state;
};

// Cb/Cf of a virtual utterance preceding the first unit. An empty `cf`
// means [cb].
struct DiscourseContext {
  Entity cb;
  std::vector<Entity> cf;

  friend bool operator==(const DiscourseContext&,
                         const DiscourseContext&) = default;
};

struct Discourse {
  std::string name;
  std::optional<DiscourseContext> context;
  std::vector<Utterance> units;

  friend bool operator==(const Discourse&, const Discourse&) = default;
};

// Every candidate was filtered out. Carries the rejections for tracing.
class NoInterpretationError : public ResolutionError {
 public:
  NoInterpretationError(const std::string& uid, std::vector<Rejection> rejected)
      : ResolutionError(Kind::NoAdmissibleInterpretation,
                        "no admissible interpretation for " + uid + " (" +
                            std::to_string(rejected.size()) +
                            " candidates rejected)"),
        rejected_(std::move(rejected)) {}

  const std::vector<Rejection>& rejected() const { return rejected_; }

 private:
  std::vector<Rejection> rejected_;
};

// --- assignments -------------------------------------------------------------

// Every map from the utterance's zeros into `prev_cf`, in lexicographic
// order of (zero surface position, candidate rank).
inline std::vector<Assignment> cartesian_assignments(const Utterance& u,
                                                     const CfList& prev_cf) {
  const auto zids = u.zero_ids();
  if (zids.empty()) return {Assignment{}};
  if (prev_cf.empty())
    throw ResolutionError(ResolutionError::Kind::NoAntecedentCandidates,
                          "no antecedent candidates for the zeros of " + u.uid);
  std::vector<Assignment> out;
  std::vector<std::size_t> pick(zids.size(), 0);
  while (true) {
    Assignment a;
    for (std::size_t i = 0; i < zids.size(); ++i)
      a.emplace(zids[i], prev_cf[pick[i]].entity);
    out.push_back(std::move(a));
    std::size_t i = zids.size();
    while (i > 0 && ++pick[i - 1] == prev_cf.size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// True if a zero denotes an entity some other slot of the same predicate
// already denotes.
inline bool is_contraindexed(const Utterance& u, const Assignment& assignment) {
  for (std::size_t i = 0; i < u.slots.size(); ++i) {
    if (!u.slots[i].is_zero()) continue;
    Entity e = realized_entity(u.slots[i], assignment);
    for (std::size_t j = 0; j < u.slots.size(); ++j)
      if (j != i && realized_entity(u.slots[j], assignment) == e) return true;
  }
  return false;
}

inline std::vector<Assignment> enumerate_assignments(const Utterance& u,
                                                     const CfList& prev_cf) {
  auto all = cartesian_assignments(u, prev_cf);
  std::erase_if(all, [&](const Assignment& a) { return is_contraindexed(u, a); });
  return all;
}

inline std::set<Entity> realized_entities(const Utterance& u,
                                          const Assignment& assignment) {
  std::set<Entity> out;
  for (const auto& slot : u.slots) out.insert(realized_entity(slot, assignment));
  return out;
}

// --- the centering constraints and rules --------------------------------------

inline Cb compute_cb(const Anchor& prev, const std::set<Entity>& realized) {
  for (const auto& entry : prev.cf)
    if (realized.count(entry.entity)) return Cb::established(entry.entity);
  return Cb::unestablished();
}

// Zeros are the only pronominal forms in scope.
inline bool check_rule1(const Utterance& u, const Assignment& assignment,
                        const CfList& prev_cf, const Cb& cb) {
  std::set<Entity> by_zero;
  for (const auto& slot : u.slots)
    if (slot.is_zero()) by_zero.insert(realized_entity(slot, assignment));
  bool antecedent_pronominalized =
      std::any_of(prev_cf.begin(), prev_cf.end(),
                  [&](const CfEntry& e) { return by_zero.count(e.entity) > 0; });
  if (!antecedent_pronominalized) return true;
  return cb.is_established() && by_zero.count(cb.entity()) > 0;
}

// An unestablished Cb on either side is a variable that unifies with the
// other, so it counts as "same Cb".
inline Transition classify_transition(const Cb& prev_cb, const Cb& new_cb,
                                      const CfList& new_cf) {
  bool same_cb = !prev_cb.is_established() || !new_cb.is_established() ||
                 prev_cb == new_cb;
  bool cb_is_cp = new_cb.is_established() && !new_cf.empty() &&
                  new_cf.front().entity == new_cb.entity();
  if (same_cb) return cb_is_cp ? Transition::Continue : Transition::Retain;
  return cb_is_cp ? Transition::Shift1 : Transition::Shift;
}

// --- candidates ---------------------------------------------------------------

namespace detail {

inline Anchor make_candidate(const Anchor& prev, const Utterance& u,
                             Assignment assignment,
                             std::optional<std::string> grant,
                             const std::optional<EmpathyLocus>& locus,
                             const LanguageConfig& config) {
  Anchor c;
  c.cb = compute_cb(prev, realized_entities(u, assignment));
  c.cf = rank_cf(u, assignment, locus, grant, config);
  c.transition = classify_transition(prev.cb, c.cb, c.cf);
  c.assignment = std::move(assignment);
  c.zero_topic_grant = std::move(grant);
  return c;
}

// Slot realizations in role order (SUBJ, OBJ2, OBJ, ADJ), surface order
// within a role.
inline std::vector<std::pair<const ArgumentSlot*, Entity>> role_ordered(
    const Utterance& u, const Assignment& assignment) {
  std::vector<std::pair<const ArgumentSlot*, Entity>> out;
  for (const auto& slot : u.slots)
    out.emplace_back(&slot, realized_entity(slot, assignment));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return role_rank(a.first->role) < role_rank(b.first->role);
  });
  return out;
}

inline std::vector<std::string> role_ordered_ids(const Utterance& u,
                                                 const Assignment& assignment) {
  std::vector<std::string> ids;
  for (const auto& [slot, e] : role_ordered(u, assignment)) ids.push_back(e.id());
  return ids;
}

inline std::vector<std::string> cf_ids(const CfList& cf) {
  std::vector<std::string> ids;
  for (const auto& e : cf) ids.push_back(e.entity.id());
  return ids;
}

}  // namespace detail

inline std::string gloss(const Utterance& u, const Assignment& assignment) {
  std::string out;
  for (const auto& [slot, e] : detail::role_ordered(u, assignment)) {
    if (!out.empty()) out += ' ';
    out += std::string(role_name(slot->role)) + "=" + e.id();
  }
  return out;
}

// Zero topic assignment. Applies only when the language allows it, no base
// candidate of this anchor continues, and no slot of `u` is overtly
// wa-marked. Every candidate with a zero denoting the predecessor's Cb gains
// a twin in which that zero is also the topic. The originals are kept.
inline std::vector<Anchor> zero_topic_variants(const std::vector<Anchor>& candidates,
                                               const Anchor& prev,
                                               const Utterance& u,
                                               const LanguageConfig& config) {
  std::vector<Anchor> out = candidates;
  if (!config.zero_topic_enabled || u.has_topic_marker() ||
      !prev.cb.is_established())
    return out;
  bool continues = std::any_of(candidates.begin(), candidates.end(), [](const Anchor& c) {
    return !c.zero_topic_grant && c.transition == Transition::Continue;
  });
  if (continues) return out;

  const auto locus = empathy_locus(u.predicate, config);
  for (const auto& c : candidates) {
    if (c.zero_topic_grant) continue;
    for (const auto& [zid, entity] : c.assignment) {
      if (!prev.cb.is(entity)) continue;
      out.push_back(detail::make_candidate(prev, u, c.assignment, zid, locus, config));
    }
  }
  return out;
}

namespace detail {

struct AnchorOutcome {
  std::vector<Interpretation> kept;
  std::vector<Rejection> rejected;
};

inline AnchorOutcome resolve_anchor(const Anchor& prev, std::size_t index,
                                    const Utterance& u,
                                    const LanguageConfig& config) {
  const auto locus = empathy_locus(u.predicate, config);
  AnchorOutcome out;
  auto interpret = [&](Anchor a) {
    std::string g = gloss(u, a.assignment);
    return Interpretation{std::move(a), index, std::move(g)};
  };

  std::vector<Anchor> admissible;
  for (auto& assignment : cartesian_assignments(u, prev.cf)) {
    bool contra = is_contraindexed(u, assignment);
    Anchor c = make_candidate(prev, u, std::move(assignment), std::nullopt, locus, config);
    if (contra) {
      out.rejected.push_back({interpret(std::move(c)), RejectReason::Contraindex});
    } else if (!check_rule1(u, c.assignment, prev.cf, c.cb)) {
      out.rejected.push_back({interpret(std::move(c)), RejectReason::Rule1});
    } else {
      admissible.push_back(std::move(c));
    }
  }
  admissible = zero_topic_variants(admissible, prev, u, config);
  if (admissible.empty()) return out;

  // An assignment scores its best transition over all of its Cf variants.
  std::map<Assignment, Transition> score;
  for (const auto& c : admissible) {
    auto [it, fresh] = score.emplace(c.assignment, *c.transition);
    if (!fresh && preferred_over(*c.transition, it->second)) it->second = *c.transition;
  }
  Transition best = score.begin()->second;
  for (const auto& [a, t] : score)
    if (preferred_over(t, best)) best = t;

  // A winning assignment keeps its plain reading; a zero-topic reading of it
  // survives only if it reaches the best transition itself.
  for (auto& c : admissible) {
    bool survives = score.at(c.assignment) == best &&
                    (!c.zero_topic_grant || c.transition == best);
    if (survives)
      out.kept.push_back(interpret(std::move(c)));
    else
      out.rejected.push_back({interpret(std::move(c)), RejectReason::Dominated});
  }
  return out;
}

// Deterministic presentation order: role-ordered assignment, then Cf order,
// then the better transition, ungranted before granted, lower source anchor.
inline auto order_key(const Utterance& u, const Interpretation& i) {
  const Anchor& a = i.anchor;
  return std::make_tuple(role_ordered_ids(u, a.assignment), cf_ids(a.cf),
                         -preference(a.transition.value_or(Transition::Shift)),
                         a.zero_topic_grant.has_value(),
                         a.zero_topic_grant.value_or(std::string()),
                         i.source_anchor);
}

// Interpretations with the same Cb, Cf order and assignment are one reading.
inline auto identity_key(const Anchor& a) {
  return std::make_tuple(a.cb, cf_ids(a.cf), a.assignment);
}

inline void sort_interpretations(const Utterance& u, std::vector<Interpretation>& v) {
  std::sort(v.begin(), v.end(), [&](const Interpretation& a, const Interpretation& b) {
    return order_key(u, a) < order_key(u, b);
  });
}

}  // namespace detail

inline Step resolve(const CenteringState& state, const Utterance& u,
                    const LanguageConfig& config) {
  ResolutionResult result;
  result.uid = u.uid;
  std::vector<Interpretation> kept;
  for (std::size_t i = 0; i < state.live_anchors.size(); ++i) {
    auto outcome = detail::resolve_anchor(state.live_anchors[i], i, u, config);
    for (auto& k : outcome.kept) kept.push_back(std::move(k));
    for (auto& r : outcome.rejected) result.rejected.push_back(std::move(r));
  }
  if (kept.empty()) throw NoInterpretationError(u.uid, std::move(result.rejected));

  // After sorting, the first of each identity class is the one to keep.
  detail::sort_interpretations(u, kept);
  std::set<decltype(detail::identity_key(kept.front().anchor))> seen;
  for (auto& k : kept)
    if (seen.insert(detail::identity_key(k.anchor)).second)
      result.preferred.push_back(std::move(k));

  Step step;
  step.state.utterance_index = state.utterance_index + 1;
  for (const auto& p : result.preferred) step.state.live_anchors.push_back(p.anchor);
  step.result = std::move(result);
  return step;
}

inline Anchor context_anchor(const DiscourseContext& context) {
  Anchor a;
  a.cb = Cb::established(context.cb);
  if (context.cf.empty()) {
    a.cf.push_back({context.cb, {}});
  } else {
    for (const auto& e : context.cf) a.cf.push_back({e, {}});
  }
  return a;
}

// Without context the first unit's Cb is the variable [?]; with context it is
// resolved against a virtual predecessor built from it.
inline Step establish_initial_state(const Utterance& u1,
                                    const std::optional<DiscourseContext>& context,
                                    const LanguageConfig& config) {
  if (context) {
    CenteringState virtual_state;
    virtual_state.live_anchors.push_back(context_anchor(*context));
    Step step = resolve(virtual_state, u1, config);
    step.state.utterance_index = 1;
    return step;
  }
  if (!u1.zero_ids().empty())
    throw ResolutionError(ResolutionError::Kind::UnresolvableInitialZero,
                          "unresolvable discourse-initial zero in " + u1.uid);
  Anchor a;
  a.cf = rank_cf(u1, {}, std::nullopt, config);
  Step step;
  step.result.uid = u1.uid;
  step.result.preferred.push_back({a, 0, gloss(u1, {})});
  step.state.live_anchors.push_back(std::move(a));
  step.state.utterance_index = 1;
  return step;
}

inline std::vector<ResolutionResult> resolve_discourse(const Discourse& d,
                                                       const LanguageConfig& config) {
  std::vector<ResolutionResult> results;
  if (d.units.empty()) return results;
  Step step = establish_initial_state(d.units.front(), d.context, config);
  results.push_back(std::move(step.result));
  CenteringState state = std::move(step.state);
  for (std::size_t i = 1; i < d.units.size(); ++i) {
    step = resolve(state, d.units[i], config);
    results.push_back(std::move(step.result));
    state = std::move(step.state);
  }
  return results;
}

}  // namespace zerocenter
