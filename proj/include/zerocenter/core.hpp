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

// Domain vocabulary shared by every part of the centering engine: discourse
// entities, grammatical roles, salience statuses, case markers, transitions
// and the backward-looking center.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace zerocenter {

// A semantic individual under discussion. Identity is the symbol alone.
class Entity {
 public:
  Entity() = default;
  explicit Entity(std::string id) : id_(std::move(id)) {}

  const std::string& id() const { return id_; }

  friend bool operator==(const Entity&, const Entity&) = default;
  friend auto operator<=>(const Entity&, const Entity&) = default;

 private:
  std::string id_;
};

inline std::ostream& operator<<(std::ostream& os, const Entity& e) {
  return os << e.id();
}

// Grammatical roles, declared in ranking order (SUBJ > OBJ2 > OBJ > ADJ).
enum class Role : std::uint8_t { Subj, Obj2, Obj, Adj };

inline constexpr std::array<Role, 4> kAllRoles = {Role::Subj, Role::Obj2,
                                                  Role::Obj, Role::Adj};

enum class Status : std::uint8_t { Topic, Empathy, Subj, Obj2, Obj, Adj };

inline constexpr std::array<Status, 6> kAllStatuses = {
    Status::Topic, Status::Empathy, Status::Subj,
    Status::Obj2,  Status::Obj,     Status::Adj};

enum class Marker : std::uint8_t { Wa, Ga, O, Ni, None };

enum class Transition : std::uint8_t { Continue, Retain, Shift1, Shift };

inline constexpr std::array<Transition, 4> kAllTransitions = {
    Transition::Continue, Transition::Retain, Transition::Shift1,
    Transition::Shift};

// Every role is also a salience status of the same name.
constexpr Status status_of(Role r) {
  switch (r) {
    case Role::Subj: return Status::Subj;
    case Role::Obj2: return Status::Obj2;
    case Role::Obj: return Status::Obj;
    case Role::Adj: return Status::Adj;
  }
  return Status::Adj;
}

constexpr int role_rank(Role r) { return static_cast<int>(r); }

namespace detail {

constexpr int preference(Transition t) {
  switch (t) {
    case Transition::Continue: return 3;
    case Transition::Retain: return 2;
    case Transition::Shift1: return 1;
    case Transition::Shift: return 0;
  }
  return 0;
}

}  // namespace detail

// Preference comparison: `greater` means `a` is the more coherent transition.
constexpr std::strong_ordering compare_transitions(Transition a,
                                                   Transition b) {
  return detail::preference(a) <=> detail::preference(b);
}

constexpr bool preferred_over(Transition a, Transition b) {
  return compare_transitions(a, b) == std::strong_ordering::greater;
}

// A set of salience statuses. Small enough to live in one byte.
class StatusSet {
 public:
  constexpr StatusSet() = default;
  constexpr StatusSet(std::initializer_list<Status> statuses) {
    for (Status s : statuses) insert(s);
  }

  constexpr void insert(Status s) { bits_ |= bit(s); }
  constexpr bool contains(Status s) const { return (bits_ & bit(s)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr StatusSet& operator|=(StatusSet other) {
    bits_ |= other.bits_;
    return *this;
  }

  friend constexpr bool operator==(StatusSet, StatusSet) = default;

 private:
  static constexpr std::uint8_t bit(Status s) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(s));
  }
  std::uint8_t bits_ = 0;
};

// Backward-looking center: an established entity, or the variable "[?]" of
// an utterance whose center has not been fixed yet.
class Cb {
 public:
  Cb() = default;

  static Cb unestablished() { return Cb(); }
  static Cb established(Entity e) {
    Cb cb;
    cb.entity_ = std::move(e);
    return cb;
  }

  bool is_established() const { return entity_.has_value(); }
  const Entity& entity() const { return entity_.value(); }
  bool is(const Entity& e) const { return entity_ && *entity_ == e; }

  std::string str() const { return entity_ ? entity_->id() : "?"; }

  friend bool operator==(const Cb&, const Cb&) = default;
  friend auto operator<=>(const Cb&, const Cb&) = default;

 private:
  std::optional<Entity> entity_;
};

// --- token names -----------------------------------------------------------

constexpr std::string_view role_name(Role r) {
  switch (r) {
    case Role::Subj: return "SUBJ";
    case Role::Obj2: return "OBJ2";
    case Role::Obj: return "OBJ";
    case Role::Adj: return "ADJ";
  }
  return "?";
}

constexpr std::string_view status_name(Status s) {
  switch (s) {
    case Status::Topic: return "TOPIC";
    case Status::Empathy: return "EMPATHY";
    case Status::Subj: return "SUBJ";
    case Status::Obj2: return "OBJ2";
    case Status::Obj: return "OBJ";
    case Status::Adj: return "ADJ";
  }
  return "?";
}

constexpr std::string_view marker_name(Marker m) {
  switch (m) {
    case Marker::Wa: return "wa";
    case Marker::Ga: return "ga";
    case Marker::O: return "o";
    case Marker::Ni: return "ni";
    case Marker::None: return "-";
  }
  return "?";
}

constexpr std::string_view transition_name(Transition t) {
  switch (t) {
    case Transition::Continue: return "CONTINUE";
    case Transition::Retain: return "RETAIN";
    case Transition::Shift1: return "SHIFT_1";
    case Transition::Shift: return "SHIFT";
  }
  return "?";
}

inline std::optional<Role> parse_role(std::string_view s) {
  for (Role r : kAllRoles)
    if (role_name(r) == s) return r;
  return std::nullopt;
}

inline std::optional<Status> parse_status(std::string_view s) {
  for (Status st : kAllStatuses)
    if (status_name(st) == s) return st;
  return std::nullopt;
}

inline std::optional<Marker> parse_marker(std::string_view s) {
  for (Marker m : {Marker::Wa, Marker::Ga, Marker::O, Marker::Ni,
                   Marker::None})
    if (marker_name(m) == s) return m;
  return std::nullopt;
}

inline std::optional<Transition> parse_transition(std::string_view s) {
  for (Transition t : kAllTransitions)
    if (transition_name(t) == s) return t;
  return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, Role r) {
  return os << role_name(r);
}
inline std::ostream& operator<<(std::ostream& os, Status s) {
  return os << status_name(s);
}
inline std::ostream& operator<<(std::ostream& os, Transition t) {
  return os << transition_name(t);
}

}  // namespace zerocenter
