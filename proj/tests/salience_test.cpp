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

#include <gtest/gtest.h>

#include <sstream>

#include "support/builders.hpp"
#include "zerocenter/salience.hpp"

namespace zerocenter {
namespace {

using namespace zerocenter::testing;

const LanguageConfig kJa = japanese_config();

TEST(LanguageConfig, ShippedOrders) {
  EXPECT_EQ(kJa.status_order,
            (std::vector<Status>{Status::Topic, Status::Empathy, Status::Subj, Status::Obj2,
                                 Status::Obj, Status::Adj}));
  EXPECT_TRUE(kJa.zero_topic_enabled);
  EXPECT_EQ(kJa.empathy_lexicon.size(), 4u);
  LanguageConfig en = english_config();
  EXPECT_EQ(en.status_order,
            (std::vector<Status>{Status::Subj, Status::Obj2, Status::Obj, Status::Adj}));
  EXPECT_TRUE(en.empathy_lexicon.empty());
  EXPECT_FALSE(en.zero_topic_enabled);
  EXPECT_NO_THROW(kJa.validate());
  EXPECT_NO_THROW(en.validate());
}

TEST(LanguageConfig, ValidateRejectsBadOrders) {
  LanguageConfig c = english_config();
  c.status_order = {Status::Subj, Status::Obj2, Status::Obj, Status::Subj};
  EXPECT_THROW(c.validate(), ConfigError);
  c.status_order = {Status::Subj, Status::Obj};
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(EmpathyLocus, Kureru) {
  auto locus = empathy_locus(pred("kureru"), kJa);
  ASSERT_TRUE(locus);
  EXPECT_EQ(*locus, EmpathyLocus::from_rule(EmpathyRule::Obj2ElseObj));
}

TEST(EmpathyLocus, SuffixedKureru) {
  EXPECT_EQ(empathy_locus(pred("yonde", {"kureru"}), kJa),
            EmpathyLocus::from_rule(EmpathyRule::Obj2ElseObj));
}

TEST(EmpathyLocus, SuffixedIku) {
  EXPECT_EQ(empathy_locus(pred("tazunete", {"iku"}), kJa),
            EmpathyLocus::from_rule(EmpathyRule::Subj));
}

TEST(EmpathyLocus, NoEmpathyMorphology) {
  EXPECT_FALSE(empathy_locus(pred("setumeisita"), kJa));
}

TEST(EmpathyLocus, OutermostSuffixWins) {
  // yaru inside, kureru outside.
  EXPECT_EQ(empathy_locus(pred("yonde", {"yaru", "kureru"}), kJa),
            EmpathyLocus::from_rule(EmpathyRule::Obj2ElseObj));
  EXPECT_EQ(empathy_locus(pred("kureru", {"iku"}), kJa),
            EmpathyLocus::from_rule(EmpathyRule::Subj));
}

TEST(EmpathyLocus, ExplicitOverridesLexicon) {
  auto locus = empathy_locus(pred("kureru", {}, Role::Subj), kJa);
  ASSERT_TRUE(locus);
  EXPECT_EQ(locus->primary, Role::Subj);
  EXPECT_FALSE(locus->fallback);
}

TEST(EmpathyLocus, EnglishHasNoLexicon) {
  EXPECT_FALSE(empathy_locus(pred("kureru"), english_config()));
}

// "Taroo ga Hanako o tetudatte-kureta": no OBJ2, so the locus falls to OBJ.
TEST(SalienceStatuses, EmpathyFallsBackToObj) {
  Utterance u = utt("un1", pred("tetudatte", {"kureru"}),
                    {overt(Role::Subj, Marker::Ga, "TAROO"), overt(Role::Obj, Marker::O, "HANAKO")});
  auto locus = empathy_locus(u.predicate, kJa);
  EXPECT_EQ(salience_statuses(1, u, locus, std::nullopt, kJa),
            (StatusSet{Status::Obj, Status::Empathy}));
  EXPECT_EQ(salience_statuses(0, u, locus, std::nullopt, kJa), StatusSet{Status::Subj});
}

TEST(SalienceStatuses, KureruPrefersObj2) {
  Utterance u = utt("ex1", pred("kureru"),
                    {overt(Role::Subj, Marker::Wa, "HANAKO"), overt(Role::Obj2, Marker::Ni, "TAROO"),
                     overt(Role::Obj, Marker::O, "BOOK")});
  auto locus = empathy_locus(u.predicate, kJa);
  EXPECT_TRUE(salience_statuses(1, u, locus, std::nullopt, kJa).contains(Status::Empathy));
  EXPECT_FALSE(salience_statuses(2, u, locus, std::nullopt, kJa).contains(Status::Empathy));
}

TEST(SalienceStatuses, WaMarkedSubject) {
  Utterance u = utt("u", pred("hanasu"), {overt(Role::Subj, Marker::Wa, "TAROO")});
  EXPECT_EQ(salience_statuses(0, u, std::nullopt, std::nullopt, kJa),
            (StatusSet{Status::Subj, Status::Topic}));
}

TEST(SalienceStatuses, BareObject) {
  Utterance u = utt("u", pred("miru"), {overt(Role::Obj, Marker::O, "HON")});
  EXPECT_EQ(salience_statuses(0, u, std::nullopt, std::nullopt, kJa), StatusSet{Status::Obj});
}

TEST(SalienceStatuses, GrantedZeroIsTopic) {
  Utterance u = utt("u", pred("mituketa"),
                    {overt(Role::Subj, Marker::Ga, "HANAKO"), zero(Role::Obj, "z1")});
  EXPECT_EQ(salience_statuses(1, u, std::nullopt, std::string("z1"), kJa),
            (StatusSet{Status::Obj, Status::Topic}));
  EXPECT_EQ(salience_statuses(1, u, std::nullopt, std::string("z9"), kJa), StatusSet{Status::Obj});
}

TEST(RankCf, IntroduceU1) {
  Utterance u = utt("u1", pred("shookaisita"),
                    {overt(Role::Subj, Marker::Ga, "LYN"), overt(Role::Obj2, Marker::Ni, "MASAYO"),
                     overt(Role::Obj, Marker::O, "SHARON")});
  EXPECT_EQ(ids(rank_cf(u, {}, std::nullopt, kJa)),
            (std::vector<std::string>{"LYN", "MASAYO", "SHARON"}));
}

TEST(RankCf, EmpathyOutranksSubject) {
  Utterance u = utt("un1", pred("tetudatte", {"kureru"}),
                    {overt(Role::Subj, Marker::Ga, "TAROO"), overt(Role::Obj, Marker::O, "HANAKO")});
  CfList cf = rank_cf(u, {}, std::nullopt, kJa);
  EXPECT_EQ(ids(cf), (std::vector<std::string>{"HANAKO", "TAROO"}));
  EXPECT_TRUE(cf[0].statuses.contains(Status::Empathy));
}

TEST(RankCf, ZeroTopicGrant) {
  Utterance u = utt("un1", pred("mituketa"),
                    {overt(Role::Subj, Marker::Ga, "HANAKO"), zero(Role::Obj, "z1")});
  CfList cf = rank_cf(u, assign({{"z1", "TAROO"}}), std::string("z1"), kJa);
  ASSERT_EQ(ids(cf), (std::vector<std::string>{"TAROO", "HANAKO"}));
  EXPECT_EQ(cf[0].statuses, (StatusSet{Status::Topic, Status::Obj}));
  EXPECT_EQ(cf[1].statuses, StatusSet{Status::Subj});
  // Without the grant the subject leads.
  EXPECT_EQ(ids(rank_cf(u, assign({{"z1", "TAROO"}}), std::nullopt, kJa)),
            (std::vector<std::string>{"HANAKO", "TAROO"}));
}

TEST(RankCf, IncompleteAssignment) {
  Utterance u = utt("u", pred("miru"), {zero(Role::Subj, "z1")});
  try {
    rank_cf(u, {}, std::nullopt, kJa);
    FAIL() << "expected ResolutionError";
  } catch (const ResolutionError& e) {
    EXPECT_EQ(e.kind(), ResolutionError::Kind::IncompleteAssignment);
    EXPECT_NE(std::string(e.what()).find("incomplete assignment"), std::string::npos);
  }
}

TEST(RankCf, MergesMultiSlotEntityByHighestStatus) {
  // TAROO fills OBJ and a wa-marked ADJ slot: it appears once, ranked as topic.
  Utterance u = utt("u", pred("miru"),
                    {overt(Role::Subj, Marker::Ga, "HANAKO"), overt(Role::Obj, Marker::O, "TAROO"),
                     overt(Role::Adj, Marker::Wa, "TAROO")});
  CfList cf = rank_cf(u, {}, std::nullopt, kJa);
  ASSERT_EQ(ids(cf), (std::vector<std::string>{"TAROO", "HANAKO"}));
  EXPECT_EQ(cf[0].statuses, (StatusSet{Status::Obj, Status::Adj, Status::Topic}));
}

TEST(RankCf, TiesBreakBySurfaceOrder) {
  Utterance u = utt("u", pred("miru"),
                    {overt(Role::Adj, Marker::None, "B"), overt(Role::Adj, Marker::None, "A")});
  EXPECT_EQ(ids(rank_cf(u, {}, std::nullopt, kJa)), (std::vector<std::string>{"B", "A"}));
}

// With no topic or empathy in play the Japanese order reduces to the
// grammatical-role order, which is also the English order.
TEST(RankCf, DropThroughToRoleOrder) {
  const std::vector<std::vector<Role>> surfaces = {
      {Role::Obj, Role::Subj, Role::Obj2}, {Role::Obj2, Role::Obj, Role::Subj},
      {Role::Subj, Role::Obj}, {Role::Obj, Role::Obj2}, {Role::Adj, Role::Obj, Role::Subj}};
  for (const auto& roles : surfaces) {
    Utterance u;
    u.uid = "u";
    u.predicate = pred("miru");
    for (std::size_t i = 0; i < roles.size(); ++i)
      u.slots.push_back(overt(roles[i], Marker::None, "E" + std::to_string(i)));
    CfList ja = rank_cf(u, {}, std::nullopt, kJa);
    CfList en = rank_cf(u, {}, std::nullopt, english_config());
    EXPECT_EQ(ids(ja), ids(en));
    auto sorted = u.slots;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return role_rank(a.role) < role_rank(b.role);
    });
    std::vector<std::string> want;
    for (const auto& s : sorted) want.push_back(s.overt()->entity.id());
    EXPECT_EQ(ids(ja), want);
  }
}

TEST(RankCf, EnglishIgnoresTopicStatus) {
  Utterance u = utt("u", pred("miru"),
                    {overt(Role::Subj, Marker::Ga, "A"), overt(Role::Obj, Marker::Wa, "B")});
  EXPECT_EQ(ids(rank_cf(u, {}, std::nullopt, english_config())),
            (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(ids(rank_cf(u, {}, std::nullopt, kJa)), (std::vector<std::string>{"B", "A"}));
}

TEST(Utterance, WellFormedness) {
  EXPECT_FALSE(utt("u", pred("x"), {overt(Role::Adj, Marker::None, "A"),
                                    overt(Role::Adj, Marker::None, "B")})
                   .well_formedness_error());
  EXPECT_TRUE(utt("u", pred("x"), {zero(Role::Subj, "z"), zero(Role::Subj, "y")})
                  .well_formedness_error());
  EXPECT_TRUE(utt("u", pred("x"), {zero(Role::Subj, "z"), zero(Role::Obj, "z")})
                  .well_formedness_error());
  EXPECT_TRUE(utt("u", pred("x"), {overt(Role::Subj, Marker::Wa, "A"),
                                   overt(Role::Obj, Marker::Wa, "B")})
                  .well_formedness_error());
}

TEST(LexiconFile, ParsesEntriesAndComments) {
  std::istringstream in("# extra verbs\nmorau\tSUBJ\nkudasaru\tOBJ2_ELSE_OBJ  # honorific\n\n");
  auto lex = parse_empathy_lexicon(in);
  ASSERT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.at("morau"), EmpathyRule::Subj);
  EXPECT_EQ(lex.at("kudasaru"), EmpathyRule::Obj2ElseObj);
}

TEST(LexiconFile, RejectsUnknownRule) {
  std::istringstream in("morau\tOBJ\n");
  EXPECT_THROW(parse_empathy_lexicon(in), ConfigError);
}

TEST(LanguageConfigFile, ParsesJapaneseEquivalent) {
  std::istringstream in(
      "order TOPIC EMPATHY SUBJ OBJ2 OBJ ADJ\nzero_topic on\n"
      "empathy yaru SUBJ\nempathy iku SUBJ\nempathy kureru OBJ2_ELSE_OBJ\n"
      "empathy kuru OBJ2_ELSE_OBJ\n");
  EXPECT_EQ(parse_language_config(in), kJa);
}

TEST(LanguageConfigFile, Errors) {
  std::istringstream no_order("zero_topic on\n");
  EXPECT_THROW(parse_language_config(no_order), ConfigError);
  std::istringstream bad_status("order SUBJ OBJ2 OBJ FOCUS\n");
  EXPECT_THROW(parse_language_config(bad_status), ConfigError);
  std::istringstream missing_obj("order SUBJ OBJ2\n");
  EXPECT_THROW(parse_language_config(missing_obj), ConfigError);
  std::istringstream bad_flag("order SUBJ OBJ2 OBJ\nzero_topic maybe\n");
  EXPECT_THROW(parse_language_config(bad_flag), ConfigError);
}

}  // namespace
}  // namespace zerocenter
