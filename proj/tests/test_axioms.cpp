#include <set>

#include <gtest/gtest.h>

#include "hyalba/axioms.hpp"
#include "hyalba/semantics.hpp"
#include "hyalba/syntax.hpp"
#include "support/oracle.hpp"

using namespace hyalba;

TEST(Catalogue, IdsUniqueAndKnown) {
  std::set<std::string> ids;
  for (const auto& s : schema_catalogue()) {
    EXPECT_TRUE(ids.insert(s.id).second) << s.id;
    EXPECT_TRUE(is_known_justification(s.id));
    EXPECT_EQ(find_schema(s.id), &s);
  }
  for (const char* id : {"K", "Dual", "Ref", "Agree", "BG", "Trans", "Name", "DA", "NamesDisj", "NamesConj"}) {
    EXPECT_TRUE(ids.contains(id)) << id;
  }
  EXPECT_TRUE(is_known_justification("VarElim"));
  EXPECT_FALSE(is_known_justification("Magic"));
}

TEST(Catalogue, NamedInstancesValidByOracle) {
  for (const char* t : {"@'i 'i", "@'i []!x.@'i <>x", "@'i @'j p -> @'j p"}) {
    Formula f = parse(t);
    for (const auto& fr : oracle::frames(3)) ASSERT_TRUE(oracle::frame_valid(fr, f)) << t;
  }
}

TEST(Instantiate, RespectsCapAndXFreedom) {
  const Schema* name = find_schema("Name");
  ASSERT_NE(name, nullptr);
  auto inst = instantiate(*name, instance_pool(), 16);
  EXPECT_LE(inst.size(), 16U);
  EXPECT_FALSE(inst.empty());
}

TEST(CheckSchemas, AllValidOnTwoWorlds) {
  for (const auto& r : check_schemas(2)) {
    EXPECT_TRUE(r.failures.empty()) << r.id << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.instances, 0U) << r.id;
  }
}
