#include <catch2/catch_amalgamated.hpp>

#include "orbichi/config.hpp"
#include "test_helpers.hpp"

using namespace orbichi;
using namespace testutil;

TEST_CASE("presentation schema") {
  CHECK(parse_presentation(json::parse(R"({"kind":"trivial"})")).kind ==
        PresetKind::Trivial);
  GroupPresentation za =
      parse_presentation(json::parse(R"({"kind":"free_abelian","rank":2})"));
  CHECK(za.kind == PresetKind::FreeAbelian);
  CHECK(za.generator_count == 2);
  CHECK(za.relators.size() == 1);
  GroupPresentation f =
      parse_presentation(json::parse(R"({"kind":"free","rank":3})"));
  CHECK(f.relators.empty());
  GroupPresentation p = parse_presentation(
      json::parse(R"({"kind":"presented","rank":2,"relators":[[1,2,-1,-2]]})"));
  CHECK(p.kind == PresetKind::Presented);
  CHECK_THROWS_AS(parse_presentation(json::parse(R"({"kind":"nope"})")),
                  InvalidInput);
}

TEST_CASE("group schema") {
  CHECK(parse_group(json::parse(R"({"kind":"cyclic","n":4})")).group.order() ==
        4);
  LoadedGroup s3 = parse_group(json::parse(R"({"kind":"symmetric","n":3})"));
  CHECK(s3.group.order() == 6);
  CHECK(s3.element_perms.size() == 6);
  LoadedGroup perm = parse_group(
      json::parse(R"({"kind":"permutation","generators":[[1,0,2],[1,2,0]]})"));
  CHECK(perm.group.order() == 6);
  LoadedGroup table =
      parse_group(json::parse(R"({"kind":"table","mul":[[0,1],[1,0]]})"));
  CHECK(table.group.order() == 2);
  LoadedGroup prod = parse_group(json::parse(
      R"({"kind":"product","factors":[{"kind":"cyclic","n":2},{"kind":"cyclic","n":3}]})"));
  CHECK(prod.group.order() == 6);
  LoadedGroup wr = parse_group(json::parse(
      R"({"kind":"wreath","base":{"kind":"cyclic","n":2},"copies":2})"));
  CHECK(wr.group.order() == 8);
  CHECK(conjugacy_classes(wr.group).size() == 5);
}

TEST_CASE("descriptor schema") {
  LoadedGroup z2 = parse_group(json::parse(R"({"kind":"cyclic","n":2})"));

  SECTION("point") {
    GSpaceDescriptor d =
        parse_descriptor(json::parse(R"({"kind":"point"})"), z2);
    CHECK(d.chi_whole() == 1);
  }

  SECTION("fixed chi table with element indices") {
    auto j = json::parse(
        R"({"kind":"fixed_chi_table","entries":[
             {"generators":[],"chi":0},{"generators":[1],"chi":2}]})");
    GSpaceDescriptor d = parse_descriptor(j, z2);
    CHECK(d.chi_whole() == 0);
  }

  SECTION("fixed chi table with permutation keys") {
    LoadedGroup s3 = parse_group(json::parse(R"({"kind":"symmetric","n":3})"));
    auto j = json::parse(
        R"({"kind":"fixed_chi_table","entries":[
             {"generators":[],"chi":3},
             {"generators":[[1,0,2]],"chi":1},
             {"generators":[[1,2,0]],"chi":0},
             {"generators":[[1,0,2],[1,2,0]],"chi":0}]})");
    GSpaceDescriptor d = parse_descriptor(j, s3);
    CHECK(d.chi_whole() == 3);
    // Equal to the literal natural-action marks.
    GSpaceDescriptor oracle =
        descriptor_from_gset(natural_gset(symmetric_group(3)),
                             s3.group);
    for (int c = 0; c < d.class_count(); ++c)
      CHECK(d.class_chi(c) == oracle.chi_subgroup(d.class_rep(c)));
  }

  SECTION("finite gset") {
    auto j = json::parse(
        R"({"kind":"finite_gset","size":2,"action":[[0,1],[1,0]]})");
    GSpaceDescriptor d = parse_descriptor(j, z2);
    CHECK(d.chi_whole() == 2);
  }

  SECTION("permutation keys need a permutation-realized group") {
    auto j = json::parse(
        R"({"kind":"fixed_chi_table","entries":[
             {"generators":[[1,0]],"chi":1}]})");
    CHECK_THROWS_AS(parse_descriptor(j, z2), InvalidInput);
  }
}

TEST_CASE("run config") {
  auto j = json::parse(R"({
    "gamma": {"kind":"free_abelian","rank":1},
    "group": {"kind":"cyclic","n":2},
    "space": {"kind":"point"},
    "invariant": "euler_satake",
    "truncation": 5
  })");
  RunConfig cfg = parse_run_config(j);
  CHECK(cfg.truncation == 5);
  CHECK(cfg.invariant == Invariant::EulerSatake);
  CHECK(cfg.gamma.kind == PresetKind::FreeAbelian);

  SECTION("truncation bounds") {
    j["truncation"] = 0;
    CHECK_THROWS_AS(parse_run_config(j), InvalidInput);
    j["truncation"] = 99;
    CHECK_THROWS_AS(parse_run_config(j), InvalidInput);
  }

  SECTION("caps overrides validate") {
    j["truncation"] = 3;
    j["caps"] = {{"order", 100}, {"threads", 2}};
    RunConfig c2 = parse_run_config(j);
    CHECK(c2.caps.order == 100);
    CHECK(c2.caps.threads == 2);
    j["caps"] = {{"order", 0}};
    CHECK_THROWS_AS(parse_run_config(j), InvalidInput);
  }
}

TEST_CASE("report serialization round trip") {
  FiniteGroup z2 = cyclic_group(2);
  VerificationReport rep =
      verify(TheoremTag::EulerSatake, Invariant::EulerSatake,
             free_abelian_presentation(1), point_descriptor(z2), 4);
  json j = report_to_json(rep);
  CHECK(j["verdict"] == "pass");
  CHECK(j["theorem"] == "thm-es");
  CHECK(j["T"] == 4);
  auto lhs = j["lhs"].get<std::vector<std::string>>();
  REQUIRE(lhs.size() == 5);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    CHECK(rational_from_string(lhs[i]) == rep.lhs[i]);
  CHECK(!j.contains("mismatch"));
  CHECK(j["stats"].contains("homs_enumerated"));
  CHECK(j["stats"].contains("wall_ms"));
}

TEST_CASE("rational strings") {
  CHECK(rational_to_string(Rational(3)) == "3");
  CHECK(rational_to_string(Rational(1, 2)) == "1/2");
  CHECK(rational_to_string(Rational(-7, 3)) == "-7/3");
  CHECK(rational_from_string("5") == 5);
  CHECK(rational_from_string("-9/6") == Rational(-3, 2));
  CHECK_THROWS_AS(rational_from_string("x"), InvalidInput);
}

TEST_CASE("abstract sector data schema") {
  auto j = json::parse(R"({
    "entries": [
      {"index":1,"label":"whole","count":1,"value":"1/2",
       "rho_terms":[{"orbit_size":1,"value":"1/2","degree":1}]},
      {"index":2,"label":"half","count":1,"value":"1/2"}
    ]})");
  AbstractSectorData data = parse_abstract_sector_data(j);
  CHECK(data.by_index.at(1).size() == 1);
  CHECK(data.by_index.at(1)[0].rho_terms.size() == 1);
  CHECK(data.by_index.at(2)[0].value == Rational(1, 2));

  auto dup = json::parse(R"({
    "entries": [
      {"index":1,"label":"a","count":1,"value":"1"},
      {"index":1,"label":"a","count":1,"value":"2"}
    ]})");
  CHECK_THROWS_AS(parse_abstract_sector_data(dup), InvalidInput);
}
