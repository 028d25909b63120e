#include "catalg/enumeration.hpp"
#include "catalg/report.hpp"
#include "doctest.h"

using namespace catalg;

TEST_SUITE("report") {
  TEST_CASE("big integers switch to strings past 64 bits") {
    CHECK(bigint_to_json(BigInt(42)) == nlohmann::json(42));
    CHECK(bigint_to_json(BigInt(-7)) == nlohmann::json(-7));
    const BigInt big("123456789012345678901234567890");
    CHECK(bigint_to_json(big) == nlohmann::json("123456789012345678901234567890"));
    CHECK(bigint_from_json(bigint_to_json(big)) == big);
    CHECK(bigint_from_json(nlohmann::json(5)) == 5);
    CHECK_THROWS_AS(bigint_from_json(nlohmann::json(1.5)), std::invalid_argument);
  }

  TEST_CASE("invariants report examples") {
    const auto pc3 = invariants_report(Family::PC, 3);
    CHECK(pc3.loewy_length == 4);
    CHECK(pc3.block_count == 2);
    CHECK(pc3.quiver_arrows.size() == 8);
    CHECK(pc3.category == "EC_3");

    const auto po4 = invariants_report(Family::PO, 4);
    CHECK(po4.loewy_length == 4);
    CHECK(po4.block_count == 2);
    CHECK(po4.category == "SEO_4");
    CHECK(po4.cartan_objects == std::vector<std::string>{"[0]", "[1]", "[2]", "[3]", "[4]"});
    CHECK(po4.radical_dimensions.front() == 192);
    CHECK(po4.radical_dimensions[1] == dim_rad_po(4, 1));

    const auto po0 = invariants_report(Family::PO, 0);
    CHECK(po0.block_count == 1);
    CHECK(po0.loewy_length == 1);
  }

  TEST_CASE("crosschecks pass") {
    for (auto [f, n] : {std::pair{Family::PC, 4}, std::pair{Family::PF, 4}, std::pair{Family::PO, 6}}) {
      const auto r = crosscheck_report(f, n);
      CHECK(r.passed);
      CHECK(r.checks.size() >= 6);
      for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
      }
    }
    const auto po = crosscheck_report(Family::PO, 6);
    bool pascal = false;
    for (const auto& c : po.checks) pascal = pascal || (c.name == "cartan_closed_vs_counted" && c.pass);
    CHECK(pascal);
  }

  TEST_CASE("presentation reports pass") {
    for (auto [f, n] : {std::pair{Family::PO, 5}, std::pair{Family::PC, 4}, std::pair{Family::PF, 4}}) {
      const auto r = presentation_report(f, n);
      REQUIRE(r.presentation.has_value());
      CHECK(r.presentation->passed);
      CHECK(r.passed);
      CHECK(r.presentation->rejected.empty());
      for (const auto& h : r.presentation->hom_pairs) CHECK(h.classes == h.hom_size);
    }
  }

  TEST_CASE("JSON round-trips losslessly") {
    ReportOptions with_homs;
    with_homs.with_homs = true;
    for (auto f : {Family::PO, Family::PF, Family::PC}) {
      for (const auto& r : {invariants_report(f, 3, with_homs), crosscheck_report(f, 3), presentation_report(f, 3)}) {
        const auto j = to_json(r);
        CHECK(j.at("schema") == "catalg/1");
        const auto back = report_from_json(j);
        CHECK(back == r);
        CHECK(to_json(back).dump() == j.dump());
        CHECK(report_from_json(nlohmann::json::parse(j.dump(2))) == r);
      }
    }
  }

  TEST_CASE("JSON output is deterministic and sorted") {
    const auto a = to_json(presentation_report(Family::PF, 3)).dump(2);
    const auto b = to_json(presentation_report(Family::PF, 3)).dump(2);
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    std::string prev;
    for (const auto& [k, v] : j.items()) {
      CHECK(prev < k);
      prev = k;
    }
  }

  TEST_CASE("malformed JSON is rejected") {
    auto j = to_json(invariants_report(Family::PC, 2));
    auto wrong_schema = j;
    wrong_schema["schema"] = "catalg/0";
    CHECK_THROWS_AS(report_from_json(wrong_schema), std::invalid_argument);
    auto missing = j;
    missing.erase("cartan");
    CHECK_THROWS_AS(report_from_json(missing), std::invalid_argument);
    auto inconsistent = j;
    inconsistent["quiver"]["arrow_count"] = 99;
    CHECK_THROWS_AS(report_from_json(inconsistent), std::invalid_argument);
  }

  TEST_CASE("CSV renderings") {
    const auto inv = to_csv(invariants_report(Family::PC, 2));
    CHECK(inv.rfind("target\\source,{},{1},{2},\"{1,2}\"\n", 0) == 0);
    CHECK(inv.find("\"{1,2}\",0,0,0,1\n") != std::string::npos);
    const auto cc = to_csv(crosscheck_report(Family::PF, 2));
    CHECK(cc.rfind("name,pass,detail\n", 0) == 0);
    const auto vp = to_csv(presentation_report(Family::PO, 3));
    CHECK(vp.rfind("source,target,paths,classes,hom_size,ok\n", 0) == 0);
    CHECK(vp.find("[3],[1],2,1,1,true") != std::string::npos);
  }

  TEST_CASE("text rendering carries the certificate") {
    const auto t = to_text(presentation_report(Family::PC, 3));
    CHECK(t.find("presentation certificate") != std::string::npos);
    CHECK(t.find("generators: 8") != std::string::npos);
    CHECK(t.find("relations: 2") != std::string::npos);
    CHECK(t.find("result: pass") != std::string::npos);
  }

  TEST_CASE("category serialization") {
    const auto cat = build_category(CategoryKind::EF, 2);
    const auto j = category_to_json(cat);
    CHECK(j.at("kind") == "EF");
    CHECK(j.at("objects").size() == 4);
    std::size_t maps = 0;
    for (const auto& h : j.at("homs")) maps += h.at("maps").size();
    CHECK(maps == cat.morphism_count());
    CHECK(object_label(build_skeleton_seo(2), 2) == "[2]");
  }
}
