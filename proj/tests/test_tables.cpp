#include <set>

#include "doctest.h"
#include "klein/tables.hpp"

#include <cstdio>
#include <fstream>

using namespace klein;

namespace {

const Fixture& fixture(int t) {
  static std::map<int, Fixture> cache;
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, load_fixture(t, default_fixture_dir())).first;
  return it->second;
}

std::string write_temp(const std::string& body) {
  static int n = 0;
  std::string path = "klein_fixture_test_" + std::to_string(n++) + ".json";
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("fixtures load with provenance on every row") {
  CHECK(fixture(1).rows.size() == 12);
  CHECK(fixture(3).rows.size() == 13);
  CHECK(fixture(4).rows.size() == 24);
  for (int t : {1, 3, 4})
    for (const auto& r : fixture(t).rows) CHECK(r.provenance.rfind("Table " + std::to_string(t), 0) == 0);
  CHECK(fixture(4).berger_counts.at("e6") == 23);
}

TEST_CASE("malformed fixtures are rejected") {
  CHECK_THROWS_AS(load_fixture("does/not/exist.json"), FixtureError);
  auto p = write_temp("{\"table\": 4, \"rows\": [{\"family\": \"e6\", \"id\": \"x\"}]}");
  CHECK_THROWS_AS(load_fixture(p), FixtureError);
  p = write_temp(R"J({"table": 4, "rows": [{"family": "e6", "id": "x", "generators": ["exp(H2)", "bogus"],
      "fixed": "e6", "involution_type": ["sigma1","sigma1","sigma1"], "speciality": "V", "provenance": "t"}]})J");
  CHECK_THROWS_AS(load_fixture(p), FixtureError);
  p = write_temp(R"J({"table": 4, "rows": [{"family": "e6", "id": "x", "generators": ["exp(H2)", "exp(H4)"],
      "fixed": "su(3)+blah", "involution_type": ["sigma1","sigma1","sigma1"], "speciality": "V", "provenance": "t"}]})J");
  CHECK_THROWS_AS(load_fixture(p), FixtureError);
  p = write_temp("{\"table\": 9, \"rows\": []}");
  CHECK_THROWS_AS(load_fixture(p), FixtureError);
  p = write_temp("not json");
  CHECK_THROWS_AS(load_fixture(p), FixtureError);
}

TEST_CASE("verify_table: Table 1 and Table 4") {
  auto r1 = verify_table(fixture(1));
  CHECK(r1.total() == 12);
  CHECK(r1.passed == 12);
  CHECK(r1.ok());
  VerifyOptions e6;
  e6.family = "e6";
  auto r4 = verify_table(fixture(4), e6);
  CHECK(r4.total() == 8);
  CHECK(r4.passed == 8);
  auto all4 = verify_table(fixture(4));
  CHECK(all4.passed == 24);
  CHECK(all4.passed + all4.mismatched + all4.errors + all4.skipped == all4.total());
}

TEST_CASE("verify_table: Table 3 enumeration at bound 4") {
  VerifyOptions o;
  o.family = "su";
  o.bound = 4;
  auto rep = verify_table(fixture(3), o);
  std::set<std::string> ids;
  for (const auto& r : rep.rows) ids.insert(r.id);
  CHECK(ids.count("su.1[1,2]"));
  CHECK(ids.count("su.4[1,1,1,1]"));
  for (const auto& r : rep.rows) {
    CAPTURE(r.id);
    if (r.id == "su.2[1]") CHECK(r.status == RowStatus::Skipped);
    else CHECK(r.status == RowStatus::Pass);
  }
  CHECK(rep.ok());
}

TEST_CASE("verify_table: the so(8) speciality dispute is reported, not hidden") {
  VerifyOptions o;
  o.family = "so";
  o.bound = 4;
  auto rep = verify_table(fixture(3), o);
  CHECK_FALSE(rep.ok());
  CHECK(rep.mismatched == 1);
  for (const auto& r : rep.rows)
    if (r.status == RowStatus::Mismatch) {
      CHECK(r.id == "so.3[1,3]");
      REQUIRE(r.problems.size() == 1);
      CHECK(r.problems[0].rfind("speciality", 0) == 0);
      CHECK(r.record.fixed_type == "A2+T2");
    }
}

TEST_CASE("emit: schema, determinism, round trip") {
  auto rep4 = verify_table(fixture(4));
  auto recs = records(rep4);
  auto md = emit_markdown(recs);
  int data_rows = 0;
  std::size_t pos = 0;
  while ((pos = md.find("\n| ", pos)) != std::string::npos) {
    ++data_rows;
    ++pos;
  }
  CHECK(data_rows == 24);  // the header opens the document, the separator starts with |-
  CHECK(md == emit_markdown(records(verify_table(fixture(4)))));

  auto rep1 = verify_table(fixture(1));
  auto json1 = emit_json(records(rep1));
  auto back = parse_records_json(json1);
  CHECK(back.size() == 12);
  CHECK(back == records(rep1));
  CHECK(emit_json(back) == json1);
  CHECK(parse_records_json(emit_json(recs)) == recs);
}

TEST_CASE("job count and seed do not change the report") {
  VerifyOptions a, b;
  a.bound = b.bound = 5;
  a.family = b.family = "sp";
  b.jobs = 4;
  auto ra = verify_table(fixture(3), a), rb = verify_table(fixture(3), b);
  CHECK(ra.text() == rb.text());
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    VerifyOptions s;
    s.seed = seed;
    auto r = verify_table(fixture(4), s);
    CHECK(r.text() == verify_table(fixture(4)).text());
  }
}
