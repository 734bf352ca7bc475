#include "doctest.h"

#include "cdecomp/constructions.hpp"
#include "cdecomp/error.hpp"
#include "report.hpp"

using namespace cdecomp;
using namespace cdecomp::tools;
using nlohmann::json;

namespace
{

AnalysisInput input_of(Constructed const &c)
{
  AnalysisInput in;
  in.name = c.name;
  in.group = c.group;
  in.cells = c.cells;
  if (c.decomposition && !c.cells)
    in.decompositions.push_back(*c.decomposition);
  return in;
}

std::vector<std::uint64_t> minimal_orders(json const &r)
{
  std::vector<std::uint64_t> v;
  for (auto const &m : r["profile"]["minimal_normals"])
    v.push_back(m["order"].get<std::uint64_t>());
  return v;
}

} // namespace

TEST_CASE("S3 wr S2 with its natural decomposition")
{
  auto c = construct("wreath", {{"base", "S3"}, {"top", "S2"}});
  auto r = analyze(input_of(c));
  CHECK(r["schema"] == 1);
  CHECK(r["group_summary"]["degree"] == 9);
  CHECK(r["group_summary"]["order"] == 72);
  REQUIRE(r["decompositions"].size() == 1);
  auto const &d = r["decompositions"][0];
  CHECK(d["invariant"] == true);
  CHECK(d["transitive_on"] == true);
  CHECK(!d["normal"].is_null());
  CHECK(d["blowup"] == true);
  for (auto const &comp : d["components"]) {
    CHECK(comp["degree"] == 3);
    CHECK(comp["order"] == 6);
    CHECK(comp["qp_type"]["type"] == "HA");
  }
  CHECK(format_report(r).find("blow-up yes") != std::string::npos);
}

TEST_CASE("search on A5 of degree 5 finds nothing")
{
  AnalysisInput in;
  in.group = alternating_group(5);
  AnalysisOptions opts;
  opts.search = true;
  auto r = analyze(in, opts);
  CHECK(r["decompositions"].empty());
  CHECK(r["qp_type"]["type"] == "As");
  CHECK(r["qp_type"]["primitive"] == "AS");
}

TEST_CASE("the C3 wr D8 example report")
{
  auto r = analyze(input_of(construct("example", {{"name", "c3d8"}})));
  CHECK(r["group_summary"]["order"] == 648);
  CHECK(minimal_orders(r) == std::vector<std::uint64_t>{3, 3, 9});
  CHECK(r["profile"]["quasiprimitive"] == false);
  CHECK(r["qp_type"].is_null());
  auto const &d = r["decompositions"][0];
  CHECK(d["invariant"] == true);
  // The base C3^4 witnesses the blow-up even though G is not quasiprimitive.
  CHECK(d["blowup"] == true);
  CHECK(d["normal"]["witness_order"] == 81);
  CHECK(d["trichotomy"]["case"] == "BLOWUP");
}

TEST_CASE("invariance is recomputed, not assumed")
{
  AnalysisInput in;
  in.group = PermGroup(4, {Perm::from_cycles(4, {{0, 1}})});
  in.decompositions.push_back(validate({Partition(4, {{0, 1}, {2, 3}}), Partition(4, {{0, 2}, {1, 3}})}));
  auto r = analyze(in);
  CHECK(r["group_summary"]["transitive"] == false);
  CHECK(r["decompositions"][0]["invariant"] == false);
}

TEST_CASE("reports round-trip to identical verdicts")
{
  std::vector<Constructed> cases = {
      construct("wreath", {{"base", "S3"}, {"top", "S2"}}),
      construct("wreath", {{"base", "A5"}, {"top", "S2"}}),
      construct("example", {{"name", "c3d8"}}),
      construct("twisted", {}),
  };
  for (auto const &c : cases) {
    CAPTURE(c.name);
    auto r = analyze(input_of(c));
    auto again = analyze(input_from_report(json::parse(r.dump())));
    CHECK(verdicts(again) == verdicts(r));
    CHECK(verdicts(analyze(input_of(c))) == verdicts(r));
  }
}

TEST_CASE("twisted wreath report is written at cell scale")
{
  auto r = analyze(input_of(construct("twisted", {})));
  CHECK(r["group_summary"]["degree"] == 216000);
  CHECK(r["input"].contains("cell_generators"));
  auto const &d = r["decompositions"][0];
  CHECK(d["product"]["cells"] == 60);
  CHECK(d["product"]["index"] == 3);
  CHECK(!d["normal"].is_null());
  CHECK(d["blowup"] == false);
  CHECK(d["components"][0]["qp_type"].is_null());
  CHECK(r["qp_type"]["type"] == "Tw");
}

TEST_CASE("malformed reports are parse errors")
{
  auto parse_code = [](json const &j) {
    try {
      input_from_report(j);
    } catch (Error const &e) {
      return e.code();
    }
    return ErrorCode::Precondition;
  };
  CHECK(parse_code(json::object()) == ErrorCode::ParseError);
  CHECK(parse_code(json{{"schema", 2}}) == ErrorCode::ParseError);
  auto r = analyze(input_of(construct("wreath", {{"base", "S3"}, {"top", "S2"}})));
  r["input"]["generators"][0] = "(0 1";
  CHECK(parse_code(r) == ErrorCode::ParseError);
}
