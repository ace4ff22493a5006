#include <gtest/gtest.h>

#include "r2k/config.hpp"
#include "r2k/error.hpp"
#include "r2k/report_json.hpp"
#include "r2k/suites.hpp"

using namespace r2k;

TEST(Report, EmptyReportJson) {
  CheckReport r;
  r.meta = Algebra(GammaEmbedding::integers()).meta(4);
  EXPECT_EQ(report_to_json(r).dump(), R"({"meta":{"rank":1,"generators":["1"],"window":4},"checks":[]})");
  EXPECT_TRUE(r.passed());
}

TEST(Report, FailingRecordCarriesWitness) {
  CaseTally t;
  t.pass();
  t.fail(Witness{"(L(1), L(-1), L(0))", "L(0)", "0"});
  CheckReport r;
  t.emit(r, "structure.jacobi", "N=1");
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_FALSE(r.passed());
  const Json j = report_to_json(r);
  EXPECT_EQ(j["checks"][0]["status"], "fail");
  EXPECT_EQ(j["checks"][0]["cases"], 2);
  EXPECT_EQ(j["checks"][0]["failures"], 1);
  EXPECT_FALSE(j["checks"][0].contains("witness"));
  EXPECT_EQ(j["checks"][1]["witness"]["lhs"], "L(0)");
  EXPECT_EQ(j["checks"][1]["witness"]["rhs"], "0");
  EXPECT_EQ(j["checks"][1]["witness"]["inputs"], "(L(1), L(-1), L(0))");
}

TEST(Report, WitnessCap) {
  CaseTally t;
  for (int i = 0; i < 20; ++i) t.fail(Witness{std::to_string(i), "a", "b"});
  CheckReport r;
  t.emit(r, "x", "", 3);
  EXPECT_EQ(r.records.size(), 4u);
  EXPECT_EQ(r.records[0].failures, 20u);
}

TEST(Report, InfoNeverFails) {
  CheckReport r;
  CheckRecord info;
  info.id = "printed.compose.oracle";
  info.status = CheckStatus::Info;
  info.failures = 5;
  r.add(info);
  EXPECT_TRUE(r.passed());
}

TEST(Report, TextFormat) {
  CheckReport r;
  r.meta = Algebra(GammaEmbedding::integers()).meta(2);
  CaseTally t;
  t.pass();
  t.emit(r, "structure.grade", "N=2");
  EXPECT_EQ(emit_report(r, "text"),
            "rank 1, generators [1], window 2\nPASS structure.grade [1 cases, 0 failures] N=2\noverall: pass\n");
  EXPECT_THROW(emit_report(r, "xml"), Error);
}

TEST(Report, ParallelTallyIsScheduleIndependent) {
  const auto run = [](std::size_t workers) {
    return parallel_tally(1000, workers, [](std::size_t i, CaseTally& t) {
      t.check(i % 7 != 3, [&] { return Witness{std::to_string(i), "x", "y"}; });
    });
  };
  CheckReport a, b;
  run(1).emit(a, "t", "", 1000);
  run(4).emit(b, "t", "", 1000);
  EXPECT_EQ(report_to_json(a).dump(), report_to_json(b).dump());
}

TEST(Report, FoldSumsFamilies) {
  CheckReport p1, p2;
  CaseTally a, b;
  a.pass();
  a.pass();
  b.pass();
  b.fail(Witness{"w", "l", "r"});
  a.emit(p1, "fam", "one");
  b.emit(p2, "fam", "two");
  const CheckReport folded = fold_reports({p1, p2}, ReportMeta{}, "both");
  ASSERT_EQ(folded.records.size(), 2u);
  EXPECT_EQ(folded.records[0].cases, 4u);
  EXPECT_EQ(folded.records[0].failures, 1u);
  EXPECT_EQ(folded.records[0].status, CheckStatus::Fail);
  EXPECT_EQ(folded.records[0].inputs, "both");
  EXPECT_EQ(folded.records[1].witness->inputs, "w");
}

TEST(Config, Validation) {
  EXPECT_NO_THROW(config_from_json(Json::parse(R"({"rank":1,"mode":"rational","generators":["1/2"]})")));
  EXPECT_NO_THROW(config_from_json(Json::parse(R"({"rank":3,"mode":"generic"})")));
  EXPECT_THROW(config_from_json(Json::parse(R"({"rank":2,"mode":"rational","generators":["1","2"]})")), Error);
  EXPECT_THROW(config_from_json(Json::parse(R"({"rank":1,"mode":"rational","generators":["0"]})")), Error);
  EXPECT_THROW(config_from_json(Json::parse(R"({"rank":2,"mode":"generic","generators":["u1","u1"]})")), Error);
  EXPECT_THROW(config_from_json(Json::parse(R"({"rank":1,"mode":"rational","generators":["u1"]})")), Error);
  EXPECT_THROW(config_from_json(Json::parse(R"({"mode":"modular"})")), Error);
  EXPECT_THROW(config_from_json(Json::parse(R"({"window":0})")), Error);
  const Config c = config_from_json(config_to_json(Config::defaults()));
  EXPECT_EQ(c.generators, std::vector<std::string>{"1"});
  EXPECT_EQ(c.window, 4);
}
