#include <doctest.h>

#include "vnlab/config.hpp"
#include "vnlab/runner.hpp"

using namespace vnlab;

TEST_CASE("config parsing") {
  SUBCASE("minimal file with defaults") {
    RunConfig c = parse_config_text("m_blocks = 2 3\nn_blocks = 1\n");
    CHECK(c.mBlocks == std::vector<int>{2, 3});
    CHECK(c.nBlocks == std::vector<int>{1});
    CHECK(c.depth == 1);
    CHECK(c.subsetBudget == (std::uint64_t{1} << 20));
    CHECK(c.sampleCount == 10000);
    CHECK(c.seed == 0);
    CHECK(c.suites.size() == 6);
    CHECK(c.format == OutputFormat::Text);
  }
  SUBCASE("comments, overrides and suite lists") {
    RunConfig c = parse_config_text(
        "# instance\nm_blocks = 4\nn_blocks = 2 1\nseed = 99\n"
        "suites = poset, complete\nformat = tsv\nsample_count = 50\n");
    CHECK(c.nBlocks == std::vector<int>{2, 1});
    CHECK(c.seed == 99);
    CHECK(c.suites == std::vector<std::string>{"poset", "complete"});
    CHECK(c.format == OutputFormat::Tsv);
    CHECK(c.sampleCount == 50);
  }
  SUBCASE("invalid inputs carry line numbers") {
    CHECK_THROWS_AS(parse_config_text("m_blocks = 0\nn_blocks = 1\n"), UsageError);
    CHECK_THROWS_AS(parse_config_text(""), UsageError);  // m_blocks required
    CHECK_THROWS_AS(parse_config_text("m_blocks = 2\n"), UsageError);  // n_blocks required
    try {
      parse_config_text("m_blocks = 2\nwat = 1\n");
      FAIL("unknown key accepted");
    } catch (const UsageError& e) {
      CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_config_text("m_blocks = x\nn_blocks = 1\n"), UsageError);
    CHECK_THROWS_AS(parse_config_text("m_blocks = 2\nn_blocks = 1\nsuites = nope\n"),
                    UsageError);
    CHECK_THROWS_AS(parse_config_text("m_blocks = 2\nn_blocks = 1\nformat = xml\n"),
                    UsageError);
  }
}

TEST_CASE("suite runs") {
  RunConfig cfg = parse_config_text("m_blocks = 2 3\nn_blocks = 1\n");

  SUBCASE("all suites pass on the scalar instance") {
    RunResult r = run_suites(cfg);
    CHECK(r.exitStatus() == 0);
    REQUIRE(r.reports.size() == 6);
    CHECK(r.reports[0].suite == "monoid");
    CHECK(r.reports[1].suite == "poset");
    CHECK(r.reports[2].suite == "sheaf");
    CHECK(r.reports[3].suite == "complete");
    CHECK(r.reports[4].suite == "wedge-vee");
    CHECK(r.reports[5].suite == "cone");
    CHECK(r.reports[0].elements == 12);
    CHECK(r.reports[3].checked == 4095);  // exhaustive subsets of 12 elements
    CHECK(r.reports[5].note == "divisible=false witness=(1,0)");
    for (auto& rep : r.reports) CHECK(rep.passed);
  }
  SUBCASE("suite selection preserves the fixed order") {
    cfg.suites = {"cone", "monoid"};  // runs as monoid, cone
    RunResult r = run_suites(cfg);
    REQUIRE(r.reports.size() == 2);
    CHECK(r.reports[0].suite == "monoid");
    CHECK(r.reports[1].suite == "cone");
  }
  SUBCASE("text lines carry the contract fields") {
    RunResult r = run_suites(cfg);
    std::string line = r.reports[3].textLine();
    CHECK(line.find("RESULT suite=complete status=pass elements=12 checked=4095 seed=0 ms=") ==
          0);
  }
  SUBCASE("exit status reflects failures") {
    RunResult r;
    r.reports.push_back(SuiteReport{"monoid", true, 1, 1, 0, 0, "", ""});
    CHECK(r.exitStatus() == 0);
    r.reports.push_back(SuiteReport{"poset", false, 1, 1, 0, 0, "", ""});
    CHECK(r.exitStatus() == 1);
  }
}

TEST_CASE("tsv output is deterministic for a fixed config and seed") {
  RunConfig cfg = parse_config_text(
      "m_blocks = 2 3\nn_blocks = 1 1\nseed = 7\nformat = tsv\nsample_count = 500\n");
  RunResult a = run_suites(cfg);
  RunResult b = run_suites(cfg);
  CHECK(a.render(OutputFormat::Tsv) == b.render(OutputFormat::Tsv));
  CHECK(a.render(OutputFormat::Tsv).find('\t') != std::string::npos);
  // wall time may differ between runs and is deliberately absent from tsv
  CHECK(a.reports[0].tsvLine().find("ms") == std::string::npos);
}
