#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "zipfaudit/dataset.hpp"
#include "zipfaudit/errors.hpp"
#include "tables.hpp"

using namespace zipfaudit;

TEST_CASE("parse_count expands suffixes exactly") {
  CHECK(parse_count("84.80M") == 84800000.0);
  CHECK(parse_count("51.70K") == 51700.0);
  CHECK(parse_count("3.45M") == 3450000.0);
  CHECK(parse_count("0") == 0.0);
  CHECK(parse_count("12") == 12.0);
  CHECK(parse_count("0.5") == 0.5);
  CHECK(parse_count("2k") == 2000.0);
  CHECK(parse_count("1b") == 1000000000.0);
  CHECK(parse_count("27.4B") == 27400000000.0);
  CHECK(parse_count("000.25M") == 250000.0);
}

TEST_CASE("parse_count rejects malformed and negative text") {
  CHECK_THROWS_AS(parse_count(""), ParseError);
  CHECK_THROWS_AS(parse_count("12X"), ParseError);
  CHECK_THROWS_AS(parse_count("1 2"), ParseError);
  CHECK_THROWS_AS(parse_count(" 84M"), ParseError);
  CHECK_THROWS_AS(parse_count("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_count("."), ParseError);
  CHECK_THROWS_AS(parse_count("1."), ParseError);
  CHECK_THROWS_AS(parse_count(".5"), ParseError);
  CHECK_THROWS_AS(parse_count("M"), ParseError);
  CHECK_THROWS_AS(parse_count("12345678901234567890123456789"), ParseError);
  CHECK_THROWS_AS(parse_count("-5"), ValidationError);
  CHECK_THROWS_AS(parse_count("-5.1K"), ValidationError);
}

namespace {

// decimals as printed in the cell text, e.g. "84.80M" -> 2
int cell_decimals(const std::string& cell) {
  auto dot = cell.find('.');
  if (dot == std::string::npos) return 0;
  int d = 0;
  for (std::size_t i = dot + 1; i < cell.size() && cell[i] >= '0' && cell[i] <= '9'; ++i)
    ++d;
  return d;
}

void check_roundtrip(std::span<const testdata::RawAccountRow> rows) {
  for (const testdata::RawAccountRow& row : rows) {
    for (const char* cell : {row.total_tweets, row.average_retweets, row.total_followers}) {
      std::string text(cell);
      char suffix = text.back() == 'K' || text.back() == 'M' || text.back() == 'B'
                        ? text.back()
                        : '\0';
      CHECK(format_suffixed(parse_count(text), suffix, cell_decimals(text)) == text);
    }
  }
}

}  // namespace

TEST_CASE("every reference cell round-trips through parse and format") {
  check_roundtrip(testdata::kCelebrityRows);
  check_roundtrip(testdata::kPoliticianRows);
  check_roundtrip(testdata::kSportsmanRows);
  check_roundtrip(testdata::kTopAccountRows);
}

TEST_CASE("load_accounts reads CSV with suffixed cells") {
  std::istringstream in(testdata::make_csv_text(testdata::kPoliticianRows));
  AccountSet set = load_accounts(in, InputFormat::kCsv, "politicians.csv");
  REQUIRE(set.size() == 9);
  CHECK(set.source() == "politicians.csv");
  CHECK(set.records()[0].name == "P1");
  CHECK(set.records()[0].category == "politician");
  CHECK(set.records()[0].total_followers == 71000000.0);
  CHECK(set.records()[8].average_retweets == 160.0);
}

TEST_CASE("load_accounts accepts reordered columns and quoted names") {
  std::istringstream in(
      "category,total_followers,name,total_tweets,average_retweets\n"
      "politician,71.00M,\"Obama, Barack\",31.40K,4.94K\n");
  AccountSet set = load_accounts(in, InputFormat::kCsv);
  REQUIRE(set.size() == 1);
  CHECK(set.records()[0].name == "Obama, Barack");
  CHECK(set.records()[0].total_followers == 71000000.0);
}

TEST_CASE("load_accounts on empty body yields an empty set") {
  std::istringstream in("name,category,total_tweets,average_retweets,total_followers\n");
  AccountSet set = load_accounts(in, InputFormat::kCsv);
  CHECK(set.empty());
}

TEST_CASE("load_accounts error paths name the offender") {
  SUBCASE("duplicate name") {
    std::istringstream in(
        "name,category,total_tweets,average_retweets,total_followers\n"
        "P1,politician,1,1,1\n"
        "P1,politician,2,2,2\n");
    CHECK_THROWS_WITH_AS(load_accounts(in, InputFormat::kCsv),
                         doctest::Contains("P1"), ValidationError);
  }
  SUBCASE("missing column") {
    std::istringstream in("name,category,total_tweets,average_retweets\nP1,x,1,1\n");
    CHECK_THROWS_WITH_AS(load_accounts(in, InputFormat::kCsv),
                         doctest::Contains("total_followers"), ValidationError);
  }
  SUBCASE("unparseable cell carries row number and text") {
    std::istringstream in(
        "name,category,total_tweets,average_retweets,total_followers\n"
        "P1,politician,31.40K,4.94K,71.00M\n"
        "P2,politician,oops,2.28K,18.50M\n");
    CHECK_THROWS_WITH_AS(load_accounts(in, InputFormat::kCsv),
                         doctest::Contains("row 3"), ParseError);
  }
  SUBCASE("missing header") {
    std::istringstream in("");
    CHECK_THROWS_AS(load_accounts(in, InputFormat::kCsv), ValidationError);
  }
  SUBCASE("short row") {
    std::istringstream in(
        "name,category,total_tweets,average_retweets,total_followers\n"
        "P1,politician,1,1\n");
    CHECK_THROWS_AS(load_accounts(in, InputFormat::kCsv), ParseError);
  }
  SUBCASE("overlong row") {
    std::istringstream in(
        "name,category,total_tweets,average_retweets,total_followers\n"
        "P1,politician,1,1,1,1\n");
    CHECK_THROWS_AS(load_accounts(in, InputFormat::kCsv), ParseError);
  }
}

TEST_CASE("load_accounts reads JSON with string or numeric counts") {
  std::istringstream in(R"([
    {"name":"P1","category":"politician","total_tweets":"31.40K",
     "average_retweets":4940,"total_followers":"71.00M"},
    {"name":"P2","category":"politician","total_tweets":15200,
     "average_retweets":"2.28K","total_followers":1.85e7}
  ])");
  AccountSet set = load_accounts(in, InputFormat::kJson, "inline.json");
  REQUIRE(set.size() == 2);
  CHECK(set.records()[0].total_tweets == 31400.0);
  CHECK(set.records()[0].average_retweets == 4940.0);
  CHECK(set.records()[1].total_followers == 18500000.0);
}

TEST_CASE("load_accounts JSON error paths") {
  SUBCASE("negative numeric count") {
    std::istringstream in(
        R"([{"name":"A","category":"x","total_tweets":-1,)"
        R"("average_retweets":0,"total_followers":1}])");
    CHECK_THROWS_AS(load_accounts(in, InputFormat::kJson), ValidationError);
  }
  SUBCASE("missing key") {
    std::istringstream in(R"([{"name":"A","category":"x","total_tweets":1}])");
    CHECK_THROWS_WITH_AS(load_accounts(in, InputFormat::kJson),
                         doctest::Contains("average_retweets"), ValidationError);
  }
  SUBCASE("not an array") {
    std::istringstream in(R"({"name":"A"})");
    CHECK_THROWS_AS(load_accounts(in, InputFormat::kJson), ValidationError);
  }
  SUBCASE("broken JSON") {
    std::istringstream in("[{");
    CHECK_THROWS_AS(load_accounts(in, InputFormat::kJson), ParseError);
  }
}

TEST_CASE("AccountSet validates records") {
  CHECK_THROWS_AS(AccountSet({{"", "x", 1, 1, 1}}, "inline"), ValidationError);
  CHECK_THROWS_AS(AccountSet({{"A", "x", -1, 1, 1}}, "inline"), ValidationError);
  CHECK_THROWS_AS(
      AccountSet({{"A", "x", 1, 1, 1}, {"A", "y", 2, 2, 2}}, "inline"),
      ValidationError);
}

TEST_CASE("rank_metric ranks sportsmen tweets with ties at distinct ranks") {
  AccountSet set = testdata::make_account_set(testdata::kSportsmanRows);
  RankedSeries series = rank_metric(set, Metric::kTotalTweets);
  REQUIRE(series.size() == 9);
  const double expected[] = {96200, 21000, 13300, 4200, 2700, 2100, 780, 780, 420};
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(series.points[i].rank == static_cast<double>(i + 1));
    CHECK(series.points[i].value == expected[i]);
  }
  // the tied 780s occupy ranks 7 and 8, names in ascending order
  CHECK(series.points[6].label == "S7");
  CHECK(series.points[7].label == "S8");
}

TEST_CASE("rank_metric edge cases") {
  SUBCASE("single record") {
    AccountSet set({{"A", "x", 5, 5, 5}}, "inline");
    RankedSeries series = rank_metric(set, Metric::kTotalFollowers);
    REQUIRE(series.size() == 1);
    CHECK(series.points[0].rank == 1.0);
  }
  SUBCASE("all-equal values break ties by name") {
    AccountSet set({{"B", "x", 5, 5, 5}, {"C", "x", 5, 5, 5}, {"A", "x", 5, 5, 5}},
                   "inline");
    RankedSeries series = rank_metric(set, Metric::kTotalTweets);
    CHECK(series.points[0].label == "A");
    CHECK(series.points[1].label == "B");
    CHECK(series.points[2].label == "C");
  }
  SUBCASE("empty set") {
    AccountSet set;
    CHECK_THROWS_AS(rank_metric(set, Metric::kTotalTweets), InsufficientDataError);
  }
}

TEST_CASE("rank_metric is permutation invariant and length preserving") {
  std::vector<AccountRecord> records = testdata::make_records(testdata::kCelebrityRows);
  AccountSet base(records, "inline");
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(records.begin(), records.end(), rng);
    AccountSet shuffled(records, "inline");
    for (Metric m : kAllMetrics) {
      RankedSeries a = rank_metric(base, m);
      RankedSeries b = rank_metric(shuffled, m);
      REQUIRE(a.size() == b.size());
      REQUIRE(a.size() == records.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.points[i].value == b.points[i].value);
        CHECK(a.points[i].label == b.points[i].label);
        if (i + 1 < a.size()) CHECK(a.points[i].value >= a.points[i + 1].value);
      }
    }
  }
}
