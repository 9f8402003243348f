#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "zipfaudit/errors.hpp"
#include "zipfaudit/netmodels.hpp"
#include "zipfaudit/pratio.hpp"
#include "oracle.hpp"
#include "tables.hpp"

using namespace zipfaudit;

TEST_CASE("p_ratio worked example") {
  PRatioRecord rec = p_ratio(51700.0, 84800000.0, "T1");
  CHECK(rec.ratio == 51700.0 / 84800000.0);
  CHECK(rec.ratio == doctest::Approx(oracle::kWorkedRatioFull).epsilon(1e-15));
  CHECK(rec.ratio == doctest::Approx(oracle::kWorkedRatio).epsilon(1e-4));
  CHECK(rec.normalized == doctest::Approx(oracle::kWorkedNormalized).epsilon(1e-15));
  REQUIRE(rec.log_normalized.has_value());
  CHECK(*rec.log_normalized == doctest::Approx(oracle::kWorkedLog).epsilon(1e-12));
}

TEST_CASE("p_ratio edge cases") {
  SUBCASE("zero retweets") {
    PRatioRecord rec = p_ratio(0.0, 1e6);
    CHECK(rec.ratio == 0.0);
    CHECK(rec.normalized == 0.0);
    CHECK_FALSE(rec.log_normalized.has_value());
  }
  SUBCASE("equal counts land at log 6") {
    PRatioRecord rec = p_ratio(12345.0, 12345.0);
    CHECK(rec.ratio == 1.0);
    CHECK(rec.normalized == 1e6);
    CHECK(*rec.log_normalized == doctest::Approx(6.0).epsilon(1e-15));
  }
  SUBCASE("zero followers names the account") {
    CHECK_THROWS_WITH_AS(p_ratio(10.0, 0.0, "Bot9000"),
                         doctest::Contains("Bot9000"), DomainError);
  }
  SUBCASE("negative inputs rejected") {
    CHECK_THROWS_AS(p_ratio(-1.0, 10.0), DomainError);
    CHECK_THROWS_AS(p_ratio(1.0, -10.0), DomainError);
  }
}

TEST_CASE("standard bin edges match the published layout") {
  const std::vector<double>& edges = standard_bin_edges();
  REQUIRE(edges.size() == 17);
  CHECK(edges.front() == 0.5);
  CHECK(edges[1] == 1.0);
  CHECK(edges.back() == 4.0);
  CHECK(edges[1] - edges[0] == 0.5);
  for (std::size_t i = 1; i + 1 < edges.size(); ++i)
    CHECK(edges[i + 1] - edges[i] == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(std::is_sorted(edges.begin(), edges.end()));
}

TEST_CASE("published bin counts sum to the reference population") {
  std::size_t sum = 0;
  for (std::size_t c : testdata::kBinDensityCounts) sum += c;
  CHECK(sum == 70);
  CHECK(std::size(testdata::kBinDensityCounts) == standard_bin_edges().size() - 1);
}

namespace {

PRatioRecord record_with_log(double log_value) {
  PRatioRecord rec;
  rec.normalized = std::pow(10.0, log_value);
  rec.log_normalized = log_value;
  return rec;
}

}  // namespace

TEST_CASE("bin_log places the worked example in [2.6, 2.8)") {
  std::vector<PRatioRecord> records = {p_ratio(51700.0, 84800000.0, "T1")};
  BinHistogram hist = bin_log(records);
  REQUIRE(hist.counts.size() == 16);
  CHECK(hist.counts[9] == 1);  // [2.6, 2.8)
  CHECK(records[0].bin_index == 9);
  CHECK(hist.total() == 1);
}

TEST_CASE("bin_log boundary behavior") {
  SUBCASE("half-open boundaries") {
    std::vector<PRatioRecord> records = {record_with_log(1.0)};
    BinHistogram hist = bin_log(records);
    CHECK(hist.counts[1] == 1);  // [1.0, 1.2), not [0.5, 1.0)
    CHECK(records[0].bin_index == 1);
  }
  SUBCASE("first edge is inclusive") {
    std::vector<PRatioRecord> records = {record_with_log(0.5)};
    BinHistogram hist = bin_log(records);
    CHECK(hist.counts[0] == 1);
  }
  SUBCASE("final bin is closed at 4.0") {
    std::vector<PRatioRecord> records = {record_with_log(4.0)};
    BinHistogram hist = bin_log(records);
    CHECK(hist.counts[15] == 1);
    CHECK(hist.overflow == 0);
  }
  SUBCASE("spills go to underflow and overflow") {
    std::vector<PRatioRecord> records = {record_with_log(0.4999),
                                         record_with_log(4.0001),
                                         record_with_log(6.0)};
    BinHistogram hist = bin_log(records);
    CHECK(hist.underflow == 1);
    CHECK(hist.overflow == 2);
    CHECK_FALSE(records[0].bin_index.has_value());
    CHECK_FALSE(records[1].bin_index.has_value());
  }
  SUBCASE("undefined log values are counted separately") {
    std::vector<PRatioRecord> records = {p_ratio(0.0, 1e6, "Z")};
    BinHistogram hist = bin_log(records);
    CHECK(hist.undefined == 1);
    CHECK(hist.total() == 1);
  }
  SUBCASE("empty input rejected") {
    std::vector<PRatioRecord> records;
    CHECK_THROWS_AS(bin_log(records), InsufficientDataError);
  }
}

TEST_CASE("property: conservation and monotone binning on random sets") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> log_dist(-2.0, 8.0);
  std::uniform_int_distribution<int> size_dist(1, 200);
  std::bernoulli_distribution undefined_dist(0.1);
  for (int trial = 0; trial < 200; ++trial) {
    int n = size_dist(rng);
    std::vector<PRatioRecord> records;
    records.reserve(n);
    for (int i = 0; i < n; ++i) {
      if (undefined_dist(rng)) {
        records.push_back(p_ratio(0.0, 1e6));
      } else {
        records.push_back(record_with_log(log_dist(rng)));
      }
    }
    BinHistogram hist = bin_log(records);
    CHECK(hist.total() == records.size());

    // monotone: smaller log value never lands in a later bin
    for (const PRatioRecord& a : records) {
      if (!a.bin_index) continue;
      for (const PRatioRecord& b : records) {
        if (!b.bin_index) continue;
        if (*a.log_normalized < *b.log_normalized)
          CHECK(*a.bin_index <= *b.bin_index);
      }
    }
  }
}

TEST_CASE("log_trend_fit on an exact decade ladder") {
  std::vector<PRatioRecord> records;
  for (double n : {1000.0, 100.0, 10.0}) {
    PRatioRecord rec;
    rec.normalized = n;
    rec.log_normalized = std::log10(n);
    records.push_back(rec);
  }
  LogTrend trend = log_trend_fit(records);
  CHECK(trend.slope == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(trend.intercept == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(trend.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("log_trend_fit is flat for equal ratios") {
  std::vector<PRatioRecord> records(5, record_with_log(2.5));
  LogTrend trend = log_trend_fit(records);
  CHECK(trend.slope == 0.0);
  CHECK(trend.intercept == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("log_trend_fit matches the frozen oracle on a model ladder") {
  RankedSeries series = gen_zipf_dataset(1e6, 20, 1, 0.0);
  std::vector<PRatioRecord> records;
  for (const RankedPoint& p : series.points) {
    PRatioRecord rec;
    rec.normalized = p.value;
    rec.log_normalized = std::log10(p.value);
    records.push_back(rec);
  }
  LogTrend trend = log_trend_fit(records);
  CHECK(trend.slope == doctest::Approx(oracle::kZipfTrendSlope20).epsilon(1e-9));
  CHECK(trend.intercept ==
        doctest::Approx(oracle::kZipfTrendIntercept20).epsilon(1e-9));
  CHECK(trend.r_squared == doctest::Approx(oracle::kZipfTrendR2_20).epsilon(1e-9));
}

TEST_CASE("log_trend_fit needs two defined records and ignores order") {
  std::vector<PRatioRecord> too_few = {record_with_log(2.0), p_ratio(0.0, 1e6)};
  CHECK_THROWS_AS(log_trend_fit(too_few), InsufficientDataError);

  std::vector<PRatioRecord> records;
  for (double v : {3.1, 0.7, 2.2, 1.4, 2.9}) records.push_back(record_with_log(v));
  LogTrend reference = log_trend_fit(records);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(records.begin(), records.end(), rng);
    LogTrend trend = log_trend_fit(records);
    CHECK(trend.slope == reference.slope);
    CHECK(trend.intercept == reference.intercept);
    CHECK(trend.r_squared == reference.r_squared);
  }
}

TEST_CASE("property: ratio is homogeneous under joint scaling") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> value_dist(1.0, 1e8);
  std::uniform_real_distribution<double> scale_dist(1e-3, 1e3);
  for (int trial = 0; trial < 100; ++trial) {
    double retweets = value_dist(rng);
    double followers = value_dist(rng);
    double c = scale_dist(rng);
    PRatioRecord base = p_ratio(retweets, followers);
    PRatioRecord scaled = p_ratio(c * retweets, c * followers);
    CHECK(scaled.ratio == doctest::Approx(base.ratio).epsilon(4e-16));
  }
}
