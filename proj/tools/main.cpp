#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zipfaudit/audit.hpp"
#include "zipfaudit/dataset.hpp"
#include "zipfaudit/errors.hpp"
#include "zipfaudit/format.hpp"
#include "zipfaudit/netmodels.hpp"
#include "zipfaudit/powerlaw.hpp"
#include "zipfaudit/pratio.hpp"
#include "zipfaudit/report_json.hpp"
#include "zipfaudit/zipf.hpp"

namespace {

using namespace zipfaudit;

constexpr std::uint64_t kDefaultSeed = 42;
constexpr const char* kSeedEnvVar = "ZIPF_AUDIT_SEED";

// Flag/argument combinations CLI11 cannot express; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoOptions {
  std::string input;
  std::string format = "csv";
  std::string output;
};

void add_io_options(CLI::App* cmd, IoOptions& io, bool input_required = true) {
  auto* in = cmd->add_option("-i,--input", io.input, "input file");
  if (input_required) in->required();
  cmd->add_option("-f,--format", io.format, "input format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", io.output, "write tabular output to this file");
}

AccountSet load_input(const IoOptions& io) {
  std::ifstream in(io.input, std::ios::binary);
  if (!in) throw ValidationError("cannot open input file: " + io.input);
  return load_accounts(in, io.format == "json" ? InputFormat::kJson : InputFormat::kCsv,
                       io.input);
}

AccountSet category_subset(const AccountSet& set, const std::string& category) {
  if (category.empty()) return set;
  std::vector<AccountRecord> subset;
  for (const AccountRecord& r : set.records())
    if (r.category == category) subset.push_back(r);
  if (subset.empty())
    throw ValidationError("no accounts with category \"" + category + "\" in " +
                          set.source());
  return AccountSet(std::move(subset), set.source() + "#" + category);
}

void write_table(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw ValidationError("cannot write output file: " + output_path);
  out << text;
}

std::uint64_t parse_seed_text(const std::string& text, const std::string& what) {
  char* end = nullptr;
  errno = 0;
  unsigned long long v = std::strtoull(text.c_str(), &end, 10);
  if (errno != 0 || end == text.c_str() || *end != '\0' || text[0] == '-')
    throw ValidationError("invalid " + what + ": \"" + text + "\"");
  return v;
}

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t flag_value) {
  if (seed_opt->count() > 0) return flag_value;
  if (const char* env = std::getenv(kSeedEnvVar))
    return parse_seed_text(env, std::string(kSeedEnvVar) + " value");
  return kDefaultSeed;
}

// --- subcommand bodies ---

void run_rank(const IoOptions& io, const std::string& metric_flag) {
  AccountSet set = load_input(io);
  std::vector<Metric> metrics;
  if (metric_flag.empty())
    metrics.assign(kAllMetrics.begin(), kAllMetrics.end());
  else
    metrics.push_back(*metric_from_name(metric_flag));

  std::string text = "metric,rank,name,value\n";
  for (Metric m : metrics) {
    RankedSeries series = rank_metric(set, m);
    for (const RankedPoint& p : series.points)
      text += std::string(metric_name(m)) + "," + format_value(p.rank) + "," +
              csv_escape(p.label) + "," + format_value(p.value) + "\n";
  }
  write_table(text, io.output);
}

void run_fit(const IoOptions& io, const std::string& metric_flag,
             const std::string& category) {
  AccountSet set = category_subset(load_input(io), category);
  RankedSeries series = rank_metric(set, *metric_from_name(metric_flag));
  PowerLawFit fit = fit_power_law(series);
  std::vector<LogResidual> residuals = residuals_log(series, fit);

  std::cout << "a=" << format_value(fit.prefactor)
            << " k=" << format_value(fit.exponent)
            << " r2=" << format_value(fit.r_squared) << "\n";

  std::string text = "rank,value,model,log_residual\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const RankedPoint& p = series.points[i];
    text += format_value(p.rank) + "," + format_value(p.value) + "," +
            format_value(eval_power_law(fit, p.rank)) + "," +
            format_value(residuals[i].residual) + "\n";
  }
  write_table(text, io.output);
}

void run_zipf(const IoOptions& io, const std::string& metric_flag,
              const std::string& category) {
  AccountSet set = category_subset(load_input(io), category);
  RankedSeries series = rank_metric(set, *metric_from_name(metric_flag));
  DeviationReport report = zipf_deviation(series);

  std::cout << "max_abs_relative_error="
            << format_value(report.max_abs_relative_error) << "\n";

  std::string text = "rank,observed,expected,relative_error\n";
  for (const DeviationEntry& e : report.per_rank)
    text += format_value(e.rank) + "," + format_value(e.observed) + "," +
            format_value(e.expected) + "," + format_value(e.relative_error) + "\n";
  write_table(text, io.output);
}

std::vector<PRatioRecord> ratio_records(const AccountSet& set) {
  std::vector<PRatioRecord> records;
  records.reserve(set.size());
  for (const AccountRecord& r : set.records())
    records.push_back(p_ratio(r.average_retweets, r.total_followers, r.name));
  return records;
}

void run_pratio(const IoOptions& io, const std::string& category) {
  AccountSet set = category_subset(load_input(io), category);
  std::vector<PRatioRecord> records = ratio_records(set);
  BinHistogram hist = bin_log(records);

  std::string text = "name,p,n_norm,log_n,bin_lo,bin_hi\n";
  for (const PRatioRecord& rec : records) {
    text += csv_escape(rec.account_name) + "," + format_value(rec.ratio) + "," +
            format_value(rec.normalized) + ",";
    if (rec.log_normalized) text += format_value(*rec.log_normalized);
    text += ",";
    if (rec.bin_index) {
      text += format_value(hist.edges[*rec.bin_index]) + "," +
              format_value(hist.edges[*rec.bin_index + 1]);
    } else {
      text += ",";
    }
    text += "\n";
  }
  write_table(text, io.output);
}

void run_bins(const IoOptions& io, const std::string& category) {
  AccountSet set = category_subset(load_input(io), category);
  std::vector<PRatioRecord> records = ratio_records(set);
  BinHistogram hist = bin_log(records);

  std::string text = "bin_lo,bin_hi,count\n";
  for (std::size_t i = 0; i < hist.counts.size(); ++i)
    text += format_value(hist.edges[i]) + "," + format_value(hist.edges[i + 1]) +
            "," + std::to_string(hist.counts[i]) + "\n";
  text += "-inf," + format_value(hist.edges.front()) + "," +
          std::to_string(hist.underflow) + "\n";
  text += format_value(hist.edges.back()) + ",inf," +
          std::to_string(hist.overflow) + "\n";
  text += "# undefined," + std::to_string(hist.undefined) + "\n";
  write_table(text, io.output);
}

void run_audit(const IoOptions& io) {
  AccountSet set = load_input(io);
  write_table(report_to_string(full_report(set)), io.output);
}

struct SynthOptions {
  bool zipf_mode = false;
  bool ba_mode = false;
  bool sw_mode = false;
  double rank1_value = 0.0;
  std::size_t count = 0;
  double noise = 0.0;
  std::size_t nodes = 0;
  std::size_t edges_per_node = 0;
  std::size_t k_ring = 0;
  double beta = -1.0;
  std::uint64_t seed = kDefaultSeed;
  std::string output;
};

void run_synth(const SynthOptions& opt, std::uint64_t seed) {
  std::string text;
  if (opt.zipf_mode) {
    if (!(opt.rank1_value > 0.0)) throw UsageError("--zipf requires --F > 0");
    if (opt.count == 0) throw UsageError("--zipf requires --count >= 1");
    RankedSeries series = gen_zipf_dataset(opt.rank1_value, opt.count, seed, opt.noise);
    for (const RankedPoint& p : series.points)
      text += format_value(p.rank) + "," + format_value(p.value) + "\n";
  } else {
    SyntheticGraph graph = [&] {
      if (opt.ba_mode) {
        if (opt.nodes == 0 || opt.edges_per_node == 0)
          throw UsageError("--ba requires --n and --m");
        return gen_preferential_attachment(opt.nodes, opt.edges_per_node, seed);
      }
      if (opt.nodes == 0 || opt.k_ring == 0 || opt.beta < 0.0)
        throw UsageError("--small-world requires --n, --k-ring and --beta");
      return gen_small_world(opt.nodes, opt.k_ring, opt.beta, seed);
    }();
    for (auto [u, v] : graph.edges())
      text += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  write_table(text, opt.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-spectrum power-law analysis for social-account metrics"};
  app.require_subcommand(1);

  const std::vector<std::string> metric_names = {"total_tweets", "average_retweets",
                                                 "total_followers"};

  IoOptions rank_io, fit_io, zipf_io, pratio_io, bins_io, audit_io;
  std::string rank_metric_flag, fit_metric_flag, zipf_metric_flag;
  std::string fit_category, zipf_category, pratio_category, bins_category;

  auto* rank_cmd = app.add_subcommand("rank", "rank accounts per metric");
  add_io_options(rank_cmd, rank_io);
  rank_cmd->add_option("-m,--metric", rank_metric_flag, "restrict to one metric")
      ->check(CLI::IsMember(metric_names));

  auto* fit_cmd = app.add_subcommand("fit", "fit a power law to one ranked metric");
  add_io_options(fit_cmd, fit_io);
  fit_cmd->add_option("-m,--metric", fit_metric_flag, "metric to fit")
      ->check(CLI::IsMember(metric_names))
      ->required();
  fit_cmd->add_option("-c,--category", fit_category, "restrict to one category");

  auto* zipf_cmd = app.add_subcommand("zipf", "rank-value conformance report");
  add_io_options(zipf_cmd, zipf_io);
  zipf_cmd->add_option("-m,--metric", zipf_metric_flag, "metric to analyze")
      ->check(CLI::IsMember(metric_names))
      ->required();
  zipf_cmd->add_option("-c,--category", zipf_category, "restrict to one category");

  auto* pratio_cmd = app.add_subcommand("pratio", "per-account engagement ratios");
  add_io_options(pratio_cmd, pratio_io);
  pratio_cmd->add_option("-c,--category", pratio_category, "restrict to one category");

  auto* bins_cmd = app.add_subcommand("bins", "log-ratio histogram");
  add_io_options(bins_cmd, bins_io);
  bins_cmd->add_option("-c,--category", bins_category, "restrict to one category");

  auto* audit_cmd = app.add_subcommand("audit", "full JSON audit report");
  add_io_options(audit_cmd, audit_io);

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "generate synthetic datasets");
  auto* mode = synth_cmd->add_option_group("mode", "what to generate");
  mode->add_flag("--zipf", synth.zipf_mode, "rank-value series");
  mode->add_flag("--ba", synth.ba_mode, "preferential-attachment graph edge list");
  mode->add_flag("--small-world,--sw", synth.sw_mode, "ring-rewiring graph edge list");
  mode->require_option(1);
  synth_cmd->add_option("--F", synth.rank1_value, "rank-1 value (--zipf)");
  synth_cmd->add_option("--count", synth.count, "number of ranks (--zipf)");
  synth_cmd->add_option("--noise", synth.noise, "relative noise amplitude in [0,1)")
      ->capture_default_str();
  synth_cmd->add_option("--n", synth.nodes, "node count (--ba, --small-world)");
  synth_cmd->add_option("--m", synth.edges_per_node, "edges per new node (--ba)");
  synth_cmd->add_option("--k-ring,--k_ring", synth.k_ring,
                        "ring neighbor count, even (--small-world)");
  synth_cmd->add_option("--beta", synth.beta, "rewiring probability (--small-world)");
  auto* seed_opt = synth_cmd->add_option("--seed", synth.seed, "generator seed");
  synth_cmd->add_option("-o,--output", synth.output, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (rank_cmd->parsed()) run_rank(rank_io, rank_metric_flag);
    else if (fit_cmd->parsed()) run_fit(fit_io, fit_metric_flag, fit_category);
    else if (zipf_cmd->parsed()) run_zipf(zipf_io, zipf_metric_flag, zipf_category);
    else if (pratio_cmd->parsed()) run_pratio(pratio_io, pratio_category);
    else if (bins_cmd->parsed()) run_bins(bins_io, bins_category);
    else if (audit_cmd->parsed()) run_audit(audit_io);
    else if (synth_cmd->parsed()) run_synth(synth, resolve_seed(seed_opt, synth.seed));
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
