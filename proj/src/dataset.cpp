#include "zipfaudit/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "zipfaudit/errors.hpp"

namespace zipfaudit {

namespace {

constexpr std::size_t kMaxMantissaDigits = 28;

int suffix_exponent(char c) {
  switch (c) {
    case 'K': case 'k': return 3;
    case 'M': case 'm': return 6;
    case 'B': case 'b': return 9;
    default: return -1;
  }
}

std::string quote(std::string_view text) {
  return "\"" + std::string(text) + "\"";
}

double pow10_int(int e) {
  double r = 1.0;
  while (e-- > 0) r *= 10.0;
  return r;
}

}  // namespace

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::kTotalTweets: return "total_tweets";
    case Metric::kAverageRetweets: return "average_retweets";
    case Metric::kTotalFollowers: return "total_followers";
  }
  return "unknown";
}

std::optional<Metric> metric_from_name(std::string_view name) {
  for (Metric m : kAllMetrics)
    if (metric_name(m) == name) return m;
  return std::nullopt;
}

double AccountRecord::metric(Metric m) const {
  switch (m) {
    case Metric::kTotalTweets: return total_tweets;
    case Metric::kAverageRetweets: return average_retweets;
    case Metric::kTotalFollowers: return total_followers;
  }
  return 0.0;
}

AccountSet::AccountSet(std::vector<AccountRecord> records, std::string source)
    : records_(std::move(records)), source_(std::move(source)) {
  std::unordered_set<std::string_view> seen;
  for (const AccountRecord& r : records_) {
    if (r.name.empty())
      throw ValidationError("account with empty name in " + source_);
    if (!seen.insert(r.name).second)
      throw ValidationError("duplicate account name " + quote(r.name));
    for (Metric m : kAllMetrics) {
      double v = r.metric(m);
      if (!std::isfinite(v))
        throw ValidationError("non-finite " + std::string(metric_name(m)) +
                              " for account " + quote(r.name));
      if (v < 0.0)
        throw ValidationError("negative " + std::string(metric_name(m)) +
                              " for account " + quote(r.name));
    }
  }
}

double parse_count(std::string_view text) {
  if (text.empty()) throw ParseError("empty count");

  std::string_view rest = text;
  bool negative = false;
  if (rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }

  int exponent = 0;
  if (!rest.empty()) {
    int e = suffix_exponent(rest.back());
    if (e >= 0) {
      exponent = e;
      rest.remove_suffix(1);
    }
  }

  // digits [ '.' digits ], nothing else
  unsigned __int128 mantissa = 0;
  std::size_t digits = 0;
  int decimals = 0;
  bool seen_dot = false;
  bool any_int_digit = false;
  bool any_frac_digit = false;
  for (char c : rest) {
    if (c == '.') {
      if (seen_dot) throw ParseError("malformed count " + quote(text));
      seen_dot = true;
      continue;
    }
    if (c < '0' || c > '9') throw ParseError("malformed count " + quote(text));
    if (seen_dot) {
      ++decimals;
      any_frac_digit = true;
    } else {
      any_int_digit = true;
    }
    if (mantissa != 0 || c != '0') ++digits;  // leading zeros are free
    if (digits > kMaxMantissaDigits)
      throw ParseError("count has too many digits: " + quote(text));
    mantissa = mantissa * 10 + static_cast<unsigned>(c - '0');
  }
  if (!any_int_digit || (seen_dot && !any_frac_digit))
    throw ParseError("malformed count " + quote(text));

  if (negative) throw ValidationError("negative count " + quote(text));

  if (exponent >= decimals) {
    unsigned __int128 scaled = mantissa;
    for (int i = 0; i < exponent - decimals; ++i) scaled *= 10;
    return static_cast<double>(scaled);
  }
  return static_cast<double>(mantissa) / pow10_int(decimals - exponent);
}

std::string format_suffixed(double value, char suffix, int decimals) {
  if (!std::isfinite(value)) throw DomainError("cannot format non-finite count");
  if (decimals < 0 || decimals > 17) throw DomainError("bad decimal count");
  double scale = 1.0;
  std::string tail;
  if (suffix != '\0') {
    int e = suffix_exponent(suffix);
    if (e < 0) throw DomainError(std::string("unknown suffix '") + suffix + "'");
    scale = pow10_int(e);
    tail.push_back(suffix);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value / scale);
  return buf + tail;
}

namespace {

// --- CSV ---

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits one physical line into fields; double quotes delimit fields and are
// escaped by doubling. Unquoted fields are trimmed.
std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool in_quotes = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"' && trim(cur).empty() && !was_quoted) {
      in_quotes = true;
      was_quoted = true;
      cur.clear();
    } else if (c == ',') {
      fields.push_back(was_quoted ? cur : trim(cur));
      cur.clear();
      was_quoted = false;
    } else {
      cur.push_back(c);
    }
  }
  if (in_quotes)
    throw ParseError("unterminated quote on line " + std::to_string(line_no));
  fields.push_back(was_quoted ? cur : trim(cur));
  return fields;
}

constexpr const char* kColumns[5] = {"name", "category", "total_tweets",
                                     "average_retweets", "total_followers"};

AccountSet load_csv(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;

  // header
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    header = split_csv_line(line, line_no);
    break;
  }
  if (header.empty()) throw ValidationError("missing CSV header in " + source);

  std::array<int, 5> col = {-1, -1, -1, -1, -1};
  for (std::size_t i = 0; i < header.size(); ++i)
    for (int c = 0; c < 5; ++c)
      if (header[i] == kColumns[c]) col[c] = static_cast<int>(i);
  for (int c = 0; c < 5; ++c)
    if (col[c] < 0)
      throw ValidationError("missing column " + quote(kColumns[c]) + " in " + source);

  std::vector<AccountRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_csv_line(line, line_no);
    if (fields.size() != header.size())
      throw ParseError("row " + std::to_string(line_no) + " has " +
                       std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(header.size()));
    AccountRecord rec;
    rec.name = fields[col[0]];
    rec.category = fields[col[1]];
    double* out[3] = {&rec.total_tweets, &rec.average_retweets, &rec.total_followers};
    for (int c = 2; c < 5; ++c) {
      const std::string& cell = fields[col[c]];
      try {
        *out[c - 2] = parse_count(cell);
      } catch (const ParseError&) {
        throw ParseError("row " + std::to_string(line_no) + ": unparseable " +
                         kColumns[c] + " cell " + quote(cell));
      } catch (const ValidationError&) {
        throw ValidationError("row " + std::to_string(line_no) + ": negative " +
                              kColumns[c] + " cell " + quote(cell));
      }
    }
    records.push_back(std::move(rec));
  }
  return AccountSet(std::move(records), source);
}

// --- JSON ---

double count_from_json(const nlohmann::json& v, const char* key, std::size_t index) {
  std::string where = std::string(key) + " in record " + std::to_string(index + 1);
  if (v.is_string()) {
    try {
      return parse_count(v.get<std::string>());
    } catch (const ParseError&) {
      throw ParseError("unparseable " + where + ": " + quote(v.get<std::string>()));
    } catch (const ValidationError&) {
      throw ValidationError("negative " + where);
    }
  }
  if (v.is_number()) {
    double d = v.get<double>();
    if (!std::isfinite(d)) throw ValidationError("non-finite " + where);
    if (d < 0.0) throw ValidationError("negative " + where);
    return d;
  }
  throw ParseError(where + " must be a number or suffixed string");
}

AccountSet load_json(std::istream& in, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON in " + source + ": " + e.what());
  }
  if (!doc.is_array())
    throw ValidationError("JSON input must be an array of account objects");

  std::vector<AccountRecord> records;
  records.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const nlohmann::json& obj = doc[i];
    if (!obj.is_object())
      throw ValidationError("record " + std::to_string(i + 1) + " is not an object");
    for (const char* key : kColumns)
      if (!obj.contains(key))
        throw ValidationError("missing column " + quote(key) + " in record " +
                              std::to_string(i + 1));
    AccountRecord rec;
    if (!obj["name"].is_string() || !obj["category"].is_string())
      throw ValidationError("name and category must be strings in record " +
                            std::to_string(i + 1));
    rec.name = obj["name"].get<std::string>();
    rec.category = obj["category"].get<std::string>();
    rec.total_tweets = count_from_json(obj["total_tweets"], "total_tweets", i);
    rec.average_retweets = count_from_json(obj["average_retweets"], "average_retweets", i);
    rec.total_followers = count_from_json(obj["total_followers"], "total_followers", i);
    records.push_back(std::move(rec));
  }
  return AccountSet(std::move(records), source);
}

}  // namespace

AccountSet load_accounts(std::istream& in, InputFormat format, std::string source_name) {
  return format == InputFormat::kCsv ? load_csv(in, source_name)
                                     : load_json(in, source_name);
}

RankedSeries rank_metric(const AccountSet& set, Metric metric) {
  if (set.empty())
    throw InsufficientDataError("cannot rank an empty account set");

  std::vector<const AccountRecord*> order;
  order.reserve(set.size());
  for (const AccountRecord& r : set.records()) order.push_back(&r);
  std::sort(order.begin(), order.end(),
            [metric](const AccountRecord* a, const AccountRecord* b) {
              double va = a->metric(metric), vb = b->metric(metric);
              if (va != vb) return va > vb;
              return a->name < b->name;
            });

  RankedSeries series;
  series.points.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    series.points.push_back({static_cast<double>(i + 1),
                             order[i]->metric(metric), order[i]->name});
  return series;
}

}  // namespace zipfaudit
