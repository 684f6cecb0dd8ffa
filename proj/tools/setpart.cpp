// setpart: exact set-partition statistics from the command line.
//
// Counts (Bell/Stirling-style tables, no-isolate variants) and probabilities
// under the uniform distribution on partitions, all in exact arbitrary-
// precision arithmetic; output as plain text, JSON, or CSV. Computed Bell
// sequences and table rows can be cached on disk (advisory, delete-safe).

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "setpart/combinatorics.hpp"
#include "setpart/render.hpp"
#include "setpart/sampler.hpp"
#include "setpart/stats.hpp"
#include "setpart/table_cache.hpp"
#include "setpart/tables.hpp"
#include "setpart/version.hpp"

using nlohmann::ordered_json;
using setpart::BigInt;
using setpart::Rational;

namespace {

constexpr std::uint32_t kSoftCap = 5000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::uint32_t digits = 3;
  std::string format = "plain";
  std::string cache_dir;
  bool no_cache = false;
  bool force = false;
};

void check_scale(std::uint32_t n, const CommonOptions& opts) {
  if (n <= kSoftCap) return;
  if (!opts.force)
    throw UsageError("n = " + std::to_string(n) + " exceeds the soft cap " +
                     std::to_string(kSoftCap) +
                     " (tables this size take serious time and memory); "
                     "pass --force to proceed");
  std::cerr << "setpart: warning: n = " << n
            << " is beyond the soft cap; expect long runtimes and "
               "gigabyte-scale memory\n";
}

// Cache-aware providers for the three table kinds the subcommands share.
// Results are memoized per process; disk hits and misses are tracked for
// the output metadata.
class Tables {
 public:
  explicit Tables(const CommonOptions& opts) {
    if (opts.no_cache) {
      status_ = "off";
    } else {
      std::filesystem::path dir = opts.cache_dir.empty()
                                      ? setpart::TableCache::default_dir()
                                      : std::filesystem::path(opts.cache_dir);
      cache_ = setpart::TableCache(dir);
      status_ = "none";
    }
  }

  const std::vector<BigInt>& bell(std::uint32_t n) {
    return fetch(bell_, "bell", n,
                 [n] { return setpart::BellSequence(n).values(); });
  }
  const std::vector<BigInt>& stirling(std::uint32_t n) {
    return fetch(stirling_, "stirling-row", n,
                 [n] { return setpart::stirling_row(n); });
  }
  const std::vector<BigInt>& assoc(std::uint32_t n) {
    return fetch(assoc_, "assoc-row", n,
                 [n] { return setpart::associated_row(n); });
  }

  const std::string& cache_status() const { return status_; }

 private:
  template <typename Compute>
  const std::vector<BigInt>& fetch(
      std::map<std::uint32_t, std::vector<BigInt>>& memo, const char* kind,
      std::uint32_t n, Compute&& compute) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    if (cache_.enabled()) {
      if (auto loaded = cache_.load(kind, n)) {
        note_hit();
        return memo.emplace(n, std::move(*loaded)).first->second;
      }
    }
    std::vector<BigInt> values = compute();
    if (cache_.enabled()) {
      cache_.store(kind, n, values);
      status_ = "miss";
    }
    return memo.emplace(n, std::move(values)).first->second;
  }

  void note_hit() {
    if (status_ == "none") status_ = "hit";
  }

  setpart::TableCache cache_;
  std::string status_;
  std::map<std::uint32_t, std::vector<BigInt>> bell_, stirling_, assoc_;
};

// ---------------------------------------------------------------------------
// output plumbing
// ---------------------------------------------------------------------------

struct Output {
  ordered_json query;
  ordered_json result;
  ordered_json exact = nullptr;
  ordered_json rendered = nullptr;
  std::string method;
  std::optional<std::uint64_t> seed;
  std::string plain;  // full text including trailing newline
  std::string csv;    // ditto
  int exit_code = 0;
};

ordered_json exact_json(const Rational& value) {
  return {{"numerator", value.numerator().to_string()},
          {"denominator", value.denominator().to_string()}};
}

ordered_json rendered_json(const setpart::ProbabilityRendering& r) {
  return {{"scientific", r.scientific}, {"percent", r.percent}};
}

void print_output(const CommonOptions& opts, const Tables& tables,
                  const Output& out) {
  if (opts.format == "json") {
    ordered_json record;
    record["query"] = out.query;
    record["result"] = out.result;
    record["exact"] = out.exact;
    record["rendered"] = out.rendered;
    ordered_json meta;
    meta["version"] = setpart::kVersion;
    meta["method"] = out.method;
    meta["cache"] = tables.cache_status();
    if (out.seed) meta["seed"] = *out.seed;
    record["meta"] = meta;
    std::cout << record.dump(2) << '\n';
  } else if (opts.format == "csv") {
    std::cout << out.csv;
  } else {
    std::cout << out.plain;
  }
}

std::string sum_range_percent(const setpart::FamilyDistribution& dist,
                              std::uint32_t a, std::uint32_t b,
                              std::uint32_t digits) {
  return setpart::render_percent(dist.mass_range(a, b), digits);
}

// ---------------------------------------------------------------------------
// subcommand handlers
// ---------------------------------------------------------------------------

Output run_bell(Tables& tables, const CommonOptions& opts, std::uint32_t n,
                const std::string& method) {
  check_scale(n, opts);
  BigInt value;
  if (method == "recurrence") {
    value = tables.bell(n)[n];
  } else if (method == "row_sum") {
    for (const BigInt& v : setpart::stirling_row(n)) value += v;
  } else {  // egf
    value = setpart::bell_number(n, setpart::BellMethod::egf);
  }
  Output out;
  out.query = {{"command", "bell"}, {"n", n}, {"method", method}};
  out.result = value.to_string();
  out.exact = exact_json(Rational(value));
  out.method = method;
  out.plain = value.to_string() + "\n";
  out.csv = "n,value\n" + std::to_string(n) + "," + value.to_string() + "\n";
  return out;
}

Output run_stirling(Tables& tables, const CommonOptions& opts, std::uint32_t n,
                    std::uint32_t k, const std::string& method) {
  check_scale(n, opts);
  BigInt value;
  if (method == "explicit") {
    value = setpart::stirling2(n, k, setpart::StirlingMethod::explicit_sum);
  } else {
    const auto& row = tables.stirling(n);
    value = k < row.size() ? row[k] : BigInt(0);
  }
  Output out;
  out.query = {{"command", "stirling"}, {"n", n}, {"k", k}, {"method", method}};
  out.result = value.to_string();
  out.exact = exact_json(Rational(value));
  out.method = method;
  out.plain = value.to_string() + "\n";
  out.csv = "n,k,value\n" + std::to_string(n) + "," + std::to_string(k) + "," +
            value.to_string() + "\n";
  return out;
}

std::string partition_line(const std::vector<std::uint32_t>& parts) {
  if (parts.empty()) return "empty";
  std::string line;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) line += "+";
    line += std::to_string(parts[i]);
  }
  return line;
}

Output run_partitions(const CommonOptions& opts, std::uint32_t n) {
  check_scale(n, opts);
  Output out;
  out.query = {{"command", "partitions"}, {"n", n}};
  out.method = "decreasing-lex";

  if (opts.format == "plain") {
    // stream straight to stdout; partition lists can be enormous
    std::uint64_t count = 0;
    setpart::for_each_partition(n, [&](const std::vector<std::uint32_t>& p) {
      std::cout << partition_line(p) << '\n';
      ++count;
    });
    out.plain.clear();
    out.result = std::to_string(count);
    return out;
  }

  std::uint64_t count = 0;
  ordered_json list = ordered_json::array();
  std::string csv = "parts\n";
  setpart::for_each_partition(n, [&](const std::vector<std::uint32_t>& p) {
    ++count;
    if (opts.format == "json")
      list.push_back(p);
    else
      csv += partition_line(p) + "\n";
  });
  out.result = {{"count", std::to_string(count)}, {"partitions", list}};
  out.csv = csv;
  return out;
}

Output run_family_dist(Tables& tables, const CommonOptions& opts,
                       std::uint32_t n, std::optional<std::uint32_t> from,
                       std::optional<std::uint32_t> to) {
  check_scale(n, opts);
  if (n == 0) throw std::invalid_argument("family-dist: n must be >= 1");
  auto dist = setpart::FamilyDistribution::from_parts(n, tables.stirling(n),
                                                      tables.bell(n)[n]);
  Output out;
  out.method = "table";

  if (from || to) {
    std::uint32_t a = from.value_or(1);
    std::uint32_t b = to.value_or(n);
    auto rendering =
        setpart::render_probability(dist.mass_range(a, b), opts.digits);
    out.query = {{"command", "family-dist"},
                 {"n", n},
                 {"from", a},
                 {"to", b},
                 {"digits", opts.digits}};
    out.result = rendering.percent;
    out.exact = exact_json(rendering.exact);
    out.rendered = rendered_json(rendering);
    out.plain = rendering.percent + "\n";
    out.csv = "n,from,to,numerator,denominator,scientific,percent\n" +
              std::to_string(n) + "," + std::to_string(a) + "," +
              std::to_string(b) + "," + rendering.exact.numerator().to_string() +
              "," + rendering.exact.denominator().to_string() + "," +
              rendering.scientific + "," + rendering.percent + "\n";
    return out;
  }

  out.query = {{"command", "family-dist"}, {"n", n}, {"digits", opts.digits}};
  ordered_json rows = ordered_json::array();
  std::string plain = "k\tcount\tpercent\n";
  std::string csv = "k,count,percent\n";
  for (std::uint32_t k = 1; k <= n; ++k) {
    std::string count = dist.count(k).to_string();
    std::string percent = setpart::render_percent(dist.mass(k), opts.digits);
    rows.push_back({{"k", k}, {"count", count}, {"percent", percent}});
    plain += std::to_string(k) + "\t" + count + "\t" + percent + "\n";
    csv += std::to_string(k) + "," + count + "," + percent + "\n";
  }
  out.result = {{"n", n},
                {"total", dist.total().to_string()},
                {"rows", rows}};
  out.plain = plain;
  out.csv = csv;
  return out;
}

Output run_family_mode(Tables& tables, const CommonOptions& opts,
                       std::uint32_t n) {
  check_scale(n, opts);
  if (n == 0) throw std::invalid_argument("family-mode: n must be >= 1");
  const auto& row = tables.stirling(n);
  setpart::FamilyMode mode{1, false};
  for (std::uint32_t k = 2; k <= n; ++k) {
    if (row[k] > row[mode.mode]) {
      mode.mode = k;
      mode.tied = false;
    } else if (row[k] == row[mode.mode]) {
      mode.tied = true;
    }
  }
  Output out;
  out.query = {{"command", "family-mode"}, {"n", n}};
  out.result = {{"mode", mode.mode}, {"tied", mode.tied}};
  out.method = "table";
  out.plain = std::to_string(mode.mode) + (mode.tied ? " (tie)" : "") + "\n";
  out.csv = "n,mode,tied\n" + std::to_string(n) + "," +
            std::to_string(mode.mode) + "," + (mode.tied ? "true" : "false") +
            "\n";
  return out;
}

Output run_no_isolates(Tables& tables, const CommonOptions& opts,
                       std::uint32_t n, bool probability) {
  check_scale(n, opts);
  BigInt count;
  for (const BigInt& v : tables.assoc(n)) count += v;
  Output out;
  out.method = "table";
  if (!probability) {
    out.query = {{"command", "no-isolates"}, {"n", n}, {"probability", false}};
    out.result = count.to_string();
    out.exact = exact_json(Rational(count));
    out.plain = count.to_string() + "\n";
    out.csv = "n,count\n" + std::to_string(n) + "," + count.to_string() + "\n";
    return out;
  }
  if (n == 0)
    throw std::invalid_argument("no-isolates --probability: n must be >= 1");
  auto rendering = setpart::render_probability(
      Rational(count, tables.bell(n)[n]), opts.digits);
  out.query = {{"command", "no-isolates"},
               {"n", n},
               {"probability", true},
               {"digits", opts.digits}};
  out.result = rendering.percent;
  out.exact = exact_json(rendering.exact);
  out.rendered = rendered_json(rendering);
  out.plain = rendering.percent + "\n";
  out.csv = "n,count,numerator,denominator,scientific,percent\n" +
            std::to_string(n) + "," + count.to_string() + "," +
            rendering.exact.numerator().to_string() + "," +
            rendering.exact.denominator().to_string() + "," +
            rendering.scientific + "," + rendering.percent + "\n";
  return out;
}

Output run_isolate_dist(const CommonOptions& opts, std::uint32_t n,
                        std::uint32_t families) {
  check_scale(n, opts);
  auto dist = setpart::isolate_distribution(n, families);
  Rational mean = dist.mean();
  std::string mean_decimal = setpart::render_fixed(mean, opts.digits);

  Output out;
  out.query = {{"command", "isolate-dist"},
               {"n", n},
               {"families", families},
               {"digits", opts.digits}};
  out.method = "table";
  ordered_json rows = ordered_json::array();
  std::string plain = "i\tcount\tpercent\n";
  std::string csv = "i,count,percent\n";
  for (std::uint32_t i = 0; i <= families; ++i) {
    std::string count = dist.count(i).to_string();
    std::string percent = setpart::render_percent(dist.prob(i), opts.digits);
    rows.push_back({{"i", i}, {"count", count}, {"percent", percent}});
    plain += std::to_string(i) + "\t" + count + "\t" + percent + "\n";
    csv += std::to_string(i) + "," + count + "," + percent + "\n";
  }
  plain += "mean\t" + mean_decimal + "\n";
  out.result = {{"n", n},
                {"families", families},
                {"total", dist.total().to_string()},
                {"mean", {{"numerator", mean.numerator().to_string()},
                          {"denominator", mean.denominator().to_string()},
                          {"decimal", mean_decimal}}},
                {"rows", rows}};
  out.plain = plain;
  out.csv = csv;
  return out;
}

Output run_sample(Tables& tables, const CommonOptions& opts, std::uint32_t n,
                  std::uint64_t count, std::uint64_t seed) {
  check_scale(n, opts);
  tables.bell(n);  // warm/persist the table the sampler needs
  auto summary = setpart::summarize(n, count, seed);

  Output out;
  out.query = {{"command", "sample"}, {"n", n}, {"count", count},
               {"seed", seed}};
  out.method = summary.rng_name;
  out.seed = seed;

  ordered_json families = ordered_json::array();
  ordered_json isolates = ordered_json::array();
  std::string plain = "samples\t" + std::to_string(count) + "\nseed\t" +
                      std::to_string(seed) + "\nrng\t" + summary.rng_name +
                      "\nfamilies:\n";
  std::string csv = "kind,value,count\n";
  for (const auto& [k, freq] : summary.family_histogram) {
    families.push_back({{"k", k}, {"count", freq}});
    plain += std::to_string(k) + "\t" + std::to_string(freq) + "\n";
    csv += "families," + std::to_string(k) + "," + std::to_string(freq) + "\n";
  }
  plain += "isolates:\n";
  for (const auto& [i, freq] : summary.isolate_histogram) {
    isolates.push_back({{"i", i}, {"count", freq}});
    plain += std::to_string(i) + "\t" + std::to_string(freq) + "\n";
    csv += "isolates," + std::to_string(i) + "," + std::to_string(freq) + "\n";
  }
  out.result = {{"n", n},
                {"count", count},
                {"rng", summary.rng_name},
                {"families", families},
                {"isolates", isolates}};
  out.plain = plain;
  out.csv = csv;
  return out;
}

// ---------------------------------------------------------------------------
// reference battery
// ---------------------------------------------------------------------------

struct Claim {
  std::string name;
  std::string computed;
  std::string reference;
  bool pass = false;
  bool informational = false;
};

void add_claim(std::vector<Claim>& claims, const std::string& name,
               const std::string& computed, const std::string& reference,
               bool pass, bool informational = false) {
  claims.push_back({name, computed, reference, pass, informational});
}

std::vector<Claim> run_battery(Tables& tables, const CommonOptions& opts,
                               std::uint32_t n_africa, bool inject_wrong) {
  std::vector<Claim> claims;

  std::uint64_t p8 = 0, p25 = 0;
  setpart::for_each_partition(8, [&](const auto&) { ++p8; });
  setpart::for_each_partition(25, [&](const auto&) { ++p25; });
  add_claim(claims, "integer partitions of 8", std::to_string(p8), "22",
            p8 == 22);
  add_claim(claims, "integer partitions of 25", std::to_string(p25), "1958",
            p25 == 1958);

  add_claim(claims, "classifications with shape 5+2+1 of 8",
            setpart::classifications_for_shape({5, 2, 1}).to_string(), "168",
            setpart::classifications_for_shape({5, 2, 1}) == BigInt(168));
  add_claim(claims, "classifications with shape 4+2+2 of 8",
            setpart::classifications_for_shape({4, 2, 2}).to_string(), "210",
            setpart::classifications_for_shape({4, 2, 2}) == BigInt(210));

  BigInt b8 = tables.bell(8)[8];
  add_claim(claims, "classifications of 8 languages", b8.to_string(), "4140",
            b8 == BigInt(4140));
  add_claim(claims, "multiset route to the 8-language count",
            setpart::bell_via_multiset(8).to_string(), "4140",
            setpart::bell_via_multiset(8) == BigInt(4140));

  BigInt b25 = tables.bell(25)[25];
  if (inject_wrong) b25 = BigInt::from_string("4749027089305918018");
  const BigInt correct25 = BigInt::from_string("4638590332229999353");
  const BigInt wrong25 = BigInt::from_string("4749027089305918018");
  add_claim(claims, "classifications of 25 languages", b25.to_string(),
            correct25.to_string(), b25 == correct25);
  add_claim(claims, "historical 25-language figure is not the count",
            b25.to_string(), "anything but " + wrong25.to_string(),
            b25 != wrong25);

  // no-isolate counts and probabilities
  BigInt a8;
  for (const BigInt& v : tables.assoc(8)) a8 += v;
  add_claim(claims, "no-isolate classifications of 8 languages",
            a8.to_string(), "715", a8 == BigInt(715));

  struct NoIso {
    std::uint32_t n;
    std::uint32_t digits;
    const char* reference;
  };
  for (const NoIso& c : {NoIso{8, 2, "17%"}, NoIso{25, 3, "8.75%"},
                         NoIso{200, 3, "1.93%"}, NoIso{500, 3, "0.927%"},
                         NoIso{650, 3, "0.747%"}}) {
    BigInt a;
    for (const BigInt& v : tables.assoc(c.n)) a += v;
    std::string percent = setpart::render_percent(
        Rational(a, tables.bell(c.n)[c.n]), c.digits);
    add_claim(claims,
              "P(no isolates | " + std::to_string(c.n) + " languages)",
              percent, c.reference, percent == c.reference);
  }

  // family-count table at n = 650
  auto dist650 = setpart::FamilyDistribution::from_parts(
      650, tables.stirling(650), tables.bell(650)[650]);
  std::string tiny = sum_range_percent(dist650, 1, 3, 3);
  add_claim(claims, "P(at most 3 families | 650)", tiny, "0.238x10^-843 %",
            tiny == "0.238x10^-843 %");

  struct Range {
    std::uint32_t a, b, digits;
    const char* reference;
  };
  for (const Range& r :
       {Range{50, 110, 3, "0.0000565%"}, Range{111, 120, 2, "0.56%"},
        Range{121, 130, 3, "37.1%"}, Range{131, 140, 3, "58.8%"},
        Range{141, 150, 2, "3.5%"}}) {
    std::string percent = sum_range_percent(dist650, r.a, r.b, r.digits);
    std::string name = "P(" + std::to_string(r.a) + " to " +
                       std::to_string(r.b) + " families | 650)";
    add_claim(claims, name, percent, r.reference, percent == r.reference);
  }

  Rational bulk = dist650.mass_range(121, 150);
  add_claim(claims, "density of the family count in [121,150] at n = 650",
            setpart::render_percent(bulk, 3), "above 99%",
            bulk > Rational(BigInt(99), BigInt(100)));
  auto mode650 = dist650.mode();
  add_claim(claims, "family-count mode at n = 650",
            std::to_string(mode650.mode), "within [121,150]",
            mode650.mode >= 121 && mode650.mode <= 150);

  // isolate statistics at n = 650
  struct IsoStats {
    std::uint32_t f;
    std::uint32_t t;
    const char* mean_ref;
    int mean_lo_tenths, mean_hi_tenths;
  };
  for (const IsoStats& s :
       {IsoStats{150, 14, "about 9 (in [8.5,9.5])", 85, 95},
        IsoStats{180, 26, "roughly 19.5 (in [19,20])", 190, 200}}) {
    auto iso = setpart::isolate_distribution(650, s.f);
    Rational mean = iso.mean();
    Rational lo(BigInt(s.mean_lo_tenths), BigInt(10));
    Rational hi(BigInt(s.mean_hi_tenths), BigInt(10));
    add_claim(claims,
              "expected isolates at n = 650, f = " + std::to_string(s.f),
              setpart::render_fixed(mean, 3), s.mean_ref,
              mean >= lo && mean <= hi);
    Rational tail = iso.tail(s.t);
    add_claim(claims,
              "P(at least " + std::to_string(s.t) + " isolates | 650, f = " +
                  std::to_string(s.f) + ")",
              setpart::render_percent(tail, 3), "nearly 5% (in [4%,6%])",
              tail >= Rational(BigInt(4), BigInt(100)) &&
                  tail <= Rational(BigInt(6), BigInt(100)));
  }

  // the 1000-language footnote
  {
    const auto& row = tables.stirling(1000);
    std::uint32_t mode = 1;
    for (std::uint32_t k = 2; k <= 1000; ++k)
      if (row[k] > row[mode]) mode = k;
    add_claim(claims, "family-count mode at n = 1000", std::to_string(mode),
              "within [180,200]", mode >= 180 && mode <= 200);
  }

  // the large-continent scenario: defaults to 1500 languages
  {
    const bool reference_n = n_africa == 1500;
    auto dist = setpart::FamilyDistribution::from_parts(
        n_africa, tables.stirling(n_africa), tables.bell(n_africa)[n_africa]);
    auto mode = dist.mode();
    Rational at_most_4 = dist.mass_range(1, 4);
    Rational cutoff =
        Rational(BigInt(1), setpart::pow(BigInt(10), 1000));
    if (reference_n) {
      add_claim(claims, "family-count mode at n = 1500",
                std::to_string(mode.mode), "a few hundred (above 200)",
                mode.mode > 200);
      add_claim(claims, "P(at most 4 families | 1500)",
                setpart::render_percent(at_most_4, 3), "below 1e-1000",
                at_most_4 < cutoff);
    } else {
      add_claim(claims,
                "family-count mode at n = " + std::to_string(n_africa),
                std::to_string(mode.mode), "(informational)", true, true);
      add_claim(claims,
                "P(at most 4 families | " + std::to_string(n_africa) + ")",
                setpart::render_percent(at_most_4, 3), "(informational)", true,
                true);
    }
  }

  (void)opts;
  return claims;
}

Output run_reproduce(Tables& tables, const CommonOptions& opts,
                     std::uint32_t n_africa, bool inject_wrong) {
  check_scale(n_africa, opts);
  auto claims = run_battery(tables, opts, n_africa, inject_wrong);

  Output out;
  out.query = {{"command", "reproduce-paper"}, {"n_africa", n_africa}};
  out.method = "battery";

  bool all_pass = true;
  ordered_json rows = ordered_json::array();
  std::string plain, csv = "claim,status,computed,reference\n";
  for (const Claim& c : claims) {
    const char* status =
        c.informational ? "INFO" : (c.pass ? "PASS" : "FAIL");
    if (!c.informational && !c.pass) all_pass = false;
    plain += std::string(status) + "  " + c.name + ": computed " + c.computed +
             ", reference " + c.reference + "\n";
    rows.push_back({{"claim", c.name},
                    {"status", status},
                    {"computed", c.computed},
                    {"reference", c.reference}});
    csv += "\"" + c.name + "\"," + status + ",\"" + c.computed + "\",\"" +
           c.reference + "\"\n";
  }
  plain += all_pass ? "all reference values reproduced\n"
                    : "MISMATCH: at least one reference value differs\n";
  out.result = rows;
  out.plain = plain;
  out.csv = csv;
  out.exit_code = all_pass ? 0 : 1;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact set-partition statistics: counts of language "
               "classifications, family and isolate distributions, and "
               "reference-value reproduction"};
  app.fallthrough();
  app.set_version_flag("--version", std::string("setpart ") + setpart::kVersion);
  app.require_subcommand(1);

  CommonOptions opts;
  app.add_option("--digits", opts.digits, "significant digits for renderings")
      ->check(CLI::Range(1, 30))
      ->capture_default_str();
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache-dir", opts.cache_dir,
                 "table cache directory (default: $SETPART_CACHE_DIR, else "
                 "~/.cache/setpart)");
  app.add_flag("--no-cache", opts.no_cache, "disable the on-disk table cache");
  app.add_flag("--force", opts.force, "override the n <= 5000 soft cap");

  std::uint32_t n = 0, k = 0, families = 0, n_africa = 1500;
  std::uint64_t count = 0, seed = 0;
  std::string bell_method = "recurrence", stirling_method = "recurrence";
  std::optional<std::uint32_t> from, to;
  bool probability = false, inject_wrong = false;

  CLI::App* cmd_bell = app.add_subcommand("bell",
      "number of classifications of n languages");
  cmd_bell->add_option("--n", n, "language count")->required();
  cmd_bell->add_option("--method", bell_method, "computation path")
      ->check(CLI::IsMember({"recurrence", "row_sum", "egf"}))
      ->capture_default_str();

  CLI::App* cmd_stirling = app.add_subcommand("stirling",
      "number of classifications of n languages into exactly k families");
  cmd_stirling->add_option("--n", n, "language count")->required();
  cmd_stirling->add_option("--k", k, "family count")->required();
  cmd_stirling->add_option("--method", stirling_method, "computation path")
      ->check(CLI::IsMember({"recurrence", "explicit"}))
      ->capture_default_str();

  CLI::App* cmd_partitions = app.add_subcommand("partitions",
      "integer partitions of n in decreasing lexicographic order");
  cmd_partitions->add_option("--n", n, "total")->required();

  CLI::App* cmd_family = app.add_subcommand("family-dist",
      "distribution of the family count; with --from/--to, the probability "
      "of that range");
  cmd_family->add_option("--n", n, "language count")->required();
  auto* opt_from = cmd_family->add_option("--from", from, "range lower bound");
  auto* opt_to = cmd_family->add_option("--to", to, "range upper bound");
  opt_from->needs(opt_to);
  opt_to->needs(opt_from);

  CLI::App* cmd_mode = app.add_subcommand("family-mode",
      "most likely family count");
  cmd_mode->add_option("--n", n, "language count")->required();

  CLI::App* cmd_noiso = app.add_subcommand("no-isolates",
      "classifications with no single-language family");
  cmd_noiso->add_option("--n", n, "language count")->required();
  cmd_noiso->add_flag("--probability", probability,
                      "report the probability instead of the count");

  CLI::App* cmd_iso = app.add_subcommand("isolate-dist",
      "distribution of the isolate count given the family count");
  cmd_iso->add_option("--n", n, "language count")->required();
  cmd_iso->add_option("--families", families, "family count")->required();

  CLI::App* cmd_sample = app.add_subcommand("sample",
      "seeded Monte Carlo sampling of uniform classifications");
  cmd_sample->add_option("--n", n, "language count")->required();
  cmd_sample->add_option("--count", count, "number of samples")->required();
  cmd_sample->add_option("--seed", seed, "PRNG seed")->capture_default_str();

  CLI::App* cmd_repro = app.add_subcommand("reproduce-paper",
      "recompute the published reference values and report PASS/FAIL");
  cmd_repro->add_option("--n-africa", n_africa,
                        "language count for the large-continent scenario")
      ->capture_default_str();
  cmd_repro->add_flag("--inject-wrong-bell25", inject_wrong)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    Tables tables(opts);
    Output out;
    if (cmd_bell->parsed()) {
      out = run_bell(tables, opts, n, bell_method);
    } else if (cmd_stirling->parsed()) {
      out = run_stirling(tables, opts, n, k, stirling_method);
    } else if (cmd_partitions->parsed()) {
      out = run_partitions(opts, n);
    } else if (cmd_family->parsed()) {
      out = run_family_dist(tables, opts, n, from, to);
    } else if (cmd_mode->parsed()) {
      out = run_family_mode(tables, opts, n);
    } else if (cmd_noiso->parsed()) {
      out = run_no_isolates(tables, opts, n, probability);
    } else if (cmd_iso->parsed()) {
      out = run_isolate_dist(opts, n, families);
    } else if (cmd_sample->parsed()) {
      out = run_sample(tables, opts, n, count, seed);
    } else if (cmd_repro->parsed()) {
      out = run_reproduce(tables, opts, n_africa, inject_wrong);
    }
    if (!(cmd_partitions->parsed() && opts.format == "plain"))
      print_output(opts, tables, out);
    const auto elapsed = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    std::cerr << "# elapsed_ms=" << elapsed << "\n";
    return out.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "setpart: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "setpart: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "setpart: error: " << e.what() << "\n";
    return 1;
  }
}
