#include "zetagaps/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "zetagaps/errors.hpp"
#include "zetagaps/format.hpp"
#include "zetagaps/gap_bounds.hpp"
#include "zetagaps/hardy_z.hpp"
#include "zetagaps/ineq_verify.hpp"
#include "zetagaps/parallel.hpp"
#include "zetagaps/rmt_constants.hpp"
#include "zetagaps/version.hpp"
#include "zetagaps/wirtinger_constants.hpp"
#include "zetagaps/zero_checkpoint.hpp"

namespace zetagaps {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kBoundsQuadratureTol = 1e-10;

// Largest |computed - tabulated| tolerated before a bounds row is flagged.
double published_tolerance(BoundMethod method) {
  switch (method) {
    case BoundMethod::thm21_unconditional: return 1e-3;
    case BoundMethod::thm22_opial: return 5e-4;
    case BoundMethod::thm23_ap:
    case BoundMethod::thm24_bp: return 2e-3;
    default: return 1e-4;
  }
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "json";
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

Json config_json(const RunConfig& config) {
  Json c;
  c["subcommand"] = config.subcommand;
  c["format"] = format_name(config.output_format);
  c["output_path"] = config.output_path ? Json(*config.output_path) : Json(nullptr);
  c["seed"] = config.seed;
  c["threads"] = config.threads;
  for (const auto& [key, value] : config.settings) c[key] = value;
  return c;
}

Json json_header(const RunConfig& config) {
  Json j;
  j["tool"] = "zeta_gaps";
  j["version"] = kVersion;
  if (config.timestamp) j["timestamp"] = utc_timestamp();
  j["config"] = config_json(config);
  return j;
}

// Comment lines that open every CSV and text artifact.
std::string comment_header(const RunConfig& config) {
  std::ostringstream s;
  s << "# zeta_gaps " << kVersion << '\n';
  if (config.timestamp) s << "# timestamp=" << utc_timestamp() << '\n';
  s << "# config: subcommand=" << config.subcommand << " format=" << format_name(config.output_format)
    << " seed=" << config.seed << " threads=" << config.threads;
  if (config.output_path) s << " output_path=" << *config.output_path;
  for (const auto& [key, value] : config.settings) s << ' ' << key << '=' << value;
  s << '\n';
  return s.str();
}

Json pi_scaled_json(const PiScaled& v) {
  Json j;
  j["coeff"] = v.coefficient.to_string();
  j["pi_power"] = v.pi_power;
  j["real"] = v.to_double();
  return j;
}

struct Artifact {
  std::string body;
  bool warning = false;
};

// ---- constants -------------------------------------------------------------

struct ConstantsArgs {
  std::optional<int> k;
  bool inequalities = false;
  long prime_cutoff = kDefaultPrimeCutoff;
  double tol = 1e-10;
};

Artifact run_constants(const RunConfig& config, const ConstantsArgs& args) {
  std::vector<int> ks;
  if (args.k) {
    ks.push_back(*args.k);
  } else {
    for (int k = 1; k <= kMaxTabulatedH; ++k) ks.push_back(k);
  }

  Json moments = Json::array();
  for (int k : ks) {
    const double a_k = a_factor(k, args.prime_cutoff);
    for (int h = 0; h <= std::min(k, kMaxTabulatedH); ++h) {
      Json row;
      row["k"] = k;
      row["h"] = h;
      row["b_hk"] = b_coeff(h, k).to_string();
      row["a_k"] = a_k;
      row["growth_exponent"] = k * k + 2 * h;
      moments.push_back(row);
    }
  }

  Artifact artifact;
  Json table2 = Json::array();
  for (const RatioTableEntry& e : ratio_table()) {
    Json row;
    row["k"] = e.k;
    row["computed"] = e.computed.to_string();
    row["published"] = e.published.to_string();
    row["match"] = e.matches;
    if (!e.matches) {
      row["relative_difference"] = ((e.computed - e.published) / e.published).to_double();
      artifact.warning = true;
    }
    table2.push_back(row);
  }

  Json classical = Json::array();
  for (const ClassicalMomentConstant& c : classical_constants()) {
    Json row;
    row["name"] = std::string(to_string(c.name));
    row["leading"] = pi_scaled_json(c.leading);
    row["log_power"] = c.log_power;
    classical.push_back(row);
  }

  Json monic = Json::array();
  for (int h = 1; h <= kMaxTabulatedH; ++h) {
    Json factors = Json::array();
    for (const MonicFactor& f : monic_denominator(h)) factors.push_back({{"a", f.odd_a}, {"exponent", f.exponent}});
    monic.push_back({{"h", h}, {"factors", factors}});
  }

  Json inequalities = Json::array();
  if (args.inequalities) {
    for (int k : ks) {
      const QuadratureResult ik = i_integral(k, args.tol);
      Json row;
      row["k"] = k;
      row["I_k"] = ik.value;
      row["I_k_error"] = ik.abs_error_estimate;
      row["ap_constant"] = pi_scaled_json(ap_constant(k));
      inequalities.push_back(row);
    }
  }

  std::ostringstream out;
  switch (config.output_format) {
    case OutputFormat::json: {
      Json j = json_header(config);
      j["moments"] = moments;
      j["table2"] = table2;
      j["classical"] = classical;
      j["monic_denominator"] = monic;
      if (args.inequalities) j["inequalities"] = inequalities;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      out << comment_header(config);
      for (const auto& row : table2) {
        out << "# table2 k=" << row["k"].get<int>() << " computed=" << row["computed"].get<std::string>()
            << " published=" << row["published"].get<std::string>()
            << " match=" << (row["match"].get<bool>() ? "true" : "false") << '\n';
      }
      out << "k,h,b_hk,a_k,growth_exponent\n";
      for (const auto& row : moments) {
        out << row["k"].get<int>() << ',' << row["h"].get<int>() << ',' << row["b_hk"].get<std::string>() << ','
            << format_double(row["a_k"].get<double>()) << ',' << row["growth_exponent"].get<int>() << '\n';
      }
      if (args.inequalities) {
        out << "\nk,I_k,I_k_error,ap_coeff,ap_pi_power,ap_real\n";
        for (const auto& row : inequalities) {
          out << row["k"].get<int>() << ',' << format_double(row["I_k"].get<double>()) << ','
              << format_double(row["I_k_error"].get<double>()) << ','
              << row["ap_constant"]["coeff"].get<std::string>() << ','
              << row["ap_constant"]["pi_power"].get<int>() << ','
              << format_double(row["ap_constant"]["real"].get<double>()) << '\n';
        }
      }
      break;
    }
    case OutputFormat::text: {
      out << comment_header(config);
      for (const auto& row : moments) {
        out << "b(" << row["h"].get<int>() << ',' << row["k"].get<int>() << ") = " << row["b_hk"].get<std::string>()
            << "   a(" << row["k"].get<int>() << ") = " << format_double(row["a_k"].get<double>()) << '\n';
      }
      for (const auto& row : table2) {
        out << "b(0,k)/b(k,k) k=" << row["k"].get<int>() << ": " << row["computed"].get<std::string>()
            << (row["match"].get<bool>() ? "  [matches table]" : "  [DIFFERS from table: " +
                                                                     row["published"].get<std::string>() + "]")
            << '\n';
      }
      for (const auto& row : inequalities) {
        out << "I(" << row["k"].get<int>() << ") = " << format_double(row["I_k"].get<double>())
            << "  ap(" << row["k"].get<int>() << ") = " << row["ap_constant"]["coeff"].get<std::string>()
            << " pi^" << row["ap_constant"]["pi_power"].get<int>() << '\n';
      }
      break;
    }
  }
  artifact.body = out.str();
  return artifact;
}

// ---- bounds ----------------------------------------------------------------

struct BoundRow {
  GapBound bound;
  std::optional<double> published;
  std::string label;
};

Artifact run_bounds(const RunConfig& config, const std::string& method) {
  std::vector<BoundRow> rows;
  const bool all = method == "all";
  if (all || method == "thm21") {
    const GapBound b = unconditional_bound();
    rows.push_back({b, published_value(b.method, b.k, b.h), "Brnetic-Pecaric Wirtinger, k=2 moments"});
  }
  if (all || method == "thm22") {
    for (int k = 2; k <= 7; ++k) {
      const GapBound b = lambda_opial(1, k);
      rows.push_back({b, published_value(b.method, k, 1), "Yang-Opial, h=1"});
    }
  }
  if (all || method == "thm23") {
    for (int k = 3; k <= 7; ++k) {
      const GapBound b = lambda_ap(k);
      rows.push_back({b, published_value(b.method, k, 0), "Agarwal-Pang Wirtinger"});
    }
  }
  if (all || method == "thm24") {
    for (int k = 3; k <= 7; ++k) {
      const GapBound b = lambda_bp(k);
      rows.push_back({b, published_value(b.method, k, 0), "Brnetic-Pecaric Wirtinger"});
    }
  }
  if (all || method == "refs") {
    for (const ReferenceBound& r : reference_bounds()) rows.push_back({r.bound, r.printed, r.label});
  }

  Artifact artifact;
  std::vector<double> diffs;
  for (const BoundRow& r : rows) {
    const double diff = r.published ? std::abs(r.bound.value - *r.published) : std::nan("");
    diffs.push_back(diff);
    if (r.published && diff > published_tolerance(r.bound.method)) artifact.warning = true;
  }

  const bool with_thm21 = all || method == "thm21";
  const double recomputed = with_thm21 ? unconditional_bound_recomputed().value : 0.0;
  std::vector<BestBoundRow> best;
  if (all) best = best_bounds();

  std::ostringstream out;
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  switch (config.output_format) {
    case OutputFormat::csv: {
      out << comment_header(config);
      if (with_thm21) out << "# thm21_recomputed_with_quadrature_I2=" << format_double(recomputed) << '\n';
      for (const BestBoundRow& b : best) {
        out << "# best k=" << b.k << " value=" << format_double(b.best.value) << " method=" << to_string(b.best.method)
            << " h=" << b.best.h << '\n';
      }
      out << "method,k,h,value,conditional,paper_value,abs_diff\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const BoundRow& r = rows[i];
        out << to_string(r.bound.method) << ',' << r.bound.k << ',' << r.bound.h << ',' << format_double(r.bound.value)
            << ',' << (r.bound.conditional ? "true" : "false") << ',' << opt(r.published) << ','
            << (r.published ? format_double(diffs[i]) : std::string()) << '\n';
      }
      break;
    }
    case OutputFormat::json: {
      Json j = json_header(config);
      Json list = Json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const BoundRow& r = rows[i];
        Json row;
        row["method"] = std::string(to_string(r.bound.method));
        row["k"] = r.bound.k;
        row["h"] = r.bound.h;
        row["value"] = r.bound.value;
        row["conditional"] = r.bound.conditional;
        row["paper_value"] = r.published ? Json(*r.published) : Json(nullptr);
        row["abs_diff"] = r.published ? Json(diffs[i]) : Json(nullptr);
        row["label"] = r.label;
        list.push_back(row);
      }
      j["bounds"] = list;
      if (with_thm21) j["thm21_recomputed_with_quadrature_I2"] = recomputed;
      if (all) {
        Json b = Json::array();
        for (const BestBoundRow& row : best) {
          b.push_back({{"k", row.k},
                       {"value", row.best.value},
                       {"method", std::string(to_string(row.best.method))},
                       {"h", row.best.h}});
        }
        j["best"] = b;
      }
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::text: {
      out << comment_header(config);
      out << std::left << std::setw(24) << "method" << std::setw(4) << "k" << std::setw(4) << "h" << std::setw(22)
          << "value" << std::setw(12) << "published" << "label\n";
      for (const BoundRow& r : rows) {
        out << std::left << std::setw(24) << to_string(r.bound.method) << std::setw(4) << r.bound.k << std::setw(4)
            << r.bound.h << std::setw(22) << format_double(r.bound.value) << std::setw(12) << opt(r.published)
            << r.label << '\n';
      }
      if (with_thm21) out << "thm21 with quadrature I(2): " << format_double(recomputed) << '\n';
      for (const BestBoundRow& b : best) {
        out << "best " << (b.k == 0 ? std::string("unconditional") : "k=" + std::to_string(b.k)) << ": "
            << format_double(b.best.value) << " (" << to_string(b.best.method) << ")\n";
      }
      break;
    }
  }
  artifact.body = out.str();
  return artifact;
}

// ---- zeros -----------------------------------------------------------------

struct ZerosArgs {
  double from = 0.0;
  double to = 0.0;
  double grid = 0.25;
  std::optional<std::string> checkpoint;
};

Artifact run_zeros(const RunConfig& config, const ZerosArgs& args) {
  ScanOptions options;
  options.grid_factor = args.grid;
  options.threads = config.threads;
  const ZeroScan scan = args.checkpoint ? find_zeros_resumable(args.from, args.to, options, *args.checkpoint)
                                        : find_zeros(args.from, args.to, options);
  const auto& t = scan.table.ordinates;
  std::optional<GapStatistics> stats;
  if (t.size() >= 2) stats = gap_stats(scan.table);

  Artifact artifact;
  artifact.warning = !scan.audit.ok();

  std::ostringstream out;
  if (config.output_format == OutputFormat::json) {
    Json j = json_header(config);
    Json audit;
    audit["count"] = scan.audit.actual;
    audit["expected_main_term"] = scan.audit.expected;
    audit["allowance"] = scan.audit.allowance;
    audit["deficit"] = scan.audit.deficit;
    audit["excess"] = scan.audit.excess;
    Json suspects = Json::array();
    for (const Interval& s : scan.audit.suspects) suspects.push_back({s.lo, s.hi});
    audit["suspects"] = suspects;
    j["audit"] = audit;
    Json zeros = Json::array();
    for (std::size_t n = 0; n < t.size(); ++n) {
      Json row;
      row["index"] = n + 1;
      row["t"] = t[n];
      if (stats && n + 1 < t.size()) {
        row["gap"] = stats->gaps[n];
        row["r"] = stats->normalized_gaps[n];
      }
      zeros.push_back(row);
    }
    j["zeros"] = zeros;
    if (stats) {
      j["statistics"] = {{"mean_r", stats->mean_gap},
                         {"max_r", stats->max_gap},
                         {"max_r_at", t[stats->max_index]},
                         {"bucket_width", stats->bucket_width},
                         {"histogram", stats->histogram}};
    }
    out << j.dump(2) << '\n';
  } else {
    out << comment_header(config);
    out << "# count=" << scan.audit.actual << " expected_main_term=" << format_double(scan.audit.expected)
        << " allowance=" << format_double(scan.audit.allowance) << " deficit=" << (scan.audit.deficit ? "true" : "false")
        << " excess=" << (scan.audit.excess ? "true" : "false") << " suspects=" << scan.audit.suspects.size() << '\n';
    for (const Interval& s : scan.audit.suspects) {
      out << "# suspect " << format_double(s.lo) << ' ' << format_double(s.hi) << '\n';
    }
    if (stats) {
      out << "# mean_r=" << format_double(stats->mean_gap) << " max_r=" << format_double(stats->max_gap)
          << " max_r_at=" << format_double(t[stats->max_index]) << " (informational)\n";
    }
    out << "index,t,gap,r\n";
    for (std::size_t n = 0; n < t.size(); ++n) {
      out << n + 1 << ',' << format_double(t[n]) << ',';
      if (stats && n + 1 < t.size()) out << format_double(stats->gaps[n]) << ',' << format_double(stats->normalized_gaps[n]);
      else out << ',';
      out << '\n';
    }
  }
  artifact.body = out.str();
  return artifact;
}

// ---- moments ---------------------------------------------------------------

struct MomentsArgs {
  int k = 1;
  int h = 0;
  double T = 5000.0;
  int panels = 400000;
};

Artifact run_moments(const RunConfig& config, const MomentsArgs& args) {
  const EmpiricalMoment m = empirical_moment(args.k, args.h, args.T, args.panels);
  Json row;
  row["k"] = m.k;
  row["h"] = m.h;
  row["lower"] = m.lower;
  row["T"] = m.T;
  row["integral_value"] = m.integral_value;
  row["abs_error"] = m.abs_error;
  row["panels_used"] = m.panels_used;
  row["predicted"] = m.predicted;
  row["ratio"] = m.ratio;
  row["informational"] = true;

  std::ostringstream out;
  if (config.output_format == OutputFormat::json) {
    Json j = json_header(config);
    j["moment"] = row;
    out << j.dump(2) << '\n';
  } else if (config.output_format == OutputFormat::csv) {
    out << comment_header(config) << "k,h,lower,T,integral_value,abs_error,panels_used,predicted,ratio\n"
        << m.k << ',' << m.h << ',' << format_double(m.lower) << ',' << format_double(m.T) << ','
        << format_double(m.integral_value) << ',' << format_double(m.abs_error) << ',' << m.panels_used << ','
        << format_double(m.predicted) << ',' << format_double(m.ratio) << '\n';
  } else {
    out << comment_header(config) << "integral over [" << format_double(m.lower) << ", " << format_double(m.T)
        << "] of |Z|^" << 2 * (m.k - m.h) << " |Z'|^" << 2 * m.h << " = " << format_double(m.integral_value)
        << "\npredicted a(k) b(h,k) T (log T)^" << m.k * m.k + 2 * m.h << " = " << format_double(m.predicted)
        << "\nratio = " << format_double(m.ratio) << " (informational)\n";
  }
  return {out.str(), false};
}

// ---- verify ----------------------------------------------------------------

Artifact run_verify(const RunConfig& config, long trials, const std::string& which) {
  std::vector<Inequality> list;
  if (which == "all" || which == "bp") list.push_back(Inequality::bp);
  if (which == "all" || which == "yang") list.push_back(Inequality::yang);
  if (which == "all" || which == "ap") list.push_back(Inequality::ap);

  Artifact artifact;
  Json summaries = Json::array();
  Json details = Json::array();
  for (Inequality inequality : list) {
    const std::vector<TrialSummary> runs = run_trial_suite(inequality, trials, config.seed, config.threads);
    long total = 0;
    long violations = 0;
    double min_margin = runs.front().min_margin;
    for (const TrialSummary& s : runs) {
      total += s.trials;
      violations += s.violations;
      min_margin = std::min(min_margin, s.min_margin);
      Json d;
      d["inequality"] = std::string(to_string(inequality));
      if (inequality == Inequality::yang) {
        d["m"] = s.parameters.m;
        d["n"] = s.parameters.n;
      } else {
        d["k"] = s.parameters.k;
      }
      d["trials"] = s.trials;
      d["min_margin"] = s.min_margin;
      d["violations"] = s.violations;
      details.push_back(d);
    }
    if (violations > 0) artifact.warning = true;
    summaries.push_back({{"inequality", std::string(to_string(inequality))},
                         {"trials", total},
                         {"min_margin", min_margin},
                         {"violations", violations}});
  }

  std::ostringstream out;
  if (config.output_format == OutputFormat::json) {
    Json j = json_header(config);
    j["summary"] = summaries;
    j["runs"] = details;
    out << j.dump(2) << '\n';
  } else {
    out << comment_header(config) << "inequality,trials,min_margin,violations\n";
    for (const auto& s : summaries) {
      out << s["inequality"].get<std::string>() << ',' << s["trials"].get<long>() << ','
          << format_double(s["min_margin"].get<double>()) << ',' << s["violations"].get<long>() << '\n';
    }
  }
  artifact.body = out.str();
  return artifact;
}

unsigned threads_from_environment() {
  if (const char* env = std::getenv("ZETA_GAPS_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constants, bounds and numerical checks for large gaps between zeta zeros", "zeta_gaps"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");
  app.option_defaults()->always_capture_default();
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  RunConfig config;
  std::string format;
  std::string out_path;
  unsigned threads = 0;
  bool no_timestamp = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "Write the artifact to this file instead of stdout");
  app.add_option("--threads", threads, "Worker cap (default: ZETA_GAPS_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp so identical runs are byte-identical");

  ConstantsArgs constants_args;
  auto* constants = app.add_subcommand("constants", "Moment coefficients, table comparisons, inequality constants");
  constants->add_option("--k", constants_args.k, "Restrict to one moment order")->check(CLI::Range(1, 7));
  constants->add_flag("--inequalities", constants_args.inequalities, "Include I(k) and Agarwal-Pang constants");
  constants->add_option("--prime-cutoff", constants_args.prime_cutoff, "Largest prime in the a(k) product")
      ->check(CLI::Range(2L, 100'000'000L));
  constants->add_option("--tol", constants_args.tol, "Absolute tolerance for I(k)")->check(CLI::Range(1e-15, 1e-6));

  std::string bounds_method = "all";
  auto* bounds = app.add_subcommand("bounds", "Lower bounds for the normalized gap limsup");
  bounds->add_option("--method", bounds_method, "Which bounds to emit")
      ->check(CLI::IsMember({"all", "thm21", "thm22", "thm23", "thm24", "refs"}));

  ZerosArgs zeros_args;
  std::string checkpoint;
  auto* zeros = app.add_subcommand("zeros", "Locate zeros of Z(t) and their normalized gaps");
  zeros->add_option("--from", zeros_args.from, "Start of the scan (>= 10)")->required()->check(CLI::Range(10.0, 1e9));
  zeros->add_option("--to", zeros_args.to, "End of the scan")->required()->check(CLI::Range(10.0, 1e9));
  zeros->add_option("--grid", zeros_args.grid, "Scan step as a fraction of the mean spacing, in (0, 0.5]")
      ->check(CLI::Range(1e-6, 0.5));
  zeros->add_option("--checkpoint", checkpoint, "CSV checkpoint for resuming long scans");

  MomentsArgs moments_args;
  auto* moments = app.add_subcommand("moments", "Empirical mixed moment of Z and Z' on [10, T]");
  moments->add_option("--k", moments_args.k, "Moment order")->required()->check(CLI::Range(1, 3));
  moments->add_option("--h", moments_args.h, "Derivative order")->required()->check(CLI::Range(0, 3));
  moments->add_option("--T", moments_args.T, "Upper limit")->required()->check(CLI::Range(10.5, 1e7));
  moments->add_option("--panels", moments_args.panels, "Quadrature panel budget")->check(CLI::PositiveNumber);

  long trials = 1000;
  std::string inequality = "all";
  auto* verify = app.add_subcommand("verify", "Random-trial check of the functional inequalities");
  verify->add_option("--trials", trials, "Trials per parameter set")->check(CLI::PositiveNumber);
  verify->add_option("--seed", config.seed, "Base seed");
  verify->add_option("--inequality", inequality, "Which inequality")->check(CLI::IsMember({"bp", "yang", "ap", "all"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (zeros->parsed() && zeros_args.to < zeros_args.from) {
      throw CLI::ValidationError("--to", "must not be smaller than --from");
    }
    if (moments->parsed() && moments_args.h > moments_args.k) {
      throw CLI::ValidationError("--h", "must not exceed --k");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  config.timestamp = !no_timestamp;
  config.threads = resolve_threads(threads > 0 ? threads : threads_from_environment());
  if (!out_path.empty()) config.output_path = out_path;

  Artifact artifact;
  try {
    if (constants->parsed()) {
      config.subcommand = "constants";
      config.output_format = format == "csv" ? OutputFormat::csv : format == "text" ? OutputFormat::text : OutputFormat::json;
      config.settings = {{"k", constants_args.k ? std::to_string(*constants_args.k) : "1..7"},
                         {"inequalities", constants_args.inequalities ? "true" : "false"},
                         {"prime_cutoff", std::to_string(constants_args.prime_cutoff)},
                         {"i_integral_tol", format_double(constants_args.tol)}};
      artifact = run_constants(config, constants_args);
    } else if (bounds->parsed()) {
      config.subcommand = "bounds";
      config.output_format = format == "json" ? OutputFormat::json : format == "text" ? OutputFormat::text : OutputFormat::csv;
      config.settings = {{"method", bounds_method}, {"i_integral_tol", format_double(kBoundsQuadratureTol)}};
      artifact = run_bounds(config, bounds_method);
    } else if (zeros->parsed()) {
      config.subcommand = "zeros";
      config.output_format = format == "json" ? OutputFormat::json : format == "text" ? OutputFormat::text : OutputFormat::csv;
      if (!checkpoint.empty()) zeros_args.checkpoint = checkpoint;
      config.settings = {{"from", format_double(zeros_args.from)},
                         {"to", format_double(zeros_args.to)},
                         {"grid", format_double(zeros_args.grid)},
                         {"refine_tolerance", format_double(ScanOptions{}.refine_tolerance)},
                         {"checkpoint", checkpoint.empty() ? "none" : checkpoint}};
      artifact = run_zeros(config, zeros_args);
    } else if (moments->parsed()) {
      config.subcommand = "moments";
      config.output_format = format == "csv" ? OutputFormat::csv : format == "text" ? OutputFormat::text : OutputFormat::json;
      config.settings = {{"k", std::to_string(moments_args.k)},
                         {"h", std::to_string(moments_args.h)},
                         {"T", format_double(moments_args.T)},
                         {"lower", format_double(kRegimeStart)},
                         {"panels", std::to_string(moments_args.panels)},
                         {"quadrature_rel_tol", "1e-08"},
                         {"derivative_step", "0.0001"},
                         {"prime_cutoff", std::to_string(kDefaultPrimeCutoff)}};
      artifact = run_moments(config, moments_args);
    } else if (verify->parsed()) {
      config.subcommand = "verify";
      config.output_format = format == "csv" || format == "text" ? OutputFormat::csv : OutputFormat::json;
      config.settings = {{"trials", std::to_string(trials)},
                         {"inequality", inequality},
                         {"margin_quadrature_tol", format_double(kMarginQuadratureTol)},
                         {"violation_floor", format_double(kViolationFloor)}};
      artifact = run_verify(config, trials, inequality);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  if (config.output_path) {
    std::ofstream file(*config.output_path);
    if (!file) {
      err << "error: cannot write " << *config.output_path << '\n';
      return kExitError;
    }
    file << artifact.body;
  } else {
    out << artifact.body;
  }
  if (artifact.warning) {
    err << "warning: computed values disagree with a reference check; see the artifact\n";
    return kExitWarning;
  }
  return kExitOk;
}

}  // namespace zetagaps
