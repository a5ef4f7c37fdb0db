#pragma once

// glaisher <count|expand|verify|density> [options]
//
// Exit codes: 0 all checks pass, 1 mathematical mismatch, 2 usage/config error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "glaisher/glaisher.hpp"
#include "glaisher/partitions.hpp"
#include "glaisher/series.hpp"

namespace glaisher::cli {

using json = nlohmann::ordered_json;

inline constexpr std::int64_t kCeiling = 5000;
inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

enum class Format { json, csv, text };

struct RunConfig {
  std::string command;
  int m = 0;
  std::string family;
  std::string series;
  std::string theorem;
  std::optional<int> j;
  std::int64_t n_max = 200;
  std::int64_t precision = 200;
  std::optional<std::int64_t> n_sum;
  std::optional<std::string> route;
  std::int64_t x = 1000;
  Format format = Format::text;
  std::string out_path;
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string body;
  int exit_code = kExitPass;
};

namespace detail {

inline void check_range(std::int64_t v, std::int64_t lo, const char* name) {
  if (v < lo || v > kCeiling) {
    throw usage_error(std::string("--") + name + " must lie in [" + std::to_string(lo) + ", " +
                      std::to_string(kCeiling) + "], got " + std::to_string(v));
  }
}

struct Row {
  std::int64_t n;
  std::string value;
};

inline std::string render_rows(Format format, json header, const std::vector<Row>& rows) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      json arr = json::array();
      for (const auto& r : rows) arr.push_back(json{{"n", r.n}, {"value", r.value}});
      header["rows"] = std::move(arr);
      os << header.dump(2) << '\n';
      break;
    }
    case Format::csv:
      os << "n,value\n";
      for (const auto& r : rows) os << r.n << ',' << r.value << '\n';
      break;
    case Format::text:
      os << "#";
      for (const auto& [k, v] : header.items()) os << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
      os << '\n';
      for (const auto& r : rows) os << r.n << ' ' << r.value << '\n';
      break;
  }
  return os.str();
}

inline std::vector<Row> series_rows(const IntSeries& s) {
  std::vector<Row> rows;
  for (std::size_t n = 0; n <= s.precision(); ++n) rows.push_back({static_cast<std::int64_t>(n), to_string(s[n])});
  return rows;
}

inline std::string paint(const std::string& s, bool ok, bool color) {
  if (!color) return s;
  return std::string(ok ? "\x1b[32m" : "\x1b[31m") + s + "\x1b[0m";
}

}  // namespace detail

inline Output run_count(const RunConfig& cfg) {
  const auto family = parse_family(cfg.family);
  if (!family) throw usage_error("unknown family '" + cfg.family + "' (expected A, B, Bj, C, D)");
  if ((*family == Family::Bj) != cfg.j.has_value()) throw usage_error("--j is required for family Bj and only for Bj");
  detail::check_range(cfg.n_max, 0, "n-max");
  const FamilySpec spec{*family, cfg.m, cfg.j};
  try {
    spec.validate();
  } catch (const domain_error& e) {
    throw usage_error(e.what());
  }
  const auto table = count_table(spec, cfg.n_max);
  std::vector<detail::Row> rows;
  for (std::int64_t n = 0; n <= cfg.n_max; ++n) rows.push_back({n, to_string(table.counts[static_cast<std::size_t>(n)])});
  json header{{"command", "count"}, {"family", cfg.family}, {"m", cfg.m}};
  header["j"] = cfg.j ? json(*cfg.j) : json(nullptr);
  header["n_max"] = cfg.n_max;
  return {detail::render_rows(cfg.format, std::move(header), rows), kExitPass};
}

inline Output run_expand(const RunConfig& cfg) {
  static const std::vector<std::string> kSeries{"A", "B", "Bj-lhs", "C", "D", "epsilon", "P"};
  if (std::find(kSeries.begin(), kSeries.end(), cfg.series) == kSeries.end()) {
    throw usage_error("unknown series '" + cfg.series + "' (expected A, B, Bj-lhs, C, D, epsilon, P)");
  }
  if (cfg.route && cfg.series != "epsilon") throw usage_error("--route only applies to --series epsilon");
  if (cfg.n_sum && cfg.series != "Bj-lhs") throw usage_error("--N-sum only applies to --series Bj-lhs");
  if (cfg.m < 2) throw usage_error("--m must be at least 2");
  detail::check_range(cfg.precision, 0, "precision");
  const auto prec = static_cast<std::size_t>(cfg.precision);

  std::optional<EpsilonRoute> route;
  if (cfg.series == "epsilon") {
    route = parse_route(cfg.route.value_or("triangular"));
    if (!route) throw usage_error("unknown route '" + *cfg.route + "'");
    if (!route_valid_for(*route, cfg.m)) throw usage_error("route " + *cfg.route + " requires m = 3");
  }
  if (cfg.n_sum && *cfg.n_sum < 0) throw usage_error("--N-sum must be non-negative");

  IntSeries s = [&] {
    if (cfg.series == "A") return gf_regular(cfg.m, RegularForm::A_product, prec);
    if (cfg.series == "B") return gf_regular(cfg.m, RegularForm::B_product, prec);
    if (cfg.series == "Bj-lhs") return gf_Bj_lhs(cfg.m, cfg.n_sum ? Count(*cfg.n_sum) : kInfinite, prec);
    if (cfg.series == "C") return gf_C(cfg.m, prec);
    if (cfg.series == "D") return gf_D(cfg.m, prec);
    if (cfg.series == "P") return p_polynomial(cfg.m);
    return epsilon(cfg.m, prec, *route);
  }();

  json header{{"command", "expand"}, {"series", cfg.series}, {"m", cfg.m},
              {"precision", static_cast<std::int64_t>(s.precision())}};
  header["route"] = route ? json(to_string(*route)) : json(nullptr);
  if (cfg.series == "Bj-lhs") header["N_sum"] = cfg.n_sum ? json(*cfg.n_sum) : json("inf");
  return {detail::render_rows(cfg.format, std::move(header), detail::series_rows(s)), kExitPass};
}

/// The verify report in its canonical JSON form.
inline json report_json(const IdentityReport& r) {
  json out;
  out["theorem"] = r.theorem;
  out["m"] = r.m;
  out["range"] = json::array({r.range_lo, r.range_hi});
  out["status"] = r.pass ? "pass" : "fail";
  if (r.first_failure) {
    out["first_failure"] = json{{"n", r.first_failure->n}, {"lhs", r.first_failure->lhs}, {"rhs", r.first_failure->rhs}};
  } else {
    out["first_failure"] = nullptr;
  }
  out["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed.count());
  out["routes"] = r.routes;
  return out;
}

inline Output run_verify(const RunConfig& cfg, bool color) {
  const auto theorem = parse_theorem(cfg.theorem);
  if (!theorem) throw usage_error("unknown theorem '" + cfg.theorem + "'");
  if (cfg.m < 2) throw usage_error("--m must be at least 2");
  if ((*theorem == Theorem::T1_5 || *theorem == Theorem::T1_6) && cfg.m != 3) {
    throw usage_error(cfg.theorem + " requires --m 3");
  }
  detail::check_range(cfg.n_max, 0, "n-max");
  detail::check_range(cfg.precision, 0, "precision");
  VerifyOptions opts;
  opts.n_max = cfg.n_max;
  opts.precision = cfg.precision;
  if (*theorem == Theorem::T1_9) {
    opts.n_sum = cfg.n_sum.value_or(1);
    if (opts.n_sum < 1) throw usage_error("--N-sum must be positive for T1.9");
  } else if (cfg.n_sum) {
    throw usage_error("--N-sum only applies to T1.9");
  }
  if (cfg.route) {
    if (*theorem != Theorem::T1_4 && *theorem != Theorem::T1_8) throw usage_error("--route applies to T1.4 and T1.8");
    const auto r = parse_route(*cfg.route);
    if (!r) throw usage_error("unknown route '" + *cfg.route + "'");
    if (!route_valid_for(*r, cfg.m)) throw usage_error("route " + *cfg.route + " requires m = 3");
    opts.routes = {*r};
  }

  const auto report = verify(*theorem, cfg.m, opts);
  std::ostringstream os;
  switch (cfg.format) {
    case Format::json: os << report_json(report).dump(2) << '\n'; break;
    case Format::csv:
      os << "theorem,m,range_lo,range_hi,status,failure_n,lhs,rhs,elapsed_ms\n"
         << report.theorem << ',' << report.m << ',' << report.range_lo << ',' << report.range_hi << ','
         << (report.pass ? "pass" : "fail") << ',';
      if (report.first_failure) {
        os << report.first_failure->n << ',' << report.first_failure->lhs << ',' << report.first_failure->rhs;
      } else {
        os << ",,";
      }
      os << ',' << report.elapsed.count() << '\n';
      break;
    case Format::text:
      os << report.theorem << " m=" << report.m << " range=[" << report.range_lo << ", " << report.range_hi
         << "]: " << detail::paint(report.pass ? "PASS" : "FAIL", report.pass, color) << " (" << report.elapsed.count()
         << " ms)\n";
      if (report.first_failure) {
        os << "  first failure at n=" << report.first_failure->n << ": " << report.first_failure->lhs << " vs "
           << report.first_failure->rhs << '\n';
      }
      for (const auto& r : report.routes) os << "  " << r << '\n';
      break;
  }
  return {os.str(), report.pass ? kExitPass : kExitMismatch};
}

inline Output run_density(const RunConfig& cfg, bool color) {
  if (cfg.m < 2) throw usage_error("--m must be at least 2");
  detail::check_range(cfg.x, 1, "x");
  const auto s = density_report(cfg.m, cfg.x);
  std::ostringstream decimal;
  decimal << std::fixed << std::setprecision(6) << s.ratio();
  const bool ok = s.bound_satisfied && s.consistent;

  std::ostringstream os;
  switch (cfg.format) {
    case Format::json: {
      json out;
      out["m"] = s.m;
      out["x"] = s.x;
      out["nonzero_count"] = s.nonzero_count;
      out["N_x"] = s.n_x;
      out["ratio"] = s.ratio_fraction();
      out["ratio_decimal"] = decimal.str();
      out["window_bound"] = to_string(s.window_bound);
      out["p_support"] = s.p_support;
      out["bound_satisfied"] = s.bound_satisfied;
      out["consistent"] = s.consistent;
      os << out.dump(2) << '\n';
      break;
    }
    case Format::csv:
      os << "m,x,nonzero_count,N_x,ratio,ratio_decimal,window_bound,p_support,bound_satisfied,consistent\n"
         << s.m << ',' << s.x << ',' << s.nonzero_count << ',' << s.n_x << ',' << s.ratio_fraction() << ','
         << decimal.str() << ',' << s.window_bound << ',' << s.p_support << ',' << std::boolalpha << s.bound_satisfied
         << ',' << s.consistent << '\n';
      break;
    case Format::text:
      os << "m=" << s.m << " x=" << s.x << '\n'
         << "nonzero_count " << s.nonzero_count << '\n'
         << "N_x " << s.n_x << '\n'
         << "ratio " << s.ratio_fraction() << " (" << decimal.str() << ")\n"
         << "window_bound " << s.window_bound << '\n'
         << "bound_satisfied " << detail::paint(s.bound_satisfied ? "true" : "false", s.bound_satisfied, color) << '\n'
         << "consistent " << detail::paint(s.consistent ? "true" : "false", s.consistent, color) << '\n';
      break;
  }
  return {os.str(), ok ? kExitPass : kExitMismatch};
}

inline Output dispatch(const RunConfig& cfg, bool color) {
  if (cfg.command == "count") return run_count(cfg);
  if (cfg.command == "expand") return run_expand(cfg);
  if (cfg.command == "verify") return run_verify(cfg, color);
  if (cfg.command == "density") return run_density(cfg, color);
  throw usage_error("unknown command '" + cfg.command + "'");
}

/// Parses argv, runs the command and writes its output. `color` enables ANSI status colors in text output.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color = false) {
  CLI::App app{"Exact partition counts and q-series identities around Glaisher's theorem", "glaisher"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "modulus m >= 2")->required();
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", cfg.out_path, "write output to PATH instead of stdout");
  };
  auto* count = app.add_subcommand("count", "tabulate a partition family");
  common(count);
  count->add_option("--family", cfg.family, "A, B, Bj, C or D")->required();
  count->add_option("--j", cfg.j, "residue class for family Bj");
  count->add_option("--n-max", cfg.n_max, "largest n (default 200)");

  auto* expand = app.add_subcommand("expand", "expand a generating function");
  common(expand);
  expand->add_option("--series", cfg.series, "A, B, Bj-lhs, C, D, epsilon or P")->required();
  expand->add_option("--precision", cfg.precision, "largest exponent (default 200)");
  expand->add_option("--N-sum", cfg.n_sum, "outer sum length for Bj-lhs (default infinite)");
  expand->add_option("--route", cfg.route, "epsilon route: definition, triangular, qbinomial, identity, closed3");

  auto* ver = app.add_subcommand("verify", "check one identity");
  common(ver);
  ver->add_option("--theorem", cfg.theorem, "T1.2, E1.4, T1.3, T1.4, T1.5, T1.6, T1.8, T1.9, C1.10")->required();
  ver->add_option("--n-max", cfg.n_max, "largest n (default 200)");
  ver->add_option("--precision", cfg.precision, "series precision (default 200)");
  ver->add_option("--N-sum", cfg.n_sum, "finite sum length for T1.9 (default 1)");
  ver->add_option("--route", cfg.route, "restrict epsilon to one route (T1.4, T1.8)");

  auto* dens = app.add_subcommand("density", "scan the exceptional set of m*C_m(n) = D_m(n)");
  common(dens);
  dens->add_option("--x", cfg.x, "scan n < x (default 1000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

  Output result;
  try {
    result = dispatch(cfg, color && cfg.out_path.empty());
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.out_path.empty()) {
    out << result.body;
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << " for writing\n";
      return kExitUsage;
    }
    file << result.body;
  }
  return result.exit_code;
}

}  // namespace glaisher::cli
