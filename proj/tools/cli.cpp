#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "kroots/kroots.hpp"

namespace kroots::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  int max_n = kDefaultMaxN;
  std::vector<int> theorem1_k{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  std::vector<int> scharf_k{1, 2, 3, 4, 6, 12};
};

// default < config file < KROOTS_MAX_N < --max-n
Settings resolve_settings(const std::string& config_path, std::optional<int> max_n_flag) {
  Settings s;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw UsageError("cannot open config file " + config_path);
    nlohmann::json cfg;
    try {
      cfg = nlohmann::json::parse(in);
      if (cfg.contains("max_n")) s.max_n = cfg.at("max_n").get<int>();
      if (cfg.contains("theorem1_k")) s.theorem1_k = cfg.at("theorem1_k").get<std::vector<int>>();
      if (cfg.contains("scharf_k")) s.scharf_k = cfg.at("scharf_k").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("bad config file " + config_path + ": " + e.what());
    }
  }
  if (const char* env = std::getenv("KROOTS_MAX_N"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      s.max_n = std::stoi(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("KROOTS_MAX_N is not an integer: ") + env);
    }
  }
  if (max_n_flag) s.max_n = *max_n_flag;
  return s;
}

void check_cap(int n, const Settings& s, bool force) {
  if (n < 1) throw UsageError("n must be at least 1");
  if (n > kMaxEnumerationN) {
    throw UsageError("n = " + std::to_string(n) + " exceeds the hard enumeration limit " +
                     std::to_string(kMaxEnumerationN));
  }
  if (n > s.max_n && !force) {
    throw UsageError("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                     std::to_string(s.max_n) + " (use --force or raise KROOTS_MAX_N)");
  }
}

Partition parse_partition_arg(const std::string& text, const char* flag) {
  try {
    return parse_partition(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void require_same_size(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw UsageError("partitions " + a.to_string() + " and " + b.to_string() + " have different sizes");
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void write_reports(const std::vector<Report>& reports, const std::string& format, std::ostream& out) {
  if (format == "json") {
    if (reports.size() == 1) {
      out << reports.front().to_json(2) << '\n';
    } else {
      out << reports_to_json(reports, 2) << '\n';
    }
  } else if (format == "csv") {
    out << "check,n,k,class,detail,lhs,rhs,pass\n";
    for (const auto& r : reports) {
      for (const auto& row : r.rows) {
        out << r.check << ',' << r.n << ',' << (r.k ? std::to_string(*r.k) : "") << ','
            << csv_field(row.cls.to_string()) << ',' << csv_field(row.detail) << ',' << row.lhs << ','
            << row.rhs << ',' << (row.pass ? "true" : "false") << '\n';
      }
    }
  } else {
    for (const auto& r : reports) {
      const auto passed = std::count_if(r.rows.begin(), r.rows.end(), [](const ReportRow& x) { return x.pass; });
      out << r.check << " n=" << r.n;
      if (r.k) out << " k=" << *r.k;
      out << ": " << (r.all_pass() ? "PASS" : "FAIL") << " (" << passed << "/" << r.rows.size() << " rows)\n";
      for (const auto& row : r.rows) {
        out << "  " << (row.pass ? "ok  " : "FAIL") << " class=" << row.cls.to_string();
        if (!row.detail.empty()) out << " detail=" << row.detail;
        out << " lhs=" << row.lhs << " rhs=" << row.rhs << '\n';
      }
    }
  }
}

// Runs independent sweep units concurrently; output order is the input order.
std::vector<Report> run_all(std::vector<std::function<Report()>> jobs) {
  std::vector<std::future<Report>> futures;
  futures.reserve(jobs.size());
  for (auto& job : jobs) futures.push_back(std::async(std::launch::async, std::move(job)));
  std::vector<Report> reports;
  reports.reserve(futures.size());
  for (auto& f : futures) reports.push_back(f.get());
  return reports;
}

Report merged_descent_report(int n) {
  Report merged{"descents", n, std::nullopt, {}};
  for (const auto& lambda : partitions_of(n)) {
    auto r = verify_descent_distribution(lambda);
    merged.rows.insert(merged.rows.end(), r.rows.begin(), r.rows.end());
  }
  merged.sort_rows();
  return merged;
}

std::vector<std::function<Report()>> verify_jobs(const std::string& target, int n, std::optional<int> k,
                                                 const Settings& s) {
  std::vector<std::function<Report()>> jobs;
  const bool all = target == "all";
  if (k && *k < 0) throw UsageError("--k must be nonnegative");
  if (all || target == "theorem1") {
    for (int kk : k ? std::vector<int>{*k} : s.theorem1_k) jobs.push_back([n, kk] { return verify_theorem1(n, kk); });
  }
  if (all || target == "scharf") {
    for (int kk : k ? std::vector<int>{*k} : s.scharf_k) jobs.push_back([n, kk] { return verify_scharf(n, kk); });
  }
  if (all || target == "descents") jobs.push_back([n] { return merged_descent_report(n); });
  if (all || target == "gelfand") jobs.push_back([n] { return verify_gelfand(n); });
  if (all || target == "rsk") {
    if (k && 2 * *k > n && !all) throw UsageError("rsk requires 0 <= k <= n/2");
    if (k && 2 * *k <= n) {
      jobs.push_back([n, kk = *k] { return verify_rsk_remark(n, kk); });
    } else {
      for (int kk = 0; 2 * kk <= n; ++kk) jobs.push_back([n, kk] { return verify_rsk_remark(n, kk); });
    }
  }
  return jobs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-th roots of permutations and mu-unimodal character sums", "kroots"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<int> max_n_flag;
  bool force = false;
  app.add_option("--config", config_path, "JSON config file (max_n, theorem1_k, scharf_k)");
  app.add_option("--max-n", max_n_flag, "Enumeration cap (default 8)");
  app.add_flag("--force", force, "Allow n above the enumeration cap");

  // roots
  auto* roots_cmd = app.add_subcommand("roots", "Count k-th roots of a permutation two ways");
  int roots_k = 0;
  std::string roots_pi;
  std::string roots_mu;
  std::optional<int> roots_n;
  std::string roots_format = "text";
  roots_cmd->add_option("--k", roots_k, "Root exponent k >= 0")->required();
  auto* pi_opt = roots_cmd->add_option("--pi", roots_pi, "Permutation, e.g. 5,3,6,8,7,1,4,2 or 213");
  auto* mu_opt = roots_cmd->add_option("--mu", roots_mu, "Cycle type, e.g. 4,3,1");
  pi_opt->excludes(mu_opt);
  roots_cmd->add_option("--n", roots_n, "Degree (checked against --pi / --mu)");
  roots_cmd->add_option("--format", roots_format)->check(CLI::IsMember({"text", "json"}));

  // char
  auto* char_cmd = app.add_subcommand("char", "Irreducible or induced character value");
  std::string char_shape;
  std::string char_lambda;
  std::string char_mu;
  std::string char_rule = "unimodal";
  std::string char_method = "induced";
  auto* shape_opt = char_cmd->add_option("--shape", char_shape, "Irreducible index nu");
  auto* lambda_opt = char_cmd->add_option("--lambda", char_lambda, "Induced character index lambda");
  shape_opt->excludes(lambda_opt);
  char_cmd->add_option("--mu", char_mu, "Class (cycle type)")->required();
  char_cmd->add_option("--rule", char_rule)->check(CLI::IsMember({"unimodal", "mn"}));
  char_cmd->add_option("--method", char_method)->check(CLI::IsMember({"induced", "unimodal"}));

  // psi
  auto* psi_cmd = app.add_subcommand("psi", "Induced character psi^lambda at a class");
  std::string psi_lambda;
  std::string psi_mu;
  std::string psi_method = "induced";
  psi_cmd->add_option("--lambda", psi_lambda)->required();
  psi_cmd->add_option("--mu", psi_mu)->required();
  psi_cmd->add_option("--method", psi_method)->check(CLI::IsMember({"induced", "unimodal"}));

  // table
  auto* table_cmd = app.add_subcommand("table", "Export a character table as JSON");
  std::string table_kind;
  std::string table_index;
  std::optional<int> table_n;
  table_cmd->add_option("--kind", table_kind)->required()->check(CLI::IsMember({"chi", "psi", "theta"}));
  table_cmd->add_option("--index", table_index, "Partition for chi/psi, k for theta")->required();
  table_cmd->add_option("--n", table_n, "Degree (theta only)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run verification sweeps");
  std::string verify_target;
  int verify_n = 0;
  std::optional<int> verify_k;
  std::string verify_format = "json";
  verify_cmd->add_option("target", verify_target)
      ->required()
      ->check(CLI::IsMember({"theorem1", "scharf", "descents", "gelfand", "rsk", "all"}));
  verify_cmd->add_option("--n", verify_n)->required();
  verify_cmd->add_option("--k", verify_k);
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAllPass : kUsageError;
  }

  try {
    const auto settings = resolve_settings(config_path, max_n_flag);

    if (roots_cmd->parsed()) {
      if (roots_k < 0) throw UsageError("--k must be nonnegative");
      Permutation pi;
      if (!roots_pi.empty()) {
        try {
          pi = parse_permutation(roots_pi);
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--pi: ") + e.what());
        }
      } else if (!roots_mu.empty()) {
        pi = canonical_permutation(parse_partition_arg(roots_mu, "--mu"));
      } else {
        throw UsageError("roots needs --pi or --mu");
      }
      if (roots_n && *roots_n != pi.size()) throw UsageError("--n does not match the permutation size");
      check_cap(pi.size(), settings, force);
      const auto mu = cycle_type(pi);
      const auto lhs = theta(roots_k, pi);
      const auto rhs = rhs_signed_sum(roots_k, mu);
      if (roots_format == "json") {
        ordered_json j;
        j["n"] = pi.size();
        j["k"] = roots_k;
        j["pi"] = pi.to_string();
        j["class"] = mu.to_string();
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        j["match"] = lhs == rhs;
        out << j.dump() << '\n';
      } else {
        out << "lhs=" << lhs << " rhs=" << rhs << " match=" << (lhs == rhs ? "true" : "false") << '\n';
      }
      return lhs == rhs ? kAllPass : kMismatch;
    }

    if (char_cmd->parsed() || psi_cmd->parsed()) {
      const bool is_psi = psi_cmd->parsed() || !char_lambda.empty();
      const auto mu = parse_partition_arg(psi_cmd->parsed() ? psi_mu : char_mu, "--mu");
      if (is_psi) {
        const auto lambda = parse_partition_arg(psi_cmd->parsed() ? psi_lambda : char_lambda, "--lambda");
        const auto& method = psi_cmd->parsed() ? psi_method : char_method;
        require_same_size(lambda, mu);
        check_cap(mu.size(), settings, force);
        out << (method == "induced" ? induced_character(lambda).at(mu) : psi_via_unimodal(lambda, mu)) << '\n';
      } else {
        if (char_shape.empty()) throw UsageError("char needs --shape or --lambda");
        const auto nu = parse_partition_arg(char_shape, "--shape");
        require_same_size(nu, mu);
        out << (char_rule == "mn" ? mn_character(nu, mu) : unimodal_character(nu, mu)) << '\n';
      }
      return kAllPass;
    }

    if (table_cmd->parsed()) {
      if (table_kind == "theta") {
        if (!table_n) throw UsageError("--kind theta needs --n");
        int k = 0;
        try {
          k = std::stoi(table_index);
        } catch (const std::exception&) {
          throw UsageError("--index must be k for --kind theta");
        }
        if (k < 0) throw UsageError("--index must be nonnegative");
        check_cap(*table_n, settings, force);
        out << theta_function(k, *table_n).to_json("theta", std::to_string(k)) << '\n';
      } else {
        const auto index = parse_partition_arg(table_index, "--index");
        if (table_n && *table_n != index.size()) throw UsageError("--n does not match --index");
        if (table_kind == "psi") {
          check_cap(index.size(), settings, force);
          out << induced_character(index).to_json("psi", index.to_string()) << '\n';
        } else {
          out << irreducible_character(index).to_json("chi", index.to_string()) << '\n';
        }
      }
      return kAllPass;
    }

    // verify
    check_cap(verify_n, settings, force);
    const auto reports = run_all(verify_jobs(verify_target, verify_n, verify_k, settings));
    write_reports(reports, verify_format, out);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.all_pass(); });
    return ok ? kAllPass : kMismatch;
  } catch (const UsageError& e) {
    err << "kroots: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "kroots: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace kroots::cli
