// catalg: invariants, cross-checks and presentation verification for the
// order-preserving / order-decreasing partial-map monoid algebras.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource limit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catalg/enumeration.hpp"
#include "catalg/errors.hpp"
#include "catalg/report.hpp"

namespace {

using namespace catalg;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonArgs {
  std::string family;
  int n = -1;
  std::string format = "json";
  std::string out;
  std::optional<int> max_n;
  bool with_homs = false;
};

int default_cap(const std::string& command, Family f) {
  if (command == "verify-presentation") return f == Family::PO ? 5 : 4;
  return f == Family::PO ? 6 : 5;
}

int resolve_cap(const std::string& command, Family f, const std::optional<int>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("CATALG_MAX_N"); env && *env) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("CATALG_MAX_N is not an integer: ") + env);
  }
  return default_cap(command, f);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out);
  if (!file) throw UsageError("cannot write " + out);
  file << text;
}

std::string render(const Report& r, const std::string& format) {
  if (format == "json") return to_json(r).dump(2) + "\n";
  if (format == "csv") return to_csv(r);
  return to_text(r);
}

Family family_arg(const std::string& s) {
  try {
    return parse_family(s);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown family '" + s + "' (expected po, pf or pc)");
  }
}

int run_report(const std::string& command, const CommonArgs& args) {
  const Family f = family_arg(args.family);
  if (args.n < 0) throw UsageError("--n must be non-negative");
  const int cap = resolve_cap(command, f, args.max_n);
  if (args.n > cap) {
    throw ResourceLimit("n = " + std::to_string(args.n) + " exceeds the cap " + std::to_string(cap) +
                        " (raise with --max-n or CATALG_MAX_N)");
  }
  if (args.n > kMaxAmbient) throw ResourceLimit("n exceeds the supported ambient size " + std::to_string(kMaxAmbient));
  ReportOptions options;
  options.limits.max_n = std::max(cap, args.n);
  options.with_homs = args.with_homs;

  Report r;
  if (command == "invariants") {
    r = invariants_report(f, args.n, options);
  } else if (command == "crosscheck") {
    r = crosscheck_report(f, args.n, options);
  } else {
    r = presentation_report(f, args.n, options);
  }
  emit(render(r, args.format), args.out);
  if (!r.passed) {
    for (const auto& c : r.checks) {
      if (!c.pass) std::cerr << "check failed: " << c.name << ": " << c.detail << '\n';
    }
    if (r.presentation && !r.presentation->passed) std::cerr << "presentation verification failed\n";
    return kCheckFailed;
  }
  return kOk;
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::string body = s;
  if (!body.empty() && (body.front() == '{' || body.front() == '(')) body = body.substr(1);
  if (!body.empty() && (body.back() == '}' || body.back() == ')')) body.pop_back();
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + s + "'");
    }
  }
  return out;
}

SubsetOfN subset_arg(int n, const std::string& s) {
  try {
    const auto elems = parse_list(s);
    return SubsetOfN(n, std::span<const int>(elems));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad subset '") + s + "': " + e.what());
  }
}

struct CountArgs {
  std::string family;
  int n = -1;
  std::string dom;
  std::string cod;
  std::string boundary;
  std::string format = "json";
  std::string out;
};

int run_count(const CountArgs& args, bool has_dom, bool has_cod, bool has_boundary) {
  nlohmann::json j = {{"schema", kReportSchema}, {"command", "count"}};
  bool pass = true;
  if (has_boundary) {
    if (has_dom || has_cod) throw UsageError("use either --boundary or --dom/--cod");
    LatticePath path;
    try {
      path = LatticePath(parse_list(args.boundary));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (path.length() > static_cast<std::size_t>(kMaxAmbient)) throw ResourceLimit("boundary too long");
    const auto det = paths_below_det(path);
    const auto dp = paths_below_dp(path);
    pass = det == dp;
    j["boundary"] = path.steps();
    j["determinant"] = bigint_to_json(det);
    j["dynamic_programming"] = bigint_to_json(dp);
  } else {
    if (!has_dom || !has_cod) throw UsageError("count needs --dom and --cod, or --boundary");
    const Family f = family_arg(args.family);
    if (args.n < 0) throw UsageError("--n must be non-negative");
    if (args.n > kMaxAmbient) throw ResourceLimit("n exceeds the supported ambient size");
    const auto a = subset_arg(args.n, args.dom);
    const auto b = subset_arg(args.n, args.cod);
    const BigInt closed = f == Family::PO   ? count_onto_op(a.size(), b.size())
                          : f == Family::PC ? cartan_entry_ec(a, b)
                                            : cartan_entry_ef(a, b);
    const BigInt direct(enumerate_hom(f, a, b).size());
    pass = closed == direct;
    j["family"] = to_string(f);
    j["n"] = args.n;
    j["dom"] = a.to_string();
    j["cod"] = b.to_string();
    j["closed_form"] = bigint_to_json(closed);
    j["direct"] = bigint_to_json(direct);
  }
  j["passed"] = pass;

  std::string text;
  if (args.format == "json") {
    text = j.dump(2) + "\n";
  } else if (args.format == "csv") {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      os << (first ? "" : ",") << k;
      first = false;
    }
    os << '\n';
    first = true;
    for (const auto& [k, v] : j.items()) {
      std::string s = v.is_string() ? v.get<std::string>() : v.dump();
      if (s.find(',') != std::string::npos) s = "\"" + s + "\"";
      os << (first ? "" : ",") << s;
      first = false;
    }
    os << '\n';
    text = os.str();
  } else {
    std::ostringstream os;
    for (const auto& [k, v] : j.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    text = os.str();
  }
  emit(text, args.out);
  return pass ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catalg: algebras of order-preserving and order-decreasing partial-map monoids"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"json", "csv", "text"};
  CommonArgs common[3];
  const char* names[3] = {"invariants", "crosscheck", "verify-presentation"};
  const char* help[3] = {"Loewy length, blocks, quiver, Cartan matrix and radical dimensions",
                         "Compare every closed form with a direct count",
                         "Check that the generators and relations present the category"};
  CLI::App* subs[3];
  for (int i = 0; i < 3; ++i) {
    auto* sub = app.add_subcommand(names[i], help[i]);
    sub->add_option("--family", common[i].family, "po, pf or pc")->required();
    sub->add_option("--n", common[i].n, "ambient size")->required();
    sub->add_option("--format", common[i].format, "json, csv or text")->check(CLI::IsMember(formats));
    sub->add_option("--out", common[i].out, "write to this file instead of standard output");
    sub->add_option_function<int>("--max-n", [&, i](int v) { common[i].max_n = v; }, "size cap (overrides CATALG_MAX_N)");
    sub->add_flag("--with-homs", common[i].with_homs, "include every hom-set as value tables");
    subs[i] = sub;
  }

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Closed-form hom-set count or lattice-path count");
  count_cmd->add_option("--family", count.family, "po, pf or pc");
  count_cmd->add_option("--n", count.n, "ambient size");
  auto* dom_opt = count_cmd->add_option("--dom", count.dom, "domain subset, e.g. 1,2,3");
  auto* cod_opt = count_cmd->add_option("--cod", count.cod, "codomain subset, e.g. 1,2");
  auto* boundary_opt = count_cmd->add_option("--boundary", count.boundary, "lattice path, e.g. 1,1,2,3");
  count_cmd->add_option("--format", count.format, "json, csv or text")->check(CLI::IsMember(formats));
  count_cmd->add_option("--out", count.out, "write to this file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    for (int i = 0; i < 3; ++i) {
      if (subs[i]->parsed()) return run_report(names[i], common[i]);
    }
    return run_count(count, dom_opt->count() > 0, cod_opt->count() > 0, boundary_opt->count() > 0);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}
