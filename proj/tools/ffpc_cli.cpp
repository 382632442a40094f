// Point counts on Dwork hypersurfaces over F_q by several routes, and the identity suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ffpc/characters.hpp"
#include "ffpc/dwork.hpp"
#include "ffpc/field.hpp"
#include "ffpc/report.hpp"
#include "ffpc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

struct FieldArgs {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  bool generator_alt = false;
};

struct CountArgs {
  FieldArgs field;
  int degree = 6;
  std::string lambda;
  bool all_lambda = false;
  std::vector<std::string> methods{"all"};
  std::string format = "json";
  double tolerance = ffpc::kCountTolerance;
  unsigned threads = 0;
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--p", args.p, "characteristic")->required();
  cmd->add_option("--e", args.e, "extension degree")->check(CLI::Range(1u, 20u));
  cmd->add_flag("--generator-alt", args.generator_alt, "use the second-smallest primitive element");
}

void add_count_options(CLI::App* cmd, CountArgs& args) {
  add_field_options(cmd, args.field);
  cmd->add_option("--degree", args.degree, "Dwork degree")->required()->check(CLI::IsMember({3, 4, 5, 6}));
  auto* lambda = cmd->add_option("--lambda", args.lambda, "a (e = 1) or comma-separated F_p coefficients");
  auto* all = cmd->add_flag("--all-lambda", args.all_lambda, "every lambda with lambda != 0, lambda^d != 1");
  lambda->excludes(all);
  cmd->add_option("--methods", args.methods, "brute, koblitz, greene, miyatani or all")
      ->delimiter(',')
      ->check(CLI::IsMember({"brute", "koblitz", "greene", "miyatani", "all"}));
  cmd->add_option("--format", args.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--tolerance", args.tolerance, "rounding tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", args.threads, "enumeration threads (0 = all cores)");
}

ffpc::FieldPtr make_field(const FieldArgs& args) {
  return ffpc::build_field(args.p, args.e,
                           args.generator_alt ? ffpc::GeneratorChoice::SecondSmallest
                                              : ffpc::GeneratorChoice::Smallest);
}

ffpc::FqElem parse_lambda(const ffpc::FqField& f, const std::string& text) {
  std::vector<std::int64_t> coeffs;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    const long long v = std::stoll(part, &used);
    if (used != part.size()) throw CLI::ValidationError("--lambda", "not an integer: " + part);
    coeffs.push_back(v);
  }
  if (coeffs.empty()) throw CLI::ValidationError("--lambda", "empty");
  if (coeffs.size() == 1) return f.from_int(coeffs.front());
  if (coeffs.size() > f.e()) throw CLI::ValidationError("--lambda", "more coefficients than e");
  return f.from_coeffs(coeffs);
}

std::vector<ffpc::Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<ffpc::Method> out;
  for (const auto& name : names) {
    if (name == "all") return {ffpc::kAllMethods.begin(), ffpc::kAllMethods.end()};
    const ffpc::Method m = ffpc::parse_method(name);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

int run_counts(const CountArgs& args) {
  const auto field = make_field(args.field);
  const ffpc::CharContext ctx(field);
  ffpc::CountOptions options;
  options.methods = parse_methods(args.methods);
  options.tolerance = args.tolerance;
  options.threads = args.threads;

  std::vector<ffpc::FqElem> lambdas;
  if (args.all_lambda) {
    lambdas = ffpc::admissible_lambdas(*field, args.degree);
  } else if (!args.lambda.empty()) {
    lambdas.push_back(parse_lambda(*field, args.lambda));
  } else {
    throw CLI::RequiredError("--lambda or --all-lambda");
  }

  std::vector<ffpc::ProjectiveCountReport> reports;
  bool consistent = true;
  for (ffpc::FqElem lambda : lambdas) {
    reports.push_back(ffpc::run_count(ctx, args.degree, lambda, options));
    consistent = consistent && reports.back().consistent();
  }

  if (args.format == "csv") {
    std::cout << ffpc::csv_header(options.methods) << '\n';
    for (const auto& r : reports) std::cout << ffpc::csv_row(r, options.methods) << '\n';
  } else if (args.all_lambda) {
    std::cout << ffpc::to_json(reports) << '\n';
  } else {
    std::cout << ffpc::to_json(reports.front()) << '\n';
  }
  if (!consistent) std::cerr << "error: methods disagree or a count failed to round\n";
  return consistent ? kExitOk : kExitVerification;
}

int run_verify(const FieldArgs& args, const std::string& format) {
  const ffpc::CharContext ctx(make_field(args));
  const auto results = ffpc::run_identity_suite(ctx);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;

  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      arr.push_back({{"check", r.name},
                     {"cases", r.cases},
                     {"max_residual", r.max_residual},
                     {"tolerance", r.tolerance},
                     {"passed", r.passed},
                     {"note", r.note}});
    }
    std::cout << nlohmann::ordered_json{{"q", ctx.q()}, {"checks", arr}, {"passed", all}}.dump() << '\n';
  } else if (format == "csv") {
    std::cout << "check,cases,max_residual,tolerance,passed,note\n";
    for (const auto& r : results) {
      std::cout << r.name << ',' << r.cases << ',' << r.max_residual << ',' << r.tolerance << ','
                << (r.passed ? "pass" : "FAIL") << ',' << r.note << '\n';
    }
  } else {
    std::cout << "q = " << ctx.q() << "\n";
    for (const auto& r : results) {
      std::cout << std::left << std::setw(28) << r.name << std::setw(6) << (r.passed ? "pass" : "FAIL")
                << std::right << std::setw(8) << r.cases << "  max " << std::scientific << std::setprecision(2)
                << r.max_residual << "  tol " << r.tolerance << std::defaultfloat;
      if (!r.note.empty()) std::cout << "  (" << r.note << ")";
      std::cout << '\n';
    }
  }
  return all ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point counts on Dwork hypersurfaces over finite fields"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "count points of one fiber (or all fibers)");
  add_count_options(count, count_args);

  CountArgs table_args;
  table_args.all_lambda = true;
  table_args.format = "csv";
  auto* table = app.add_subcommand("table", "one row per admissible lambda");
  add_count_options(table, table_args);

  FieldArgs verify_args;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "run the character-sum identity suite");
  add_field_options(verify, verify_args);
  verify->add_option("--format", verify_format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return run_counts(count_args);
    if (*table) {
      if (!table_args.lambda.empty()) table_args.all_lambda = false;
      return run_counts(table_args);
    }
    if (*verify) return run_verify(verify_args, verify_format);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ffpc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ffpc::ErrorCode::RoundingFailure ? kExitVerification : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
