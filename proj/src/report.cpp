#include "ffpc/report.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "ffpc/brute.hpp"
#include "ffpc/diagonal.hpp"
#include "ffpc/dwork.hpp"
#include "ffpc/miyatani.hpp"

namespace ffpc {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

MethodResult from_value(Method m, AlgValue v, double tolerance) {
  MethodResult r{m};
  const double nearest = std::round(v.real());
  r.count = static_cast<std::int64_t>(nearest);
  r.residual = std::max(std::abs(v.real() - nearest), std::abs(v.imag()));
  r.status = r.residual <= tolerance ? MethodStatus::Ok : MethodStatus::RoundingFailure;
  return r;
}

MethodResult run_method(Method m, const DworkParams& params, const CountOptions& options) {
  const CharContext& ctx = *params.ctx;
  const auto start = Clock::now();
  MethodResult r{m};
  switch (m) {
    case Method::Brute: {
      if (static_cast<double>(projective_size(ctx.q(), static_cast<std::size_t>(params.degree))) >
          options.brute_budget) {
        r.status = MethodStatus::Skipped;
        return r;
      }
      const auto poly = dwork_polynomial(ctx.field_ptr(), static_cast<std::uint32_t>(params.degree), params.lambda);
      r.count = static_cast<std::int64_t>(brute_count(poly, options.brute_budget, options.threads));
      break;
    }
    case Method::Koblitz:
      r = from_value(m, koblitz_value(dwork_diagonal(ctx, params.degree, params.lambda)), options.tolerance);
      break;
    case Method::Greene:
      if (params.degree < 4) {
        r.status = MethodStatus::NotApplicable;
        return r;
      }
      r = from_value(m, dwork_greene_value(params), options.tolerance);
      break;
    case Method::Miyatani:
      if (params.degree != 6) {
        r.status = MethodStatus::NotApplicable;
        return r;
      }
      r = from_value(m, miyatani_dwork6_value(params), options.tolerance);
      break;
  }
  r.ms = elapsed_ms(start);
  return r;
}

nlohmann::ordered_json lambda_json(const std::vector<std::uint32_t>& coeffs) {
  if (coeffs.size() == 1) return coeffs.front();
  return coeffs;
}

nlohmann::ordered_json report_json(const ProjectiveCountReport& report) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  nlohmann::ordered_json residuals = nlohmann::ordered_json::object();
  nlohmann::ordered_json ms = nlohmann::ordered_json::object();
  for (const auto& r : report.results) {
    const std::string key(to_string(r.method));
    switch (r.status) {
      case MethodStatus::Ok: counts[key] = r.count; break;
      case MethodStatus::RoundingFailure: counts[key] = nullptr; break;
      default: counts[key] = std::string(to_string(r.status)); break;
    }
    if (r.status == MethodStatus::Ok || r.status == MethodStatus::RoundingFailure) {
      residuals[key] = r.residual;
      ms[key] = r.ms;
    }
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["q"] = report.q;
  j["degree"] = report.degree;
  j["lambda"] = lambda_json(report.lambda);
  j["counts"] = std::move(counts);
  j["residuals"] = std::move(residuals);
  j["ms"] = std::move(ms);
  return j;
}

const MethodResult* find(const ProjectiveCountReport& report, Method m) {
  for (const auto& r : report.results) {
    if (r.method == m) return &r;
  }
  return nullptr;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Brute: return "brute";
    case Method::Koblitz: return "koblitz";
    case Method::Greene: return "greene";
    case Method::Miyatani: return "miyatani";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorCode::BadParams, "unknown method '" + std::string(name) + "'");
}

std::string_view to_string(MethodStatus s) {
  switch (s) {
    case MethodStatus::Ok: return "ok";
    case MethodStatus::Skipped: return "skipped";
    case MethodStatus::NotApplicable: return "n/a";
    case MethodStatus::RoundingFailure: return "rounding_failure";
  }
  return "?";
}

bool ProjectiveCountReport::consistent() const {
  std::optional<std::int64_t> seen;
  for (const auto& r : results) {
    if (r.status == MethodStatus::RoundingFailure) return false;
    if (r.status != MethodStatus::Ok) continue;
    if (seen && *seen != r.count) return false;
    seen = r.count;
  }
  return true;
}

ProjectiveCountReport run_count(const CharContext& ctx, int degree, FqElem lambda, const CountOptions& options) {
  if (degree < 3 || degree > 6) throw Error(ErrorCode::BadDegree, "degree must be 3, 4, 5 or 6");
  const DworkParams params{&ctx, degree, lambda};
  validate(params);
  ProjectiveCountReport report;
  report.q = ctx.q();
  report.degree = degree;
  report.lambda = ctx.field().coeffs(lambda);
  for (Method m : options.methods) report.results.push_back(run_method(m, params, options));
  return report;
}

std::string to_json(const ProjectiveCountReport& report) { return report_json(report).dump(); }

std::string to_json(const std::vector<ProjectiveCountReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump();
}

std::string format_lambda(const std::vector<std::uint32_t>& coeffs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? "," : "") << coeffs[i];
  return out.str();
}

std::string csv_header(const std::vector<Method>& methods) {
  std::ostringstream out;
  out << "q,degree,lambda";
  for (const char* group : {"count", "residual", "ms"}) {
    for (Method m : methods) out << ',' << group << '_' << to_string(m);
  }
  return out.str();
}

std::string csv_row(const ProjectiveCountReport& report, const std::vector<Method>& methods) {
  std::ostringstream out;
  const std::string lambda = format_lambda(report.lambda);
  out << report.q << ',' << report.degree << ',' << (report.lambda.size() > 1 ? '"' + lambda + '"' : lambda);
  for (Method m : methods) {
    const MethodResult* r = find(report, m);
    out << ',';
    if (r == nullptr) continue;
    if (r->status == MethodStatus::Ok) {
      out << r->count;
    } else {
      out << to_string(r->status);
    }
  }
  for (Method m : methods) {
    const MethodResult* r = find(report, m);
    out << ',';
    if (r && (r->status == MethodStatus::Ok || r->status == MethodStatus::RoundingFailure)) out << r->residual;
  }
  for (Method m : methods) {
    const MethodResult* r = find(report, m);
    out << ',';
    if (r && (r->status == MethodStatus::Ok || r->status == MethodStatus::RoundingFailure)) out << r->ms;
  }
  return out.str();
}

}  // namespace ffpc
