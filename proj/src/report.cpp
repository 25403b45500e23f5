#include "mixlink/report.hpp"

#include <cmath>

#include "mixlink/detail/json_report.hpp"

namespace mixlink {

namespace detail {

namespace {

nlohmann::ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

}  // namespace

nlohmann::ordered_json point_json(ComplexSpan z) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : z) arr.push_back({c.real(), c.imag()});
  return arr;
}

nlohmann::ordered_json report_json(const CertificationReport& rep) {
  nlohmann::ordered_json j;
  j["check"] = rep.check;
  j["verdict"] = to_string(rep.verdict);
  if (rep.margin) {
    j["margin"] = {{"min", number(rep.margin->min)},       {"q05", number(rep.margin->q05)},
                   {"median", number(rep.margin->median)}, {"q95", number(rep.margin->q95)},
                   {"max", number(rep.margin->max)}};
  } else {
    j["margin"] = nullptr;
  }
  j["samples"] = rep.samples;
  if (rep.witness) {
    j["witness"] = {{"point", point_json(rep.witness->point)},
                    {"value", number(rep.witness->value)},
                    {"reason", rep.witness->reason}};
  }
  const SampleConfig& c = rep.config;
  j["config"] = {{"radius", c.radius},
                 {"sphere_weights", c.sphere_weights},
                 {"n_samples", c.n_samples},
                 {"max_iter", c.max_iter},
                 {"tol_residual", c.tol_residual},
                 {"tol_rank", c.tol_rank},
                 {"seed", c.seed},
                 {"tube_delta", c.tube_delta}};
  j["attempted"] = rep.attempted;
  j["failed"] = rep.failed;
  j["excluded"] = rep.excluded;
  if (rep.c_threshold) j["c_threshold"] = number(*rep.c_threshold);
  if (rep.delta) j["delta"] = number(*rep.delta);
  j["notes"] = rep.notes;
  return j;
}

nlohmann::ordered_json identity_json(const IdentityResult& res) {
  return {{"check", res.name},
          {"verdict", res.passed ? "pass" : "fail"},
          {"trials", res.trials},
          {"max_error", number(res.max_error)},
          {"threshold", res.threshold},
          {"exact", res.exact},
          {"detail", res.detail}};
}

}  // namespace detail

std::string to_json(const CertificationReport& rep, int indent) { return detail::report_json(rep).dump(indent); }

std::string to_json(const IdentityResult& res, int indent) { return detail::identity_json(res).dump(indent); }

std::string format_number(double x) { return std::isfinite(x) ? nlohmann::json(x).dump() : "nan"; }

void write_samples_csv(std::ostream& os, const std::vector<SampleRecord>& records, std::size_t n) {
  for (std::size_t j = 1; j <= n; ++j) os << "re_w" << j << ",im_w" << j << ',';
  os << "C,dthetaR,min_sv\n";
  for (const auto& r : records) {
    for (const auto& c : r.point) os << format_number(c.real()) << ',' << format_number(c.imag()) << ',';
    os << format_number(r.c_total) << ',' << format_number(r.dtheta_R) << ',' << format_number(r.min_sv) << '\n';
  }
}

}  // namespace mixlink
