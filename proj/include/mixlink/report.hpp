#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mixlink/identities.hpp"
#include "mixlink/link_certifier.hpp"

namespace mixlink {

/// JSON text of a certification report:
/// {"check", "verdict", "margin", "samples", "witness"?, "config", ...}.
std::string to_json(const CertificationReport& rep, int indent = 2);
std::string to_json(const IdentityResult& res, int indent = 2);

/// Shortest round-trip decimal form of x, shared by text and JSON output.
std::string format_number(double x);

/// CSV with header re_w1,im_w1,...,re_wn,im_wn,C,dthetaR,min_sv.
void write_samples_csv(std::ostream& os, const std::vector<SampleRecord>& records, std::size_t n);

}  // namespace mixlink
