#pragma once

#include "json.hpp"

#include "mixlink/identities.hpp"
#include "mixlink/link_certifier.hpp"

namespace mixlink::detail {

nlohmann::ordered_json point_json(ComplexSpan z);
nlohmann::ordered_json report_json(const CertificationReport& rep);
nlohmann::ordered_json identity_json(const IdentityResult& res);

}  // namespace mixlink::detail
