#pragma once

#include <string>

#include <json.hpp>

#include "avecond/condnum.hpp"
#include "avecond/errorbound.hpp"
#include "avecond/regularity.hpp"

namespace avecond::cli {

using Json = nlohmann::ordered_json;

Json to_json(std::span<const double> v);
Json to_json(const Matrix& a);
Json to_json(const NormSpec& ns);
Json to_json(const CondResult& r);
Json to_json(const RegularityReport& r);
Json to_json(const CertReport& r);

// Flattens a report into "path: value" lines; numeric arrays stay inline.
std::string render_text(const Json& report);

}  // namespace avecond::cli
