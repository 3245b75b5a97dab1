#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "supergrade/cohomology.hpp"
#include "supergrade/jordan.hpp"
#include "supergrade/roots.hpp"

namespace supergrade {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "supergrade-report/1";

/// FNV-1a 64-bit digest as 16 hex digits.
std::string fnv1a64(std::string_view bytes);

struct InputDigest {
    std::string path;
    std::string digest;
};

/// schema, command and inputs; results are appended by the caller.
Json report_header(const std::vector<std::string>& command, const std::vector<InputDigest>& inputs);
std::string dump_report(const Json& j);

Json to_json(const Vector& v);
Json to_json(const RootDatum& d);
Json to_json(const ConditionResult& c);
Json to_json(const GradingReport& r);
Json to_json(const ZCheck& z);
Json to_json(const Fingerprint& f);
Json to_json(const M11Certificate& c);
Json to_json(const KernelCheck& k);

}  // namespace supergrade
