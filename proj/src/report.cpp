#include "supergrade/report.hpp"

#include <cstdint>
#include <cstdio>

namespace supergrade {

std::string fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json report_header(const std::vector<std::string>& command, const std::vector<InputDigest>& inputs)
{
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    Json in = Json::array();
    for (const auto& d : inputs) in.push_back(Json{{"path", d.path}, {"fnv1a64", d.digest}});
    j["inputs"] = std::move(in);
    return j;
}

std::string dump_report(const Json& j)
{
    return j.dump(2) + "\n";
}

Json to_json(const Vector& v)
{
    Json a = Json::array();
    for (const auto& c : v) a.push_back(c.to_string());
    return a;
}

namespace {

Json component_json(const WeightComponent& c)
{
    return Json{{"weight", to_json(c.weight)}, {"even_dim", c.even_dim}, {"odd_dim", c.odd_dim}};
}

}  // namespace

Json to_json(const RootDatum& d)
{
    Json roots = Json::array();
    std::size_t even = 0, odd = 0;
    for (const auto& c : d.components) {
        roots.push_back(component_json(c));
        if (c.even_dim > 0) ++even;
        if (c.odd_dim > 0) ++odd;
    }
    Json j;
    j["cartan_rank"] = d.cartan.size();
    j["zero_component"] = Json{{"even_dim", d.zero.even_dim}, {"odd_dim", d.zero.odd_dim}};
    j["nonzero_weights"] = d.components.size();
    j["weights_with_even_part"] = even;
    j["weights_with_odd_part"] = odd;
    j["roots"] = std::move(roots);
    return j;
}

Json to_json(const ConditionResult& c)
{
    return Json{{"pass", c.pass}, {"detail", c.detail}};
}

Json to_json(const GradingReport& r)
{
    Json j;
    j["verdict"] = r.graded ? "graded" : "not_graded";
    if (r.matched_n) {
        j["matched"] = "A(" + std::to_string(*r.matched_n) + "," + std::to_string(*r.matched_n) + ")";
    } else {
        j["matched"] = nullptr;
    }
    j["cover_dim"] = r.cover_dim;
    j["cover_kernel_dim"] = r.cover_kernel_dim;
    j["condition1"] = to_json(r.condition1);
    j["condition2"] = to_json(r.condition2);
    j["condition3"] = to_json(r.condition3);
    return j;
}

Json to_json(const ZCheck& z)
{
    Json j;
    j["pass"] = z.pass;
    j["z_image"] = to_json(z.z_image);
    if (z.witness_index) {
        j["witness_index"] = *z.witness_index + 1;
        j["witness_value"] = to_json(z.witness_value);
    }
    return j;
}

Json to_json(const Fingerprint& f)
{
    Json j;
    j["even_dim"] = f.even_dim;
    j["odd_dim"] = f.odd_dim;
    j["derived_series"] = f.derived_series;
    j["center_dim"] = f.center_dim;
    j["h2_even"] = f.h2_even;
    j["h2_odd"] = f.h2_odd;
    if (f.root_dims) {
        Json a = Json::array();
        for (const auto& [e, o] : *f.root_dims) a.push_back(Json::array({e, o}));
        j["root_dims"] = std::move(a);
    }
    return j;
}

Json to_json(const M11Certificate& c)
{
    Json rel;
    for (const auto& [name, ok] : c.relations) rel[name] = ok;
    return Json{{"pass", c.pass()}, {"relations", std::move(rel)}};
}

Json to_json(const KernelCheck& k)
{
    return Json{{"pass", k.pass}, {"kernel_dim", k.kernel_dim}, {"roots_checked", k.roots_checked}, {"detail", k.detail}};
}

}  // namespace supergrade
