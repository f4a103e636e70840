#include "qpi/report_json.hpp"

#include <stdexcept>

namespace qpi {

using nlohmann::json;

json report_to_json(const VerificationReport& report)
{
    json sides = json::array();
    for (const SideReport& s : report.sides)
        sides.push_back({{"tag", s.tag}, {"coeffs", s.coeffs}});
    json j{{"id", report.id},
           {"kind", kind_name(report.kind)},
           {"order", report.order},
           {"status", status_name(report.status)},
           {"sides", std::move(sides)},
           {"ms", report.ms}};
    if (report.first_divergent_exponent)
        j["first_divergent_exponent"] = *report.first_divergent_exponent;
    else
        j["first_divergent_exponent"] = nullptr;
    return j;
}

VerificationReport report_from_json(const json& j)
{
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "theorem")
        r.kind = IdentityKind::Theorem;
    else if (kind == "conjecture")
        r.kind = IdentityKind::Conjecture;
    else
        throw std::invalid_argument("report_from_json: bad kind '" + kind + "'");
    r.order = j.at("order").get<int>();
    const std::string status = j.at("status").get<std::string>();
    auto parsed = status_from_name(status);
    if (!parsed)
        throw std::invalid_argument("report_from_json: bad status '" + status + "'");
    r.status = *parsed;
    if (!j.at("first_divergent_exponent").is_null())
        r.first_divergent_exponent = j.at("first_divergent_exponent").get<int>();
    for (const json& s : j.at("sides"))
        r.sides.push_back(SideReport{s.at("tag").get<std::string>(),
                                     s.at("coeffs").get<std::vector<std::string>>()});
    r.ms = j.at("ms").get<double>();
    return r;
}

}  // namespace qpi
