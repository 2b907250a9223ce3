#include "sumgraph/edge_coloring.hpp"

#include "bundled_certificates.hpp"

#include <json.hpp>

#include <string>

namespace sumgraph {

auto stored_certificate(std::string_view name) -> StoredCertificate
{
    for (const auto & file : detail::bundled_certificates()) {
        if (file.name != name)
            continue;

        auto doc = nlohmann::json::parse(file.content);
        StoredCertificate out{ doc.at("r").get<Label>(), doc.at("s").get<Label>(), {} };
        for (const auto & cls : doc.at("classes")) {
            auto & edges = out.certificate.classes.emplace_back();
            for (const auto & pair : cls)
                edges.emplace_back(pair.at(0).get<Label>(), pair.at(1).get<Label>());
        }
        return out;
    }
    throw LookupError("no stored certificate named '" + std::string(name) + "'");
}

} // namespace sumgraph
