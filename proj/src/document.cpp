#include "darwin/document.hpp"

#include <algorithm>

namespace darwin {

const char* domain_name(Domain d) {
    switch (d) {
        case Domain::general: return "general";
        case Domain::code: return "code";
        case Domain::science: return "science";
        case Domain::qa: return "qa";
    }
    return "general";
}

Domain domain_from_name(std::string_view name) {
    if (name == "general") return Domain::general;
    if (name == "code") return Domain::code;
    if (name == "science") return Domain::science;
    if (name == "qa") return Domain::qa;
    throw Error(errc::missing_field, "unknown domain: " + std::string(name));
}

const char* disposition_name(Disposition d) {
    switch (d) {
        case Disposition::retained: return "retained";
        case Disposition::transformed: return "transformed";
        case Disposition::synthesized: return "synthesized";
    }
    return "retained";
}

Disposition disposition_from_name(std::string_view name) {
    if (name == "retained") return Disposition::retained;
    if (name == "transformed") return Disposition::transformed;
    if (name == "synthesized") return Disposition::synthesized;
    throw Error(errc::missing_field, "unknown disposition: " + std::string(name));
}

Document annotate(Document doc, ProvenanceRecord record) {
    if (record.level < 0 || record.level > 9)
        throw Error(errc::level_out_of_range,
                    "provenance level " + std::to_string(record.level) + " outside 0..9");
    doc.darwin_level = std::max(doc.darwin_level, record.level);
    doc.provenance.push_back(std::move(record));
    return doc;
}

ProvenanceRecord make_record(std::string op, int level, Disposition disposition,
                             const std::map<std::string, std::string>& params) {
    ProvenanceRecord rec;
    rec.op = std::move(op);
    rec.level = level;
    rec.disposition = disposition;
    rec.params_digest = params_digest(params);
    return rec;
}

}  // namespace darwin
