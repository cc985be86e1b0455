#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "darwin/common.hpp"

namespace darwin {

enum class Domain { general, code, science, qa };

const char* domain_name(Domain d);
Domain domain_from_name(std::string_view name);

// retained: selection only, text untouched. transformed/synthesized: the
// operator produced new text (format normalization or generative levels).
enum class Disposition { retained, transformed, synthesized };

const char* disposition_name(Disposition d);
Disposition disposition_from_name(std::string_view name);

struct ProvenanceRecord {
    std::string op;
    int level = 0;  // 0..9
    std::string params_digest;  // 16 hex chars
    Disposition disposition = Disposition::retained;

    bool operator==(const ProvenanceRecord&) const = default;
};

using MetaValue = std::variant<std::string, int64_t, double, bool>;

// One corpus unit. Immutable by convention: operators take a copy and
// return a new value, so documents are safe to fan out across workers.
struct Document {
    std::string id;
    std::string source;
    Domain domain = Domain::general;
    int darwin_level = 0;
    std::string text;
    int64_t token_count = 0;
    std::map<std::string, MetaValue> meta;
    std::vector<ProvenanceRecord> provenance;

    bool operator==(const Document&) const = default;
};

// Appends one provenance record and lifts darwin_level to the running max.
// Levels outside 0..9 are rejected; everything else is preserved.
Document annotate(Document doc, ProvenanceRecord record);

// Convenience builder for operator records.
ProvenanceRecord make_record(std::string op, int level, Disposition disposition,
                             const std::map<std::string, std::string>& params = {});

}  // namespace darwin
