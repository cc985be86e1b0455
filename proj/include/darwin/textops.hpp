#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "darwin/document.hpp"

namespace darwin {

enum class Language { english_only, any };

struct RuleFilterConfig {
    int64_t min_bytes = 8192;
    double max_garbled_ratio = 0.05;
    Language language = Language::english_only;
    double stopword_ratio_floor = 0.06;
};

// Closed set of drop reasons; a drop is data, never an exception.
enum class DropReason {
    none,
    below_min_bytes,
    garbled,
    non_english,
    empty_shingles,
    below_min_tier,
    duplicate,
};

const char* drop_reason_name(DropReason r);

// Pure text form of the L1 normalizer: NFC, CRLF to LF, strips zero-width
// and control characters except \n and \t, caps newline runs at two.
std::string normalize_text(std::string_view text);

// Document form: re-counts tokens and appends a level-1 record whose
// disposition is transformed only if the bytes actually changed.
Document normalize(Document doc);

// Fraction of scalars that are U+FFFD, encoding damage, or C0/C1 controls
// other than \n and \t. Empty text is 0.
double garbled_ratio(std::string_view text);

// Ratio of tokens (lowercased) found in the fixed 100-word English
// stopword list. Empty text is 0.
double stopword_ratio(std::string_view text);

struct FilterDecision {
    bool keep = false;
    DropReason reason = DropReason::none;
};

FilterDecision rule_filter_decision(const Document& doc, const RuleFilterConfig& cfg);

struct RuleFilterResult {
    std::optional<Document> kept;  // annotated, text byte-identical
    DropReason reason = DropReason::none;
};

RuleFilterResult rule_filter(Document doc, const RuleFilterConfig& cfg);

}  // namespace darwin
