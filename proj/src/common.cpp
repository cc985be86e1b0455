#include "darwin/common.hpp"

#include <array>
#include <charconv>

namespace darwin {

const char* errc_name(errc code) {
    switch (code) {
        case errc::malformed_line: return "MalformedLine";
        case errc::duplicate_id: return "DuplicateId";
        case errc::missing_field: return "MissingField";
        case errc::io_failure: return "IoFailure";
        case errc::level_out_of_range: return "LevelOutOfRange";
        case errc::unknown_counter: return "UnknownCounter";
        case errc::empty_shingle_set: return "EmptyShingleSet";
        case errc::both_empty: return "BothEmpty";
        case errc::scorer_failure: return "ScorerFailure";
        case errc::unscored_document: return "UnscoredDocument";
        case errc::transport: return "Transport";
        case errc::rate_limited: return "RateLimited";
        case errc::stub_miss: return "StubMiss";
        case errc::grammar_violation: return "GrammarViolation";
        case errc::length_guard_tripped: return "LengthGuardTripped";
        case errc::unterminated_block: return "UnterminatedBlock";
        case errc::neither_qa_nor_sentinel: return "NeitherQaNorSentinel";
        case errc::unbalanced_braces: return "UnbalancedBraces";
        case errc::domain_mismatch: return "DomainMismatch";
        case errc::proportion_sum_mismatch: return "ProportionSumMismatch";
        case errc::unknown_pool: return "UnknownPool";
        case errc::non_positive_budget: return "NonPositiveBudget";
        case errc::empty_pool: return "EmptyPool";
        case errc::manifest_drift: return "ManifestDrift";
        case errc::step_out_of_range: return "StepOutOfRange";
        case errc::delimiter_not_found: return "DelimiterNotFound";
        case errc::unknown_op: return "UnknownOp";
        case errc::config_error: return "ConfigError";
    }
    return "UnknownError";
}

std::string to_hex64(uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

uint64_t from_hex64(std::string_view hex) {
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), value, 16);
    if (ec != std::errc() || ptr != hex.data() + hex.size())
        throw Error(errc::malformed_line, "bad 64-bit hex literal: " + std::string(hex));
    return value;
}

std::string params_digest(const std::map<std::string, std::string>& params) {
    uint64_t h = kFnvOffset;
    for (const auto& [key, value] : params) {
        h = fnv1a64(key, h);
        h = fnv1a64("\x1f", h);
        h = fnv1a64(value, h);
        h = fnv1a64("\x1e", h);
    }
    return to_hex64(h);
}

}  // namespace darwin
