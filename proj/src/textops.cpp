#include "darwin/textops.hpp"

#include <array>
#include <unordered_set>

#include "darwin/tokens.hpp"
#include "darwin/unicode.hpp"

namespace darwin {
namespace {

// Frozen 100-word English stopword list (most-common words). The
// english_only heuristic and the lexical scorer both key off this list;
// changing it changes scores, so it is fixed.
constexpr std::array<std::string_view, 100> kStopwords = {
    "the",   "of",    "and",   "a",     "to",    "in",    "is",    "you",   "that",  "it",
    "he",    "was",   "for",   "on",    "are",   "as",    "with",  "his",   "they",  "i",
    "at",    "be",    "this",  "have",  "from",  "or",    "one",   "had",   "by",    "word",
    "but",   "not",   "what",  "all",   "were",  "we",    "when",  "your",  "can",   "said",
    "there", "use",   "an",    "each",  "which", "she",   "do",    "how",   "their", "if",
    "will",  "up",    "other", "about", "out",   "many",  "then",  "them",  "these", "so",
    "some",  "her",   "would", "make",  "like",  "him",   "into",  "time",  "has",   "look",
    "two",   "more",  "write", "go",    "see",   "number","no",    "way",   "could", "people",
    "my",    "than",  "first", "water", "been",  "call",  "who",   "oil",   "its",   "now",
    "find",  "long",  "down",  "day",   "did",   "get",   "come",  "made",  "may",   "part",
};

const std::unordered_set<std::string_view>& stopword_set() {
    static const std::unordered_set<std::string_view> set(kStopwords.begin(), kStopwords.end());
    return set;
}

bool is_garbled_scalar(char32_t cp) {
    if (cp == 0xfffd) return true;
    if (cp == '\n' || cp == '\t') return false;
    return unicode::is_c0_control(cp) || unicode::is_c1_control(cp);
}

}  // namespace

const char* drop_reason_name(DropReason r) {
    switch (r) {
        case DropReason::none: return "none";
        case DropReason::below_min_bytes: return "below_min_bytes";
        case DropReason::garbled: return "garbled";
        case DropReason::non_english: return "non_english";
        case DropReason::empty_shingles: return "empty_shingles";
        case DropReason::below_min_tier: return "below_min_tier";
        case DropReason::duplicate: return "duplicate";
    }
    return "none";
}

std::string normalize_text(std::string_view text) {
    std::string composed = unicode::nfc(text);
    std::string out;
    out.reserve(composed.size());
    int newline_run = 0;
    for (size_t i = 0; i < composed.size();) {
        char32_t cp = unicode::decode_scalar(composed, i);
        if (cp == '\r') continue;  // CRLF pairs become LF; lone CR is a control
        if (cp == '\n') {
            if (newline_run >= 2) continue;  // at most one blank line in a row
            ++newline_run;
            out.push_back('\n');
            continue;
        }
        newline_run = 0;
        if (cp != '\t' && (unicode::is_c0_control(cp) || unicode::is_c1_control(cp) ||
                           unicode::is_zero_width(cp)))
            continue;
        unicode::append_utf8(out, cp);
    }
    return out;
}

Document normalize(Document doc) {
    std::string normalized = normalize_text(doc.text);
    Disposition disposition =
        normalized == doc.text ? Disposition::retained : Disposition::transformed;
    if (disposition == Disposition::transformed) {
        doc.text = std::move(normalized);
        doc.token_count = count_tokens(doc.text);
    }
    return annotate(std::move(doc), make_record("normalize", 1, disposition));
}

double garbled_ratio(std::string_view text) {
    if (text.empty()) return 0.0;
    size_t total = 0;
    size_t garbled = 0;
    for (size_t i = 0; i < text.size(); ++total) {
        if (is_garbled_scalar(unicode::decode_scalar(text, i))) ++garbled;
    }
    return total == 0 ? 0.0 : static_cast<double>(garbled) / static_cast<double>(total);
}

double stopword_ratio(std::string_view text) {
    size_t words = 0;
    size_t hits = 0;
    std::string word;
    auto flush = [&] {
        if (word.empty()) return;
        ++words;
        if (stopword_set().count(word)) ++hits;
        word.clear();
    };
    for (unsigned char c : text) {
        if (c >= 'A' && c <= 'Z') {
            word.push_back(static_cast<char>(c - 'A' + 'a'));
        } else if (c >= 'a' && c <= 'z') {
            word.push_back(static_cast<char>(c));
        } else {
            flush();
        }
    }
    flush();
    return words == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(words);
}

FilterDecision rule_filter_decision(const Document& doc, const RuleFilterConfig& cfg) {
    if (static_cast<int64_t>(doc.text.size()) < cfg.min_bytes)
        return {false, DropReason::below_min_bytes};
    if (garbled_ratio(doc.text) > cfg.max_garbled_ratio) return {false, DropReason::garbled};
    if (cfg.language == Language::english_only &&
        stopword_ratio(doc.text) < cfg.stopword_ratio_floor)
        return {false, DropReason::non_english};
    return {true, DropReason::none};
}

RuleFilterResult rule_filter(Document doc, const RuleFilterConfig& cfg) {
    FilterDecision decision = rule_filter_decision(doc, cfg);
    if (!decision.keep) return {std::nullopt, decision.reason};
    std::map<std::string, std::string> params{
        {"min_bytes", std::to_string(cfg.min_bytes)},
        {"max_garbled_ratio", std::to_string(cfg.max_garbled_ratio)},
        {"language", cfg.language == Language::english_only ? "english_only" : "any"},
        {"stopword_ratio_floor", std::to_string(cfg.stopword_ratio_floor)},
    };
    Document kept =
        annotate(std::move(doc), make_record("rule_filter", 2, Disposition::retained, params));
    return {std::move(kept), DropReason::none};
}

}  // namespace darwin
