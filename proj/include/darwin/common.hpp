#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace darwin {

// Every typed failure the pipeline can surface. Drop decisions are data,
// not errors; these are the conditions that abort an operation.
enum class errc {
    malformed_line,
    duplicate_id,
    missing_field,
    io_failure,
    level_out_of_range,
    unknown_counter,
    empty_shingle_set,
    both_empty,
    scorer_failure,
    unscored_document,
    transport,
    rate_limited,
    stub_miss,
    grammar_violation,
    length_guard_tripped,
    unterminated_block,
    neither_qa_nor_sentinel,
    unbalanced_braces,
    domain_mismatch,
    proportion_sum_mismatch,
    unknown_pool,
    non_positive_budget,
    empty_pool,
    manifest_drift,
    step_out_of_range,
    delimiter_not_found,
    unknown_op,
    config_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
  public:
    Error(errc code, std::string detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code),
          detail_(std::move(detail)) {}

    errc code() const { return code_; }
    const std::string& detail() const { return detail_; }

  private:
    errc code_;
    std::string detail_;
};

// ---- deterministic hashing -------------------------------------------------
// All pipeline hashing goes through these; std::hash is implementation
// defined and must never leak into manifests, signatures, or plans.

constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr uint64_t kFnvPrime = 0x100000001b3ull;

constexpr uint64_t fnv1a64(std::string_view bytes, uint64_t h = kFnvOffset) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

// splitmix64 finalizer; also used to derive independent hash streams.
constexpr uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) via rejection; bound > 0.
    uint64_t next_below(uint64_t bound) {
        uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

  private:
    uint64_t state_;
};

// In-place Fisher-Yates with a stable generator, so shuffles are identical
// across platforms and standard libraries.
template <typename Vec>
void deterministic_shuffle(Vec& v, uint64_t seed) {
    SplitMix64 rng(seed);
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.next_below(i));
        std::swap(v[i - 1], v[j]);
    }
}

std::string to_hex64(uint64_t value);
uint64_t from_hex64(std::string_view hex);

// Stable digest of an operator's parameter map: keys sorted (std::map),
// joined with unit separators, FNV-hashed. Comparable across machines.
std::string params_digest(const std::map<std::string, std::string>& params);

}  // namespace darwin
