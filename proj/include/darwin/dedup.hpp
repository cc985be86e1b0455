#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "darwin/document.hpp"
#include "darwin/textops.hpp"

namespace darwin {

struct MinHashParams {
    int shingle_words = 5;
    int num_perm = 128;
    int bands = 0;  // 0 = pick via select_bands_rows
    int rows = 0;
    double target_threshold = 0.8;
    uint64_t seed = 0x6d696e68617368ull;
};

// Exhaustive search over factor pairs bands*rows == num_perm minimizing
// |(1/bands)^(1/rows) - target|. Ties go to fewer bands.
std::pair<int, int> select_bands_rows(int num_perm, double target_threshold);

// Fills bands/rows if unset and validates the invariants.
MinHashParams resolve_params(MinHashParams params);

// Approximate LSH collision threshold (1/b)^(1/r).
double band_threshold(int bands, int rows);

// Lowercased word k-grams. Texts with fewer than k words yield the whole
// token sequence as a single shingle; empty text yields the empty set.
std::set<std::string> shingles(std::string_view text, int k);

// Same shingles as sorted unique 64-bit hashes; the similarity oracle uses
// these for bulk pairwise sweeps.
std::vector<uint64_t> hashed_shingles(std::string_view text, int k);

// Exact Jaccard |a∩b| / |a∪b|. Two empty sets are a caller error.
double jaccard_oracle(const std::set<std::string>& a, const std::set<std::string>& b);
double jaccard_oracle(const std::vector<uint64_t>& a_sorted, const std::vector<uint64_t>& b_sorted);

struct Signature {
    std::string doc_id;
    std::vector<uint64_t> values;  // length num_perm
};

Signature signature(std::string_view text, const MinHashParams& params,
                    std::string doc_id = {});

// Fraction of matching slots between two signatures of equal length.
double signature_match_fraction(const Signature& a, const Signature& b);

struct DedupEdge {
    std::string dropped_id;
    std::string survivor_id;
    int band_hits = 0;  // direct band collisions with the survivor; 0 if transitive
};

struct DedupResult {
    std::vector<Document> kept;          // sorted by id, text untouched
    std::vector<DedupEdge> clusters;     // one edge per dropped document
    std::vector<std::pair<std::string, DropReason>> dropped_other;  // e.g. empty shingle sets
};

// Groups documents colliding in any LSH band with union-find and keeps one
// survivor per cluster: lowest pool priority first (when given), then
// lexicographically smallest id. Independent of input order and jobs.
DedupResult dedup_corpus(const std::vector<Document>& docs, const MinHashParams& params,
                         const std::map<std::string, int>& pool_priority = {}, int jobs = 1);

}  // namespace darwin
