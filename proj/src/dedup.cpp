#include "darwin/dedup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "darwin/parallel.hpp"

namespace darwin {
namespace {

std::vector<std::string> lower_words(std::string_view text) {
    std::vector<std::string> words;
    std::string word;
    for (unsigned char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
            if (!word.empty()) {
                words.push_back(std::move(word));
                word.clear();
            }
        } else {
            word.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a')
                                                : static_cast<char>(c));
        }
    }
    if (!word.empty()) words.push_back(std::move(word));
    return words;
}

void for_each_shingle(std::string_view text, int k,
                      const std::function<void(const std::string&)>& fn) {
    std::vector<std::string> words = lower_words(text);
    if (words.empty()) return;
    size_t kk = static_cast<size_t>(k);
    std::string joined;
    if (words.size() < kk) {
        for (size_t i = 0; i < words.size(); ++i) {
            if (i) joined.push_back(' ');
            joined += words[i];
        }
        fn(joined);
        return;
    }
    for (size_t start = 0; start + kk <= words.size(); ++start) {
        joined.clear();
        for (size_t i = 0; i < kk; ++i) {
            if (i) joined.push_back(' ');
            joined += words[start + i];
        }
        fn(joined);
    }
}

// Union-find over document indices; path compression only (no ranks) so
// merges stay order-independent in result.
struct UnionFind {
    std::vector<size_t> parent;

    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void merge(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) std::swap(a, b);
        parent[a] = b;
    }
};

struct PairHash {
    size_t operator()(const std::pair<size_t, size_t>& p) const {
        return static_cast<size_t>(mix64((static_cast<uint64_t>(p.first) << 32) ^ p.second));
    }
};

}  // namespace

double band_threshold(int bands, int rows) {
    return std::pow(1.0 / static_cast<double>(bands), 1.0 / static_cast<double>(rows));
}

std::pair<int, int> select_bands_rows(int num_perm, double target_threshold) {
    std::pair<int, int> best{1, num_perm};
    double best_diff = std::abs(band_threshold(1, num_perm) - target_threshold);
    for (int bands = 1; bands <= num_perm; ++bands) {
        if (num_perm % bands != 0) continue;
        int rows = num_perm / bands;
        double diff = std::abs(band_threshold(bands, rows) - target_threshold);
        if (diff < best_diff) {
            best_diff = diff;
            best = {bands, rows};
        }
    }
    return best;
}

MinHashParams resolve_params(MinHashParams params) {
    if (params.shingle_words < 1)
        throw Error(errc::config_error, "shingle_words must be >= 1");
    if (params.num_perm < 1) throw Error(errc::config_error, "num_perm must be >= 1");
    if (params.bands == 0 || params.rows == 0) {
        auto [b, r] = select_bands_rows(params.num_perm, params.target_threshold);
        params.bands = b;
        params.rows = r;
    }
    if (params.bands < 1 || params.rows < 1 || params.bands * params.rows > params.num_perm)
        throw Error(errc::config_error, "bands*rows must fit in num_perm");
    return params;
}

std::set<std::string> shingles(std::string_view text, int k) {
    if (k < 1) throw Error(errc::config_error, "shingle size must be >= 1");
    std::set<std::string> out;
    for_each_shingle(text, k, [&](const std::string& s) { out.insert(s); });
    return out;
}

std::vector<uint64_t> hashed_shingles(std::string_view text, int k) {
    std::vector<uint64_t> out;
    for_each_shingle(text, k, [&](const std::string& s) { out.push_back(fnv1a64(s)); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double jaccard_oracle(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() && b.empty()) throw Error(errc::both_empty, "jaccard of two empty sets");
    size_t inter = 0;
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    for (const auto& s : small) inter += large.count(s);
    return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

double jaccard_oracle(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    if (a.empty() && b.empty()) throw Error(errc::both_empty, "jaccard of two empty sets");
    size_t inter = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++inter;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

Signature signature(std::string_view text, const MinHashParams& params, std::string doc_id) {
    MinHashParams p = resolve_params(params);
    // Per-slot keys from the seed; h_i(x) = mix64(x ^ key_i) gives an
    // independent 64-bit family that is identical on every platform.
    SplitMix64 derive(p.seed);
    std::vector<uint64_t> keys(static_cast<size_t>(p.num_perm));
    for (auto& k : keys) k = derive.next();

    std::vector<uint64_t> values(static_cast<size_t>(p.num_perm), UINT64_MAX);
    bool any = false;
    for_each_shingle(text, p.shingle_words, [&](const std::string& s) {
        any = true;
        uint64_t base = fnv1a64(s);
        for (size_t i = 0; i < keys.size(); ++i)
            values[i] = std::min(values[i], mix64(base ^ keys[i]));
    });
    if (!any) throw Error(errc::empty_shingle_set, doc_id.empty() ? "<anonymous>" : doc_id);
    return Signature{std::move(doc_id), std::move(values)};
}

double signature_match_fraction(const Signature& a, const Signature& b) {
    if (a.values.size() != b.values.size() || a.values.empty())
        throw Error(errc::config_error, "signatures of unequal length");
    size_t match = 0;
    for (size_t i = 0; i < a.values.size(); ++i)
        if (a.values[i] == b.values[i]) ++match;
    return static_cast<double>(match) / static_cast<double>(a.values.size());
}

DedupResult dedup_corpus(const std::vector<Document>& docs, const MinHashParams& params,
                         const std::map<std::string, int>& pool_priority, int jobs) {
    MinHashParams p = resolve_params(params);
    const size_t n = docs.size();

    struct SigOrEmpty {
        Signature sig;
        bool empty = false;
    };
    std::vector<SigOrEmpty> sigs = parallel_map<SigOrEmpty>(n, jobs, [&](size_t i) {
        SigOrEmpty out;
        try {
            out.sig = signature(docs[i].text, p, docs[i].id);
        } catch (const Error& e) {
            if (e.code() != errc::empty_shingle_set) throw;
            out.empty = true;
        }
        return out;
    });

    DedupResult result;
    std::vector<size_t> active;  // indices with usable signatures
    active.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (sigs[i].empty)
            result.dropped_other.emplace_back(docs[i].id, DropReason::empty_shingles);
        else
            active.push_back(i);
    }

    // Band buckets: key = hash of (band index, row slice). Collisions merge
    // via union-find, so cluster membership depends only on the edge set.
    UnionFind uf(n);
    std::unordered_map<std::pair<size_t, size_t>, int, PairHash> direct_hits;
    std::unordered_map<uint64_t, std::vector<size_t>> buckets;
    for (int band = 0; band < p.bands; ++band) {
        buckets.clear();
        size_t offset = static_cast<size_t>(band) * static_cast<size_t>(p.rows);
        for (size_t idx : active) {
            uint64_t h = fnv1a64(std::string_view("band"));
            h = mix64(h ^ static_cast<uint64_t>(band));
            for (int r = 0; r < p.rows; ++r) h = mix64(h ^ sigs[idx].sig.values[offset + r]);
            buckets[h].push_back(idx);
        }
        for (auto& [key, members] : buckets) {
            if (members.size() < 2) continue;
            size_t anchor = *std::min_element(members.begin(), members.end());
            for (size_t m : members) {
                if (m == anchor) continue;
                uf.merge(anchor, m);
                auto edge = std::minmax(anchor, m);
                ++direct_hits[{edge.first, edge.second}];
            }
        }
    }

    auto priority_of = [&](size_t idx) {
        auto it = pool_priority.find(docs[idx].source);
        return it == pool_priority.end() ? std::numeric_limits<int>::max() : it->second;
    };

    // Survivor per cluster: (pool priority, id) minimum.
    std::unordered_map<size_t, size_t> survivor_of_root;
    for (size_t idx : active) {
        size_t root = uf.find(idx);
        auto it = survivor_of_root.find(root);
        if (it == survivor_of_root.end()) {
            survivor_of_root.emplace(root, idx);
            continue;
        }
        size_t cur = it->second;
        auto key = std::make_pair(priority_of(idx), std::cref(docs[idx].id));
        auto cur_key = std::make_pair(priority_of(cur), std::cref(docs[cur].id));
        if (key.first < cur_key.first ||
            (key.first == cur_key.first && key.second.get() < cur_key.second.get()))
            it->second = idx;
    }

    std::map<std::string, std::string> prov_params{
        {"shingle_words", std::to_string(p.shingle_words)},
        {"num_perm", std::to_string(p.num_perm)},
        {"bands", std::to_string(p.bands)},
        {"rows", std::to_string(p.rows)},
        {"seed", to_hex64(p.seed)},
    };
    ProvenanceRecord rec = make_record("dedup", 2, Disposition::retained, prov_params);

    for (size_t idx : active) {
        size_t survivor = survivor_of_root.at(uf.find(idx));
        if (idx == survivor) {
            result.kept.push_back(annotate(docs[idx], rec));
        } else {
            auto edge = std::minmax(idx, survivor);
            auto hit = direct_hits.find({edge.first, edge.second});
            result.clusters.push_back(
                {docs[idx].id, docs[survivor].id, hit == direct_hits.end() ? 0 : hit->second});
        }
    }

    std::sort(result.kept.begin(), result.kept.end(),
              [](const Document& a, const Document& b) { return a.id < b.id; });
    std::sort(result.clusters.begin(), result.clusters.end(),
              [](const DedupEdge& a, const DedupEdge& b) { return a.dropped_id < b.dropped_id; });
    std::sort(result.dropped_other.begin(), result.dropped_other.end());
    return result;
}

}  // namespace darwin
