#include "darwin/manifest.hpp"

#include <fstream>
#include <unordered_set>

namespace darwin {
namespace {

using nlohmann::json;

json meta_value_to_json(const MetaValue& v) {
    return std::visit([](const auto& x) { return json(x); }, v);
}

MetaValue meta_value_from_json(const json& j, int64_t line_no) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_number_integer() || j.is_number_unsigned()) return j.get<int64_t>();
    if (j.is_number_float()) return j.get<double>();
    throw Error(errc::malformed_line,
                "line " + std::to_string(line_no) + ": meta values must be scalars");
}

const json& require_field(const json& j, const char* name, int64_t line_no) {
    auto it = j.find(name);
    if (it == j.end())
        throw Error(errc::missing_field,
                    std::string(name) + " (line " + std::to_string(line_no) + ")");
    return *it;
}

}  // namespace

json document_to_json(const Document& doc) {
    json j;  // nlohmann::json orders keys lexicographically
    j["id"] = doc.id;
    j["source"] = doc.source;
    j["domain"] = domain_name(doc.domain);
    j["darwin_level"] = doc.darwin_level;
    j["text"] = doc.text;
    j["token_count"] = doc.token_count;
    json meta = json::object();
    for (const auto& [k, v] : doc.meta) meta[k] = meta_value_to_json(v);
    j["meta"] = std::move(meta);
    json prov = json::array();
    for (const auto& rec : doc.provenance) {
        prov.push_back({{"op", rec.op},
                        {"level", rec.level},
                        {"params_digest", rec.params_digest},
                        {"disposition", disposition_name(rec.disposition)}});
    }
    j["provenance"] = std::move(prov);
    return j;
}

Document document_from_json(const json& j, int64_t line_no) {
    if (!j.is_object())
        throw Error(errc::malformed_line, "line " + std::to_string(line_no) + ": not an object");
    Document doc;
    doc.id = require_field(j, "id", line_no).get<std::string>();
    doc.source = require_field(j, "source", line_no).get<std::string>();
    doc.domain = domain_from_name(require_field(j, "domain", line_no).get<std::string>());
    doc.darwin_level = require_field(j, "darwin_level", line_no).get<int>();
    doc.text = require_field(j, "text", line_no).get<std::string>();
    doc.token_count = require_field(j, "token_count", line_no).get<int64_t>();
    for (const auto& [k, v] : require_field(j, "meta", line_no).items())
        doc.meta.emplace(k, meta_value_from_json(v, line_no));
    for (const auto& p : require_field(j, "provenance", line_no)) {
        ProvenanceRecord rec;
        rec.op = require_field(p, "op", line_no).get<std::string>();
        rec.level = require_field(p, "level", line_no).get<int>();
        rec.params_digest = require_field(p, "params_digest", line_no).get<std::string>();
        rec.disposition =
            disposition_from_name(require_field(p, "disposition", line_no).get<std::string>());
        doc.provenance.push_back(std::move(rec));
    }
    return doc;
}

std::string document_to_line(const Document& doc) { return document_to_json(doc).dump(); }

void for_each_document(const std::filesystem::path& path,
                       const std::function<void(Document&&)>& fn) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::io_failure, "cannot open manifest: " + path.string());
    std::unordered_set<std::string> seen;
    std::string line;
    int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error&) {
            throw Error(errc::malformed_line, std::to_string(line_no));
        }
        Document doc = document_from_json(j, line_no);
        if (!seen.insert(doc.id).second) throw Error(errc::duplicate_id, doc.id);
        fn(std::move(doc));
    }
}

std::vector<Document> load_manifest(const std::filesystem::path& path) {
    std::vector<Document> docs;
    for_each_document(path, [&](Document&& d) { docs.push_back(std::move(d)); });
    return docs;
}

Manifest write_manifest(const std::vector<Document>& docs, const std::filesystem::path& path,
                        const std::string& counter_id) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(errc::io_failure, "cannot open for write: " + path.string());
    for (const auto& doc : docs) out << document_to_line(doc) << '\n';
    out.flush();
    if (!out) throw Error(errc::io_failure, "write failed: " + path.string());

    Manifest m{path, counter_id, static_cast<int64_t>(docs.size())};
    json side{{"counter_id", m.counter_id}, {"record_count", m.record_count}};
    std::ofstream meta(path.string() + ".manifest.json", std::ios::binary | std::ios::trunc);
    if (!meta) throw Error(errc::io_failure, "cannot write sidecar for: " + path.string());
    meta << side.dump() << '\n';
    return m;
}

Manifest manifest_info(const std::filesystem::path& path) {
    Manifest m{path, "whitespace", 0};
    std::ifstream side(path.string() + ".manifest.json", std::ios::binary);
    if (side) {
        json j = json::parse(side, nullptr, false);
        if (!j.is_discarded()) {
            m.counter_id = j.value("counter_id", m.counter_id);
            m.record_count = j.value("record_count", int64_t{0});
            return m;
        }
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::io_failure, "cannot open manifest: " + path.string());
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++m.record_count;
    return m;
}

uint64_t file_content_hash(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::io_failure, "cannot open: " + path.string());
    uint64_t h = kFnvOffset;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0)
        h = fnv1a64(std::string_view(buf, static_cast<size_t>(in.gcount())), h);
    return h;
}

uint64_t documents_content_hash(const std::vector<Document>& docs) {
    uint64_t h = kFnvOffset;
    for (const auto& doc : docs) {
        h = fnv1a64(document_to_line(doc), h);
        h = fnv1a64("\n", h);
    }
    return h;
}

}  // namespace darwin
