#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "darwin/document.hpp"

namespace darwin {

// Descriptor for a JSONL manifest on disk. counter_id names the token
// counter the token_count fields were measured with; it is persisted in a
// `<path>.manifest.json` sidecar so accounting stays reproducible.
struct Manifest {
    std::filesystem::path path;
    std::string counter_id;
    int64_t record_count = 0;
};

// Canonical document serialization: fixed field set, sorted keys, so equal
// documents serialize to identical bytes on every run and worker count.
nlohmann::json document_to_json(const Document& doc);
Document document_from_json(const nlohmann::json& j, int64_t line_no = 0);
std::string document_to_line(const Document& doc);

// Streams documents in file order. Aborts with MalformedLine, MissingField,
// or DuplicateId; ids must be unique within one manifest.
void for_each_document(const std::filesystem::path& path,
                       const std::function<void(Document&&)>& fn);

std::vector<Document> load_manifest(const std::filesystem::path& path);

Manifest write_manifest(const std::vector<Document>& docs, const std::filesystem::path& path,
                        const std::string& counter_id = "whitespace");

// Reads the sidecar if present; otherwise counts lines and assumes the
// default counter.
Manifest manifest_info(const std::filesystem::path& path);

// FNV hash over the manifest's exact bytes; used for plan drift detection
// and determinism checks.
uint64_t file_content_hash(const std::filesystem::path& path);

// Same hash over in-memory documents (canonical line serialization).
uint64_t documents_content_hash(const std::vector<Document>& docs);

}  // namespace darwin
