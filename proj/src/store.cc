// Copyright 2026 The KWIC Annotator Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kwic/store.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kwic/error.h"
#include "kwic/json_codec.h"
#include "kwic/rdfa.h"

namespace kwic {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

[[noreturn]] void Unknown(std::string_view doc_id) {
  throw Error(ErrorCode::kUnknownDocument,
              "unknown document: " + std::string(doc_id), "doc_id");
}

[[noreturn]] void Stale(uint64_t base, uint64_t latest) {
  throw Error(ErrorCode::kConflictError,
              "base revision " + std::to_string(base) +
                  " is stale; latest is " + std::to_string(latest),
              "base_revision");
}

DocumentSummary Summarize(const Document &doc, uint64_t revision,
                          bool has_metadata) {
  DocumentSummary s;
  s.doc_id = doc.id();
  s.status = doc.status();
  s.revision = revision;
  s.has_metadata = has_metadata;
  s.text_length = doc.text().size();
  s.mention_count = doc.mentions().size();
  return s;
}

int64_t NowMillis() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

}  // namespace

// ---------------------------------------------------------------------------
// MemoryStore

MemoryStore::Entry &MemoryStore::Find(std::string_view doc_id) {
  auto it = entries_.find(doc_id);
  if (it == entries_.end()) Unknown(doc_id);
  return it->second;
}

uint64_t MemoryStore::Create(const Document &doc) {
  std::lock_guard lock(mu_);
  if (entries_.contains(doc.id())) {
    throw Error(ErrorCode::kDuplicateDocument,
                "document already exists: " + doc.id(), "doc_id");
  }
  doc.CheckInvariants();
  entries_.emplace(doc.id(), Entry{doc, 1, std::nullopt});
  return 1;
}

uint64_t MemoryStore::Save(const Document &doc,
                           std::optional<uint64_t> base_revision) {
  std::lock_guard lock(mu_);
  Entry &entry = Find(doc.id());
  if (base_revision && *base_revision != entry.revision) {
    Stale(*base_revision, entry.revision);
  }
  doc.CheckInvariants();
  entry.document = doc;
  return ++entry.revision;
}

StoredDocument MemoryStore::Load(std::string_view doc_id) {
  std::lock_guard lock(mu_);
  const Entry &entry = Find(doc_id);
  return {entry.document, entry.revision};
}

bool MemoryStore::Exists(std::string_view doc_id) {
  std::lock_guard lock(mu_);
  return entries_.contains(doc_id);
}

std::vector<DocumentSummary> MemoryStore::List() {
  std::lock_guard lock(mu_);
  std::vector<DocumentSummary> out;
  for (const auto &[id, entry] : entries_) {
    out.push_back(Summarize(entry.document, entry.revision,
                            entry.metadata.has_value()));
  }
  return out;
}

std::optional<MetadataRecord> MemoryStore::GetMetadata(
    std::string_view doc_id) {
  std::lock_guard lock(mu_);
  return Find(doc_id).metadata;
}

MetadataRecord MemoryStore::PutMetadata(std::string_view doc_id,
                                        const MetadataRecord &record) {
  std::lock_guard lock(mu_);
  Entry &entry = Find(doc_id);
  ValidateMetadata(record);
  entry.metadata = record;
  return record;
}

// ---------------------------------------------------------------------------
// FileStore

std::string EncodeDocId(std::string_view doc_id) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : doc_id) {
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
        (c >= '0' && c <= '9') || c == '_' || c == '-') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  return out;
}

std::string DecodeDocId(std::string_view encoded) {
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  std::string out;
  for (size_t i = 0; i < encoded.size(); ++i) {
    if (encoded[i] == '%' && i + 2 < encoded.size() &&
        hex(encoded[i + 1]) >= 0 && hex(encoded[i + 2]) >= 0) {
      out += static_cast<char>(hex(encoded[i + 1]) * 16 + hex(encoded[i + 2]));
      i += 2;
    } else {
      out += encoded[i];
    }
  }
  return out;
}

void WriteFileAtomically(const fs::path &path, std::string_view contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::kStorageError,
                  "cannot write " + tmp.string());
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      throw Error(ErrorCode::kStorageError, "short write to " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    throw Error(ErrorCode::kStorageError,
                "cannot replace " + path.string() + ": " + ec.message());
  }
}

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kStorageError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FileStore::FileStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_ / "documents", ec);
  if (ec) {
    throw Error(ErrorCode::kStorageError,
                "cannot create storage root " + root_.string() + ": " +
                    ec.message());
  }
}

fs::path FileStore::DocumentDir(std::string_view doc_id) const {
  return root_ / "documents" / EncodeDocId(doc_id);
}

uint64_t FileStore::ReadRevision(const fs::path &dir) const {
  try {
    const json state = json::parse(ReadFile(dir / "state.json"));
    return state.at("revision").get<uint64_t>();
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kStorageError,
                "corrupt state in " + dir.string() + ": " + e.what());
  }
}

void FileStore::Write(const fs::path &dir, const Document &doc,
                      uint64_t revision) {
  doc.CheckInvariants();
  const json state = {{"revision", revision},
                      {"document", DocumentToJson(doc)}};
  WriteFileAtomically(dir / "document.html", RenderRdfa(doc));
  // state.json is written last: its revision is the commit point.
  WriteFileAtomically(dir / "state.json", state.dump(1) + "\n");
  std::ofstream log(dir / "revisions.log", std::ios::app);
  log << revision << '\t' << NowMillis() << '\n';
}

uint64_t FileStore::Create(const Document &doc) {
  std::lock_guard lock(mu_);
  const fs::path dir = DocumentDir(doc.id());
  if (fs::exists(dir / "state.json")) {
    throw Error(ErrorCode::kDuplicateDocument,
                "document already exists: " + doc.id(), "doc_id");
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kStorageError,
                "cannot create " + dir.string() + ": " + ec.message());
  }
  Write(dir, doc, 1);
  return 1;
}

uint64_t FileStore::Save(const Document &doc,
                         std::optional<uint64_t> base_revision) {
  std::lock_guard lock(mu_);
  const fs::path dir = DocumentDir(doc.id());
  if (!fs::exists(dir / "state.json")) Unknown(doc.id());
  const uint64_t latest = ReadRevision(dir);
  if (base_revision && *base_revision != latest) Stale(*base_revision, latest);
  Write(dir, doc, latest + 1);
  return latest + 1;
}

StoredDocument FileStore::Load(std::string_view doc_id) {
  std::lock_guard lock(mu_);
  const fs::path dir = DocumentDir(doc_id);
  if (!fs::exists(dir / "state.json")) Unknown(doc_id);
  json state;
  try {
    state = json::parse(ReadFile(dir / "state.json"));
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kStorageError,
                "corrupt state in " + dir.string() + ": " + e.what());
  }
  if (!state.is_object() || !state.contains("document") ||
      !state.contains("revision")) {
    throw Error(ErrorCode::kStorageError, "corrupt state in " + dir.string());
  }
  return {DocumentFromJson(state["document"]),
          state["revision"].get<uint64_t>()};
}

bool FileStore::Exists(std::string_view doc_id) {
  std::lock_guard lock(mu_);
  return fs::exists(DocumentDir(doc_id) / "state.json");
}

std::vector<DocumentSummary> FileStore::List() {
  std::vector<std::string> ids;
  {
    std::lock_guard lock(mu_);
    for (const auto &entry : fs::directory_iterator(root_ / "documents")) {
      if (entry.is_directory() && fs::exists(entry.path() / "state.json")) {
        ids.push_back(DecodeDocId(entry.path().filename().string()));
      }
    }
  }
  std::sort(ids.begin(), ids.end());
  std::vector<DocumentSummary> out;
  for (const std::string &id : ids) {
    StoredDocument stored = Load(id);
    bool has_metadata;
    {
      std::lock_guard lock(mu_);
      has_metadata = fs::exists(DocumentDir(id) / "metadata.json");
    }
    out.push_back(Summarize(stored.document, stored.revision, has_metadata));
  }
  return out;
}

std::optional<MetadataRecord> FileStore::GetMetadata(std::string_view doc_id) {
  std::lock_guard lock(mu_);
  const fs::path dir = DocumentDir(doc_id);
  if (!fs::exists(dir / "state.json")) Unknown(doc_id);
  if (!fs::exists(dir / "metadata.json")) return std::nullopt;
  try {
    return MetadataFromJson(json::parse(ReadFile(dir / "metadata.json")));
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kStorageError,
                "corrupt metadata in " + dir.string() + ": " + e.what());
  }
}

MetadataRecord FileStore::PutMetadata(std::string_view doc_id,
                                      const MetadataRecord &record) {
  std::lock_guard lock(mu_);
  const fs::path dir = DocumentDir(doc_id);
  if (!fs::exists(dir / "state.json")) Unknown(doc_id);
  ValidateMetadata(record);
  WriteFileAtomically(dir / "metadata.json",
                      MetadataToJson(record).dump(2) + "\n");
  return record;
}

}  // namespace kwic
