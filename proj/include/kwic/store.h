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

// Document persistence.
//
// FileStore layout under its root:
//
//   documents/<doc id, percent-encoded>/state.json     full annotated state
//   documents/<doc id, percent-encoded>/document.html  RDFa rendering
//   documents/<doc id, percent-encoded>/metadata.json  MetadataRecord
//   documents/<doc id, percent-encoded>/revisions.log  "<rev>\t<unix ms>"
//
// Every file is replaced atomically (write to a temporary, then rename).
// Revisions start at 1 on creation and grow by one on every save.

#ifndef KWIC_STORE_H_
#define KWIC_STORE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kwic/metadata.h"
#include "kwic/model.h"

namespace kwic {

struct DocumentSummary {
  std::string doc_id;
  DocumentStatus status = DocumentStatus::kToBeStarted;
  uint64_t revision = 0;
  bool has_metadata = false;
  size_t text_length = 0;
  size_t mention_count = 0;
};

struct StoredDocument {
  Document document;
  uint64_t revision = 0;
};

class DocumentStore {
 public:
  virtual ~DocumentStore() = default;

  // Throws DuplicateDocument. Returns the first revision.
  virtual uint64_t Create(const Document &doc) = 0;

  // Throws UnknownDocument, or ConflictError when `base_revision` is given
  // and is not the latest revision.
  virtual uint64_t Save(const Document &doc,
                        std::optional<uint64_t> base_revision) = 0;

  // Throws UnknownDocument.
  virtual StoredDocument Load(std::string_view doc_id) = 0;

  virtual bool Exists(std::string_view doc_id) = 0;

  // Sorted by doc id.
  virtual std::vector<DocumentSummary> List() = 0;

  // Throws UnknownDocument.
  virtual std::optional<MetadataRecord> GetMetadata(std::string_view doc_id) = 0;

  // Validates, then replaces the document's record. Throws ValidationError
  // or UnknownDocument.
  virtual MetadataRecord PutMetadata(std::string_view doc_id,
                                     const MetadataRecord &record) = 0;
};

class MemoryStore : public DocumentStore {
 public:
  uint64_t Create(const Document &doc) override;
  uint64_t Save(const Document &doc,
                std::optional<uint64_t> base_revision) override;
  StoredDocument Load(std::string_view doc_id) override;
  bool Exists(std::string_view doc_id) override;
  std::vector<DocumentSummary> List() override;
  std::optional<MetadataRecord> GetMetadata(std::string_view doc_id) override;
  MetadataRecord PutMetadata(std::string_view doc_id,
                             const MetadataRecord &record) override;

 private:
  struct Entry {
    Document document;
    uint64_t revision;
    std::optional<MetadataRecord> metadata;
  };
  Entry &Find(std::string_view doc_id);

  std::mutex mu_;
  std::map<std::string, Entry, std::less<>> entries_;
};

class FileStore : public DocumentStore {
 public:
  // Creates the directory tree if missing; throws StorageError.
  explicit FileStore(std::filesystem::path root);

  uint64_t Create(const Document &doc) override;
  uint64_t Save(const Document &doc,
                std::optional<uint64_t> base_revision) override;
  StoredDocument Load(std::string_view doc_id) override;
  bool Exists(std::string_view doc_id) override;
  std::vector<DocumentSummary> List() override;
  std::optional<MetadataRecord> GetMetadata(std::string_view doc_id) override;
  MetadataRecord PutMetadata(std::string_view doc_id,
                             const MetadataRecord &record) override;

  const std::filesystem::path &root() const { return root_; }
  std::filesystem::path DocumentDir(std::string_view doc_id) const;

 private:
  uint64_t ReadRevision(const std::filesystem::path &dir) const;
  void Write(const std::filesystem::path &dir, const Document &doc,
             uint64_t revision);

  std::filesystem::path root_;
  std::mutex mu_;
};

// Directory-safe encoding: [A-Za-z0-9_-] kept, everything else %XX.
std::string EncodeDocId(std::string_view doc_id);
std::string DecodeDocId(std::string_view encoded);

// Writes via a sibling temporary and rename. Throws StorageError.
void WriteFileAtomically(const std::filesystem::path &path,
                         std::string_view contents);
std::string ReadFile(const std::filesystem::path &path);

}  // namespace kwic

#endif  // KWIC_STORE_H_
