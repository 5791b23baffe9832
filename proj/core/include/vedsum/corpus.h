// Copyright 2026 The vedsum Authors.
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

// Cluster-of-documents corpora on disk:
//
//   <root>/<cluster_id>/docs/<doc_id>.txt      raw document text (required)
//   <root>/<cluster_id>/refs/<ref_id>.txt      gold reference summary (required)
//   <root>/<cluster_id>/sents/<doc_id>.sents   one sentence per line (optional)
//
// Dotfiles are ignored and ids are file names without their extension. All
// text is NFC-normalized on load; ids and sentence lists are ordered by byte
// comparison so the loaded structure does not depend on directory order.

#ifndef VEDSUM_CORPUS_H_
#define VEDSUM_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace vedsum {

struct SentenceRecord {
  std::string cluster_id;
  std::string doc_id;
  std::size_t sent_index_in_doc = 0;
  // Position in the concatenated cluster paragraph.
  std::size_t global_index = 0;
  std::string text;

  // "<cluster_id>/<doc_id>/<sent_index_in_doc>", the embedding cache key.
  std::string key() const;

  friend bool operator==(const SentenceRecord&,
                         const SentenceRecord&) = default;
};

struct Document {
  std::string doc_id;
  std::string raw_text;
  std::vector<SentenceRecord> sentences;

  friend bool operator==(const Document&, const Document&) = default;
};

struct ReferenceSummary {
  std::string ref_id;
  std::string text;

  friend bool operator==(const ReferenceSummary&,
                         const ReferenceSummary&) = default;
};

struct Cluster {
  std::string cluster_id;
  std::vector<Document> documents;
  std::vector<ReferenceSummary> references;

  std::size_t sentence_count() const;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

struct Corpus {
  std::filesystem::path root_path;
  std::vector<Cluster> clusters;
  // FNV-1a 64 over every file the loader read, keyed by relative path.
  std::uint64_t fingerprint = 0;
  // Non-fatal shape issues (single-document clusters, reference count != 2).
  std::vector<std::string> warnings;

  const Cluster* find(std::string_view cluster_id) const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// Throws Error with kMissingDirectory, kEmptyCluster or kEncodingError; the
// error subject is the offending path.
Corpus load_corpus(const std::filesystem::path& root);

// Fallback splitter used when no .sents file exists for a document. Splits
// after . ! ? and U+2026 when followed by whitespace or end of text (closing
// quotes right after the mark stay with the sentence) and at every newline.
// Pieces are trimmed and empty pieces dropped.
std::vector<std::string> segment_sentences(std::string_view raw_text);

// All sentences of the cluster, document-major, in global_index order.
std::vector<SentenceRecord> concatenate_cluster(const Cluster& cluster);

// Fingerprint rendered as 16 lowercase hex digits.
std::string fingerprint_hex(std::uint64_t fingerprint);

}  // namespace vedsum

#endif  // VEDSUM_CORPUS_H_
