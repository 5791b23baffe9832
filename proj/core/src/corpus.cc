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

#include "vedsum/corpus.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <utility>

#include "vedsum/error.h"
#include "vedsum/text.h"

namespace fs = std::filesystem;

namespace vedsum {
namespace {

bool is_dotfile(const fs::path& p) {
  const std::string name = p.filename().string();
  return !name.empty() && name.front() == '.';
}

bool is_sentence_end(char32_t c) {
  return c == U'.' || c == U'!' || c == U'?' || c == U'…';
}

bool is_closing_quote(char32_t c) { return c == U'"' || c == U'”'; }

std::vector<fs::path> list_entries(const fs::path& dir, bool want_dirs,
                                   std::string_view extension) {
  std::vector<fs::path> out;
  std::error_code ec;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end;
       it.increment(ec)) {
    const fs::path& p = it->path();
    if (is_dotfile(p)) continue;
    if (want_dirs) {
      if (it->is_directory()) out.push_back(p);
    } else if (it->is_regular_file() && p.extension() == extension) {
      out.push_back(p);
    }
  }
  if (ec) {
    throw Error(ErrorCode::kIoError, "cannot list directory: " + ec.message(),
                dir.string());
  }
  std::sort(out.begin(), out.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  return out;
}

class Loader {
 public:
  explicit Loader(fs::path root) : root_(std::move(root)) {}

  // Reads, validates and NFC-normalizes a text file, folding its bytes into
  // the corpus fingerprint.
  std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open file", path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
    if (!text::is_valid_utf8(bytes)) {
      throw Error(ErrorCode::kEncodingError, "file is not valid UTF-8",
                  path.string());
    }
    const std::string rel = fs::relative(path, root_).generic_string();
    fingerprint_ = text::fnv1a64(rel, fingerprint_);
    fingerprint_ = text::fnv1a64(std::string_view("\0", 1), fingerprint_);
    fingerprint_ = text::fnv1a64(bytes, fingerprint_);
    fingerprint_ = text::fnv1a64(std::string_view("\0", 1), fingerprint_);
    std::string_view view(bytes);
    if (view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    return text::nfc(view);
  }

  Cluster load_cluster(const fs::path& dir, std::vector<std::string>& warnings) {
    Cluster cluster;
    cluster.cluster_id = dir.filename().string();

    const fs::path docs_dir = dir / "docs";
    const fs::path refs_dir = dir / "refs";
    const fs::path sents_dir = dir / "sents";
    if (!fs::is_directory(docs_dir)) {
      throw Error(ErrorCode::kMissingDirectory, "cluster has no docs/",
                  docs_dir.string());
    }
    if (!fs::is_directory(refs_dir)) {
      throw Error(ErrorCode::kMissingDirectory, "cluster has no refs/",
                  refs_dir.string());
    }

    const auto doc_files = list_entries(docs_dir, false, ".txt");
    if (doc_files.empty()) {
      throw Error(ErrorCode::kEmptyCluster, "no documents", docs_dir.string());
    }
    const auto ref_files = list_entries(refs_dir, false, ".txt");
    if (ref_files.empty()) {
      throw Error(ErrorCode::kEmptyCluster, "no references", refs_dir.string());
    }

    std::size_t global = 0;
    for (const fs::path& file : doc_files) {
      Document doc;
      doc.doc_id = file.stem().string();
      doc.raw_text = read_text(file);

      std::vector<std::string> sentences;
      const fs::path sents_file = sents_dir / (doc.doc_id + ".sents");
      if (fs::is_regular_file(sents_file)) {
        const std::string body = read_text(sents_file);
        std::size_t pos = 0;
        while (pos <= body.size()) {
          std::size_t nl = body.find('\n', pos);
          if (nl == std::string::npos) nl = body.size();
          std::string line = text::trim(
              std::string_view(body).substr(pos, nl - pos));
          if (!line.empty()) sentences.push_back(std::move(line));
          pos = nl + 1;
        }
      } else {
        sentences = segment_sentences(doc.raw_text);
      }

      doc.sentences.reserve(sentences.size());
      for (std::size_t i = 0; i < sentences.size(); ++i) {
        doc.sentences.push_back(SentenceRecord{cluster.cluster_id, doc.doc_id,
                                               i, global++,
                                               std::move(sentences[i])});
      }
      cluster.documents.push_back(std::move(doc));
    }

    for (const fs::path& file : ref_files) {
      ReferenceSummary ref{file.stem().string(), text::trim(read_text(file))};
      if (ref.text.empty()) {
        throw Error(ErrorCode::kEmptyCluster, "reference summary is empty",
                    file.string());
      }
      cluster.references.push_back(std::move(ref));
    }

    if (cluster.documents.size() < 2) {
      warnings.push_back("cluster " + cluster.cluster_id + " has " +
                         std::to_string(cluster.documents.size()) +
                         " document(s); expected 2-5");
    } else if (cluster.documents.size() > 5) {
      warnings.push_back("cluster " + cluster.cluster_id + " has " +
                         std::to_string(cluster.documents.size()) +
                         " documents; expected 2-5");
    }
    if (cluster.references.size() != 2) {
      warnings.push_back("cluster " + cluster.cluster_id + " has " +
                         std::to_string(cluster.references.size()) +
                         " reference(s); expected 2");
    }
    return cluster;
  }

  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  fs::path root_;
  std::uint64_t fingerprint_ = text::kFnvOffsetBasis;
};

}  // namespace

std::string SentenceRecord::key() const {
  return cluster_id + "/" + doc_id + "/" + std::to_string(sent_index_in_doc);
}

std::size_t Cluster::sentence_count() const {
  std::size_t n = 0;
  for (const auto& doc : documents) n += doc.sentences.size();
  return n;
}

const Cluster* Corpus::find(std::string_view cluster_id) const {
  for (const auto& c : clusters) {
    if (c.cluster_id == cluster_id) return &c;
  }
  return nullptr;
}

Corpus load_corpus(const fs::path& root) {
  if (!fs::is_directory(root)) {
    throw Error(ErrorCode::kMissingDirectory, "corpus root is not a directory",
                root.string());
  }
  Corpus corpus;
  corpus.root_path = root;
  Loader loader(root);
  for (const fs::path& dir : list_entries(root, true, {})) {
    corpus.clusters.push_back(loader.load_cluster(dir, corpus.warnings));
  }
  if (corpus.clusters.empty()) {
    throw Error(ErrorCode::kMissingDirectory,
                "corpus root contains no cluster directories", root.string());
  }
  corpus.fingerprint = loader.fingerprint();
  return corpus;
}

std::vector<std::string> segment_sentences(std::string_view raw_text) {
  const std::u32string s = text::decode_utf8(raw_text);
  std::vector<std::string> out;
  auto flush = [&](std::size_t begin, std::size_t end) {
    std::string piece =
        text::trim(text::encode_utf8(std::u32string_view(s).substr(
            begin, end - begin)));
    if (!piece.empty()) out.push_back(std::move(piece));
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    const char32_t c = s[i];
    if (c == U'\n') {
      flush(start, i);
      start = ++i;
      continue;
    }
    if (is_sentence_end(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && is_closing_quote(s[j])) ++j;
      if (j == s.size() || text::is_whitespace(s[j])) {
        flush(start, j);
        start = i = j;
        continue;
      }
    }
    ++i;
  }
  flush(start, s.size());
  return out;
}

std::vector<SentenceRecord> concatenate_cluster(const Cluster& cluster) {
  std::vector<SentenceRecord> out;
  out.reserve(cluster.sentence_count());
  for (const auto& doc : cluster.documents) {
    out.insert(out.end(), doc.sentences.begin(), doc.sentences.end());
  }
  return out;
}

std::string fingerprint_hex(std::uint64_t fingerprint) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fingerprint));
  return buf;
}

}  // namespace vedsum
