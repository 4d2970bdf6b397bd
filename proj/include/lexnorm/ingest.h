// Copyright 2026 The Lexnorm Authors.
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

#ifndef LEXNORM_INGEST_H_
#define LEXNORM_INGEST_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lexnorm/graph.h"
#include "lexnorm/norm.h"

namespace lexnorm {

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

// strict: a record with any error finding is rejected.
// lenient: a record is accepted whenever a valid work could be recovered,
// tolerating document-level defects such as ID_URN_MISMATCH.
enum class IngestPolicy { kStrict, kLenient };

enum class RecordOutcome { kAccepted, kRejected };

// One candidate JSON-LD text plus where it came from ("file:line" for
// JSONL lines, the path for per-file documents).
struct SourceRecord {
  std::string locator;
  std::string text;
};

struct RecordResult {
  std::string locator;
  RecordOutcome outcome = RecordOutcome::kRejected;
  ValidationReport findings;

  bool operator==(const RecordResult&) const = default;
};

struct IngestReport {
  std::size_t read_count = 0;
  std::size_t accepted_count = 0;
  std::size_t rejected_count = 0;
  std::vector<RecordResult> per_record;  // source order
  std::map<std::string, std::size_t> finding_histogram;

  bool is_empty() const { return read_count == 0; }

  bool operator==(const IngestReport&) const = default;
};

// Runs every record through the codec and upserts the accepted works.
// Malformed records become report rows, never failures; a duplicate URN
// overwrites the stored work and is flagged with a DUPLICATE_URN warning.
IngestReport Ingest(const std::vector<SourceRecord>& records,
                    KnowledgeGraph& graph, IngestPolicy policy);

// Record readers. Throw IoError when the path cannot be read.
std::vector<SourceRecord> ReadJsonlFile(const std::filesystem::path& path);
std::vector<SourceRecord> ReadJsonldDirectory(const std::filesystem::path& path);
// Dispatches on the path: directory -> .jsonld files in lexicographic
// order; *.jsonl -> one record per line; anything else -> one whole-file
// document.
std::vector<SourceRecord> ReadSource(const std::filesystem::path& path);

enum class ReportFormat { kText, kJson };

// Deterministic rendering. The JSON form round-trips through
// ReportFromJson to an equal report; the text histogram is ordered by
// descending count, then code.
std::string RenderReport(const IngestReport& report, ReportFormat format);
IngestReport ReportFromJson(const std::string& text);

}  // namespace lexnorm

#endif  // LEXNORM_INGEST_H_
