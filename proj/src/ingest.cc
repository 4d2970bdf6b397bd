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

#include "lexnorm/ingest.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lexnorm/jsonld.h"

namespace lexnorm {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

bool OnlyWhitespace(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  });
}

std::string ReadWholeFile(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) throw IoError("read from " + path.string() + " failed");
  return buffer.str();
}

const char* ToString(RecordOutcome outcome) {
  return outcome == RecordOutcome::kAccepted ? "accepted" : "rejected";
}

}  // namespace

IngestReport Ingest(const std::vector<SourceRecord>& records,
                    KnowledgeGraph& graph, IngestPolicy policy) {
  IngestReport report;
  for (const SourceRecord& record : records) {
    ++report.read_count;
    RecordResult result;
    result.locator = record.locator;

    std::optional<NormWork> work;
    try {
      DecodeReport decoded = ParseDocument(JsonLdDocument{record.text});
      result.findings = decoded.findings;
      work = std::move(decoded.work);
    } catch (const NotJsonError& e) {
      result.findings.Add(codes::kNotJson, Severity::kError, "", e.what());
    }

    // A work is upsertable only when its own validation is clean; the
    // store refuses anything else. Lenient mode merely tolerates
    // document-level error findings on top of a clean work.
    bool upsertable = work && ValidateNorm(*work).is_valid();
    bool accept = policy == IngestPolicy::kStrict
                      ? upsertable && result.findings.is_valid()
                      : upsertable;

    if (accept) {
      const std::string key = FormatUrn(work->urn);
      if (graph.Contains(key)) {
        result.findings.Add(codes::kDuplicateUrn, Severity::kWarning,
                            "legislationIdentifier",
                            "duplicate of already stored " + key +
                                "; overwriting");
      }
      graph.UpsertNorm(*work);
      result.outcome = RecordOutcome::kAccepted;
      ++report.accepted_count;
    } else {
      result.outcome = RecordOutcome::kRejected;
      ++report.rejected_count;
    }

    result.findings.Finalize();
    for (const ValidationFinding& finding : result.findings.findings()) {
      ++report.finding_histogram[finding.code];
    }
    report.per_record.push_back(std::move(result));
  }
  return report;
}

std::vector<SourceRecord> ReadJsonlFile(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path.string() + " for reading");
  std::vector<SourceRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    if (OnlyWhitespace(line)) continue;
    records.push_back(
        SourceRecord{path.string() + ":" + std::to_string(line_no), line});
  }
  if (file.bad()) throw IoError("read from " + path.string() + " failed");
  return records;
}

std::vector<SourceRecord> ReadJsonldDirectory(
    const std::filesystem::path& path) {
  std::error_code ec;
  std::filesystem::directory_iterator it(path, ec);
  if (ec) throw IoError("cannot list " + path.string() + ": " + ec.message());

  std::vector<std::filesystem::path> files;
  for (const auto& entry : it) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonld") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<SourceRecord> records;
  for (const auto& file : files) {
    records.push_back(SourceRecord{file.string(), ReadWholeFile(file)});
  }
  return records;
}

std::vector<SourceRecord> ReadSource(const std::filesystem::path& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) return ReadJsonldDirectory(path);
  if (ec || !std::filesystem::exists(path)) {
    throw IoError("no such file or directory: " + path.string());
  }
  if (path.extension() == ".jsonl") return ReadJsonlFile(path);
  return {SourceRecord{path.string(), ReadWholeFile(path)}};
}

std::string RenderReport(const IngestReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    OrderedJson j;
    j["read"] = report.read_count;
    j["accepted"] = report.accepted_count;
    j["rejected"] = report.rejected_count;
    OrderedJson records = OrderedJson::array();
    for (const RecordResult& record : report.per_record) {
      OrderedJson r;
      r["locator"] = record.locator;
      r["outcome"] = ToString(record.outcome);
      OrderedJson findings = OrderedJson::array();
      for (const ValidationFinding& f : record.findings.findings()) {
        findings.push_back({{"code", f.code},
                            {"severity", ToString(f.severity)},
                            {"path", f.path},
                            {"message", f.message}});
      }
      r["findings"] = std::move(findings);
      records.push_back(std::move(r));
    }
    j["records"] = std::move(records);
    OrderedJson histogram = OrderedJson::object();
    for (const auto& [code, count] : report.finding_histogram) {
      histogram[code] = count;
    }
    j["histogram"] = std::move(histogram);
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "read " << report.read_count << " accepted " << report.accepted_count
      << " rejected " << report.rejected_count << "\n";
  for (const RecordResult& record : report.per_record) {
    out << record.locator << ": " << ToString(record.outcome);
    if (!record.findings.findings().empty()) {
      out << " [";
      bool first = true;
      for (const ValidationFinding& f : record.findings.findings()) {
        if (!first) out << ", ";
        first = false;
        out << f.code;
        if (!f.path.empty()) out << "(" << f.path << ")";
      }
      out << "]";
    }
    out << "\n";
  }
  if (!report.finding_histogram.empty()) {
    // Descending count, code as tiebreak.
    std::vector<std::pair<std::string, std::size_t>> rows(
        report.finding_histogram.begin(), report.finding_histogram.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    out << "findings:\n";
    for (const auto& [code, count] : rows) {
      out << "  " << code << ": " << count << "\n";
    }
  }
  return out.str();
}

IngestReport ReportFromJson(const std::string& text) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw IoError("report text is not a JSON object");
  }
  IngestReport report;
  report.read_count = j.value("read", 0u);
  report.accepted_count = j.value("accepted", 0u);
  report.rejected_count = j.value("rejected", 0u);
  for (const auto& r : j.value("records", Json::array())) {
    RecordResult record;
    record.locator = r.value("locator", "");
    record.outcome = r.value("outcome", "") == "accepted"
                         ? RecordOutcome::kAccepted
                         : RecordOutcome::kRejected;
    for (const auto& f : r.value("findings", Json::array())) {
      record.findings.Add(f.value("code", ""),
                          f.value("severity", "") == "warning"
                              ? Severity::kWarning
                              : Severity::kError,
                          f.value("path", ""), f.value("message", ""));
    }
    report.per_record.push_back(std::move(record));
  }
  for (const auto& [code, count] :
       j.value("histogram", Json::object()).items()) {
    report.finding_histogram[code] = count.get<std::size_t>();
  }
  return report;
}

}  // namespace lexnorm
