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

#ifndef LEXNORM_NORM_H_
#define LEXNORM_NORM_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lexnorm/urn.h"

namespace lexnorm {

// Registered finding codes. The registry is extensible: codes outside
// this list may appear in reports produced by other modules, but every
// code emitted by this toolkit is declared here.
namespace codes {

// Cross-field rule violations on a NormWork.
inline constexpr char kUrnDateMismatch[] = "URN_DATE_MISMATCH";
inline constexpr char kTypeUrnMismatch[] = "TYPE_URN_MISMATCH";
inline constexpr char kEmptyName[] = "EMPTY_NAME";
inline constexpr char kDuplicateSameAs[] = "DUPLICATE_SAME_AS";
inline constexpr char kSelfSameAs[] = "SELF_SAME_AS";
inline constexpr char kBadLanguageTag[] = "BAD_LANGUAGE_TAG";
inline constexpr char kBadCountryCode[] = "BAD_COUNTRY_CODE";
inline constexpr char kBadUri[] = "BAD_URI";
inline constexpr char kPublishedBeforeSigned[] = "PUBLISHED_BEFORE_SIGNED";
inline constexpr char kMissingRecommended[] = "MISSING_RECOMMENDED";

// Structural findings raised while decoding a JSON-LD document.
inline constexpr char kNotObject[] = "NOT_OBJECT";
inline constexpr char kMissingContext[] = "MISSING_CONTEXT";
inline constexpr char kWrongContext[] = "WRONG_CONTEXT";
inline constexpr char kMissingType[] = "MISSING_TYPE";
inline constexpr char kWrongType[] = "WRONG_TYPE";
inline constexpr char kMissingId[] = "MISSING_ID";
inline constexpr char kBadId[] = "BAD_ID";
inline constexpr char kMissingIdentifier[] = "MISSING_IDENTIFIER";
inline constexpr char kBadUrn[] = "BAD_URN";
inline constexpr char kMissingField[] = "MISSING_FIELD";
inline constexpr char kBadField[] = "BAD_FIELD";

// Document-level cross-check: the "@id" resolver URI names a different
// norm than "legislationIdentifier".
inline constexpr char kIdUrnMismatch[] = "ID_URN_MISMATCH";

// Ingest pipeline.
inline constexpr char kNotJson[] = "NOT_JSON";
inline constexpr char kDuplicateUrn[] = "DUPLICATE_URN";

}  // namespace codes

enum class Severity { kError, kWarning };

const char* ToString(Severity severity);

struct ValidationFinding {
  std::string code;
  Severity severity = Severity::kError;
  std::string path;
  std::string message;

  bool operator==(const ValidationFinding&) const = default;
};

// Ordered collection of findings; ordering is deterministic, by
// (path, code). Violations are data, not failures.
class ValidationReport {
 public:
  void Add(std::string_view code, Severity severity, std::string_view path,
           std::string_view message);
  void Merge(const ValidationReport& other);

  // Sorts findings by (path, code). Idempotent; every producer calls it
  // once before handing the report out.
  void Finalize();

  bool is_valid() const { return error_count() == 0; }
  std::size_t error_count() const;
  std::size_t warning_count() const;
  bool Has(std::string_view code) const;

  const std::vector<ValidationFinding>& findings() const { return findings_; }

  bool operator==(const ValidationReport&) const = default;

 private:
  std::vector<ValidationFinding> findings_;
};

// Reference to an organization node (@id plus an optional label).
struct OrgRef {
  std::string id;
  std::optional<std::string> name;

  bool operator==(const OrgRef&) const = default;
};

struct AdminAreaRef {
  std::string id;
  std::optional<std::string> name;

  bool operator==(const AdminAreaRef&) const = default;
};

struct CountryRef {
  std::string id;
  std::string name;
  std::optional<std::string> url;
  std::string country_code;  // ISO 3166-1 alpha-2, uppercase

  bool operator==(const CountryRef&) const = default;
};

// The abstract legal norm: the stable entity a law remains through all
// its amendments, independent of any specific text version or format.
// Field names follow the schema.org/Legislation properties they are
// serialized as.
struct NormWork {
  LexNormUrn urn;                 // legislationIdentifier
  LexVocabUrn legislation_type;   // legislationType (tipo-norma term)
  std::vector<std::string> same_as;
  std::string in_language;
  std::string name;
  std::vector<std::string> alternate_names;
  std::optional<std::string> abstract_text;
  std::vector<LexVocabUrn> about;  // theme terms
  std::vector<std::string> keywords;
  std::chrono::year_month_day legislation_date{};
  std::optional<OrgRef> legislation_passed_by;
  std::optional<AdminAreaRef> legislation_jurisdiction;
  std::optional<CountryRef> spatial_coverage;
  std::optional<std::chrono::year_month_day> date_published;
  std::optional<std::string> license;
  std::optional<OrgRef> publisher;
  std::optional<std::chrono::year_month_day> sd_date_published;
  std::optional<std::string> sd_license;
  std::optional<OrgRef> sd_publisher;

  // Unknown JSON-LD properties carried through for round-trip fidelity,
  // in first-seen order. Never individually validated.
  nlohmann::ordered_json extensions = nlohmann::ordered_json::object();

  bool operator==(const NormWork&) const = default;
};

// Checks every cross-field rule and returns the full list of violations.
// Pure and deterministic: identical input yields an identical report.
ValidationReport ValidateNorm(const NormWork& work);

// Returns the official name verbatim; never synthesizes one.
std::string DisplayName(const NormWork& work);

}  // namespace lexnorm

#endif  // LEXNORM_NORM_H_
