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

#include "lexnorm/norm.h"

#include <algorithm>

namespace lexnorm {
namespace {

bool IsValidLanguageTag(std::string_view tag) {
  // BCP 47 shape check: a 2-8 letter primary subtag plus optional
  // alphanumeric subtags of up to 8 characters.
  if (tag.empty()) return false;
  size_t start = 0;
  bool primary = true;
  for (size_t i = 0; i <= tag.size(); ++i) {
    if (i == tag.size() || tag[i] == '-') {
      std::string_view sub = tag.substr(start, i - start);
      if (sub.empty() || sub.size() > 8) return false;
      if (primary && sub.size() < 2) return false;
      for (char c : sub) {
        bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
        bool digit = c >= '0' && c <= '9';
        if (primary ? !alpha : !(alpha || digit)) return false;
      }
      primary = false;
      start = i + 1;
    }
  }
  return true;
}

bool IsCountryCode(std::string_view code) {
  return code.size() == 2 && code[0] >= 'A' && code[0] <= 'Z' &&
         code[1] >= 'A' && code[1] <= 'Z';
}

void CheckAbsolute(ValidationReport& report, std::string_view uri,
                   std::string_view path) {
  if (!IsAbsoluteUri(uri)) {
    report.Add(codes::kBadUri, Severity::kError, path,
               "not an absolute URI: \"" + std::string(uri) + "\"");
  }
}

// A sameAs entry is self-referential when its "urn" query parameter names
// this very work; that is the shape of the work's own resolver URI.
bool IsSelfResolverUri(const std::string& entry, const std::string& canonical) {
  auto param = UrnQueryParam(entry);
  if (!param) return false;
  try {
    return NormalizeUrn(*param) == canonical;
  } catch (const UrnError&) {
    return false;
  }
}

}  // namespace

const char* ToString(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

void ValidationReport::Add(std::string_view code, Severity severity,
                           std::string_view path, std::string_view message) {
  findings_.push_back(ValidationFinding{std::string(code), severity,
                                        std::string(path),
                                        std::string(message)});
}

void ValidationReport::Merge(const ValidationReport& other) {
  findings_.insert(findings_.end(), other.findings_.begin(),
                   other.findings_.end());
}

void ValidationReport::Finalize() {
  std::stable_sort(findings_.begin(), findings_.end(),
                   [](const ValidationFinding& a, const ValidationFinding& b) {
                     if (a.path != b.path) return a.path < b.path;
                     return a.code < b.code;
                   });
}

std::size_t ValidationReport::error_count() const {
  return std::count_if(findings_.begin(), findings_.end(),
                       [](const ValidationFinding& f) {
                         return f.severity == Severity::kError;
                       });
}

std::size_t ValidationReport::warning_count() const {
  return findings_.size() - error_count();
}

bool ValidationReport::Has(std::string_view code) const {
  return std::any_of(findings_.begin(), findings_.end(),
                     [code](const ValidationFinding& f) {
                       return f.code == code;
                     });
}

ValidationReport ValidateNorm(const NormWork& work) {
  ValidationReport report;
  const std::string canonical = FormatUrn(work.urn);

  if (work.name.empty()) {
    report.Add(codes::kEmptyName, Severity::kError, "name",
               "name must be non-empty");
  }

  if (work.legislation_date != work.urn.date) {
    report.Add(codes::kUrnDateMismatch, Severity::kError, "legislationDate",
               "legislationDate " + FormatIsoDate(work.legislation_date) +
                   " differs from URN date " + FormatIsoDate(work.urn.date));
  }

  if (work.legislation_type.scheme != "tipo-norma" ||
      work.legislation_type.term != work.urn.doc_type) {
    report.Add(codes::kTypeUrnMismatch, Severity::kError, "legislationType",
               "legislationType \"" + FormatUrn(work.legislation_type) +
                   "\" does not match URN document type \"" +
                   work.urn.doc_type + "\"");
  }

  for (size_t i = 0; i < work.same_as.size(); ++i) {
    const std::string& entry = work.same_as[i];
    const std::string path = "sameAs[" + std::to_string(i) + "]";
    CheckAbsolute(report, entry, path);
    for (size_t j = 0; j < i; ++j) {
      if (work.same_as[j] == entry) {
        report.Add(codes::kDuplicateSameAs, Severity::kError, path,
                   "duplicate of sameAs[" + std::to_string(j) + "]");
        break;
      }
    }
    if (IsSelfResolverUri(entry, canonical)) {
      report.Add(codes::kSelfSameAs, Severity::kError, path,
                 "sameAs entry is the work's own resolver URI");
    }
  }

  if (!IsValidLanguageTag(work.in_language)) {
    report.Add(codes::kBadLanguageTag, Severity::kError, "inLanguage",
               "not a plausible BCP 47 tag: \"" + work.in_language + "\"");
  }

  if (work.legislation_passed_by) {
    CheckAbsolute(report, work.legislation_passed_by->id,
                  "legislationPassedBy.@id");
  }
  if (work.legislation_jurisdiction) {
    CheckAbsolute(report, work.legislation_jurisdiction->id,
                  "legislationJurisdiction.@id");
  }
  if (work.spatial_coverage) {
    CheckAbsolute(report, work.spatial_coverage->id, "spatialCoverage.@id");
    if (work.spatial_coverage->url) {
      CheckAbsolute(report, *work.spatial_coverage->url, "spatialCoverage.url");
    }
    if (!IsCountryCode(work.spatial_coverage->country_code)) {
      report.Add(codes::kBadCountryCode, Severity::kError,
                 "spatialCoverage.address.addressCountry",
                 "expected a 2-letter uppercase country code, got \"" +
                     work.spatial_coverage->country_code + "\"");
    }
  }
  if (work.publisher) {
    CheckAbsolute(report, work.publisher->id, "publisher.@id");
  }
  if (work.sd_publisher) {
    CheckAbsolute(report, work.sd_publisher->id, "sdPublisher.@id");
  }
  if (work.license) {
    CheckAbsolute(report, *work.license, "license");
  }
  if (work.sd_license) {
    CheckAbsolute(report, *work.sd_license, "sdLicense");
  }

  if (work.date_published && *work.date_published < work.legislation_date) {
    report.Add(codes::kPublishedBeforeSigned, Severity::kWarning,
               "datePublished",
               "datePublished " + FormatIsoDate(*work.date_published) +
                   " precedes legislationDate " +
                   FormatIsoDate(work.legislation_date));
  }

  if (!work.abstract_text) {
    report.Add(codes::kMissingRecommended, Severity::kWarning, "abstract",
               "recommended property is absent");
  }
  if (work.keywords.empty()) {
    report.Add(codes::kMissingRecommended, Severity::kWarning, "keywords",
               "recommended property is absent");
  }
  if (!work.license) {
    report.Add(codes::kMissingRecommended, Severity::kWarning, "license",
               "recommended property is absent");
  }

  report.Finalize();
  return report;
}

std::string DisplayName(const NormWork& work) { return work.name; }

}  // namespace lexnorm
