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

#ifndef LEXNORM_JSONLD_H_
#define LEXNORM_JSONLD_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lexnorm/norm.h"

namespace lexnorm {

// The "@context" value emitted by this toolkit. On parse the https form
// and the slash-less https form are accepted as well: tolerant reader,
// strict writer.
inline constexpr char kSchemaContext[] = "http://schema.org/";

inline constexpr char kJsonLdMediaType[] = "application/ld+json";

// One schema.org/Legislation node serialized as a JSON object.
struct JsonLdDocument {
  std::string text;
};

// The document text is not JSON at all. Everything else the codec finds
// wrong is reported as findings, never thrown.
class NotJsonError : public std::runtime_error {
 public:
  explicit NotJsonError(const std::string& message)
      : std::runtime_error(message) {}
};

// EmitDocument precondition violated: the work has validation errors.
class InvalidWorkError : public std::runtime_error {
 public:
  explicit InvalidWorkError(ValidationReport report)
      : std::runtime_error("work has validation errors"),
        report_(std::move(report)) {}

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct DecodeReport {
  // Present iff the document had no structural error (the node could be
  // decoded); cross-field violations leave the work in place and show up
  // in findings instead.
  std::optional<NormWork> work;
  ValidationReport findings;
  std::vector<std::string> unknown_properties;  // first-seen order
};

// Serializes a work as a schema.org/Legislation JSON-LD document.
// Byte-deterministic for a given (work, base): fixed property order,
// 2-space indentation, raw UTF-8, absent optionals omitted (never null).
// Throws InvalidWorkError when ValidateNorm reports errors and
// UrnError(kBadBase) for an unusable base.
JsonLdDocument EmitDocument(const NormWork& work, std::string_view base);

// Decodes a Legislation document. Structural checks (@context, @type,
// @id, identifier, field shapes) produce error findings; when they all
// pass, the decoded work's ValidateNorm report is merged in. Throws
// NotJsonError only for unparseable text.
DecodeReport ParseDocument(const JsonLdDocument& doc);

// True iff the two documents are equal once object key order and
// whitespace are ignored, LEX URN values (bare or in resolver URIs) are
// normalized, and lone values of the collection-valued properties are
// read as one-element arrays. Collection order is significant.
// Throws NotJsonError when either text is not JSON.
bool SemanticallyEqual(const JsonLdDocument& a, const JsonLdDocument& b);

}  // namespace lexnorm

#endif  // LEXNORM_JSONLD_H_
