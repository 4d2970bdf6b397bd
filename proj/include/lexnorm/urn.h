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

#ifndef LEXNORM_URN_H_
#define LEXNORM_URN_H_

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace lexnorm {

// LEX URN grammar accepted by this toolkit:
//
//   lexurn   = "urn:lex:" jurisdiction ":" authority ":" tail
//   tail     = doctype ":" date ";" number      (norm identifier)
//            | scheme ":" term                  (vocabulary term)
//   date     = 4DIGIT "-" 2DIGIT "-" 2DIGIT     (valid calendar date)
//   token    = atom *( "." atom )
//   atom     = lower-alnum *( "-" lower-alnum )
//   number   = digits *( "." digits )
//
// Input is accepted case-insensitively; canonical output is always
// lowercase. The extended LEX URN syntax (version "@", portion "!",
// jurisdiction subdivision ";") is rejected with UnsupportedFeature.

enum class UrnErrorCode {
  kMissingPrefix,
  kBadSegmentCount,
  kBadToken,
  kBadDate,
  kUnsupportedFeature,
  kBadBase,
};

const char* ToString(UrnErrorCode code);

class UrnError : public std::runtime_error {
 public:
  UrnError(UrnErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  UrnErrorCode code() const { return code_; }

 private:
  UrnErrorCode code_;
};

// Identifier of a legal norm: urn:lex:br:federal:lei.complementar:2006-12-14;123
struct LexNormUrn {
  std::string jurisdiction;
  std::string authority;
  std::string doc_type;
  std::chrono::year_month_day date{};
  std::string number;

  bool operator==(const LexNormUrn&) const = default;
};

// Identifier of a controlled-vocabulary term:
// urn:lex:br:federal:tipo-norma:lei.complementar
struct LexVocabUrn {
  std::string jurisdiction;
  std::string authority;
  std::string scheme;
  std::string term;

  bool operator==(const LexVocabUrn&) const = default;
};

// A parsed LEX URN is exactly one of the two kinds. The fifth segment
// decides: a "YYYY-MM-DD;number" tail is a norm, anything else a
// vocabulary term.
using LexUrn = std::variant<LexNormUrn, LexVocabUrn>;

// Parses an arbitrary string as a LEX URN. Throws UrnError on rejection.
LexUrn ParseUrn(std::string_view text);

// Emits the canonical lowercase text form. The argument must satisfy the
// type invariants (as every value produced by ParseUrn does).
std::string FormatUrn(const LexNormUrn& urn);
std::string FormatUrn(const LexVocabUrn& urn);
std::string FormatUrn(const LexUrn& urn);

// FormatUrn(ParseUrn(text)); idempotent on its success domain.
std::string NormalizeUrn(std::string_view text);

// Builds the dereference URI "{base}?urn={canonical urn}". The base must
// be an absolute http(s) URI without query or fragment, else
// UrnError(kBadBase). The URN is placed verbatim; ":" and ";" are legal
// in query values and are not percent-encoded.
std::string ResolverUri(const LexNormUrn& urn, std::string_view base);
std::string ResolverUri(const LexVocabUrn& urn, std::string_view base);
std::string ResolverUri(const LexUrn& urn, std::string_view base);

// ISO 8601 calendar date helpers.
std::optional<std::chrono::year_month_day> TryParseIsoDate(std::string_view text);
std::string FormatIsoDate(const std::chrono::year_month_day& date);

// True if the string looks like an absolute URI: a scheme followed by
// ":" and a non-empty remainder, with no whitespace or control bytes.
bool IsAbsoluteUri(std::string_view text);

// Decodes %XX escapes; malformed escapes are passed through untouched.
std::string PercentDecode(std::string_view text);

// Extracts the value of the "urn" query parameter from a URI, percent-
// decoded. Returns nullopt when the URI has no such parameter.
std::optional<std::string> UrnQueryParam(std::string_view uri);

}  // namespace lexnorm

#endif  // LEXNORM_URN_H_
