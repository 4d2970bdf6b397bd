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

#include "lexnorm/urn.h"

#include <cstdio>
#include <vector>

namespace lexnorm {
namespace {

constexpr std::string_view kPrefix = "urn:lex:";

bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsLowerAlnum(char c) { return (c >= 'a' && c <= 'z') || IsDigit(c); }

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

[[noreturn]] void Fail(UrnErrorCode code, const std::string& message) {
  throw UrnError(code, message);
}

// Validates a dot-separated token. Atoms are lowercase alphanumeric runs
// that may contain interior hyphens ("tipo-norma"). When digits_only is
// set (the number position) atoms must be pure digits and hyphens are
// not allowed.
void CheckToken(std::string_view token, std::string_view where,
                bool digits_only = false) {
  if (token.empty()) {
    Fail(UrnErrorCode::kBadToken,
         "empty " + std::string(where) + " segment");
  }
  if (token.find(';') != std::string_view::npos) {
    Fail(UrnErrorCode::kUnsupportedFeature,
         "';' in " + std::string(where) +
             " (jurisdiction subdivisions are not supported)");
  }
  size_t atom_start = 0;
  for (size_t i = 0; i <= token.size(); ++i) {
    if (i == token.size() || token[i] == '.') {
      std::string_view atom = token.substr(atom_start, i - atom_start);
      if (atom.empty()) {
        Fail(UrnErrorCode::kBadToken,
             "misplaced '.' in " + std::string(where) + " \"" +
                 std::string(token) + "\"");
      }
      bool prev_hyphen = true;  // leading hyphen is illegal
      for (char c : atom) {
        if (c == '-') {
          if (digits_only || prev_hyphen) {
            Fail(UrnErrorCode::kBadToken,
                 "illegal '-' in " + std::string(where) + " \"" +
                     std::string(token) + "\"");
          }
          prev_hyphen = true;
        } else if (digits_only ? IsDigit(c) : IsLowerAlnum(c)) {
          prev_hyphen = false;
        } else {
          Fail(UrnErrorCode::kBadToken,
               "illegal character '" + std::string(1, c) + "' in " +
                   std::string(where) + " \"" + std::string(token) + "\"");
        }
      }
      if (prev_hyphen) {  // trailing hyphen (or lone '-')
        Fail(UrnErrorCode::kBadToken,
             "illegal '-' in " + std::string(where) + " \"" +
                 std::string(token) + "\"");
      }
      atom_start = i + 1;
    }
  }
}

// True if text begins with the 11-char "YYYY-MM-DD;" shape that marks a
// norm tail. Calendar validity is checked separately.
bool HasDateNumberShape(std::string_view tail) {
  if (tail.size() < 11 || tail[10] != ';') return false;
  for (size_t i = 0; i < 10; ++i) {
    if (i == 4 || i == 7) {
      if (tail[i] != '-') return false;
    } else if (!IsDigit(tail[i])) {
      return false;
    }
  }
  return true;
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

const char* ToString(UrnErrorCode code) {
  switch (code) {
    case UrnErrorCode::kMissingPrefix: return "MissingPrefix";
    case UrnErrorCode::kBadSegmentCount: return "BadSegmentCount";
    case UrnErrorCode::kBadToken: return "BadToken";
    case UrnErrorCode::kBadDate: return "BadDate";
    case UrnErrorCode::kUnsupportedFeature: return "UnsupportedFeature";
    case UrnErrorCode::kBadBase: return "BadBase";
  }
  return "UnknownError";
}

LexUrn ParseUrn(std::string_view text) {
  std::string folded = AsciiLower(text);
  if (folded.size() < kPrefix.size() ||
      std::string_view(folded).substr(0, kPrefix.size()) != kPrefix) {
    Fail(UrnErrorCode::kMissingPrefix, "input does not start with \"urn:lex:\"");
  }
  std::string_view rest = std::string_view(folded).substr(kPrefix.size());

  // Extended LEX URN syntax is rejected up front so that the offending
  // character is named instead of surfacing as a token error.
  for (char c : rest) {
    if (c == '@' || c == '!') {
      Fail(UrnErrorCode::kUnsupportedFeature,
           std::string("'") + c + "' (" +
               (c == '@' ? "version expressions are not supported"
                         : "portion references are not supported") +
               ")");
    }
  }

  std::vector<std::string_view> segments;
  size_t start = 0;
  for (size_t i = 0; i <= rest.size(); ++i) {
    if (i == rest.size() || rest[i] == ':') {
      segments.push_back(rest.substr(start, i - start));
      start = i + 1;
    }
  }
  if (segments.size() != 4) {
    Fail(UrnErrorCode::kBadSegmentCount,
         "expected 4 segments after \"urn:lex:\", found " +
             std::to_string(segments.size()));
  }

  CheckToken(segments[0], "jurisdiction");
  CheckToken(segments[1], "authority");

  std::string_view tail = segments[3];
  if (HasDateNumberShape(tail)) {
    CheckToken(segments[2], "document type");
    std::string_view date_text = tail.substr(0, 10);
    std::string_view number = tail.substr(11);
    auto date = TryParseIsoDate(date_text);
    if (!date) {
      Fail(UrnErrorCode::kBadDate,
           "impossible calendar date \"" + std::string(date_text) + "\"");
    }
    CheckToken(number, "number", /*digits_only=*/true);
    return LexNormUrn{std::string(segments[0]), std::string(segments[1]),
                      std::string(segments[2]), *date, std::string(number)};
  }

  CheckToken(segments[2], "scheme");
  CheckToken(tail, "term");
  return LexVocabUrn{std::string(segments[0]), std::string(segments[1]),
                     std::string(segments[2]), std::string(tail)};
}

std::string FormatUrn(const LexNormUrn& urn) {
  return std::string(kPrefix) + urn.jurisdiction + ":" + urn.authority + ":" +
         urn.doc_type + ":" + FormatIsoDate(urn.date) + ";" + urn.number;
}

std::string FormatUrn(const LexVocabUrn& urn) {
  return std::string(kPrefix) + urn.jurisdiction + ":" + urn.authority + ":" +
         urn.scheme + ":" + urn.term;
}

std::string FormatUrn(const LexUrn& urn) {
  return std::visit([](const auto& u) { return FormatUrn(u); }, urn);
}

std::string NormalizeUrn(std::string_view text) {
  return FormatUrn(ParseUrn(text));
}

namespace {

std::string ResolverUriImpl(const std::string& canonical, std::string_view base) {
  std::string lower = AsciiLower(base);
  bool http = std::string_view(lower).substr(0, 7) == "http://" && base.size() > 7;
  bool https = std::string_view(lower).substr(0, 8) == "https://" && base.size() > 8;
  if (!http && !https) {
    Fail(UrnErrorCode::kBadBase,
         "base must be an absolute http(s) URI: \"" + std::string(base) + "\"");
  }
  for (char c : base) {
    if (c == '?' || c == '#') {
      Fail(UrnErrorCode::kBadBase,
           std::string("base must not carry a ") +
               (c == '?' ? "query" : "fragment") + " component");
    }
    if (static_cast<unsigned char>(c) <= ' ') {
      Fail(UrnErrorCode::kBadBase, "whitespace in base URI");
    }
  }
  return std::string(base) + "?urn=" + canonical;
}

}  // namespace

std::string ResolverUri(const LexNormUrn& urn, std::string_view base) {
  return ResolverUriImpl(FormatUrn(urn), base);
}

std::string ResolverUri(const LexVocabUrn& urn, std::string_view base) {
  return ResolverUriImpl(FormatUrn(urn), base);
}

std::string ResolverUri(const LexUrn& urn, std::string_view base) {
  return ResolverUriImpl(FormatUrn(urn), base);
}

std::optional<std::chrono::year_month_day> TryParseIsoDate(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  for (size_t i = 0; i < 10; ++i) {
    if (i == 4 || i == 7) continue;
    if (!IsDigit(text[i])) return std::nullopt;
  }
  auto num = [&text](size_t pos, size_t len) {
    int v = 0;
    for (size_t i = pos; i < pos + len; ++i) v = v * 10 + (text[i] - '0');
    return v;
  };
  std::chrono::year_month_day date{std::chrono::year(num(0, 4)),
                                   std::chrono::month(unsigned(num(5, 2))),
                                   std::chrono::day(unsigned(num(8, 2)))};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string FormatIsoDate(const std::chrono::year_month_day& date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(date.year()),
                unsigned(date.month()), unsigned(date.day()));
  return buf;
}

bool IsAbsoluteUri(std::string_view text) {
  size_t colon = text.find(':');
  if (colon == 0 || colon == std::string_view::npos || colon + 1 >= text.size()) {
    return false;
  }
  for (size_t i = 0; i < colon; ++i) {
    char c = text[i];
    bool scheme_char = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                       (i > 0 && (IsDigit(c) || c == '+' || c == '-' || c == '.'));
    if (!scheme_char) return false;
  }
  for (char c : text) {
    if (static_cast<unsigned char>(c) <= ' ' || c == 0x7f) return false;
  }
  return true;
}

std::string PercentDecode(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '%' && i + 2 < text.size()) {
      int hi = HexValue(text[i + 1]);
      int lo = HexValue(text[i + 2]);
      if (hi >= 0 && lo >= 0) {
        out.push_back(static_cast<char>(hi * 16 + lo));
        i += 2;
        continue;
      }
    }
    out.push_back(text[i]);
  }
  return out;
}

std::optional<std::string> UrnQueryParam(std::string_view uri) {
  size_t qmark = uri.find('?');
  if (qmark == std::string_view::npos) return std::nullopt;
  std::string_view query = uri.substr(qmark + 1);
  size_t pos = 0;
  while (pos <= query.size()) {
    size_t amp = query.find('&', pos);
    std::string_view pair = query.substr(
        pos, amp == std::string_view::npos ? std::string_view::npos : amp - pos);
    size_t eq = pair.find('=');
    if (eq != std::string_view::npos && pair.substr(0, eq) == "urn") {
      return PercentDecode(pair.substr(eq + 1));
    }
    if (amp == std::string_view::npos) break;
    pos = amp + 1;
  }
  return std::nullopt;
}

}  // namespace lexnorm
