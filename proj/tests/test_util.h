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

#ifndef LEXNORM_TESTS_TEST_UTIL_H_
#define LEXNORM_TESTS_TEST_UTIL_H_

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lexnorm/graph.h"
#include "lexnorm/norm.h"
#include "lexnorm/urn.h"

namespace lexnorm::testing {

inline std::string FixturePath() {
  return std::string(LEXNORM_TEST_FIXTURE_DIR) + "/listing1.jsonld";
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

inline std::string FixtureText() { return ReadFile(FixturePath()); }

// The fixture document rebuilt by hand, field by field. Kept independent
// of the codec so it can act as the decoding oracle.
inline NormWork MakeFixtureWork() {
  using std::chrono::year;
  NormWork w;
  w.urn = LexNormUrn{"br", "federal", "lei.complementar",
                     year{2006} / 12 / 14, "123"};
  w.legislation_type =
      LexVocabUrn{"br", "federal", "tipo-norma", "lei.complementar"};
  w.same_as = {
      "http://www.lexml.gov.br/urn/urn:lex:br:federal:lei.complementar:"
      "2006-12-14;123",
      "http://legis.senado.leg.br/legislacao/DetalhaSigen.action?id=572878"};
  w.in_language = "pt";
  w.name = "Lei Complementar nº 123 de 14/12/2006";
  w.alternate_names = {"LCP-123-2006-12-14", "Lei do Supersimples",
                       "Lei Geral das Micro e Pequenas Empresas"};
  w.abstract_text =
      "Institui o Estatuto Nacional da Microempresa e da Empresa de Pequeno "
      "Porte; altera dispositivos ...";
  w.about = {LexVocabUrn{"br", "federal", "tema",
                         "direito.empresarial.e.economico"}};
  w.keywords = {"Microempresa", "Pequena Empresa"};
  w.legislation_date = year{2006} / 12 / 14;
  w.legislation_passed_by =
      OrgRef{"https://www.congressonacional.leg.br/", std::nullopt};
  w.legislation_jurisdiction = AdminAreaRef{
      "https://www.wikidata.org/wiki/Q5440531",
      "Governo Federal do Brasil (Uniao)"};
  w.spatial_coverage = CountryRef{
      "https://servicodados.ibge.gov.br/api/v1/localidades/paises/76",
      "Brasil", "https://www.wikidata.org/wiki/Q155", "BR"};
  w.date_published = year{2006} / 12 / 15;
  w.license = "https://creativecommons.org/licenses/by/4.0/";
  w.publisher = OrgRef{"https://www.in.gov.br/", std::nullopt};
  w.sd_date_published = year{2024} / 10 / 4;
  w.sd_license = "https://creativecommons.org/licenses/by/4.0/";
  w.sd_publisher =
      OrgRef{"https://www.congressonacional.leg.br/", std::nullopt};
  return w;
}

inline std::string ReplaceAll(std::string text, const std::string& from,
                              const std::string& to) {
  size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

// A synthetic corpus document: the fixture text with the URN's date and
// number rewritten everywhere they occur. Index i yields a distinct URN.
inline std::string CorpusDocumentText(int i) {
  int year = 1990 + (i % 16);
  int month = 1 + (i % 12);
  int day = 1 + (i % 28);
  char date[16];
  std::snprintf(date, sizeof date, "%04d-%02d-%02d", year, month, day);
  std::string text = FixtureText();
  text = ReplaceAll(text, "2006-12-15", date);  // datePublished
  text = ReplaceAll(text, "2006-12-14", date);
  text = ReplaceAll(text, ";123", ";" + std::to_string(100 + i));
  return text;
}

inline std::string CorpusUrn(int i) {
  nlohmann::json doc = nlohmann::json::parse(CorpusDocumentText(i));
  return NormalizeUrn(doc["legislationIdentifier"].get<std::string>());
}

// Pseudo-random LEX URN material with a fixed seed: the reparse oracle
// for round-trip properties and the mutation source for robustness runs.
class UrnGenerator {
 public:
  explicit UrnGenerator(unsigned seed = 20061214) : rng_(seed) {}

  std::mt19937& rng() { return rng_; }

  int Range(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  std::string Atom() {
    static const char alphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789";
    std::string atom;
    int pieces = Range(1, 3) == 3 ? 2 : 1;  // hyphenated atoms now and then
    for (int p = 0; p < pieces; ++p) {
      if (p > 0) atom.push_back('-');
      int len = Range(1, 8);
      for (int i = 0; i < len; ++i) atom.push_back(alphabet[Range(0, 35)]);
    }
    return atom;
  }

  std::string Token() {
    std::string token = Atom();
    int extra = Range(0, 2);
    for (int i = 0; i < extra; ++i) token += "." + Atom();
    return token;
  }

  std::string Number() {
    std::string number = std::to_string(Range(1, 99999));
    if (Range(0, 3) == 0) number += "." + std::to_string(Range(0, 999));
    return number;
  }

  std::chrono::year_month_day Date() {
    while (true) {
      std::chrono::year_month_day date{std::chrono::year(Range(1800, 2100)),
                                       std::chrono::month(unsigned(Range(1, 12))),
                                       std::chrono::day(unsigned(Range(1, 31)))};
      if (date.ok()) return date;
    }
  }

  LexNormUrn NormUrn() {
    return LexNormUrn{Token(), Token(), Token(), Date(), Number()};
  }

  LexVocabUrn VocabUrn() { return LexVocabUrn{Token(), Token(), Token(), Token()}; }

  LexUrn Urn() {
    if (Range(0, 1) == 0) return NormUrn();
    return VocabUrn();
  }

  // Valid URN text, sometimes with mixed case (acceptance is
  // case-insensitive).
  std::string ValidText() {
    std::string text = FormatUrn(Urn());
    if (Range(0, 2) == 0) {
      for (char& c : text) {
        if (c >= 'a' && c <= 'z' && Range(0, 1) == 0) {
          c = static_cast<char>(c - 'a' + 'A');
        }
      }
    }
    return text;
  }

  // A mutation guaranteed to be rejected, starting from valid text.
  std::string InvalidText() {
    std::string text = FormatUrn(Urn());
    switch (Range(0, 9)) {
      case 0: return "urn:lxe:" + text.substr(8);          // MissingPrefix
      case 1: return text + ":extra";                      // BadSegmentCount
      case 2: return "urn:lex:" + text.substr(8) + ":a:b"; // BadSegmentCount
      case 3: {                                            // BadToken
        text.insert(text.size() / 2, 1, '_');
        return text;
      }
      case 4: return ReplaceAll(text, "urn:lex:", "urn:lex::");  // empty token
      case 5: text.push_back('@'); return text;            // UnsupportedFeature
      case 6: text.push_back('!'); return text;            // UnsupportedFeature
      case 7: return "urn:lex:a;b:" + text.substr(8);      // subdivision ';'
      case 8: {                                            // double dot
        size_t colon = text.find(':', 8);
        text.insert(colon, "..");
        return text;
      }
      default: return "urn:lex:" + text.substr(8) + ".";   // trailing dot
    }
  }

  // Arbitrary byte-level damage; the result may or may not stay valid.
  std::string Mutate(std::string text) {
    int edits = Range(1, 4);
    for (int i = 0; i < edits; ++i) {
      if (text.empty()) break;
      size_t pos = size_t(Range(0, int(text.size()) - 1));
      switch (Range(0, 2)) {
        case 0: text.erase(pos, 1); break;
        case 1: text.insert(pos, 1, char(Range(1, 255))); break;
        default: text[pos] = char(Range(1, 255)); break;
      }
    }
    return text;
  }
};

// Test-side re-derivation of the property edges a stored work must
// produce; deliberately written against the payload, not the store.
inline std::set<Edge> ExpectedDerivedEdges(const NormWork& work) {
  std::set<Edge> edges;
  const std::string key = FormatUrn(work.urn);
  for (const auto& target : work.same_as) {
    edges.insert({key, RelationKind::kSameAs, target});
  }
  for (const auto& term : work.about) {
    edges.insert({key, RelationKind::kAbout, FormatUrn(term)});
  }
  edges.insert({key, RelationKind::kHasType, FormatUrn(work.legislation_type)});
  if (work.legislation_jurisdiction) {
    edges.insert({key, RelationKind::kJurisdiction,
                  work.legislation_jurisdiction->id});
  }
  if (work.legislation_passed_by) {
    edges.insert({key, RelationKind::kPassedBy, work.legislation_passed_by->id});
  }
  if (work.publisher) {
    edges.insert({key, RelationKind::kPublishedBy, work.publisher->id});
  }
  return edges;
}

}  // namespace lexnorm::testing

#endif  // LEXNORM_TESTS_TEST_UTIL_H_
