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

#include "lexnorm/jsonld.h"

#include <array>
#include <set>

namespace lexnorm {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Emission order is fixed; unknown extension properties go last, in
// first-seen order.
constexpr std::array<std::string_view, 22> kKnownProperties = {
    "@context",          "@type",
    "@id",               "legislationType",
    "legislationIdentifier", "sameAs",
    "inLanguage",        "name",
    "alternateName",     "abstract",
    "about",             "keywords",
    "legislationDate",   "legislationPassedBy",
    "legislationJurisdiction", "spatialCoverage",
    "datePublished",     "license",
    "publisher",         "sdDatePublished",
    "sdLicense",         "sdPublisher",
};

bool IsKnownProperty(std::string_view key) {
  for (std::string_view k : kKnownProperties) {
    if (k == key) return true;
  }
  return false;
}

bool CiStartsWithUrnLex(std::string_view s) {
  constexpr std::string_view prefix = "urn:lex:";
  if (s.size() < prefix.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    char c = s[i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c != prefix[i]) return false;
  }
  return true;
}

std::optional<std::string> TryNormalizeUrn(std::string_view text) {
  try {
    return NormalizeUrn(text);
  } catch (const UrnError&) {
    return std::nullopt;
  }
}

OrderedJson OrgNode(const OrgRef& org) {
  OrderedJson node;
  node["@type"] = "GovernmentOrganization";
  node["@id"] = org.id;
  if (org.name) node["name"] = *org.name;
  return node;
}

// ---------------------------------------------------------------------------
// Decoding

struct Decoder {
  const OrderedJson& doc;
  ValidationReport findings;
  bool structural_error = false;

  void Structural(std::string_view code, std::string_view path,
                  std::string_view message) {
    findings.Add(code, Severity::kError, path, message);
    structural_error = true;
  }

  // Absent keys and JSON nulls are both "not present".
  const OrderedJson* Field(std::string_view key) const {
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) return nullptr;
    return &*it;
  }

  std::string RequiredString(std::string_view key, std::string_view path) {
    const OrderedJson* v = Field(key);
    if (!v) return "";
    if (!v->is_string()) {
      Structural(codes::kBadField, path, "expected a string");
      return "";
    }
    return v->get<std::string>();
  }

  std::optional<std::string> OptionalString(std::string_view key,
                                            std::string_view path) {
    const OrderedJson* v = Field(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) {
      Structural(codes::kBadField, path, "expected a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  // Accepts a lone string or an array of strings (JSON-LD set semantics).
  std::vector<std::string> StringList(std::string_view key) {
    std::vector<std::string> out;
    const OrderedJson* v = Field(key);
    if (!v) return out;
    if (v->is_string()) {
      out.push_back(v->get<std::string>());
      return out;
    }
    if (!v->is_array()) {
      Structural(codes::kBadField, key, "expected a string or array of strings");
      return out;
    }
    for (size_t i = 0; i < v->size(); ++i) {
      const auto& item = (*v)[i];
      if (!item.is_string()) {
        Structural(codes::kBadField,
                   std::string(key) + "[" + std::to_string(i) + "]",
                   "expected a string");
        continue;
      }
      out.push_back(item.get<std::string>());
    }
    return out;
  }

  std::optional<std::chrono::year_month_day> DateField(std::string_view key) {
    const OrderedJson* v = Field(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) {
      Structural(codes::kBadField, key, "expected an ISO 8601 date string");
      return std::nullopt;
    }
    auto date = TryParseIsoDate(v->get<std::string>());
    if (!date) {
      Structural(codes::kBadField, key,
                 "not a valid ISO 8601 date: \"" + v->get<std::string>() + "\"");
    }
    return date;
  }

  // A vocabulary term reference: either a bare URN string or a node whose
  // "@id" is a resolver URI carrying the URN in its query.
  std::optional<LexVocabUrn> VocabRef(const OrderedJson& value,
                                      const std::string& path) {
    std::string candidate;
    if (value.is_string()) {
      candidate = value.get<std::string>();
    } else if (value.is_object()) {
      auto it = value.find("@id");
      if (it == value.end() || !it->is_string()) {
        Structural(codes::kBadField, path, "node has no string \"@id\"");
        return std::nullopt;
      }
      candidate = it->get<std::string>();
    } else {
      Structural(codes::kBadField, path, "expected a node or URN string");
      return std::nullopt;
    }

    std::string urn_text;
    if (CiStartsWithUrnLex(candidate)) {
      urn_text = candidate;
    } else if (auto param = UrnQueryParam(candidate)) {
      urn_text = *param;
    } else {
      Structural(codes::kBadField, path,
                 "no LEX URN found in \"" + candidate + "\"");
      return std::nullopt;
    }

    try {
      LexUrn parsed = ParseUrn(urn_text);
      if (const auto* vocab = std::get_if<LexVocabUrn>(&parsed)) return *vocab;
      Structural(codes::kBadField, path,
                 "expected a vocabulary URN, got a norm URN");
    } catch (const UrnError& e) {
      Structural(codes::kBadField, path,
                 "invalid LEX URN: " + std::string(e.what()));
    }
    return std::nullopt;
  }

  std::optional<OrgRef> OrgField(std::string_view key) {
    const OrderedJson* v = Field(key);
    if (!v) return std::nullopt;
    if (v->is_string()) return OrgRef{v->get<std::string>(), std::nullopt};
    if (!v->is_object()) {
      Structural(codes::kBadField, key, "expected an organization node");
      return std::nullopt;
    }
    OrgRef org;
    auto id = v->find("@id");
    if (id == v->end() || !id->is_string()) {
      Structural(codes::kBadField, key, "node has no string \"@id\"");
      return std::nullopt;
    }
    org.id = id->get<std::string>();
    auto name = v->find("name");
    if (name != v->end() && !name->is_null()) {
      if (!name->is_string()) {
        Structural(codes::kBadField, std::string(key) + ".name",
                   "expected a string");
      } else {
        org.name = name->get<std::string>();
      }
    }
    return org;
  }
};

}  // namespace

JsonLdDocument EmitDocument(const NormWork& work, std::string_view base) {
  ValidationReport report = ValidateNorm(work);
  if (!report.is_valid()) throw InvalidWorkError(std::move(report));

  OrderedJson doc;
  doc["@context"] = kSchemaContext;
  doc["@type"] = "Legislation";
  doc["@id"] = ResolverUri(work.urn, base);

  OrderedJson type_node;
  type_node["@type"] = "CategoryCode";
  type_node["@id"] = ResolverUri(work.legislation_type, base);
  doc["legislationType"] = std::move(type_node);

  doc["legislationIdentifier"] = FormatUrn(work.urn);

  if (!work.same_as.empty()) doc["sameAs"] = work.same_as;
  doc["inLanguage"] = work.in_language;
  doc["name"] = work.name;
  if (!work.alternate_names.empty()) doc["alternateName"] = work.alternate_names;
  if (work.abstract_text) doc["abstract"] = *work.abstract_text;

  if (!work.about.empty()) {
    OrderedJson terms = OrderedJson::array();
    for (const LexVocabUrn& term : work.about) {
      OrderedJson node;
      node["@type"] = "DefinedTerm";
      node["@id"] = ResolverUri(term, base);
      terms.push_back(std::move(node));
    }
    doc["about"] = std::move(terms);
  }

  if (!work.keywords.empty()) doc["keywords"] = work.keywords;
  doc["legislationDate"] = FormatIsoDate(work.legislation_date);

  if (work.legislation_passed_by) {
    doc["legislationPassedBy"] = OrgNode(*work.legislation_passed_by);
  }
  if (work.legislation_jurisdiction) {
    OrderedJson node;
    node["@type"] = "AdministrativeArea";
    node["@id"] = work.legislation_jurisdiction->id;
    if (work.legislation_jurisdiction->name) {
      node["name"] = *work.legislation_jurisdiction->name;
    }
    doc["legislationJurisdiction"] = std::move(node);
  }
  if (work.spatial_coverage) {
    OrderedJson node;
    node["@type"] = "Country";
    node["@id"] = work.spatial_coverage->id;
    node["name"] = work.spatial_coverage->name;
    if (work.spatial_coverage->url) node["url"] = *work.spatial_coverage->url;
    OrderedJson address;
    address["@type"] = "PostalAddress";
    address["addressCountry"] = work.spatial_coverage->country_code;
    node["address"] = std::move(address);
    doc["spatialCoverage"] = std::move(node);
  }
  if (work.date_published) {
    doc["datePublished"] = FormatIsoDate(*work.date_published);
  }
  if (work.license) doc["license"] = *work.license;
  if (work.publisher) doc["publisher"] = OrgNode(*work.publisher);
  if (work.sd_date_published) {
    doc["sdDatePublished"] = FormatIsoDate(*work.sd_date_published);
  }
  if (work.sd_license) doc["sdLicense"] = *work.sd_license;
  if (work.sd_publisher) doc["sdPublisher"] = OrgNode(*work.sd_publisher);

  for (const auto& [key, value] : work.extensions.items()) {
    if (!doc.contains(key)) doc[key] = value;
  }

  return JsonLdDocument{doc.dump(2) + "\n"};
}

DecodeReport ParseDocument(const JsonLdDocument& doc) {
  OrderedJson root = OrderedJson::parse(doc.text, nullptr,
                                        /*allow_exceptions=*/false);
  if (root.is_discarded()) throw NotJsonError("document text is not JSON");

  DecodeReport out;
  if (!root.is_object()) {
    out.findings.Add(codes::kNotObject, Severity::kError, "",
                     "top level is not a JSON object");
    out.findings.Finalize();
    return out;
  }

  Decoder d{root};

  // Node identity: @context, @type, @id.
  if (const OrderedJson* ctx = d.Field("@context")) {
    static const std::set<std::string> accepted = {
        "http://schema.org/", "https://schema.org/", "https://schema.org"};
    if (!ctx->is_string() || accepted.count(ctx->get<std::string>()) == 0) {
      d.Structural(codes::kWrongContext, "@context",
                   "expected the schema.org context");
    }
  } else {
    d.Structural(codes::kMissingContext, "@context", "\"@context\" is required");
  }

  if (const OrderedJson* type = d.Field("@type")) {
    if (!type->is_string() || type->get<std::string>() != "Legislation") {
      d.Structural(codes::kWrongType, "@type",
                   "expected \"@type\": \"Legislation\"");
    }
  } else {
    d.Structural(codes::kMissingType, "@type", "\"@type\" is required");
  }

  std::string id_uri;
  if (const OrderedJson* id = d.Field("@id")) {
    if (!id->is_string() || !IsAbsoluteUri(id->get<std::string>())) {
      d.Structural(codes::kBadId, "@id", "\"@id\" must be an absolute URI");
    } else {
      id_uri = id->get<std::string>();
    }
  } else {
    d.Structural(codes::kMissingId, "@id", "\"@id\" is required");
  }

  // The URN that anchors the work.
  std::optional<LexNormUrn> urn;
  if (const OrderedJson* ident = d.Field("legislationIdentifier")) {
    if (!ident->is_string()) {
      d.Structural(codes::kBadUrn, "legislationIdentifier",
                   "expected a URN string");
    } else {
      try {
        LexUrn parsed = ParseUrn(ident->get<std::string>());
        if (const auto* norm = std::get_if<LexNormUrn>(&parsed)) {
          urn = *norm;
        } else {
          d.Structural(codes::kBadUrn, "legislationIdentifier",
                       "expected a norm URN, got a vocabulary URN");
        }
      } catch (const UrnError& e) {
        d.Structural(codes::kBadUrn, "legislationIdentifier",
                     "invalid LEX URN: " + std::string(e.what()));
      }
    }
  } else {
    d.Structural(codes::kMissingIdentifier, "legislationIdentifier",
                 "\"legislationIdentifier\" is required");
  }

  // @id and legislationIdentifier must name the same norm. A mismatch is
  // a document-level defect, not a decoding failure: the work stays
  // recoverable from the identifier.
  if (!id_uri.empty() && urn) {
    const std::string canonical = FormatUrn(*urn);
    auto param = UrnQueryParam(id_uri);
    if (!param) {
      d.findings.Add(codes::kIdUrnMismatch, Severity::kError, "@id",
                     "\"@id\" carries no urn query parameter");
    } else {
      auto normalized = TryNormalizeUrn(*param);
      if (!normalized || *normalized != canonical) {
        d.findings.Add(codes::kIdUrnMismatch, Severity::kError, "@id",
                       "\"@id\" urn \"" + *param + "\" does not match \"" +
                           canonical + "\"");
      }
    }
  }

  std::optional<LexVocabUrn> legislation_type;
  if (const OrderedJson* type_ref = d.Field("legislationType")) {
    legislation_type = d.VocabRef(*type_ref, "legislationType");
  } else {
    d.Structural(codes::kMissingField, "legislationType",
                 "\"legislationType\" is required");
  }

  std::vector<std::string> same_as = d.StringList("sameAs");
  std::string in_language = d.RequiredString("inLanguage", "inLanguage");
  std::string name = d.RequiredString("name", "name");
  std::vector<std::string> alternate_names = d.StringList("alternateName");
  std::optional<std::string> abstract_text =
      d.OptionalString("abstract", "abstract");

  std::vector<LexVocabUrn> about;
  if (const OrderedJson* about_field = d.Field("about")) {
    std::vector<const OrderedJson*> entries;
    if (about_field->is_array()) {
      for (const auto& e : *about_field) entries.push_back(&e);
    } else {
      entries.push_back(about_field);
    }
    for (size_t i = 0; i < entries.size(); ++i) {
      auto term = d.VocabRef(*entries[i], "about[" + std::to_string(i) + "]");
      if (term) about.push_back(std::move(*term));
    }
  }

  std::vector<std::string> keywords = d.StringList("keywords");

  std::optional<std::chrono::year_month_day> legislation_date;
  if (d.Field("legislationDate")) {
    legislation_date = d.DateField("legislationDate");
  } else {
    d.Structural(codes::kMissingField, "legislationDate",
                 "\"legislationDate\" is required");
  }

  std::optional<OrgRef> passed_by = d.OrgField("legislationPassedBy");

  std::optional<AdminAreaRef> jurisdiction;
  if (std::optional<OrgRef> j_node = d.OrgField("legislationJurisdiction")) {
    jurisdiction = AdminAreaRef{j_node->id, j_node->name};
  }

  std::optional<CountryRef> spatial;
  if (const OrderedJson* cov = d.Field("spatialCoverage")) {
    if (!cov->is_object()) {
      d.Structural(codes::kBadField, "spatialCoverage",
                   "expected a Country node");
    } else {
      CountryRef country;
      auto id = cov->find("@id");
      if (id != cov->end() && id->is_string()) country.id = id->get<std::string>();
      auto cname = cov->find("name");
      if (cname != cov->end() && cname->is_string()) {
        country.name = cname->get<std::string>();
      }
      auto url = cov->find("url");
      if (url != cov->end() && url->is_string()) country.url = url->get<std::string>();
      auto address = cov->find("address");
      if (address != cov->end() && address->is_object()) {
        auto cc = address->find("addressCountry");
        if (cc != address->end() && cc->is_string()) {
          country.country_code = cc->get<std::string>();
        }
      }
      spatial = std::move(country);
    }
  }

  std::optional<std::chrono::year_month_day> date_published =
      d.DateField("datePublished");
  std::optional<std::string> license = d.OptionalString("license", "license");
  std::optional<OrgRef> publisher = d.OrgField("publisher");
  std::optional<std::chrono::year_month_day> sd_date_published =
      d.DateField("sdDatePublished");
  std::optional<std::string> sd_license =
      d.OptionalString("sdLicense", "sdLicense");
  std::optional<OrgRef> sd_publisher = d.OrgField("sdPublisher");

  // Everything else rides along in the extension bag.
  OrderedJson extensions = OrderedJson::object();
  for (const auto& [key, value] : root.items()) {
    if (!IsKnownProperty(key)) {
      extensions[key] = value;
      out.unknown_properties.push_back(key);
    }
  }

  out.findings = std::move(d.findings);
  if (!d.structural_error) {
    NormWork work;
    work.urn = *urn;
    work.legislation_type = *legislation_type;
    work.same_as = std::move(same_as);
    work.in_language = std::move(in_language);
    work.name = std::move(name);
    work.alternate_names = std::move(alternate_names);
    work.abstract_text = std::move(abstract_text);
    work.about = std::move(about);
    work.keywords = std::move(keywords);
    work.legislation_date = *legislation_date;
    work.legislation_passed_by = std::move(passed_by);
    work.legislation_jurisdiction = std::move(jurisdiction);
    work.spatial_coverage = std::move(spatial);
    work.date_published = date_published;
    work.license = std::move(license);
    work.publisher = std::move(publisher);
    work.sd_date_published = sd_date_published;
    work.sd_license = std::move(sd_license);
    work.sd_publisher = std::move(sd_publisher);
    work.extensions = std::move(extensions);

    out.findings.Merge(ValidateNorm(work));
    out.work = std::move(work);
  }
  out.findings.Finalize();
  return out;
}

namespace {

// Rewrites LEX URNs inside a string to canonical form: the whole value
// when it is a bare URN, or the "urn" query value of a resolver URI.
std::string NormalizeUrnsInString(const std::string& s) {
  if (CiStartsWithUrnLex(s)) {
    if (auto canonical = TryNormalizeUrn(s)) return *canonical;
    return s;
  }
  for (std::string_view marker : {std::string_view("?urn="),
                                  std::string_view("&urn=")}) {
    size_t pos = s.find(marker);
    if (pos == std::string::npos) continue;
    size_t value_start = pos + marker.size();
    size_t value_end = s.find('&', value_start);
    if (value_end == std::string::npos) value_end = s.size();
    std::string value =
        PercentDecode(s.substr(value_start, value_end - value_start));
    if (auto canonical = TryNormalizeUrn(value)) {
      return s.substr(0, value_start) + *canonical + s.substr(value_end);
    }
    break;
  }
  return s;
}

Json SemanticNormalize(const Json& value) {
  if (value.is_string()) {
    return NormalizeUrnsInString(value.get<std::string>());
  }
  if (value.is_array()) {
    Json out = Json::array();
    for (const auto& item : value) out.push_back(SemanticNormalize(item));
    return out;
  }
  if (value.is_object()) {
    Json out = Json::object();
    for (const auto& [key, item] : value.items()) {
      Json normalized = SemanticNormalize(item);
      // JSON-LD set semantics: a lone value of a collection-valued
      // property reads as a one-element collection.
      bool collection = key == "sameAs" || key == "alternateName" ||
                        key == "keywords" || key == "about";
      if (collection && !normalized.is_array()) {
        out[key] = Json::array({std::move(normalized)});
      } else {
        out[key] = std::move(normalized);
      }
    }
    return out;
  }
  return value;
}

}  // namespace

bool SemanticallyEqual(const JsonLdDocument& a, const JsonLdDocument& b) {
  Json ja = Json::parse(a.text, nullptr, /*allow_exceptions=*/false);
  Json jb = Json::parse(b.text, nullptr, /*allow_exceptions=*/false);
  if (ja.is_discarded() || jb.is_discarded()) {
    throw NotJsonError("document text is not JSON");
  }
  return SemanticNormalize(ja) == SemanticNormalize(jb);
}

}  // namespace lexnorm
