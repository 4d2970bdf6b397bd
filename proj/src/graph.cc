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

#include "lexnorm/graph.h"

#include <algorithm>
#include <fstream>

#include "lexnorm/jsonld.h"

namespace lexnorm {
namespace {

using OrderedJson = nlohmann::ordered_json;

std::set<Edge> DeriveEdges(const std::string& key, const NormWork& work) {
  std::set<Edge> edges;
  for (const std::string& target : work.same_as) {
    edges.insert({key, RelationKind::kSameAs, target});
  }
  for (const LexVocabUrn& term : work.about) {
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

[[noreturn]] void Corrupt(int line, const std::string& message) {
  throw SnapshotError(SnapshotErrorCode::kCorrupt, line,
                      "corrupt snapshot at line " + std::to_string(line) +
                          ": " + message);
}

}  // namespace

const char* ToString(RelationKind kind) {
  switch (kind) {
    case RelationKind::kSameAs: return "same_as";
    case RelationKind::kAbout: return "about";
    case RelationKind::kHasType: return "has_type";
    case RelationKind::kJurisdiction: return "jurisdiction";
    case RelationKind::kPassedBy: return "passed_by";
    case RelationKind::kPublishedBy: return "published_by";
    case RelationKind::kCites: return "cites";
    case RelationKind::kAmends: return "amends";
    case RelationKind::kRepeals: return "repeals";
    case RelationKind::kRelated: return "related";
  }
  return "unknown";
}

std::optional<RelationKind> RelationKindFromString(std::string_view text) {
  for (RelationKind kind : kAllRelationKinds) {
    if (text == ToString(kind)) return kind;
  }
  return std::nullopt;
}

bool IsDerivedKind(RelationKind kind) {
  switch (kind) {
    case RelationKind::kSameAs:
    case RelationKind::kAbout:
    case RelationKind::kHasType:
    case RelationKind::kJurisdiction:
    case RelationKind::kPassedBy:
    case RelationKind::kPublishedBy:
      return true;
    default:
      return false;
  }
}

std::string KnowledgeGraph::UpsertNorm(const NormWork& work) {
  ValidationReport report = ValidateNorm(work);
  if (!report.is_valid()) {
    throw GraphError(GraphErrorCode::kInvalidWork,
                     "work has " + std::to_string(report.error_count()) +
                         " validation error(s)");
  }
  const std::string key = FormatUrn(work.urn);
  works_[key] = work;

  for (auto it = derived_edges_.begin(); it != derived_edges_.end();) {
    it = it->from == key ? derived_edges_.erase(it) : std::next(it);
  }
  std::set<Edge> derived = DeriveEdges(key, work);
  derived_edges_.insert(derived.begin(), derived.end());
  return key;
}

Edge KnowledgeGraph::AddRelation(const LexNormUrn& from, RelationKind kind,
                                 const LexNormUrn& to) {
  if (IsDerivedKind(kind)) {
    throw GraphError(GraphErrorCode::kForbiddenKind,
                     std::string(ToString(kind)) +
                         " edges are derived from payloads and cannot be "
                         "inserted manually");
  }
  const std::string from_key = FormatUrn(from);
  const std::string to_key = FormatUrn(to);
  if (!works_.count(from_key)) {
    throw GraphError(GraphErrorCode::kUnknownEndpoint,
                     "unknown work " + from_key);
  }
  if (!works_.count(to_key)) {
    throw GraphError(GraphErrorCode::kUnknownEndpoint, "unknown work " + to_key);
  }
  if (from_key == to_key && kind != RelationKind::kRelated) {
    throw GraphError(GraphErrorCode::kSelfLoop,
                     std::string(ToString(kind)) + " must not self-loop");
  }
  Edge edge{from_key, kind, to_key};
  manual_edges_.insert(edge);
  return edge;
}

std::optional<NormWork> KnowledgeGraph::GetNorm(const LexNormUrn& urn) const {
  return GetNorm(FormatUrn(urn));
}

std::optional<NormWork> KnowledgeGraph::GetNorm(
    const std::string& canonical_urn) const {
  auto it = works_.find(canonical_urn);
  if (it == works_.end()) return std::nullopt;
  return it->second;
}

bool KnowledgeGraph::Contains(const std::string& canonical_urn) const {
  return works_.count(canonical_urn) > 0;
}

std::vector<Neighbor> KnowledgeGraph::Neighbors(
    const LexNormUrn& urn, std::optional<RelationKind> filter) const {
  const std::string key = FormatUrn(urn);
  if (!works_.count(key)) {
    throw GraphError(GraphErrorCode::kUnknownEndpoint, "unknown work " + key);
  }
  std::vector<Neighbor> out;
  auto scan = [&](const std::set<Edge>& edges) {
    for (const Edge& edge : edges) {
      if (filter && edge.kind != *filter) continue;
      if (edge.from == key) {
        out.push_back({edge.kind, edge.to, Direction::kOutgoing});
      }
      if (edge.to == key) {
        out.push_back({edge.kind, edge.from, Direction::kIncoming});
      }
    }
  };
  scan(derived_edges_);
  scan(manual_edges_);
  std::sort(out.begin(), out.end());
  return out;
}

GraphStats KnowledgeGraph::Stats() const {
  GraphStats stats;
  stats.work_count = works_.size();
  for (RelationKind kind : kAllRelationKinds) {
    stats.edge_count_by_kind[kind] = 0;
  }
  std::set<std::string> external;
  auto tally = [&](const std::set<Edge>& edges) {
    for (const Edge& edge : edges) {
      ++stats.edge_count_by_kind[edge.kind];
      if (!works_.count(edge.to)) external.insert(edge.to);
      if (!works_.count(edge.from)) external.insert(edge.from);
    }
  };
  tally(derived_edges_);
  tally(manual_edges_);
  stats.external_node_count = external.size();
  return stats;
}

void SaveSnapshot(const KnowledgeGraph& graph, std::ostream& out,
                  std::string_view base) {
  OrderedJson header;
  header["format"] = "lexnorm-snapshot";
  header["version"] = 1;
  out << header.dump() << "\n";

  for (const auto& [key, work] : graph.works()) {
    OrderedJson record;
    record["work"] = EmitDocument(work, base).text;
    out << record.dump() << "\n";
  }
  for (const Edge& edge : graph.manual_edges()) {
    OrderedJson record;
    record["edge"] = {{"from", edge.from},
                      {"kind", ToString(edge.kind)},
                      {"to", edge.to}};
    out << record.dump() << "\n";
  }
}

void SaveSnapshot(const KnowledgeGraph& graph,
                  const std::filesystem::path& destination,
                  std::string_view base) {
  std::ofstream file(destination, std::ios::binary);
  if (!file) {
    throw SnapshotError(SnapshotErrorCode::kIo, 0,
                        "cannot open " + destination.string() + " for writing");
  }
  SaveSnapshot(graph, file, base);
  file.flush();
  if (!file) {
    throw SnapshotError(SnapshotErrorCode::kIo, 0,
                        "write to " + destination.string() + " failed");
  }
}

KnowledgeGraph LoadSnapshot(std::istream& in) {
  KnowledgeGraph graph;
  std::string line;
  int line_no = 0;
  bool header_seen = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    OrderedJson record =
        OrderedJson::parse(line, nullptr, /*allow_exceptions=*/false);
    if (record.is_discarded() || !record.is_object()) {
      Corrupt(line_no, "not a JSON object record");
    }

    if (!header_seen) {
      auto format = record.find("format");
      auto version = record.find("version");
      if (format == record.end() || !format->is_string() ||
          format->get<std::string>() != "lexnorm-snapshot" ||
          version == record.end() || !version->is_number_integer() ||
          version->get<int>() != 1) {
        Corrupt(line_no, "missing or unsupported snapshot header");
      }
      header_seen = true;
      continue;
    }

    if (record.contains("work")) {
      if (!record["work"].is_string()) {
        Corrupt(line_no, "\"work\" record is not a string");
      }
      DecodeReport decoded;
      try {
        decoded = ParseDocument(JsonLdDocument{record["work"].get<std::string>()});
      } catch (const NotJsonError&) {
        Corrupt(line_no, "embedded work document is not JSON");
      }
      if (!decoded.work || !decoded.findings.is_valid()) {
        Corrupt(line_no, "embedded work document has error findings");
      }
      graph.UpsertNorm(*decoded.work);
    } else if (record.contains("edge")) {
      const OrderedJson& e = record["edge"];
      auto field_is_string = [&e](const char* key) {
        auto it = e.find(key);
        return it != e.end() && it->is_string();
      };
      if (!e.is_object() || !field_is_string("from") ||
          !field_is_string("to") || !field_is_string("kind")) {
        Corrupt(line_no, "malformed edge record");
      }
      auto kind = RelationKindFromString(e["kind"].get<std::string>());
      if (!kind || IsDerivedKind(*kind)) {
        Corrupt(line_no, "edge kind \"" + e["kind"].get<std::string>() +
                             "\" is not a manual relation");
      }
      try {
        LexUrn from = ParseUrn(e["from"].get<std::string>());
        LexUrn to = ParseUrn(e["to"].get<std::string>());
        const auto* from_norm = std::get_if<LexNormUrn>(&from);
        const auto* to_norm = std::get_if<LexNormUrn>(&to);
        if (!from_norm || !to_norm) Corrupt(line_no, "edge endpoint is not a norm URN");
        graph.AddRelation(*from_norm, *kind, *to_norm);
      } catch (const UrnError& err) {
        Corrupt(line_no, "bad edge endpoint: " + std::string(err.what()));
      } catch (const GraphError& err) {
        Corrupt(line_no, err.what());
      }
    } else {
      Corrupt(line_no, "record is neither \"work\" nor \"edge\"");
    }
  }
  if (!header_seen) Corrupt(1, "empty snapshot: header record missing");
  return graph;
}

KnowledgeGraph LoadSnapshot(const std::filesystem::path& source) {
  std::ifstream file(source, std::ios::binary);
  if (!file) {
    throw SnapshotError(SnapshotErrorCode::kIo, 0,
                        "cannot open " + source.string() + " for reading");
  }
  return LoadSnapshot(file);
}

}  // namespace lexnorm
