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

#ifndef LEXNORM_GRAPH_H_
#define LEXNORM_GRAPH_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexnorm/norm.h"

namespace lexnorm {

// Base URI baked into the JSON-LD documents stored in snapshot files.
// Serving may use any base; the snapshot needs one fixed choice so that
// identical graphs persist to identical bytes.
inline constexpr char kSnapshotBase[] = "https://normas.leg.br/";

// The first six kinds are derived from work payload properties and are
// maintained by the store itself; the last four are inter-norm relations
// inserted through AddRelation.
enum class RelationKind {
  kSameAs,
  kAbout,
  kHasType,
  kJurisdiction,
  kPassedBy,
  kPublishedBy,
  kCites,
  kAmends,
  kRepeals,
  kRelated,
};

inline constexpr RelationKind kAllRelationKinds[] = {
    RelationKind::kSameAs,     RelationKind::kAbout,
    RelationKind::kHasType,    RelationKind::kJurisdiction,
    RelationKind::kPassedBy,   RelationKind::kPublishedBy,
    RelationKind::kCites,      RelationKind::kAmends,
    RelationKind::kRepeals,    RelationKind::kRelated,
};

const char* ToString(RelationKind kind);
std::optional<RelationKind> RelationKindFromString(std::string_view text);
bool IsDerivedKind(RelationKind kind);

// Node keys are canonical LEX URNs for works and vocabulary terms, and
// absolute URIs for external entities (organizations, areas, sameAs
// targets).
struct Edge {
  std::string from;
  RelationKind kind;
  std::string to;

  auto operator<=>(const Edge&) const = default;
};

enum class Direction { kOutgoing, kIncoming };

struct Neighbor {
  RelationKind kind;
  std::string key;
  Direction direction;

  auto operator<=>(const Neighbor&) const = default;
};

struct GraphStats {
  std::size_t work_count = 0;
  std::size_t external_node_count = 0;
  std::map<RelationKind, std::size_t> edge_count_by_kind;

  bool operator==(const GraphStats&) const = default;
};

enum class GraphErrorCode {
  kInvalidWork,
  kUnknownEndpoint,
  kForbiddenKind,
  kSelfLoop,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  GraphErrorCode code() const { return code_; }

 private:
  GraphErrorCode code_;
};

enum class SnapshotErrorCode { kIo, kCorrupt };

class SnapshotError : public std::runtime_error {
 public:
  SnapshotError(SnapshotErrorCode code, int line, const std::string& message)
      : std::runtime_error(message), code_(code), line_(line) {}

  SnapshotErrorCode code() const { return code_; }
  // 1-based line of the offending snapshot record; 0 for I/O failures.
  int line() const { return line_; }

 private:
  SnapshotErrorCode code_;
  int line_;
};

// In-memory knowledge graph of legal works. Works are the anchor nodes,
// keyed by canonical URN; everything a work's properties point at
// (vocabulary terms, organizations, sameAs targets) becomes an external
// reference node. Mutations follow a single-writer contract; readers use
// immutable snapshots (see SharedGraph).
class KnowledgeGraph {
 public:
  // Inserts or replaces the work under its canonical URN and re-derives
  // its property edges. Throws GraphError(kInvalidWork) when the work has
  // validation errors. Returns the node key.
  std::string UpsertNorm(const NormWork& work);

  // Records an inter-norm relation; duplicate insertion is a no-op that
  // returns the existing edge. Both endpoints must already be works.
  Edge AddRelation(const LexNormUrn& from, RelationKind kind,
                   const LexNormUrn& to);

  std::optional<NormWork> GetNorm(const LexNormUrn& urn) const;
  std::optional<NormWork> GetNorm(const std::string& canonical_urn) const;
  bool Contains(const std::string& canonical_urn) const;

  // Outgoing and incoming edges of a work, ordered by (kind, key,
  // direction). Throws GraphError(kUnknownEndpoint) for absent works.
  std::vector<Neighbor> Neighbors(
      const LexNormUrn& urn,
      std::optional<RelationKind> filter = std::nullopt) const;

  GraphStats Stats() const;

  const std::map<std::string, NormWork>& works() const { return works_; }
  const std::set<Edge>& derived_edges() const { return derived_edges_; }
  const std::set<Edge>& manual_edges() const { return manual_edges_; }

  bool operator==(const KnowledgeGraph&) const = default;

 private:
  std::map<std::string, NormWork> works_;
  std::set<Edge> derived_edges_;
  std::set<Edge> manual_edges_;
};

// Snapshot persistence: UTF-8 JSONL. Line 1 is the header record
// {"format":"lexnorm-snapshot","version":1}; then one record per work
// {"work": <canonical JSON-LD text>} ordered by key; then one record per
// manual edge {"edge":{"from":...,"kind":...,"to":...}} in edge order.
// Derived edges are never persisted; loading re-derives them.
void SaveSnapshot(const KnowledgeGraph& graph, std::ostream& out,
                  std::string_view base = kSnapshotBase);
void SaveSnapshot(const KnowledgeGraph& graph,
                  const std::filesystem::path& destination,
                  std::string_view base = kSnapshotBase);
KnowledgeGraph LoadSnapshot(std::istream& in);
KnowledgeGraph LoadSnapshot(const std::filesystem::path& source);

// Single-writer / multi-reader holder. Readers take an immutable
// snapshot that stays coherent for as long as they hold it; Replace
// publishes a new graph atomically from the readers' perspective.
class SharedGraph {
 public:
  SharedGraph() : current_(std::make_shared<const KnowledgeGraph>()) {}
  explicit SharedGraph(KnowledgeGraph graph)
      : current_(std::make_shared<const KnowledgeGraph>(std::move(graph))) {}

  std::shared_ptr<const KnowledgeGraph> Snapshot() const {
    std::lock_guard<std::mutex> lock(mu_);
    return current_;
  }

  void Replace(KnowledgeGraph graph) {
    auto next = std::make_shared<const KnowledgeGraph>(std::move(graph));
    std::lock_guard<std::mutex> lock(mu_);
    current_ = std::move(next);
  }

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const KnowledgeGraph> current_;
};

}  // namespace lexnorm

#endif  // LEXNORM_GRAPH_H_
