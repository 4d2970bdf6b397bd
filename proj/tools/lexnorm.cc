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

#include <csignal>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lexnorm/graph.h"
#include "lexnorm/ingest.h"
#include "lexnorm/jsonld.h"
#include "lexnorm/server.h"
#include "lexnorm/urn.h"

namespace {

using lexnorm::JsonLdDocument;
using lexnorm::KnowledgeGraph;
using OrderedJson = nlohmann::ordered_json;

// Exit codes: 0 success, 1 validation errors present, 2 usage/IO failure.
constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

bool UseJson(const std::string& format) { return format == "json"; }

std::string ReadWholeFile(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw lexnorm::IoError("cannot open " + path + " for reading");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

int PrintUrn(const lexnorm::LexUrn& urn, const std::string& format) {
  const std::string canonical = lexnorm::FormatUrn(urn);
  if (UseJson(format)) {
    OrderedJson j;
    if (const auto* norm = std::get_if<lexnorm::LexNormUrn>(&urn)) {
      j["kind"] = "norm";
      j["jurisdiction"] = norm->jurisdiction;
      j["authority"] = norm->authority;
      j["doc_type"] = norm->doc_type;
      j["date"] = lexnorm::FormatIsoDate(norm->date);
      j["number"] = norm->number;
    } else {
      const auto& vocab = std::get<lexnorm::LexVocabUrn>(urn);
      j["kind"] = "vocab";
      j["jurisdiction"] = vocab.jurisdiction;
      j["authority"] = vocab.authority;
      j["scheme"] = vocab.scheme;
      j["term"] = vocab.term;
    }
    j["canonical"] = canonical;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  if (const auto* norm = std::get_if<lexnorm::LexNormUrn>(&urn)) {
    std::cout << "kind: norm\n"
              << "jurisdiction: " << norm->jurisdiction << "\n"
              << "authority: " << norm->authority << "\n"
              << "doc_type: " << norm->doc_type << "\n"
              << "date: " << lexnorm::FormatIsoDate(norm->date) << "\n"
              << "number: " << norm->number << "\n";
  } else {
    const auto& vocab = std::get<lexnorm::LexVocabUrn>(urn);
    std::cout << "kind: vocab\n"
              << "jurisdiction: " << vocab.jurisdiction << "\n"
              << "authority: " << vocab.authority << "\n"
              << "scheme: " << vocab.scheme << "\n"
              << "term: " << vocab.term << "\n";
  }
  std::cout << "canonical: " << canonical << "\n";
  return kOk;
}

int PrintFindings(const lexnorm::ValidationReport& report,
                  const std::string& format) {
  if (UseJson(format)) {
    OrderedJson j;
    j["valid"] = report.is_valid();
    j["errors"] = report.error_count();
    j["warnings"] = report.warning_count();
    OrderedJson findings = OrderedJson::array();
    for (const auto& f : report.findings()) {
      findings.push_back({{"code", f.code},
                          {"severity", lexnorm::ToString(f.severity)},
                          {"path", f.path},
                          {"message", f.message}});
    }
    j["findings"] = std::move(findings);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& f : report.findings()) {
      std::cout << lexnorm::ToString(f.severity) << " " << f.code;
      if (!f.path.empty()) std::cout << " at " << f.path;
      std::cout << ": " << f.message << "\n";
    }
    if (report.is_valid()) {
      std::cout << "valid, 0 errors";
      if (report.warning_count() > 0) {
        std::cout << ", " << report.warning_count() << " warning(s)";
      }
      std::cout << "\n";
    } else {
      std::cout << "invalid, " << report.error_count() << " error(s), "
                << report.warning_count() << " warning(s)\n";
    }
  }
  return report.is_valid() ? kOk : kInvalid;
}

KnowledgeGraph LoadStore(const std::string& path, bool allow_missing) {
  if (allow_missing && !std::filesystem::exists(path)) return KnowledgeGraph{};
  return lexnorm::LoadSnapshot(std::filesystem::path(path));
}

// The document's own @id tells us which base it was emitted against, so
// re-normalizing a file needs no flag to stay idempotent.
std::string BaseFromDocument(const std::string& id_uri,
                             const std::string& fallback) {
  size_t pos = id_uri.find("?urn=");
  if (pos == std::string::npos || pos == 0) return fallback;
  std::string base = id_uri.substr(0, pos);
  return lexnorm::IsAbsoluteUri(base) ? base : fallback;
}

lexnorm::LexNormUrn ParseNormUrnArg(const std::string& text) {
  lexnorm::LexUrn urn = lexnorm::ParseUrn(text);
  if (const auto* norm = std::get_if<lexnorm::LexNormUrn>(&urn)) return *norm;
  throw lexnorm::UrnError(lexnorm::UrnErrorCode::kBadToken,
                          "expected a norm URN, got a vocabulary URN: " + text);
}

lexnorm::LinkedDataServer* g_server = nullptr;

void HandleSignal(int) {
  if (g_server) g_server->Stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LEX URN and legal knowledge graph toolkit"};
  app.require_subcommand(1);

  std::function<int()> action;

  // --- urn parse / urn normalize -------------------------------------------
  auto* urn_cmd = app.add_subcommand("urn", "Work with LEX URN identifiers");
  urn_cmd->require_subcommand(1);

  static std::string urn_text, urn_format = "text";
  auto* urn_parse = urn_cmd->add_subcommand("parse", "Parse a URN into components");
  urn_parse->add_option("urn", urn_text, "LEX URN text")->required();
  urn_parse->add_option("--format", urn_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  urn_parse->callback([&] {
    action = [&] { return PrintUrn(lexnorm::ParseUrn(urn_text), urn_format); };
  });

  auto* urn_norm = urn_cmd->add_subcommand("normalize", "Print the canonical form");
  urn_norm->add_option("urn", urn_text, "LEX URN text")->required();
  urn_norm->add_option("--format", urn_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  urn_norm->callback([&] {
    action = [&] {
      std::string canonical = lexnorm::NormalizeUrn(urn_text);
      if (UseJson(urn_format)) {
        OrderedJson j;
        j["canonical"] = canonical;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << canonical << "\n";
      }
      return kOk;
    };
  });

  // --- validate -------------------------------------------------------------
  static std::string validate_file, validate_format = "text";
  auto* validate = app.add_subcommand("validate", "Check a JSON-LD document");
  validate->add_option("file", validate_file, "Document path")->required();
  validate->add_option("--format", validate_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  validate->callback([&] {
    action = [&] {
      lexnorm::DecodeReport report =
          lexnorm::ParseDocument(JsonLdDocument{ReadWholeFile(validate_file)});
      return PrintFindings(report.findings, validate_format);
    };
  });

  // --- normalize ------------------------------------------------------------
  static std::string normalize_file, normalize_base;
  auto* normalize = app.add_subcommand(
      "normalize", "Re-emit a JSON-LD document in canonical form");
  normalize->add_option("file", normalize_file, "Document path")->required();
  normalize->add_option("--base", normalize_base, "Resolver base URI");
  normalize->callback([&] {
    action = [&] {
      lexnorm::DecodeReport report =
          lexnorm::ParseDocument(JsonLdDocument{ReadWholeFile(normalize_file)});
      if (!report.work || !report.findings.is_valid()) {
        PrintFindings(report.findings, "text");
        return kInvalid;
      }
      std::string base = normalize_base;
      if (base.empty()) {
        base = lexnorm::kSnapshotBase;
        OrderedJson parsed = OrderedJson::parse(ReadWholeFile(normalize_file),
                                                nullptr,
                                                /*allow_exceptions=*/false);
        if (parsed.is_object() && parsed.contains("@id") &&
            parsed["@id"].is_string()) {
          base = BaseFromDocument(parsed["@id"].get<std::string>(),
                                  lexnorm::kSnapshotBase);
        }
      }
      std::cout << lexnorm::EmitDocument(*report.work, base).text;
      return kOk;
    };
  });

  // --- ingest ----------------------------------------------------------------
  static std::string ingest_path, ingest_store, ingest_format = "text";
  static bool ingest_strict = false;
  auto* ingest = app.add_subcommand(
      "ingest", "Bulk-load JSON-LD documents into a snapshot");
  ingest->add_option("path", ingest_path, "JSONL file or directory of .jsonld files")
      ->required();
  ingest->add_option("--store", ingest_store, "Snapshot file")->required();
  ingest->add_flag("--strict", ingest_strict, "Reject records with any error finding");
  ingest->add_option("--format", ingest_format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  ingest->callback([&] {
    action = [&] {
      KnowledgeGraph graph = LoadStore(ingest_store, /*allow_missing=*/true);
      auto records = lexnorm::ReadSource(ingest_path);
      lexnorm::IngestReport report = lexnorm::Ingest(
          records, graph,
          ingest_strict ? lexnorm::IngestPolicy::kStrict
                        : lexnorm::IngestPolicy::kLenient);
      lexnorm::SaveSnapshot(graph, std::filesystem::path(ingest_store));
      std::cout << lexnorm::RenderReport(
          report, UseJson(ingest_format) ? lexnorm::ReportFormat::kJson
                                         : lexnorm::ReportFormat::kText);
      return report.rejected_count == 0 ? kOk : kInvalid;
    };
  });

  // --- graph stats / neighbors ------------------------------------------------
  auto* graph_cmd = app.add_subcommand("graph", "Inspect a snapshot");
  graph_cmd->require_subcommand(1);

  static std::string stats_store, stats_format = "text";
  auto* stats = graph_cmd->add_subcommand("stats", "Node and edge counts");
  stats->add_option("--store", stats_store, "Snapshot file")->required();
  stats->add_option("--format", stats_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  stats->callback([&] {
    action = [&] {
      KnowledgeGraph graph = LoadStore(stats_store, /*allow_missing=*/false);
      lexnorm::GraphStats s = graph.Stats();
      if (UseJson(stats_format)) {
        OrderedJson j;
        j["works"] = s.work_count;
        j["external_nodes"] = s.external_node_count;
        OrderedJson edges;
        for (const auto& [kind, count] : s.edge_count_by_kind) {
          edges[lexnorm::ToString(kind)] = count;
        }
        j["edges"] = std::move(edges);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "works: " << s.work_count << "\n"
                  << "external_nodes: " << s.external_node_count << "\n"
                  << "edges:\n";
        for (const auto& [kind, count] : s.edge_count_by_kind) {
          std::cout << "  " << lexnorm::ToString(kind) << ": " << count << "\n";
        }
      }
      return kOk;
    };
  });

  static std::string nb_urn, nb_store, nb_rel, nb_format = "text";
  auto* neighbors = graph_cmd->add_subcommand("neighbors", "Edges of a work");
  neighbors->add_option("urn", nb_urn, "Norm URN")->required();
  neighbors->add_option("--store", nb_store, "Snapshot file")->required();
  neighbors->add_option("--rel", nb_rel, "Filter by relation kind");
  neighbors->add_option("--format", nb_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  neighbors->callback([&] {
    action = [&] {
      KnowledgeGraph graph = LoadStore(nb_store, /*allow_missing=*/false);
      std::optional<lexnorm::RelationKind> filter;
      if (!nb_rel.empty()) {
        filter = lexnorm::RelationKindFromString(nb_rel);
        if (!filter) {
          std::cerr << "lexnorm: unknown relation kind \"" << nb_rel << "\"\n";
          return kUsage;
        }
      }
      auto entries = graph.Neighbors(ParseNormUrnArg(nb_urn), filter);
      if (UseJson(nb_format)) {
        OrderedJson j = OrderedJson::array();
        for (const auto& n : entries) {
          j.push_back({{"kind", lexnorm::ToString(n.kind)},
                       {"key", n.key},
                       {"direction", n.direction == lexnorm::Direction::kOutgoing
                                         ? "outgoing"
                                         : "incoming"}});
        }
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& n : entries) {
          std::cout << lexnorm::ToString(n.kind) << " "
                    << (n.direction == lexnorm::Direction::kOutgoing
                            ? "outgoing"
                            : "incoming")
                    << " " << n.key << "\n";
        }
      }
      return kOk;
    };
  });

  // --- relate -----------------------------------------------------------------
  static std::string rel_from, rel_kind, rel_to, rel_store;
  auto* relate = app.add_subcommand("relate", "Record an inter-norm relation");
  relate->add_option("from", rel_from, "Source norm URN")->required();
  relate->add_option("kind", rel_kind, "cites | amends | repeals | related")
      ->required();
  relate->add_option("to", rel_to, "Target norm URN")->required();
  relate->add_option("--store", rel_store, "Snapshot file")->required();
  relate->callback([&] {
    action = [&] {
      auto kind = lexnorm::RelationKindFromString(rel_kind);
      if (!kind) {
        std::cerr << "lexnorm: unknown relation kind \"" << rel_kind << "\"\n";
        return kUsage;
      }
      KnowledgeGraph graph = LoadStore(rel_store, /*allow_missing=*/false);
      lexnorm::Edge edge = graph.AddRelation(ParseNormUrnArg(rel_from), *kind,
                                             ParseNormUrnArg(rel_to));
      lexnorm::SaveSnapshot(graph, std::filesystem::path(rel_store));
      std::cout << edge.from << " " << lexnorm::ToString(edge.kind) << " "
                << edge.to << "\n";
      return kOk;
    };
  });

  // --- serve ------------------------------------------------------------------
  static std::string serve_store, serve_addr = "127.0.0.1:8080";
  static std::string serve_base = lexnorm::kSnapshotBase;
  auto* serve = app.add_subcommand("serve", "Serve works as Linked Data");
  serve->add_option("--store", serve_store, "Snapshot file")->required();
  serve->add_option("--addr", serve_addr, "host:port to bind");
  serve->add_option("--base", serve_base, "Resolver base URI")
      ->envname("LEXNORM_BASE");
  serve->callback([&] {
    action = [&] {
      size_t colon = serve_addr.rfind(':');
      if (colon == std::string::npos) {
        std::cerr << "lexnorm: --addr must be host:port\n";
        return kUsage;
      }
      int port = 0;
      try {
        port = std::stoi(serve_addr.substr(colon + 1));
      } catch (const std::exception&) {
        std::cerr << "lexnorm: bad port in --addr\n";
        return kUsage;
      }
      const std::string host = serve_addr.substr(0, colon);

      lexnorm::SharedGraph shared(LoadStore(serve_store, /*allow_missing=*/false));
      lexnorm::LinkedDataServer server(shared, serve_base);
      g_server = &server;
      std::signal(SIGINT, HandleSignal);
      std::signal(SIGTERM, HandleSignal);
      std::cerr << "lexnorm: serving " << shared.Snapshot()->works().size()
                << " works on http://" << host << ":" << port
                << "/ (base " << serve_base << ")\n";
      server.Run(host, port);
      g_server = nullptr;
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const lexnorm::UrnError& e) {
    std::cerr << "lexnorm: " << lexnorm::ToString(e.code()) << ": " << e.what()
              << "\n";
    return kInvalid;
  } catch (const lexnorm::NotJsonError& e) {
    std::cerr << "lexnorm: NOT_JSON: " << e.what() << "\n";
    return kInvalid;
  } catch (const lexnorm::InvalidWorkError& e) {
    std::cerr << "lexnorm: " << e.what() << "\n";
    return kInvalid;
  } catch (const lexnorm::GraphError& e) {
    std::cerr << "lexnorm: " << e.what() << "\n";
    return kInvalid;
  } catch (const lexnorm::SnapshotError& e) {
    std::cerr << "lexnorm: " << e.what() << "\n";
    return kUsage;
  } catch (const lexnorm::IoError& e) {
    std::cerr << "lexnorm: " << e.what() << "\n";
    return kUsage;
  } catch (const lexnorm::BindError& e) {
    std::cerr << "lexnorm: " << e.what() << "\n";
    return kUsage;
  }
}
