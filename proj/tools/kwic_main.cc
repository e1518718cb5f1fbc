// Copyright 2026 The KWIC Annotator Authors.
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

// kwic: command-line entry point.
//
//   kwic serve [--bind ADDR] [--port N] [--storage DIR] [--config FILE]
//   kwic import-doc FILE [--id ID] [--format text|html]
//   kwic export-doc ID [--format html|tei|entities] [-o FILE]
//   kwic build-concordance (--doc ID | --rdfa FILE) [--entity ID]
//                          [--style KWIC|KWOC|KWAC] [--window N] [--json]
//   kwic add-user NAME [--password P] [--role annotator|admin]

#include <csignal>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "httplib.h"
#include "json.hpp"
#include "kwic/auth.h"
#include "kwic/concordance.h"
#include "kwic/config.h"
#include "kwic/entity_io.h"
#include "kwic/error.h"
#include "kwic/json_codec.h"
#include "kwic/rdfa.h"
#include "kwic/service.h"
#include "kwic/store.h"
#include "kwic/tei.h"
#include "kwic/wikidata.h"

namespace {

using json = nlohmann::json;

httplib::Server *running_server = nullptr;

void HandleSignal(int) {
  if (running_server != nullptr) running_server->stop();
}

struct CommonFlags {
  std::string config_file;
  std::string storage;
};

kwic::ServiceConfig ResolveConfig(const CommonFlags &flags) {
  std::optional<std::filesystem::path> file;
  if (!flags.config_file.empty()) file = flags.config_file;
  kwic::ServiceConfig config = kwic::LoadConfig(file);
  if (!flags.storage.empty()) config.storage_root = flags.storage;
  return config;
}

void WriteOutput(const std::string &path, const std::string &contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    return;
  }
  kwic::WriteFileAtomically(path, contents);
}

int Serve(const CommonFlags &flags, const std::string &bind, int port,
          const std::string &static_dir) {
  kwic::ServiceConfig config = ResolveConfig(flags);
  if (!bind.empty()) config.bind_address = bind;
  if (port >= 0) config.port = port;
  if (!static_dir.empty()) config.static_dir = static_dir;
  if (config.signing_key.empty()) {
    std::cerr << "warning: no signing key configured; tokens will not "
                 "survive a restart\n";
    config.signing_key = kwic::GenerateSigningKey();
  }

  kwic::ServiceOptions options;
  options.store = std::make_shared<kwic::FileStore>(config.storage_root);
  options.users =
      std::make_shared<kwic::UserStore>(config.storage_root / "users.json");
  options.signer = std::make_shared<kwic::TokenSigner>(
      config.signing_key, config.token_lifetime);
  kwic::WikidataOptions wikidata;
  wikidata.language = config.wikidata_language;
  wikidata.treccani_property = config.treccani_property;
  options.wikidata = std::make_shared<kwic::WikidataClient>(
      kwic::MakeLiveTransport(config.wikidata_url,
                              config.wikidata_timeout_seconds),
      wikidata);
  options.static_dir = config.static_dir;
  if (options.users->size() == 0) {
    std::cerr << "warning: no users; create one with `kwic add-user`\n";
  }

  kwic::Service service(options);
  httplib::Server server;
  service.Register(server);
  running_server = &server;
  std::signal(SIGINT, HandleSignal);
  std::signal(SIGTERM, HandleSignal);
  std::cerr << "listening on http://" << config.bind_address << ":"
            << config.port << "/api/v1 (storage " << config.storage_root.string()
            << ")\n";
  if (!server.listen(config.bind_address, config.port)) {
    std::cerr << "error: cannot listen on " << config.bind_address << ":"
              << config.port << "\n";
    return 1;
  }
  return 0;
}

int ImportDoc(const CommonFlags &flags, const std::string &file,
              std::string doc_id, std::string format) {
  const kwic::ServiceConfig config = ResolveConfig(flags);
  const std::filesystem::path path(file);
  if (doc_id.empty()) doc_id = path.stem().string();
  if (format.empty()) {
    const std::string ext = path.extension().string();
    format = ext == ".html" || ext == ".htm" ? "html" : "text";
  }
  const std::string content = kwic::ReadFile(path);
  kwic::FileStore store(config.storage_root);
  std::optional<kwic::Document> document;
  std::vector<std::string> warnings;
  if (format == "html") {
    kwic::ParseOptions parse_options;
    parse_options.doc_id = doc_id;
    kwic::ParseResult parsed = kwic::ParseRdfa(content, parse_options);
    document = std::move(parsed.document);
    warnings = std::move(parsed.warnings);
  } else {
    document = kwic::NewDocument(doc_id, content);
  }
  const uint64_t revision = store.Create(*document);
  for (const std::string &w : warnings) std::cerr << "warning: " << w << "\n";
  std::cout << doc_id << "\trevision " << revision << "\t"
            << document->mentions().size() << " mentions\t"
            << document->entities().size() << " entities\n";
  return 0;
}

int ExportDoc(const CommonFlags &flags, const std::string &doc_id,
              const std::string &format, const std::string &output) {
  const kwic::ServiceConfig config = ResolveConfig(flags);
  kwic::FileStore store(config.storage_root);
  const kwic::StoredDocument stored = store.Load(doc_id);
  if (format == "html") {
    WriteOutput(output, kwic::RenderRdfa(stored.document));
  } else if (format == "tei") {
    WriteOutput(output,
                kwic::ExportTei(stored.document,
                                store.GetMetadata(doc_id).value_or(
                                    kwic::MetadataRecord{})));
  } else {
    WriteOutput(output, kwic::ExportEntities(stored.document));
  }
  return 0;
}

int BuildConcordance(const CommonFlags &flags, const std::string &doc_id,
                     const std::string &rdfa_file, const std::string &entity,
                     const std::string &style, int window,
                     const std::string &sort, bool as_json) {
  std::optional<kwic::Document> document;
  if (!rdfa_file.empty()) {
    kwic::ParseResult parsed = kwic::ParseRdfa(kwic::ReadFile(rdfa_file));
    for (const std::string &w : parsed.warnings) {
      std::cerr << "warning: " << w << "\n";
    }
    document = std::move(parsed.document);
  } else {
    const kwic::ServiceConfig config = ResolveConfig(flags);
    kwic::FileStore store(config.storage_root);
    document = store.Load(doc_id).document;
  }

  kwic::ConcordanceConfig cc;
  cc.style = *kwic::ParseConcordanceStyle(style);
  cc.window_words = static_cast<size_t>(window);
  cc.sort = *kwic::ParseConcordanceSort(sort);

  std::vector<std::string> entity_ids;
  if (!entity.empty()) {
    entity_ids.push_back(entity);
  } else {
    for (const kwic::Category &category : document->categories()) {
      for (const kwic::EntityListing &l :
           kwic::ListEntities(*document, category.name)) {
        entity_ids.push_back(l.entity.id);
      }
    }
  }

  json out = json::array();
  for (const std::string &id : entity_ids) {
    const auto entries = kwic::BuildIndex(*document, id, cc);
    if (as_json) {
      json list = json::array();
      for (const auto &e : entries) list.push_back(kwic::ConcordanceEntryToJson(e));
      out.push_back({{"entity_id", id}, {"entries", list}});
      continue;
    }
    if (entity_ids.size() > 1) {
      std::cout << "# " << id << " (" << document->FindEntity(id)->label
                << ")\n";
    }
    for (const auto &e : entries) std::cout << e.text << "\n";
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

int AddUser(const CommonFlags &flags, const std::string &username,
            std::string password, const std::string &role) {
  const kwic::ServiceConfig config = ResolveConfig(flags);
  if (password.empty()) {
    std::cerr << "password: ";
    std::getline(std::cin, password);
  }
  kwic::UserStore users(config.storage_root / "users.json");
  users.AddUser(username, password, *kwic::ParseRole(role));
  std::cout << "added " << username << " (" << role << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"KWIC annotator: annotation engine, concordances and API server"};
  app.require_subcommand(1);
  CommonFlags flags;
  app.add_option("--config", flags.config_file, "JSON config file")
      ->check(CLI::ExistingFile);
  app.add_option("--storage", flags.storage,
                 "storage root (overrides config and KWIC_STORAGE_ROOT)");

  std::string bind, static_dir;
  int port = -1;
  auto *serve = app.add_subcommand("serve", "run the HTTP API");
  serve->add_option("--bind", bind, "bind address");
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));
  serve->add_option("--static-dir", static_dir, "directory served at /");
  serve->add_option("--storage", flags.storage, "storage root");
  serve->add_option("--config", flags.config_file, "JSON config file")
      ->check(CLI::ExistingFile);

  std::string import_file, import_id, import_format;
  auto *import_doc = app.add_subcommand("import-doc", "store a new document");
  import_doc->add_option("file", import_file, "plain text or HTML file")
      ->required()
      ->check(CLI::ExistingFile);
  import_doc->add_option("--id", import_id, "document id (default: file stem)");
  import_doc->add_option("--format", import_format, "text or html")
      ->check(CLI::IsMember({"text", "html"}));
  import_doc->add_option("--storage", flags.storage, "storage root");

  std::string export_id, export_format = "html", export_output;
  auto *export_doc = app.add_subcommand("export-doc", "export a stored document");
  export_doc->add_option("id", export_id, "document id")->required();
  export_doc->add_option("--format", export_format, "html, tei or entities")
      ->check(CLI::IsMember({"html", "tei", "entities"}));
  export_doc->add_option("-o,--output", export_output, "output file");
  export_doc->add_option("--storage", flags.storage, "storage root");

  std::string conc_doc, conc_rdfa, conc_entity, conc_style = "KWIC",
                                                conc_sort = "keyword_then_right";
  int conc_window = 5;
  bool conc_json = false;
  auto *concordance =
      app.add_subcommand("build-concordance", "print concordance entries");
  auto *doc_opt = concordance->add_option("--doc", conc_doc, "stored document id");
  auto *rdfa_opt = concordance->add_option("--rdfa", conc_rdfa, "RDFa-HTML file")
                       ->check(CLI::ExistingFile);
  doc_opt->excludes(rdfa_opt);
  concordance->add_option("--entity", conc_entity,
                          "entity id (default: every active entity)");
  concordance->add_option("--style", conc_style, "KWIC, KWOC or KWAC")
      ->check(CLI::IsMember({"KWIC", "KWOC", "KWAC", "kwic", "kwoc", "kwac"}));
  concordance->add_option("--window", conc_window, "context words per side")
      ->check(CLI::PositiveNumber);
  concordance->add_option("--sort", conc_sort, "keyword_then_right or position")
      ->check(CLI::IsMember({"keyword_then_right", "position"}));
  concordance->add_flag("--json", conc_json, "emit JSON");
  concordance->add_option("--storage", flags.storage, "storage root");

  std::string user_name, user_password, user_role = "annotator";
  auto *add_user = app.add_subcommand("add-user", "create a user account");
  add_user->add_option("username", user_name)->required();
  add_user->add_option("--password", user_password,
                       "password (read from stdin when omitted)");
  add_user->add_option("--role", user_role, "annotator or admin")
      ->check(CLI::IsMember({"annotator", "admin"}));
  add_user->add_option("--storage", flags.storage, "storage root");

  CLI11_PARSE(app, argc, argv);

  try {
    if (serve->parsed()) return Serve(flags, bind, port, static_dir);
    if (import_doc->parsed()) {
      return ImportDoc(flags, import_file, import_id, import_format);
    }
    if (export_doc->parsed()) {
      return ExportDoc(flags, export_id, export_format, export_output);
    }
    if (concordance->parsed()) {
      if (conc_doc.empty() && conc_rdfa.empty()) {
        std::cerr << "error: one of --doc or --rdfa is required\n";
        return 2;
      }
      return BuildConcordance(flags, conc_doc, conc_rdfa, conc_entity,
                              conc_style, conc_window, conc_sort, conc_json);
    }
    if (add_user->parsed()) {
      return AddUser(flags, user_name, user_password, user_role);
    }
  } catch (const kwic::Error &e) {
    std::cerr << "error: " << kwic::ErrorCodeName(e.code()) << ": " << e.what()
              << "\n";
    return 1;
  }
  return 0;
}
