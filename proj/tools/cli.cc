// Copyright 2026 The wbforge Authors.
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
#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "wbforge/axioms.h"
#include "wbforge/dsl.h"
#include "wbforge/error.h"
#include "wbforge/expander.h"
#include "wbforge/exporter.h"
#include "wbforge/rdf.h"
#include "wbforge/shapes.h"
#include "wbforge/validator.h"

namespace wbforge {

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot write " + path);
  file << text;
}

struct Config {
  std::string root;
  std::string output = "-";
  std::string schema_path;
  std::string data_path;
  bool exact_card = true;
  bool tsv = false;
  bool no_nl = false;
};

std::string check_summary(const SchemaDocument &s) {
  size_t qualifiers = 0, references = 0, patterns = 0;
  for (const auto &st : s.statements) {
    qualifiers += st.qualifiers.size();
    references += st.references.size();
    patterns += st.patterns.size();
  }
  std::ostringstream o;
  o << "prefixes=" << s.ns.user_entries().size() << "\n"
    << "flags=" << s.flags.size() << "\n"
    << "classes=" << s.classes.size() << "\n"
    << "statements=" << s.statements.size() << "\n"
    << "qualifiers=" << qualifiers << "\n"
    << "references=" << references << "\n"
    << "patterns=" << patterns << "\n";
  return o.str();
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Config cfg;
  if (const char *env = std::getenv("WBFORGE_ROOT"); env != nullptr && *env != '\0') {
    cfg.root = env;
  } else {
    cfg.root = std::string(kDefaultRoot);
  }

  CLI::App app{"Wikibase schema compiler and RDF toolchain", "wbforge"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--root", cfg.root, "IRI root for generated namespaces (env WBFORGE_ROOT)");
  app.add_option("-o,--output", cfg.output, "Output path, '-' for stdout");
  app.add_flag("--exact-card,!--no-exact-card", cfg.exact_card,
               "Write exact cardinalities (default) or min/max pairs");
  app.add_flag("--tsv", cfg.tsv, "Tab-separated validation report");
  app.add_flag("--no-nl", cfg.no_nl, "Omit natural-language readings from axiom comments");

  auto *expand_cmd = app.add_subcommand("expand", "Print the expansion report");
  auto *axioms_cmd = app.add_subcommand("axioms", "Generate axioms in functional syntax");
  auto *shapes_cmd = app.add_subcommand("shapes", "Generate ShEx shapes");
  auto *check_cmd = app.add_subcommand("check", "Parse a schema and print declaration counts");
  auto *export_cmd = app.add_subcommand("export", "Export instance data to N-Triples");
  auto *validate_cmd = app.add_subcommand("validate", "Validate an N-Triples graph");
  auto *infer_cmd = app.add_subcommand("infer", "Add inferred truthy triples");
  for (auto *cmd : {expand_cmd, axioms_cmd, shapes_cmd, check_cmd, export_cmd, validate_cmd,
                    infer_cmd}) {
    cmd->add_option("schema", cfg.schema_path, "Schema file (.wbs)")->required();
  }
  export_cmd->add_option("data", cfg.data_path, "Instance file (.wbi)")->required();
  validate_cmd->add_option("graph", cfg.data_path, "Graph file (.nt)")->required();
  infer_cmd->add_option("graph", cfg.data_path, "Graph file (.nt)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "wbforge: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const SchemaDocument schema = parse_schema(read_file(cfg.schema_path), cfg.root);
    std::string text;
    int code = kExitOk;
    if (*expand_cmd) {
      text = expansion_report(expand(schema));
    } else if (*axioms_cmd) {
      text = serialize_axioms(schema_axioms(schema), schema.ns,
                              SerializeOptions{cfg.exact_card, !cfg.no_nl});
    } else if (*shapes_cmd) {
      text = serialize_shapes(generate_shapes(schema));
    } else if (*check_cmd) {
      text = check_summary(schema);
    } else if (*export_cmd) {
      const InstanceDoc doc = parse_instances(read_file(cfg.data_path), cfg.root);
      text = serialize_ntriples(export_graph(schema, doc));
    } else if (*validate_cmd) {
      const ValidationReport report = validate(schema, parse_ntriples(read_file(cfg.data_path)));
      text = cfg.tsv ? report.tsv() : report.text();
      code = report.pass() ? kExitOk : kExitFindings;
    } else if (*infer_cmd) {
      text = serialize_ntriples(infer_truthy(parse_ntriples(read_file(cfg.data_path)), schema));
    }
    write_output(cfg.output, text, out);
    return code;
  } catch (const Error &e) {
    err << "wbforge: " << error_code_name(e.code());
    if (e.line() > 0) err << " at " << e.line() << ":" << e.col();
    err << ": " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace wbforge
