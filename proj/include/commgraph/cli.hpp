#pragma once
// CLI front end. Exit codes: 0 success, 1 clause failure, 2 usage error,
// 3 load/parse error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commgraph/builders.hpp"
#include "commgraph/graph.hpp"
#include "commgraph/io.hpp"
#include "commgraph/verify.hpp"

namespace commgraph {

inline int cli_main(int argc, const char* const* argv) {
  CLI::App app{"commuting graph analyzer for finite groups"};
  app.require_subcommand(1);

  CLI::App* cmd_builtins = app.add_subcommand("builtins", "list the builtin group registry");

  std::string analyze_src;
  bool analyze_json = false;
  CLI::App* cmd_analyze =
      app.add_subcommand("analyze", "print census and structural flags for one group");
  cmd_analyze->add_option("source", analyze_src, "builtin:SPEC, cayley:PATH or perm:PATH")
      ->required();
  cmd_analyze->add_flag("--json", analyze_json, "emit the cg-report/1 JSON schema");

  std::vector<std::string> verify_srcs;
  std::string verify_dir;
  bool verify_builtins = false, verify_json = false;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run the theorem battery over a corpus");
  cmd_verify->add_option("sources", verify_srcs, "group sources (builtin specs or files)");
  cmd_verify->add_option("--corpus", verify_dir, "directory of .cayley/.perm fixtures");
  cmd_verify->add_flag("--builtins", verify_builtins, "include the full builtin corpus");
  cmd_verify->add_flag("--json", verify_json, "emit the cg-report/1 JSON schema");

  std::string dot_src, dot_out;
  bool dot_quotient = false;
  CLI::App* cmd_dot =
      app.add_subcommand("export-dot", "write a colored DOT rendering of the graph");
  cmd_dot->add_option("source", dot_src, "group source")->required();
  cmd_dot->add_flag("--quotient", dot_quotient, "render the quotient graph instead");
  cmd_dot->add_option("-o,--output", dot_out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (app.got_subcommand(cmd_builtins)) {
    for (const std::string& p : builtin_patterns()) std::cout << p << "\n";
    return 0;
  }

  if (app.got_subcommand(cmd_analyze)) {
    GroupSource src = parse_source(analyze_src);
    VerificationReport rep;
    try {
      Group g = load_source(src);
      rep = analyze_group(src.display(), g);
    } catch (const GroupError& e) {
      std::cerr << "load error: " << e.what() << "\n";
      return 3;
    }
    if (analyze_json)
      std::cout << corpus_to_json({rep}).dump(2) << "\n";
    else
      render_report_text(std::cout, rep, false);
    return 0;
  }

  if (app.got_subcommand(cmd_verify)) {
    std::vector<GroupSource> corpus;
    for (const std::string& s : verify_srcs) corpus.push_back(parse_source(s));
    if (!verify_dir.empty()) {
      try {
        for (GroupSource& s : corpus_from_directory(verify_dir)) corpus.push_back(std::move(s));
      } catch (const GroupError& e) {
        std::cerr << "load error: " << e.what() << "\n";
        return 3;
      }
    }
    if (verify_builtins || corpus.empty())
      for (const std::string& spec : builtin_corpus())
        corpus.push_back({SourceKind::builtin, spec});

    CorpusResult res = run_corpus(corpus);
    if (verify_json) {
      std::cout << corpus_to_json(res.reports).dump(2) << "\n";
    } else {
      for (const VerificationReport& r : res.reports) render_report_text(std::cout, r, true);
      std::cout << res.reports.size() << " group(s): " << res.clause_failures
                << " clause failure(s), " << res.load_errors << " load error(s)\n";
    }
    if (res.clause_failures > 0) return 1;
    if (res.load_errors > 0) return 3;
    return 0;
  }

  if (app.got_subcommand(cmd_dot)) {
    GroupSource src = parse_source(dot_src);
    try {
      Group g = load_source(src);
      if (dot_quotient) {
        QuotientGraph qg = quotient_graph(g);
        ComponentPartition part = components(qg.graph);
        export_dot_file(dot_out, qg.graph, part);
      } else {
        CommutingGraph cg = build_commuting_graph(g);
        ComponentPartition part = components(cg);
        export_dot_file(dot_out, cg, part);
      }
    } catch (const GroupError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 3;
    }
    return 0;
  }

  return 2;
}

}  // namespace commgraph
