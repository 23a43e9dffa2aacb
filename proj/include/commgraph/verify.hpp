#pragma once
// The theorem battery. Each clause of the connectivity/diameter theorem, the
// quotient-disconnection theorem, and the supporting lemmas is evaluated
// against one group at a time; verdicts are pass, fail, or not-applicable
// (hypothesis failure is never theorem failure). Reports are deterministic:
// rerunning the same corpus must produce byte-identical output.

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "commgraph/graph.hpp"
#include "commgraph/group.hpp"
#include "commgraph/io.hpp"
#include "commgraph/structure.hpp"

namespace commgraph {

enum class ClauseStatus { pass, fail, not_applicable };

inline const char* to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::pass: return "pass";
    case ClauseStatus::fail: return "fail";
    case ClauseStatus::not_applicable: return "n/a";
  }
  return "?";
}

struct ClauseVerdict {
  std::string id;
  ClauseStatus status = ClauseStatus::not_applicable;
  std::string witness;  // supporting data, counterexample, or n/a reason
};

struct GraphCensus {
  int vertices = 0;
  int components = 0;  // 0 for the empty graph
  int max_diameter = 0;
  std::vector<int> sizes;
  std::vector<int> diameters;
  std::vector<bool> complete;

  bool connected() const { return components == 1; }
};

struct StructureFlags {
  bool abelian = false;
  bool solvable = false;
  bool nilpotent = false;
  bool a_group = false;
  bool c_cap_z_trivial = false;       // no nontrivial commutator value is central
  bool gprime_cap_z_trivial = false;  // derived subgroup meets center trivially
  bool frobenius = false;
  bool two_frobenius = false;
  bool quotient_frobenius = false;
  bool quotient_two_frobenius = false;
};

struct VerificationReport {
  std::string source;
  std::string group_name;
  int order = 0;
  std::string load_error;  // when set, nothing below is populated
  StructureFlags flags;
  int center_order = 0;
  int second_center_order = 0;
  int quotient_order = 0;
  GraphCensus graph;     // commuting graph of G
  GraphCensus quotient;  // commuting graph of G/Z
  std::vector<ClauseVerdict> clauses;
};

namespace detail {

inline GraphCensus make_census(const CommutingGraph& g, const ComponentPartition* p) {
  GraphCensus c;
  c.vertices = g.vertex_count();
  if (!p) return c;
  c.components = p->count();
  c.max_diameter = p->max_diameter();
  for (int i = 0; i < p->count(); ++i) {
    c.sizes.push_back(static_cast<int>(p->components[i].size()));
    c.diameters.push_back(p->diameters[i]);
    c.complete.push_back(p->complete[i]);
  }
  return c;
}

// "max diameter D attained by <label> and <label>" for the widest component.
inline std::string diameter_witness(const Group& grp, const CommutingGraph& cg,
                                    const ComponentPartition& p) {
  int c = 0;
  for (int i = 1; i < p.count(); ++i)
    if (p.diameters[i] > p.diameters[c]) c = i;
  auto [a, b] = p.extremal[c];
  return "max diameter " + std::to_string(p.diameters[c]) + " attained by " +
         grp.label(cg.vertices[a]) + " and " + grp.label(cg.vertices[b]);
}

}  // namespace detail

inline VerificationReport analyze_group(const std::string& source, const Group& g) {
  VerificationReport r;
  r.source = source;
  r.group_name = g.name();
  r.order = g.order();

  Subgroup z = center(g);
  Subgroup z2 = second_center(g);
  ElementSet comm = commutator_set(g);
  Subgroup gprime = derived_subgroup(g);
  r.center_order = z.size();
  r.second_center_order = z2.size();

  bool c_cap_z = true;
  for (int x = z.bits().find_next(0); x >= 0; x = z.bits().find_next(x))
    if (comm.contains(x)) {
      c_cap_z = false;
      break;
    }
  bool gp_cap_z = true;
  for (int x = z.bits().find_next(0); x >= 0; x = z.bits().find_next(x))
    if (gprime.contains(x)) {
      gp_cap_z = false;
      break;
    }

  r.flags.abelian = g.is_abelian();
  r.flags.solvable = is_solvable(g);
  r.flags.nilpotent = is_nilpotent(g);
  r.flags.a_group = is_A_group(g);
  r.flags.c_cap_z_trivial = c_cap_z;
  r.flags.gprime_cap_z_trivial = gp_cap_z;
  r.flags.frobenius = detect_frobenius(g).has_value();
  r.flags.two_frobenius = detect_2frobenius(g).has_value();

  CommutingGraph graph = build_commuting_graph(g);
  std::optional<ComponentPartition> gpart;
  if (!graph.empty()) gpart = components(graph);
  r.graph = detail::make_census(graph, gpart ? &*gpart : nullptr);

  std::string qname = (g.name().empty() ? std::string("G") : g.name()) + "/Z";
  QuotientMap q = quotient(g, z, qname);
  r.quotient_order = q.group.order();
  std::optional<FrobeniusStructure> qfrob = detect_frobenius(q.group);
  std::optional<TwoFrobeniusStructure> q2frob = detect_2frobenius(q.group);
  r.flags.quotient_frobenius = qfrob.has_value();
  r.flags.quotient_two_frobenius = q2frob.has_value();

  CommutingGraph qgraph = build_commuting_graph(q.group);
  std::optional<ComponentPartition> qpart;
  if (!qgraph.empty()) qpart = components(qgraph);
  r.quotient = detail::make_census(qgraph, qpart ? &*qpart : nullptr);

  auto add = [&](std::string id, ClauseStatus st, std::string w) {
    r.clauses.push_back({std::move(id), st, std::move(w)});
  };
  auto verdict = [](bool ok) { return ok ? ClauseStatus::pass : ClauseStatus::fail; };
  const ClauseStatus na = ClauseStatus::not_applicable;

  // The graph-shape clauses run under the commutator-set hypothesis: no
  // nontrivial commutator value is central.
  bool hyp = c_cap_z && !r.flags.abelian;
  std::string no_hyp_reason =
      r.flags.abelian ? "abelian group" : "nontrivial central commutator values exist";

  // Connectivity transfers between the graph and its central quotient.
  if (!hyp) {
    add("main.1", na, no_hyp_reason);
  } else {
    bool gc = r.graph.connected(), qc = r.quotient.connected();
    add("main.1", verdict(gc == qc),
        "graph: " + std::to_string(r.graph.components) +
            " component(s); quotient graph: " + std::to_string(r.quotient.components) +
            " component(s)");
  }

  // Every component has diameter at most 10.
  if (!hyp) {
    add("main.2", na, no_hyp_reason);
  } else {
    add("main.2", verdict(r.graph.max_diameter <= 10),
        detail::diameter_witness(g, graph, *gpart));
  }

  // Solvable and connected: diameter at most 8.
  if (!hyp) {
    add("main.3", na, no_hyp_reason);
  } else if (!r.flags.solvable) {
    add("main.3", na, "not solvable");
  } else if (!r.graph.connected()) {
    add("main.3", na, "graph disconnected");
  } else {
    add("main.3", verdict(r.graph.max_diameter <= 8),
        detail::diameter_witness(g, graph, *gpart));
  }

  // Solvable: disconnected iff the central quotient is Frobenius/2-Frobenius.
  if (!hyp) {
    add("main.4", na, no_hyp_reason);
  } else if (!r.flags.solvable) {
    add("main.4", na, "not solvable");
  } else {
    bool disc = !r.graph.connected();
    bool qclass = qfrob.has_value() || q2frob.has_value();
    std::string w = "graph has " + std::to_string(r.graph.components) +
                    " component(s); quotient is " +
                    (qfrob ? "Frobenius" : q2frob ? "2-Frobenius" : "neither Frobenius nor 2-Frobenius");
    add("main.4", verdict(disc == qclass), std::move(w));
  }

  // Frobenius/2-Frobenius central quotient forces disconnection — no
  // hypothesis on commutators at all.
  if (!qfrob && !q2frob) {
    add("thm2", na, "quotient is neither Frobenius nor 2-Frobenius");
  } else {
    std::string w = std::string("quotient is ") + (qfrob ? "Frobenius" : "2-Frobenius") +
                    "; graph has " + std::to_string(r.graph.components) + " component(s)";
    add("thm2", verdict(r.graph.components >= 2), std::move(w));
  }

  // Adjacency lifts to the quotient for vertices outside the second center;
  // with the hypothesis it also descends.
  if (r.flags.abelian) {
    add("lemma3.forward", na, "abelian group");
    add("lemma3.converse", na, "abelian group");
  } else {
    LiftCheckResult lift = adjacency_lift_check(g);
    add("lemma3.forward", verdict(lift.forward_ok),
        lift.forward_ok ? "exhaustive over pairs outside the second center"
                        : "counterexample " + g.label(lift.forward_counterexample->first) +
                              ", " + g.label(lift.forward_counterexample->second));
    if (!lift.converse_applicable) {
      add("lemma3.converse", na, "nontrivial central commutator values exist");
    } else {
      add("lemma3.converse", verdict(lift.converse_ok),
          lift.converse_ok ? "exhaustive over pairs outside the second center"
                           : "counterexample " +
                                 g.label(lift.converse_counterexample->first) + ", " +
                                 g.label(lift.converse_counterexample->second));
    }
  }

  // Z2 = Z and connected graph: quotient graph connected with diameter no
  // larger.
  if (r.flags.abelian) {
    add("lemma4.1", na, "abelian group");
  } else if (z2.size() != z.size()) {
    add("lemma4.1", na, "second center exceeds center");
  } else if (!r.graph.connected()) {
    add("lemma4.1", na, "graph disconnected");
  } else {
    add("lemma4.1",
        verdict(r.quotient.connected() && r.quotient.max_diameter <= r.graph.max_diameter),
        "graph diameter " + std::to_string(r.graph.max_diameter) + ", quotient diameter " +
            std::to_string(r.quotient.max_diameter));
  }

  // Hypothesis plus connected quotient graph: graph connected, same diameter.
  if (!hyp) {
    add("lemma4.2", na, no_hyp_reason);
  } else if (!r.quotient.connected()) {
    add("lemma4.2", na, "quotient graph disconnected");
  } else {
    add("lemma4.2",
        verdict(r.graph.connected() && r.graph.max_diameter == r.quotient.max_diameter),
        "graph diameter " + std::to_string(r.graph.max_diameter) + ", quotient diameter " +
            std::to_string(r.quotient.max_diameter));
  }

  // Hypothesis: components correspond one to one, preserving diameter except
  // for singleton cosets.
  if (!hyp) {
    add("lemma4.3", na, no_hyp_reason);
  } else {
    CorrespondenceResult corr = component_correspondence(g);
    std::string w;
    if (corr.ok) {
      w = "matched " + std::to_string(corr.entries.size()) + " component(s) bijectively";
    } else {
      for (const CorrespondenceEntry& e : corr.entries)
        if (!e.ok) {
          w = "quotient component " + std::to_string(e.quotient_component) + ": " + e.detail;
          break;
        }
    }
    add("lemma4.3", verdict(corr.ok), std::move(w));
  }

  // Hypothesis: centralizers equal almost-centralizers, and Z2 = Z.
  if (!c_cap_z) {
    add("lemma5", na, "nontrivial central commutator values exist");
  } else {
    bool ok = z2.size() == z.size();
    std::string w = ok ? "second center equals center"
                       : "second center order " + std::to_string(z2.size()) +
                             " exceeds center order " + std::to_string(z.size());
    for (int x = 0; ok && x < g.order(); ++x) {
      Subgroup cx = centralizer(g, x);
      Subgroup dx = almost_centralizer(g, x, z);
      if (!(cx.bits() == dx.bits())) {
        ok = false;
        w = "centralizer of " + g.label(x) + " differs from its almost-centralizer";
      }
    }
    if (ok) w = "centralizer = almost-centralizer for all elements; " + w;
    add("lemma5", verdict(ok), std::move(w));
  }

  // A-groups: the derived subgroup meets the center trivially.
  if (!r.flags.a_group) {
    add("agroup", na, "some Sylow subgroup is nonabelian");
  } else {
    add("agroup", verdict(gp_cap_z),
        gp_cap_z ? "derived subgroup meets center trivially"
                 : "derived subgroup intersects center nontrivially");
  }

  return r;
}

// ---- corpus ----

struct CorpusResult {
  std::vector<VerificationReport> reports;
  int clause_failures = 0;
  int load_errors = 0;
};

inline CorpusResult run_corpus(const std::vector<GroupSource>& corpus) {
  CorpusResult res;
  for (const GroupSource& src : corpus) {
    VerificationReport r;
    try {
      Group g = load_source(src);
      r = analyze_group(src.display(), g);
    } catch (const GroupError& e) {
      r = VerificationReport{};
      r.source = src.display();
      r.load_error = e.what();
      ++res.load_errors;
    }
    for (const ClauseVerdict& cv : r.clauses)
      if (cv.status == ClauseStatus::fail) ++res.clause_failures;
    res.reports.push_back(std::move(r));
  }
  return res;
}

// ---- JSON (schema cg-report/1) ----

inline nlohmann::ordered_json census_to_json(const GraphCensus& c) {
  nlohmann::ordered_json j;
  j["vertices"] = c.vertices;
  j["components"] = c.components;
  j["max_diameter"] = c.max_diameter;
  j["sizes"] = c.sizes;
  j["diameters"] = c.diameters;
  j["complete"] = c.complete;
  return j;
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["source"] = r.source;
  if (!r.load_error.empty()) {
    j["error"] = r.load_error;
    return j;
  }
  j["name"] = r.group_name;
  j["order"] = r.order;
  nlohmann::ordered_json f;
  f["abelian"] = r.flags.abelian;
  f["solvable"] = r.flags.solvable;
  f["nilpotent"] = r.flags.nilpotent;
  f["a_group"] = r.flags.a_group;
  f["c_cap_z_trivial"] = r.flags.c_cap_z_trivial;
  f["gprime_cap_z_trivial"] = r.flags.gprime_cap_z_trivial;
  f["frobenius"] = r.flags.frobenius;
  f["two_frobenius"] = r.flags.two_frobenius;
  f["quotient_frobenius"] = r.flags.quotient_frobenius;
  f["quotient_two_frobenius"] = r.flags.quotient_two_frobenius;
  j["flags"] = std::move(f);
  j["center_order"] = r.center_order;
  j["second_center_order"] = r.second_center_order;
  j["graph"] = census_to_json(r.graph);
  nlohmann::ordered_json q;
  q["order"] = r.quotient_order;
  q["graph"] = census_to_json(r.quotient);
  j["quotient"] = std::move(q);
  nlohmann::ordered_json cl = nlohmann::ordered_json::array();
  for (const ClauseVerdict& cv : r.clauses) {
    nlohmann::ordered_json e;
    e["id"] = cv.id;
    e["status"] = to_string(cv.status);
    if (!cv.witness.empty()) e["witness"] = cv.witness;
    cl.push_back(std::move(e));
  }
  j["clauses"] = std::move(cl);
  return j;
}

inline nlohmann::ordered_json corpus_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json j;
  j["schema"] = "cg-report/1";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const VerificationReport& r : reports) arr.push_back(report_to_json(r));
  j["reports"] = std::move(arr);
  return j;
}

// ---- text rendering ----

namespace detail {

inline void render_census(std::ostream& out, const char* tag, const GraphCensus& c) {
  out << "  " << tag << ": ";
  if (c.vertices == 0) {
    out << "empty (all elements central)\n";
    return;
  }
  out << c.vertices << " vertices, " << c.components << " component(s), max diameter "
      << c.max_diameter << "\n";
  out << "    sizes:";
  for (int s : c.sizes) out << ' ' << s;
  out << "\n    diameters:";
  for (int d : c.diameters) out << ' ' << d;
  out << "\n    complete:";
  for (bool b : c.complete) out << ' ' << (b ? 'y' : 'n');
  out << "\n";
}

}  // namespace detail

inline void render_report_text(std::ostream& out, const VerificationReport& r,
                               bool with_clauses) {
  out << "== " << r.source;
  if (!r.load_error.empty()) {
    out << " ==\n  LOAD ERROR: " << r.load_error << "\n";
    return;
  }
  out << " (" << r.group_name << ", order " << r.order << ") ==\n";
  out << "  flags:";
  const StructureFlags& f = r.flags;
  if (f.abelian) out << " abelian";
  if (f.solvable) out << " solvable";
  if (f.nilpotent) out << " nilpotent";
  if (f.a_group) out << " a-group";
  if (f.c_cap_z_trivial) out << " c-cap-z-trivial";
  if (f.gprime_cap_z_trivial) out << " gprime-cap-z-trivial";
  if (f.frobenius) out << " frobenius";
  if (f.two_frobenius) out << " 2-frobenius";
  if (f.quotient_frobenius) out << " quotient-frobenius";
  if (f.quotient_two_frobenius) out << " quotient-2-frobenius";
  out << "\n";
  out << "  center order " << r.center_order << ", second center order "
      << r.second_center_order << ", quotient order " << r.quotient_order << "\n";
  detail::render_census(out, "graph", r.graph);
  detail::render_census(out, "quotient graph", r.quotient);
  if (with_clauses)
    for (const ClauseVerdict& cv : r.clauses) {
      out << "  " << cv.id;
      for (std::size_t i = cv.id.size(); i < 16; ++i) out << ' ';
      out << to_string(cv.status);
      if (!cv.witness.empty()) out << "  [" << cv.witness << "]";
      out << "\n";
    }
}

}  // namespace commgraph
