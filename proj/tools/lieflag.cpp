// lieflag: command-line front end.
// Exit codes: 0 ok, 2 parse/input error, 3 out of scope, 4 internal invariant violation.
#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "lieflag/lieflag.hpp"

using namespace lieflag;

namespace {

constexpr int kOk = 0;
constexpr int kParse = 2;
constexpr int kScope = 3;
constexpr int kInternal = 4;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ScopeError:
    case ErrorKind::ProjectiveSpaceInput:
      return kScope;
    case ErrorKind::ParseError:
    case ErrorKind::InadmissibleType:
    case ErrorKind::NotARoot:
    case ErrorKind::UnknownNode:
    case ErrorKind::NotMarked:
    case ErrorKind::EmptyMarking:
    case ErrorKind::EmptySubset:
    case ErrorKind::UnknownModel:
    case ErrorKind::UnknownBasisLabel:
      return kParse;
    default:
      return kInternal;
  }
}

std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v - 1);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad node list '" + s + "'");
    }
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty node list");
  std::sort(out.begin(), out.end());
  return out;
}

std::string root_json_label(const Root& r) { return root_to_string(r); }

void print_algebra(const GradedLieAlgebra& g, std::ostream& out) {
  out << g.name() << "  dims " << dims_to_string(g.dims()) << " total " << g.dim() << "\n";
  for (int i = 0; i < g.dim(); ++i) out << "  e" << i << " = " << g.label(i) << "  (degree " << g.degree(i) << ")\n";
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b)
      if (!g.bracket(a, b).empty())
        out << "  [" << g.label(a) << ", " << g.label(b) << "] = " << vector_string(g, g.bracket(a, b)) << "\n";
}

GradedLieAlgebra resolve_algebra(const std::string& id) {
  if (id.rfind("STD(", 0) == 0) return build_model(id).algebra;
  auto ids = model_ids();
  if (std::find(ids.begin(), ids.end(), id) != ids.end()) return build_model(id).algebra;
  if (id.find('[') != std::string::npos) return build_model("STD(" + id + ")").algebra;
  throw Error(ErrorKind::UnknownModel, id);
}

void print_trace(const TraceStep& s, int depth, std::ostream& out) {
  out << std::string(2 * depth + 2, ' ') << s.rule << " on " << s.diagram << " -> " << status_name(s.status);
  if (!s.note.empty()) out << "  (" << s.note << ")";
  out << "\n" << std::string(2 * depth + 4, ' ') << s.citation << "\n";
  for (const auto& c : s.children) print_trace(c, depth + 1, out);
}

void print_verdict(const Verdict& v, std::ostream& out) {
  out << v.input << ": " << status_name(v.status) << "  (canonical " << v.canonical_form << ")\n";
  if (v.degeneration) out << "  degeneration: " << *v.degeneration << (v.model ? "  model " + *v.model : "") << "\n";
  for (const auto& c : v.constraints) out << "  constraint: " << c << "\n";
  out << "  trace:\n";
  for (const auto& s : v.trace) print_trace(s, 0, out);
}

struct BatchItem {
  std::string spec;
  std::optional<Verdict> verdict;
  std::string error;
  int code = kOk;
};

int run_batch(const std::string& path, bool json, unsigned threads) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::vector<BatchItem> items;
  for (std::string line; std::getline(in, line);) {
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty() || line[0] == '#') continue;
    items.push_back({line, std::nullopt, {}, kOk});
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, items.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < items.size();) {
        try {
          items[i].verdict = classify(items[i].spec);
        } catch (const Error& e) {
          items[i].error = e.what();
          items[i].code = exit_code_for(e.kind());
        } catch (const std::exception& e) {
          items[i].error = e.what();
          items[i].code = kInternal;
        }
      }
    });
  for (auto& th : pool) th.join();

  int code = kOk;
  Json arr = Json::array();
  for (const auto& it : items) {
    if (it.code != kOk && code == kOk) code = it.code;
    if (json) {
      arr.push_back(it.verdict ? verdict_to_json(*it.verdict) : Json{{"input", it.spec}, {"error", it.error}});
    } else if (it.verdict) {
      print_verdict(*it.verdict, std::cout);
    } else {
      std::cout << it.spec << ": error: " << it.error << "\n";
      std::cerr << it.spec << ": " << it.error << "\n";
    }
  }
  if (json) std::cout << arr.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parabolic nilradicals, symbol algebras and rigidity of rational homogeneous spaces"};
  app.require_subcommand(1);

  std::string spec, spec_b, model_id, a_list;
  bool json = false, verify = false, list = false;
  int steps = 2, beta = 0, k = 1, alpha = 0;
  std::string batch;
  unsigned threads = 0;

  auto* roots = app.add_subcommand("roots", "positive roots with heights");
  roots->add_option("spec", spec, "diagram, e.g. D4 or D4[2,3,4]")->required();
  roots->add_flag("--json", json, "JSON output");

  auto* dims = app.add_subcommand("dims", "graded dimensions of g_-(I)");
  dims->add_option("spec", spec, "marked diagram")->required();

  auto* nil = app.add_subcommand("nilradical", "basis and structure constants of g_-(I)");
  nil->add_option("spec", spec, "marked diagram")->required();
  nil->add_flag("--json", json, "JSON output");

  auto* present = app.add_subcommand("present", "degree-one presentation and its quotient");
  present->add_option("spec", spec, "ADE marked diagram")->required();

  auto* model = app.add_subcommand("model", "build a catalog model");
  model->add_option("id", model_id, "model id or STD(<spec>)");
  model->add_flag("--verify", verify, "run Jacobi, dimension and bracket-table checks");
  model->add_flag("--list", list, "list catalog ids");
  model->add_flag("--json", json, "JSON output");

  auto* compare = app.add_subcommand("compare", "graded comparison of two algebras");
  compare->add_option("a", spec, "model id, STD(<spec>) or marked diagram")->required();
  compare->add_option("b", spec_b, "model id, STD(<spec>) or marked diagram")->required();
  std::string regrade;
  compare->add_option("--regrade", regrade, "regrade the first algebra first, e.g. v4=0 (others stay 1)");

  auto* prolong = app.add_subcommand("prolong", "prolongation tower against root data");
  prolong->add_option("spec", spec, "ADE marked diagram")->required();
  prolong->add_option("--steps", steps, "highest prolongation degree")->check(CLI::NonNegativeNumber);

  auto* split = app.add_subcommand("split", "splitting type of a distribution along a curve");
  split->add_option("spec", spec, "marked diagram")->required();
  split->add_option("--beta", beta, "marked node (1-based)")->required();
  split->add_option("--k", k, "step k >= 1")->required();
  split->add_option("--alpha", alpha, "curve class node (1-based)")->required();

  auto* fiber = app.add_subcommand("split-fiber", "splitting type of a relative tangent bundle");
  fiber->add_option("spec", spec, "marked diagram")->required();
  fiber->add_option("--A", a_list, "comma-separated marked nodes (1-based)")->required();
  fiber->add_option("--alpha", alpha, "curve class node (1-based)")->required();

  auto* cls = app.add_subcommand("classify", "rigidity verdict with rule trace");
  cls->add_option("spec", spec, "ADE marked diagram");
  cls->add_flag("--json", json, "JSON output");
  cls->add_option("--batch", batch, "file with one diagram per line");
  cls->add_option("--threads", threads, "batch worker count (default: hardware)");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    std::ostream& out = std::cout;
    if (*roots) {
      auto md = MarkedDiagram::parse(spec, true);
      const auto& rs = md.data().positive_roots();
      if (json) {
        Json arr = Json::array();
        for (const auto& r : rs) arr.push_back({{"root", r}, {"label", root_to_sum(r)}, {"height", height(r)}});
        out << Json{{"diagram", md.to_string()}, {"positive_roots", arr}}.dump(2) << "\n";
      } else {
        out << (md.marked().empty() ? spec : md.to_string()) << ": " << rs.size() << " positive roots\n";
        for (const auto& r : rs) out << "  " << root_to_string(r) << "  " << root_to_sum(r) << "  height " << height(r) << "\n";
      }
    } else if (*dims) {
      auto md = MarkedDiagram::parse(spec);
      auto gd = md.graded_dims();
      out << dims_to_string(gd.dims) << " total " << gd.total << "\n";
      out << "picard number " << md.picard_number() << "\n";
    } else if (*nil) {
      auto md = MarkedDiagram::parse(spec);
      auto h = parabolic_nilradical(md);
      if (json) {
        Json j = algebra_to_json(h.algebra);
        Json r = Json::array();
        for (const auto& x : h.roots) r.push_back(root_json_label(x));
        j["roots"] = r;
        out << j.dump(2) << "\n";
      } else {
        print_algebra(h.algebra, out);
      }
    } else if (*present) {
      auto md = MarkedDiagram::parse(spec);
      Prop27Result r;
      try {
        r = prop27_quotient(md);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::DimensionMismatch) out << md.to_string() << ": mismatch\n";
        throw;
      }
      out << md.to_string() << ": " << r.presentation.num_generators() << " generators in degree one\n";
      out << "relation families:\n";
      for (const auto& s : r.base_relations) out << "  " << s << "\n";
      out << "relations after closure: " << r.relation_span << "\n";
      out << "quotient dims " << dims_to_string(r.algebra.dims()) << ", expected " << dims_to_string(r.expected_dims)
          << "\n";
      out << "match: " << (r.dims_match && r.profiles_match ? "yes" : "no") << "\n";
    } else if (*model) {
      if (list) {
        for (const auto& id : model_ids()) out << id << "  " << build_model(id).description << "\n";
        out << "STD(<spec>)  standard nilradical of a marked diagram\n";
        return kOk;
      }
      if (model_id.empty()) throw Error(ErrorKind::ParseError, "model id required (or --list)");
      auto m = build_model(model_id);
      if (json) {
        out << algebra_to_json(m.algebra).dump(2) << "\n";
      } else {
        out << m.id << ": " << m.description << "\n";
        print_algebra(m.algebra, out);
      }
      if (verify) {
        auto r = verify_model(m);
        std::ostream& rep = json ? std::cerr : out;
        rep << "jacobi: " << (r.jacobi ? "ok" : "FAILED") << "\n";
        rep << "dims: " << dims_to_string(m.algebra.dims()) << (r.dims_ok ? " ok" : " expected " + dims_to_string(m.expected_dims)) << "\n";
        rep << "bracket table: " << m.table.size() << " entries, " << r.table_mismatches.size() << " mismatches\n";
        for (const auto& x : r.table_mismatches)
          rep << "  [" << x.entry.left << ", " << x.entry.right << "] = " << x.actual << "\n";
        if (!r.ok()) return kInternal;
      }
    } else if (*compare) {
      auto a = resolve_algebra(spec), b = resolve_algebra(spec_b);
      if (!regrade.empty()) {
        std::map<std::string, int> nd;
        std::stringstream ss(regrade);
        for (std::string item; std::getline(ss, item, ',');) {
          auto eq = item.find('=');
          if (eq == std::string::npos || eq + 2 != item.size() || (item[eq + 1] != '0' && item[eq + 1] != '1'))
            throw Error(ErrorKind::ParseError, "bad regrade item '" + item + "'");
          nd[item.substr(0, eq)] = item[eq + 1] - '0';
        }
        a = regrade_positive_part(a, nd, a.name() + " regraded");
      }
      auto c = compare_graded(a, b);
      out << a.name() << " " << dims_to_string(a.dims()) << " vs " << b.name() << " " << dims_to_string(b.dims()) << "\n";
      out << "verdict: " << c.verdict() << "\n";
      for (const auto& d : c.differences) out << "  differs: " << d << "\n";
      if (c.certificate) {
        out << "certificate (images of degree-one elements):\n";
        for (int e : a.basis_of_degree(1))
          out << "  " << a.label(e) << " -> " << vector_string(b, c.certificate->images[e]) << "\n";
      }
    } else if (*prolong) {
      auto md = MarkedDiagram::parse(spec);
      auto rep = prolongation_tower(md, steps);
      out << rep.diagram << (rep.exception ? "  (exception family: equality not expected)" : "") << "\n";
      out << "k  computed  root-data\n";
      for (const auto& r : rep.rows)
        out << r.k << "  " << r.computed << "  " << r.expected << (r.match() ? "" : "  MISMATCH") << "\n";
      if (!rep.all_match() && !rep.exception) out << "finding: tower differs from root data\n";
    } else if (*split) {
      auto md = MarkedDiagram::parse(spec);
      md.check_node(beta - 1);
      md.check_node(alpha - 1);
      auto s = distribution_splitting(md, beta - 1, k, alpha - 1);
      out << s.to_string() << "  total " << s.total << "\n";
    } else if (*fiber) {
      auto md = MarkedDiagram::parse(spec);
      auto a = parse_index_list(a_list);
      for (int x : a) md.check_node(x);
      md.check_node(alpha - 1);
      auto s = relative_fiber_splitting(md, a, alpha - 1);
      out << s.to_string() << "  total " << s.total << "\n";
    } else if (*cls) {
      if (!batch.empty()) return run_batch(batch, json, threads);
      if (spec.empty()) throw Error(ErrorKind::ParseError, "diagram or --batch required");
      auto v = classify(spec);
      if (json)
        out << verdict_to_json(v).dump(2) << "\n";
      else
        print_verdict(v, out);
    } else if (*selftest) {
      return acceptance::run_all(out) ? kInternal : kOk;
    }
    return kOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
