#include "kdecomp/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <boost/algorithm/string.hpp>

#include "CLI11.hpp"

#include "kdecomp/clutters.hpp"
#include "kdecomp/decomposition.hpp"
#include "kdecomp/errors.hpp"
#include "kdecomp/homology.hpp"
#include "kdecomp/io.hpp"
#include "kdecomp/resolution.hpp"
#include "kdecomp/verify.hpp"

namespace kdecomp {

namespace {

struct Options {
  bool json = false;
  std::string input = "-";
  std::string method = "oracle";
  std::uint32_t characteristic = 0;
  int k = kAnyK;
  std::string mode = "direct";
  std::size_t budget = SearchOptions{}.node_limit;
  std::string vertex;
  std::string edge;
  std::string ops;
  std::string property;
  std::optional<std::uint64_t> seed;
  std::size_t count = 100;
};

/// Output sink: text goes to `out` directly, JSON is collected and printed once.
class Emitter {
 public:
  Emitter(bool json, std::ostream& out, std::ostream& err) : json_(json), out_(out), err_(err) {}

  bool json() const noexcept { return json_; }
  std::ostream& text() { return out_; }
  Json& doc() { return doc_; }
  void warn(const std::string& message) { err_ << "warning: " << message << "\n"; }
  void flush() {
    if (json_ && !doc_.is_null()) out_ << doc_.dump(2) << "\n";
  }

 private:
  bool json_;
  std::ostream& out_;
  std::ostream& err_;
  Json doc_;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw PreconditionError("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

Field field_of(const Options& o) { return o.characteristic == 0 ? Field::rationals() : Field::prime(o.characteristic); }

/// The ideal a document stands for: itself, I_Delta, or the edge ideal.
MonomialIdeal ideal_of(const Document& doc) {
  if (const auto* ideal = std::get_if<MonomialIdeal>(&doc.value)) return *ideal;
  if (const auto* complex = std::get_if<SimplicialComplex>(&doc.value)) return stanley_reisner_ideal(*complex);
  return edge_ideal(std::get<Clutter>(doc.value));
}

const Clutter& clutter_of(const Document& doc) {
  const auto* clutter = std::get_if<Clutter>(&doc.value);
  if (!clutter) throw PreconditionError("this command needs a clutter document");
  return *clutter;
}

int cmd_dual(const Document& doc, Emitter& emit) {
  if (const auto* complex = std::get_if<SimplicialComplex>(&doc.value)) {
    const auto dual = alexander_dual_complex(*complex);
    if (emit.json()) {
      emit.doc() = to_json(dual);
    } else {
      emit.text() << to_string(dual) << "\n";
    }
    return kExitOk;
  }
  const auto dual = alexander_dual_ideal(ideal_of(doc));
  if (emit.json()) {
    emit.doc() = to_json(dual);
  } else {
    emit.text() << to_string(dual) << "\n";
  }
  return kExitOk;
}

int cmd_betti(const Document& doc, const Options& o, Emitter& emit) {
  const auto ideal = ideal_of(doc);
  if (ideal.is_zero()) throw ConventionError("the zero ideal has an empty resolution");
  BettiTable table;
  if (o.method == "oracle") {
    table = oracle_betti(ideal, field_of(o));
  } else if (o.method == "order") {
    const auto order = linear_quotients_order(ideal);
    if (!order) {
      emit.text() << "no order of linear quotients exists for " << to_string(ideal) << "\n";
      return kExitViolation;
    }
    table = betti_from_order(ideal, *order);
  } else {
    const auto decision = k_decomposable_ideal(ideal, {.k = kAnyK, .node_limit = o.budget});
    if (decision.verdict == Verdict::Undecided) {
      emit.text() << "search budget exhausted\n";
      return kExitUndecided;
    }
    if (decision.verdict == Verdict::No) {
      emit.text() << to_string(ideal) << " is not k-decomposable for any k\n";
      return kExitViolation;
    }
    table = betti_recursive(*decision.certificate);
  }
  if (emit.json()) {
    emit.doc() = {{"method", o.method}, {"ideal", to_json(ideal)}, {"betti", to_json(table)}};
  } else {
    emit.text() << render(table);
  }
  return kExitOk;
}

int cmd_decompose(const Document& doc, const Options& o, Emitter& emit) {
  const SearchOptions search{.k = o.k, .node_limit = o.budget};
  const auto& ctx = *doc.context();
  Verdict verdict = Verdict::Undecided;
  std::size_t nodes = 0;
  Json certificate;
  std::string tree;

  if (const auto* complex = std::get_if<SimplicialComplex>(&doc.value)) {
    const auto mode = o.mode == "dual" ? SearchMode::Dual : SearchMode::Direct;
    const auto decision = k_decomposable_complex(*complex, search, mode);
    verdict = decision.verdict;
    nodes = decision.nodes;
    if (decision.certificate) {
      verify_certificate(*decision.certificate, *complex, o.k);
      certificate = to_json(*decision.certificate, ctx);
      tree = render(*decision.certificate, ctx);
    }
  } else {
    if (o.mode != "direct") throw PreconditionError("--mode applies to complexes only");
    const auto ideal = ideal_of(doc);
    const auto decision = k_decomposable_ideal(ideal, search);
    verdict = decision.verdict;
    nodes = decision.nodes;
    if (decision.certificate) {
      verify_certificate(*decision.certificate, ideal, o.k);
      certificate = to_json(*decision.certificate, ctx);
      tree = render(*decision.certificate, ctx);
    }
  }

  const std::string k_text = o.k == kAnyK ? "k" : std::to_string(o.k);
  if (emit.json()) {
    emit.doc() = {{"k", o.k == kAnyK ? Json(nullptr) : Json(o.k)},
                  {"verdict", to_string(verdict)},
                  {"nodes", nodes},
                  {"certificate", certificate}};
  } else if (verdict == Verdict::Yes) {
    emit.text() << tree;
  } else if (verdict == Verdict::No) {
    emit.text() << "not " << k_text << "-decomposable\n";
  } else {
    emit.text() << "undecided: search budget exhausted after " << nodes << " nodes\n";
  }
  return verdict == Verdict::Undecided ? kExitUndecided : kExitOk;
}

int cmd_invariants(const Document& doc, const Options& o, Emitter& emit) {
  const auto ideal = ideal_of(doc);
  const auto q = oracle_quotient_invariants(ideal, field_of(o));
  const bool squarefree = ideal.is_squarefree();
  const int big_height = squarefree ? bight(ideal) : 0;
  if (emit.json()) {
    emit.doc() = {{"reg", q.reg},
                  {"pd", q.pd},
                  {"bight", squarefree ? Json(big_height) : Json(nullptr)},
                  {"by_convention", q.by_convention}};
  } else {
    emit.text() << "reg(R/I) = " << q.reg << (q.by_convention ? " (convention)" : "") << "\n";
    emit.text() << "pd(R/I) = " << q.pd << (q.by_convention ? " (convention)" : "") << "\n";
    emit.text() << "bight(I) = " << (squarefree ? std::to_string(big_height) : std::string("n/a")) << "\n";
  }
  return kExitOk;
}

int cmd_chordal(const Document& doc, Emitter& emit) {
  const auto& clutter = clutter_of(doc);
  const auto result = is_chordal(clutter);
  const auto& ctx = *clutter.context();
  if (emit.json()) {
    emit.doc() = {{"verdict", to_string(result.verdict)}, {"minors", result.minors_visited}};
    if (result.witness) {
      emit.doc()["witness"] = to_json(*result.witness, ctx);
      emit.doc()["witness_minor"] = to_json(replay(clutter, *result.witness));
    }
  } else if (result.verdict == Verdict::Yes) {
    emit.text() << "chordal (" << result.minors_visited << " minors checked)\n";
  } else if (result.verdict == Verdict::No) {
    const auto trace = to_string(*result.witness, ctx);
    emit.text() << "not chordal: minor [" << (trace.empty() ? "H" : trace) << "] = "
                << to_string(replay(clutter, *result.witness)) << " has no simplicial vertex\n";
  } else {
    emit.text() << "undecided: minor budget exhausted\n";
  }
  return result.verdict == Verdict::Undecided ? kExitUndecided : kExitOk;
}

int cmd_bound(const Document& doc, const Options& o, Emitter& emit) {
  const auto& clutter = clutter_of(doc);
  const auto& ctx = *clutter.context();
  const auto x = ctx.index_of(o.vertex);
  if (!x) throw UnknownVertexError("unknown vertex '" + o.vertex + "'");
  std::vector<std::string> names;
  boost::split(names, o.edge, boost::is_any_of(", "), boost::token_compress_on);
  VertexSet edge;
  for (const auto& name : names) {
    if (name.empty()) continue;
    const auto v = ctx.index_of(name);
    if (!v) throw UnknownVertexError("unknown vertex '" + name + "'");
    edge = edge.with(*v);
  }
  ChordalBoundReport r;
  try {
    r = chordal_reg_bound(clutter, *x, edge, field_of(o));
  } catch (const InternalError& err) {
    emit.text() << "violation: " << err.what() << "\n";
    return kExitViolation;
  }
  if (emit.json()) {
    emit.doc() = {{"d", r.d},
                  {"reg", r.reg},
                  {"reg_with_face", r.reg_with_face},
                  {"reg_contraction", r.reg_contraction},
                  {"equality_rhs", r.equality_rhs},
                  {"deletion_sum", r.deletion_sum},
                  {"bound_rhs", r.bound_rhs},
                  {"equality_holds", r.equality_holds()},
                  {"bound_holds", r.bound_holds()},
                  {"minors_chordal", r.minors_chordal ? Json(*r.minors_chordal) : Json(nullptr)}};
  } else {
    auto& t = emit.text();
    t << "d = " << r.d << "\n";
    t << "(i)  reg = " << r.reg << " = max{" << r.reg_with_face << ", " << r.reg_contraction << " + " << r.d
      << "} = " << r.equality_rhs << "\n";
    t << "(ii) reg = " << r.reg << " <= max{" << r.deletion_sum << ", " << r.reg_contraction << " + " << r.d
      << "} = " << r.bound_rhs << "\n";
    if (r.minors_chordal) t << "minors chordal: " << (*r.minors_chordal ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_minor(const Document& doc, const Options& o, Emitter& emit) {
  const auto& clutter = clutter_of(doc);
  const auto minor = replay(clutter, parse_minor_trace(o.ops, *clutter.context()));
  if (emit.json()) {
    emit.doc() = to_json(minor);
  } else {
    emit.text() << to_string(minor) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, Emitter& emit) {
  const auto property = parse_property(o.property);
  if (!property) throw PreconditionError("unknown property '" + o.property + "'");
  const auto report = run_property(*property, *o.seed, o.count);
  if (emit.json()) {
    emit.doc() = {{"property", to_string(report.property)},
                  {"seed", report.seed},
                  {"requested", report.requested},
                  {"checked", report.checked},
                  {"sampled", report.sampled},
                  {"counterexamples", report.counterexamples}};
  } else {
    emit.text() << to_string(report.property) << ": " << report.checked << " instances checked (" << report.sampled
                << " drawn, seed " << report.seed << "), " << report.counterexamples.size() << " violations\n";
    for (const auto& c : report.counterexamples) emit.text() << "counterexample: " << c << "\n";
  }
  if (!report.ok()) return kExitViolation;
  return report.complete() ? kExitOk : kExitUndecided;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide k-decomposability and compute Betti numbers of monomial ideals", "kdecomp"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  const auto add_input = [&o](CLI::App* cmd) {
    cmd->add_option("input", o.input, "Input document (default: standard input)");
  };
  const auto add_field = [&o](CLI::App* cmd) {
    cmd->add_option("--char", o.characteristic, "Oracle field characteristic (0 for Q)");
  };

  auto* dual = app.add_subcommand("dual", "Alexander dual of an ideal or complex");
  add_input(dual);

  auto* betti = app.add_subcommand("betti", "Graded Betti numbers");
  add_input(betti);
  add_field(betti);
  betti->add_option("--method", o.method, "order | recursive | oracle")
      ->check(CLI::IsMember({"order", "recursive", "oracle"}));
  betti->add_option("--budget", o.budget, "Search node budget");

  auto* decompose = app.add_subcommand("decompose", "Search for a k-decomposition certificate");
  add_input(decompose);
  decompose->add_option("--k", o.k, "Bound on |supp u| - 1 (default: unbounded)")->check(CLI::NonNegativeNumber);
  decompose->add_option("--mode", o.mode, "direct | dual (complexes)")->check(CLI::IsMember({"direct", "dual"}));
  decompose->add_option("--budget", o.budget, "Search node budget");

  auto* invariants = app.add_subcommand("invariants", "reg, pd and bight");
  add_input(invariants);
  add_field(invariants);

  auto* clutter = app.add_subcommand("clutter", "Clutter commands");
  clutter->require_subcommand(1);
  auto* chordal = clutter->add_subcommand("chordal", "Decide chordality");
  add_input(chordal);
  auto* bound = clutter->add_subcommand("bound", "Regularity statements at a simplicial vertex");
  add_input(bound);
  add_field(bound);
  bound->add_option("--vertex", o.vertex, "Simplicial vertex x")->required();
  bound->add_option("--edge", o.edge, "Edge through x, e.g. x,y")->required();
  auto* minor = clutter->add_subcommand("minor", "Apply deletions and contractions");
  add_input(minor);
  minor->add_option("--ops", o.ops, "Operations, e.g. d:x,c:y")->required();

  auto* verify = app.add_subcommand("verify", "Randomized property runs");
  verify->add_option("property", o.property, "terao | ha | regp | lemma-h | three-way | chordal")->required();
  verify->add_option("--seed", o.seed, "Random seed")->required();
  verify->add_option("--count", o.count, "Instances to check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Emitter emit(o.json, out, err);
  try {
    int status = kExitOk;
    if (verify->parsed()) {
      status = cmd_verify(o, emit);
    } else {
      const auto doc = parse_document(read_input(o.input, in));
      for (const auto& w : doc.warnings) emit.warn(w);
      if (dual->parsed()) status = cmd_dual(doc, emit);
      if (betti->parsed()) status = cmd_betti(doc, o, emit);
      if (decompose->parsed()) status = cmd_decompose(doc, o, emit);
      if (invariants->parsed()) status = cmd_invariants(doc, o, emit);
      if (chordal->parsed()) status = cmd_chordal(doc, emit);
      if (bound->parsed()) status = cmd_bound(doc, o, emit);
      if (minor->parsed()) status = cmd_minor(doc, o, emit);
    }
    emit.flush();
    return status;
  } catch (const BudgetExceededError& e) {
    err << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const InternalError& e) {
    err << "violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const InvalidCertificateError& e) {
    err << "violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace kdecomp
