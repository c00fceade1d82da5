#include "kdecomp/clutters.hpp"

#include <algorithm>
#include <unordered_set>

#include <boost/algorithm/string.hpp>
#include <boost/container_hash/hash.hpp>

#include "kdecomp/errors.hpp"
#include "kdecomp/simplicial_complex.hpp"

namespace kdecomp {

namespace {

void require_vertex(const Clutter& clutter, std::size_t v) {
  if (!clutter.vertices().contains(v)) throw UnknownVertexError("vertex is not in the clutter");
}

struct ClutterKey {
  VertexSet vertices;
  std::vector<VertexSet> edges;
  friend bool operator==(const ClutterKey&, const ClutterKey&) = default;
};

struct ClutterKeyHash {
  std::size_t operator()(const ClutterKey& key) const noexcept {
    std::size_t seed = std::hash<VertexSet>{}(key.vertices);
    for (auto e : key.edges) boost::hash_combine(seed, e.mask());
    return seed;
  }
};

struct MinorBudgetExhausted {};

class ChordalSearch {
 public:
  explicit ChordalSearch(ChordalityOptions options) : options_(options) {}

  bool explore(const Clutter& clutter) {
    ClutterKey key{clutter.vertices(), clutter.edges()};
    if (chordal_.count(key) != 0) return true;
    if (++visited_ > options_.node_limit) throw MinorBudgetExhausted{};

    const auto vertices = clutter.vertices();
    const bool has_simplicial =
        vertices.empty() ||
        std::any_of(vertices.begin(), vertices.end(), [&](std::size_t v) { return is_simplicial_vertex(clutter, v); });
    if (!has_simplicial) {
      witness_ = trace_;
      return false;
    }
    for (auto v : vertices) {
      trace_.push_back({MinorStep::Kind::Delete, v});
      if (!explore(deletion(clutter, v))) return false;
      trace_.back().kind = MinorStep::Kind::Contract;
      if (!clutter.has_edge(VertexSet::singleton(v)) && !explore(contraction(clutter, v))) return false;
      trace_.pop_back();
    }
    chordal_.insert(std::move(key));
    return true;
  }

  std::size_t visited() const noexcept { return visited_; }
  const MinorTrace& witness() const noexcept { return witness_; }

 private:
  ChordalityOptions options_;
  std::unordered_set<ClutterKey, ClutterKeyHash> chordal_;
  MinorTrace trace_;
  MinorTrace witness_;
  std::size_t visited_ = 0;
};

int oracle_reg(const MonomialIdeal& ideal, Field field) { return oracle_quotient_invariants(ideal, field).reg; }

}  // namespace

Clutter deletion(const Clutter& clutter, std::size_t v) {
  require_vertex(clutter, v);
  std::vector<VertexSet> edges;
  for (auto e : clutter.edges()) {
    if (!e.contains(v)) edges.push_back(e);
  }
  return Clutter::make(clutter.context(), clutter.vertices().without(v), std::move(edges),
                       Clutter::EdgeRule::AllowSingletons);
}

Clutter contraction(const Clutter& clutter, std::size_t v) {
  require_vertex(clutter, v);
  std::vector<VertexSet> edges;
  for (auto e : clutter.edges()) {
    const auto rest = e.without(v);
    if (rest.empty()) throw ImproperContractionError("contracting a vertex that is itself an edge");
    edges.push_back(rest);
  }
  return Clutter::make(clutter.context(), clutter.vertices().without(v), std::move(edges),
                       Clutter::EdgeRule::AllowSingletons);
}

Clutter contraction_set(const Clutter& clutter, VertexSet s) {
  if (!s.is_subset_of(clutter.vertices())) throw UnknownVertexError("contraction set leaves the clutter");
  for (auto e : clutter.edges()) {
    if (e.is_subset_of(s)) throw ImproperContractionError("an edge lies inside the contracted set");
  }
  Clutter out = clutter;
  for (auto v : s) out = contraction(out, v);
  return out;
}

Clutter replay(const Clutter& root, const MinorTrace& trace) {
  Clutter out = root;
  for (const auto& step : trace) {
    out = step.kind == MinorStep::Kind::Delete ? deletion(out, step.vertex) : contraction(out, step.vertex);
  }
  return out;
}

bool is_simplicial_vertex(const Clutter& clutter, std::size_t v) {
  require_vertex(clutter, v);
  const auto through = clutter.edges_containing(v);
  for (std::size_t a = 0; a < through.size(); ++a) {
    for (std::size_t b = a + 1; b < through.size(); ++b) {
      const auto room = (through[a] | through[b]).without(v);
      const bool completed = std::any_of(clutter.edges().begin(), clutter.edges().end(),
                                         [room](VertexSet e) { return e.is_subset_of(room); });
      if (!completed) return false;
    }
  }
  return true;
}

bool is_containment_pair(const Clutter& clutter, std::size_t v, VertexSet edge) {
  if (!edge.contains(v) || !clutter.has_edge(edge)) throw PreconditionError("need v in e with e an edge");
  for (auto other : clutter.edges_containing(v)) {
    if (other == edge) continue;
    const auto room = (edge | other).without(v);
    const bool found = std::any_of(clutter.edges().begin(), clutter.edges().end(),
                                   [room](VertexSet e) { return e.is_subset_of(room); });
    if (!found) return false;
  }
  return true;
}

ChordalityResult is_chordal(const Clutter& clutter, ChordalityOptions options) {
  ChordalityResult out;
  if (clutter.vertices().size() > options.max_vertices) return out;
  ChordalSearch search(options);
  try {
    if (search.explore(clutter)) {
      out.verdict = Verdict::Yes;
    } else {
      out.verdict = Verdict::No;
      out.witness = search.witness();
    }
  } catch (const MinorBudgetExhausted&) {
    out.verdict = Verdict::Undecided;
  }
  out.minors_visited = search.visited();
  return out;
}

MonomialIdeal edge_ideal(const Clutter& clutter) {
  std::vector<Monomial> gens;
  for (auto e : clutter.edges()) gens.push_back(monomial_of_set(e, clutter.context()->size()));
  return MonomialIdeal::generated_by(clutter.context(), std::move(gens));
}

LemmaHIdeals lemma_h_ideals(const Clutter& clutter, VertexSet edge, std::size_t x) {
  if (!clutter.has_edge(edge) || !edge.contains(x)) throw PreconditionError("need x in e with e an edge");
  const auto face = edge.without(x);
  if (face.empty()) throw PreconditionError("e - x must be nonempty");
  const auto n = clutter.context()->size();

  std::vector<Monomial> gens{monomial_of_set(face, n)};
  for (auto v : face) {
    const auto part = edge_ideal(deletion(clutter, v));
    gens.insert(gens.end(), part.generators().begin(), part.generators().end());
  }
  LemmaHIdeals out{MonomialIdeal::generated_by(clutter.context(), std::move(gens)),
                   edge_ideal(contraction_set(clutter, face))};

  const auto complex = complex_from_nonfaces(clutter);
  const auto via_deletion = stanley_reisner_ideal(delete_face(complex, face), clutter.vertices());
  const auto via_link = stanley_reisner_ideal(link(complex, face), clutter.vertices() - face);
  if (via_deletion != out.deletion) {
    throw InternalError("I_{Delta \\ s} = " + to_string(via_deletion) + " but the minors give " +
                        to_string(out.deletion));
  }
  if (via_link != out.link) {
    throw InternalError("I_{lk s} = " + to_string(via_link) + " but the contraction gives " + to_string(out.link));
  }
  return out;
}

ChordalBoundReport chordal_reg_bound(const Clutter& clutter, std::size_t x, VertexSet edge, Field field,
                                     bool check_minor_chordality) {
  if (!clutter.has_edge(edge) || !edge.contains(x)) throw PreconditionError("need x in e with e an edge");
  if (!is_simplicial_vertex(clutter, x)) throw PreconditionError("x is not a simplicial vertex");
  const auto face = edge.without(x);
  const auto ideals = lemma_h_ideals(clutter, edge, x);

  ChordalBoundReport r;
  r.d = static_cast<int>(face.size());
  r.reg = oracle_reg(edge_ideal(clutter), field);
  r.reg_with_face = oracle_reg(ideals.deletion, field);
  r.reg_contraction = oracle_reg(ideals.link, field);
  r.equality_rhs = std::max(r.reg_with_face, r.reg_contraction + r.d);
  r.deletion_sum = r.d - 1;
  for (auto v : face) r.deletion_sum += oracle_reg(edge_ideal(deletion(clutter, v)), field);
  r.bound_rhs = std::max(r.deletion_sum, r.reg_contraction + r.d);

  if (check_minor_chordality) {
    bool all = is_chordal(contraction_set(clutter, face)).verdict == Verdict::Yes;
    for (auto v : face) all = all && is_chordal(deletion(clutter, v)).verdict == Verdict::Yes;
    r.minors_chordal = all;
  }
  if (!r.equality_holds()) {
    throw InternalError("reg(R/I(H)) = " + std::to_string(r.reg) + " but the shedding recursion gives " +
                        std::to_string(r.equality_rhs) + " for " + to_string(clutter));
  }
  if (!r.bound_holds()) {
    throw InternalError("reg(R/I(H)) = " + std::to_string(r.reg) + " exceeds the bound " +
                        std::to_string(r.bound_rhs) + " for " + to_string(clutter));
  }
  return r;
}

std::string to_string(const MinorTrace& trace, const VariableContext& ctx) {
  std::string out;
  for (const auto& step : trace) {
    if (!out.empty()) out += ',';
    out += step.kind == MinorStep::Kind::Delete ? "d:" : "c:";
    out += ctx.name(step.vertex);
  }
  return out;
}

MinorTrace parse_minor_trace(std::string_view text, const VariableContext& ctx) {
  MinorTrace out;
  std::vector<std::string> tokens;
  boost::split(tokens, text, boost::is_any_of(", "), boost::token_compress_on);
  for (auto& token : tokens) {
    if (token.empty()) continue;
    const auto colon = token.find(':');
    if (colon == std::string::npos) throw PreconditionError("minor step '" + token + "' lacks ':'");
    const auto op = token.substr(0, colon);
    const auto name = token.substr(colon + 1);
    MinorStep step{};
    if (op == "d" || op == "delete") {
      step.kind = MinorStep::Kind::Delete;
    } else if (op == "c" || op == "contract") {
      step.kind = MinorStep::Kind::Contract;
    } else {
      throw PreconditionError("unknown minor operation '" + op + "'");
    }
    const auto idx = ctx.index_of(name);
    if (!idx) throw UnknownVertexError("unknown vertex '" + name + "'");
    step.vertex = *idx;
    out.push_back(step);
  }
  return out;
}

}  // namespace kdecomp
