#include "kdecomp/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include <boost/algorithm/string.hpp>

#include "kdecomp/errors.hpp"

namespace kdecomp {

namespace {

[[noreturn]] void shape_error(const std::string& message) { throw PreconditionError("document: " + message); }

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.contains(name)) shape_error(std::string("missing \"") + name + "\"");
  return doc.at(name);
}

std::size_t vertex_of(const Json& name, const VariableContext& ctx) {
  if (!name.is_string()) shape_error("vertices must be given by name");
  const auto& s = name.get_ref<const std::string&>();
  const auto idx = ctx.index_of(s);
  if (!idx) throw UnknownVertexError("unknown variable '" + s + "'");
  return *idx;
}

VertexSet set_of(const Json& names, const VariableContext& ctx) {
  if (!names.is_array()) shape_error("expected a list of variable names");
  VertexSet out;
  for (const auto& name : names) out = out.with(vertex_of(name, ctx));
  return out;
}

std::vector<VertexSet> sets_of(const Json& lists, const VariableContext& ctx) {
  if (!lists.is_array()) shape_error("expected a list of lists");
  std::vector<VertexSet> out;
  for (const auto& list : lists) out.push_back(set_of(list, ctx));
  return out;
}

Monomial monomial_of(const Json& entry, const VariableContext& ctx) {
  if (entry.is_string()) return parse_monomial(entry.get_ref<const std::string&>(), ctx);
  if (!entry.is_array() || entry.size() != ctx.size()) shape_error("an exponent list needs one entry per variable");
  std::vector<int> e;
  for (const auto& a : entry) {
    if (!a.is_number_integer() || a.get<int>() < 0) shape_error("exponents must be nonnegative integers");
    e.push_back(a.get<int>());
  }
  return Monomial(std::move(e));
}

Json names_of(VertexSet s, const VariableContext& ctx) {
  Json out = Json::array();
  for (auto v : s) out.push_back(ctx.name(v));
  return out;
}

Json sets_json(const std::vector<VertexSet>& sets, const VariableContext& ctx) {
  Json out = Json::array();
  for (auto s : sets) out.push_back(names_of(s, ctx));
  return out;
}

Json header(const char* kind, const VariableContext& ctx) {
  Json out;
  out["kind"] = kind;
  out["vars"] = ctx.names();
  return out;
}

Json big_number(const BigInt& value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) return Json(static_cast<std::uint64_t>(value));
  return Json(value.str());
}

void render_ideal_node(const IdealCertificate& node, const VariableContext& ctx, const std::string& indent,
                       const std::string& label, std::string& out) {
  if (node.is_leaf()) {
    out += indent + label + "leaf " + to_string(node.leaf().generator, ctx) + "\n";
    return;
  }
  const auto& s = node.split();
  out += indent + label + "u = " + to_string(s.shedding, ctx) + "\n";
  render_ideal_node(*s.deletion, ctx, indent + "  ", "I^u: ", out);
  render_ideal_node(*s.link, ctx, indent + "  ", "I_u: ", out);
}

void render_complex_node(const ComplexCertificate& node, const VariableContext& ctx, const std::string& indent,
                         const std::string& label, std::string& out) {
  if (node.is_leaf()) {
    const auto& facet = node.leaf().facet;
    out += indent + label + (facet ? "simplex " + format_set(*facet, ctx) : std::string("void")) + "\n";
    return;
  }
  const auto& s = node.split();
  out += indent + label + "sigma = " + format_set(s.face, ctx) + "\n";
  render_complex_node(*s.deletion, ctx, indent + "  ", "deletion: ", out);
  render_complex_node(*s.link, ctx, indent + "  ", "link: ", out);
}

}  // namespace

const ContextPtr& Document::context() const {
  return std::visit([](const auto& v) -> const ContextPtr& { return v.context(); }, value);
}

Monomial parse_monomial(std::string_view text, const VariableContext& ctx) {
  std::string trimmed = boost::algorithm::trim_copy(std::string(text));
  std::vector<int> e(ctx.size(), 0);
  if (trimmed == "1") return Monomial(std::move(e));
  if (trimmed.empty()) throw PreconditionError("empty monomial");
  std::vector<std::string> factors;
  boost::split(factors, trimmed, boost::is_any_of("*"));
  for (auto& factor : factors) {
    boost::algorithm::trim(factor);
    std::string name = factor;
    int power = 1;
    if (const auto caret = factor.find('^'); caret != std::string::npos) {
      name = boost::algorithm::trim_copy(factor.substr(0, caret));
      const auto digits = boost::algorithm::trim_copy(factor.substr(caret + 1));
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() || power < 0) {
        throw PreconditionError("bad exponent in '" + std::string(text) + "'");
      }
    }
    if (name.empty()) throw PreconditionError("missing variable in '" + std::string(text) + "'");
    const auto idx = ctx.index_of(name);
    if (!idx) throw UnknownVertexError("unknown variable '" + name + "'");
    e[*idx] += power;
  }
  return Monomial(std::move(e));
}

Document parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& err) {
    const auto [line, column] = line_and_column(text, err.byte == 0 ? 0 : err.byte - 1);
    std::string message = err.what();
    if (const auto pos = message.find("syntax error"); pos != std::string::npos) message = message.substr(pos);
    throw ParseError(message, line, column);
  }
  if (!doc.is_object()) shape_error("expected an object");
  const auto& kind = field(doc, "kind");
  const auto& vars = field(doc, "vars");
  if (!kind.is_string()) shape_error("\"kind\" must be a string");
  if (!vars.is_array()) shape_error("\"vars\" must be a list of names");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) shape_error("variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  ContextPtr ctx;
  try {
    ctx = make_context(std::move(names));
  } catch (const Error& err) {
    shape_error(err.what());
  }

  Document out{MonomialIdeal(ctx), {}};
  const auto& k = kind.get_ref<const std::string&>();
  if (k == "ideal") {
    const auto& gens = field(doc, "gens");
    if (!gens.is_array()) shape_error("\"gens\" must be a list");
    std::vector<Monomial> monomials;
    for (const auto& g : gens) monomials.push_back(monomial_of(g, *ctx));
    const auto given = monomials.size();
    auto ideal = MonomialIdeal::generated_by(ctx, std::move(monomials));
    if (ideal.size() != given) {
      out.warnings.push_back("dropped " + std::to_string(given - ideal.size()) + " redundant generator(s)");
    }
    out.value = std::move(ideal);
  } else if (k == "complex") {
    const auto ground = doc.contains("ground") ? set_of(doc.at("ground"), *ctx) : ctx->all();
    auto faces = sets_of(field(doc, "facets"), *ctx);
    for (auto f : faces) {
      if (!f.is_subset_of(ground)) throw UnknownVertexError("a facet leaves the ground set");
    }
    const auto given = faces.size();
    auto complex = SimplicialComplex::generated_by(ctx, ground, std::move(faces));
    if (complex.facets().size() != given) {
      out.warnings.push_back("dropped " + std::to_string(given - complex.facets().size()) + " redundant facet(s)");
    }
    out.value = std::move(complex);
  } else if (k == "clutter") {
    const auto vertices = doc.contains("vertices") ? set_of(doc.at("vertices"), *ctx) : ctx->all();
    auto edges = sets_of(field(doc, "edges"), *ctx);
    for (auto e : edges) {
      if (!e.is_subset_of(vertices)) throw UnknownVertexError("an edge leaves the vertex set");
      if (e.size() < 2) shape_error("clutter edges need at least two vertices");
    }
    const auto given = edges.size();
    auto clutter = Clutter::make(ctx, vertices, std::move(edges));
    if (clutter.edges().size() != given) {
      out.warnings.push_back("dropped " + std::to_string(given - clutter.edges().size()) + " redundant edge(s)");
    }
    out.value = std::move(clutter);
  } else {
    shape_error("unknown kind '" + k + "'");
  }
  return out;
}

Json to_json(const MonomialIdeal& ideal) {
  auto out = header("ideal", *ideal.context());
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_string(g, *ideal.context()));
  out["gens"] = std::move(gens);
  return out;
}

Json to_json(const SimplicialComplex& complex) {
  const auto& ctx = *complex.context();
  auto out = header("complex", ctx);
  if (complex.ground() != ctx.all()) out["ground"] = names_of(complex.ground(), ctx);
  out["facets"] = sets_json(complex.facets(), ctx);
  return out;
}

Json to_json(const Clutter& clutter) {
  const auto& ctx = *clutter.context();
  auto out = header("clutter", ctx);
  if (clutter.vertices() != ctx.all()) out["vertices"] = names_of(clutter.vertices(), ctx);
  out["edges"] = sets_json(clutter.edges(), ctx);
  return out;
}

Json to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [ij, value] : table.entries()) {
    entries.push_back({{"i", ij.first}, {"j", ij.second}, {"value", big_number(value)}});
  }
  Json totals = Json::array();
  for (const auto& t : table.totals()) totals.push_back(big_number(t));
  return {{"entries", std::move(entries)}, {"totals", std::move(totals)}, {"minimal_source", table.minimal_source()}};
}

Json to_json(const IdealCertificate& certificate, const VariableContext& ctx) {
  if (certificate.is_leaf()) return {{"kind", "leaf"}, {"generator", to_string(certificate.leaf().generator, ctx)}};
  const auto& s = certificate.split();
  return {{"kind", "shed"},
          {"u", to_string(s.shedding, ctx)},
          {"children", {to_json(*s.deletion, ctx), to_json(*s.link, ctx)}}};
}

Json to_json(const ComplexCertificate& certificate, const VariableContext& ctx) {
  if (certificate.is_leaf()) {
    const auto& facet = certificate.leaf().facet;
    if (!facet) return {{"kind", "void"}};
    return {{"kind", "simplex"}, {"facet", names_of(*facet, ctx)}};
  }
  const auto& s = certificate.split();
  return {{"kind", "shed"},
          {"face", names_of(s.face, ctx)},
          {"children", {to_json(*s.deletion, ctx), to_json(*s.link, ctx)}}};
}

Json to_json(const MinorTrace& trace, const VariableContext& ctx) {
  Json out = Json::array();
  for (const auto& step : trace) {
    out.push_back({{"op", step.kind == MinorStep::Kind::Delete ? "delete" : "contract"},
                   {"vertex", ctx.name(step.vertex)}});
  }
  return out;
}

std::string render(const IdealCertificate& certificate, const VariableContext& ctx) {
  std::string out;
  render_ideal_node(certificate, ctx, "", "", out);
  return out;
}

std::string render(const ComplexCertificate& certificate, const VariableContext& ctx) {
  std::string out;
  render_complex_node(certificate, ctx, "", "", out);
  return out;
}

}  // namespace kdecomp
