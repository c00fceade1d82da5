#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "kdecomp/betti_table.hpp"
#include "kdecomp/clutter.hpp"
#include "kdecomp/clutters.hpp"
#include "kdecomp/decomposition.hpp"
#include "kdecomp/monomial_ideal.hpp"
#include "kdecomp/simplicial_complex.hpp"

namespace kdecomp {

using Json = nlohmann::ordered_json;

/// One parsed input object together with the warnings raised while reading it.
struct Document {
  std::variant<MonomialIdeal, SimplicialComplex, Clutter> value;
  std::vector<std::string> warnings;

  const ContextPtr& context() const;
};

/// "x^2*y", "x*y", "1"; whitespace around factors is ignored.
/// Throws UnknownVertexError for an unknown name and PreconditionError for bad syntax.
Monomial parse_monomial(std::string_view text, const VariableContext& ctx);

/// Reads {"kind": "ideal" | "complex" | "clutter", "vars": [...], ...}.
///   ideal:   "gens": monomial strings or exponent lists
///   complex: "facets": lists of names, optional "ground" (default: all vars)
///   clutter: "edges": lists of names, optional "vertices" (default: all vars)
/// Throws ParseError for malformed JSON (at the last character read),
/// UnknownVertexError, ImproperIdealError for a generator equal to 1, and
/// PreconditionError for documents of the wrong shape.
Document parse_document(std::string_view text);

Json to_json(const MonomialIdeal& ideal);
Json to_json(const SimplicialComplex& complex);
Json to_json(const Clutter& clutter);
Json to_json(const BettiTable& table);
Json to_json(const IdealCertificate& certificate, const VariableContext& ctx);
Json to_json(const ComplexCertificate& certificate, const VariableContext& ctx);
Json to_json(const MinorTrace& trace, const VariableContext& ctx);

/// Indented tree whose root line is "u = ..." (or "sigma = {...}").
std::string render(const IdealCertificate& certificate, const VariableContext& ctx);
std::string render(const ComplexCertificate& certificate, const VariableContext& ctx);

}  // namespace kdecomp
