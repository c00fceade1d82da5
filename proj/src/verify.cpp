#include "kdecomp/verify.hpp"

#include <array>
#include <sstream>

#include "kdecomp/clutters.hpp"
#include "kdecomp/decomposition.hpp"
#include "kdecomp/errors.hpp"
#include "kdecomp/resolution.hpp"
#include "kdecomp/sampling.hpp"

namespace kdecomp {

namespace {

constexpr std::array kPropertyNames{"terao", "ha", "regp", "lemma-h", "three-way", "chordal"};

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Each check returns whether the instance was admissible and appends
/// counterexample descriptions on failure.
using Failures = std::vector<std::string>;

bool check_terao(Rng& rng, Failures& out) {
  const auto ideal = random_squarefree_ideal(rng, draw(rng, 1, 7), 8);
  const auto sides = terao_sides(ideal);
  if (!sides.holds()) {
    out.push_back(to_string(ideal) + ": pd of the dual " + std::to_string(sides.pd_of_dual) + ", reg(R/I) " +
                  std::to_string(sides.reg_of_quotient));
  }
  return true;
}

bool check_ha(Rng& rng, Failures& out) {
  const auto complex = random_complex(rng, draw(rng, 1, 6), 5);
  for (auto face : complex.faces()) {
    if (face.empty()) continue;
    const auto sides = ha_sides(complex, face);
    if (!sides.holds()) {
      out.push_back(to_string(complex) + " at " + format_set(face, *complex.context()) + ": reg " +
                    std::to_string(sides.reg) + " > " + std::to_string(sides.rhs()));
    }
  }
  return true;
}

bool check_regp(Rng& rng, Failures& out) {
  const auto complex = random_complex(rng, draw(rng, 1, 7), 5);
  const auto decision = k_decomposable_complex(complex, {.k = 0});
  if (decision.verdict != Verdict::Yes) return false;
  const auto& ctx = *complex.context();
  const auto expected = complex_invariants(complex);
  const auto got = reg_pd_complex(complex, *decision.certificate);
  if (!(got == expected)) {
    std::ostringstream msg;
    msg << to_string(complex) << ": recursion gives reg " << got.reg << " pd " << got.pd << ", oracle reg "
        << expected.reg << " pd " << expected.pd;
    out.push_back(msg.str());
  }
  if (!decision.certificate->is_leaf()) {
    const auto root = decision.certificate->split().face;
    if (!ha_sides(complex, root).tight()) {
      out.push_back(to_string(complex) + ": bound not tight at shedding face " + format_set(root, ctx));
    }
  }
  const auto ideal = stanley_reisner_ideal(complex);
  if (bight(ideal) != expected.pd) {
    out.push_back(to_string(complex) + ": bight " + std::to_string(bight(ideal)) + " but pd " +
                  std::to_string(expected.pd));
  }
  return true;
}

bool check_lemma_h(Rng& rng, Failures& out) {
  const auto clutter = random_clutter(rng, draw(rng, 2, 6), 5);
  for (auto e : clutter.edges()) {
    for (auto x : e) {
      try {
        lemma_h_ideals(clutter, e, x);
      } catch (const InternalError& err) {
        out.push_back(to_string(clutter) + ": " + err.what());
      }
    }
  }
  return true;
}

bool check_three_way(Rng& rng, Failures& out) {
  const auto ideal = random_ideal(rng, draw(rng, 1, 6), 10, 3);
  const auto decision = k_decomposable_ideal(ideal, {.k = 2});
  if (decision.verdict != Verdict::Yes) return false;
  const auto& cert = *decision.certificate;
  const auto by_order = betti_from_order(ideal, order_from_certificate(cert));
  const auto by_recursion = betti_recursive(cert);
  const auto by_oracle = betti_koszul(ideal);
  if (!(by_order == by_oracle) || !(by_recursion == by_oracle)) {
    out.push_back(to_string(ideal) + ": Betti tables disagree\norder\n" + render(by_order) + "recursive\n" +
                  render(by_recursion) + "oracle\n" + render(by_oracle));
  }
  if (!(pd_reg_from_certificate(cert) == invariants_from_betti(by_oracle))) {
    out.push_back(to_string(ideal) + ": pd/reg from the certificate differ from the oracle");
  }
  return true;
}

bool check_chordal(Rng& rng, Failures& out) {
  const auto n = draw(rng, 2, 7);
  const auto clutter = random_uniform_clutter(rng, n, draw(rng, 2, 3 < n ? 3 : n), 0.5);
  if (is_chordal(clutter).verdict != Verdict::Yes) return false;
  for (auto x : clutter.vertices()) {
    if (!is_simplicial_vertex(clutter, x)) continue;
    for (auto e : clutter.edges_containing(x)) {
      if (e.size() < 2) continue;
      try {
        chordal_reg_bound(clutter, x, e, {}, false);
      } catch (const InternalError& err) {
        out.push_back(err.what());
      }
    }
  }
  return true;
}

}  // namespace

QuotientInvariants complex_invariants(const SimplicialComplex& complex, Field field) {
  return oracle_quotient_invariants(stanley_reisner_ideal(complex), field);
}

HaSides ha_sides(const SimplicialComplex& complex, VertexSet face, Field field) {
  if (face.empty()) throw PreconditionError("the face must be nonempty");
  HaSides s;
  s.reg_link = complex_invariants(link(complex, face), field).reg;
  s.reg = complex_invariants(complex, field).reg;
  s.reg_deletion = complex_invariants(delete_face(complex, face), field).reg;
  s.face_size = static_cast<int>(face.size());
  return s;
}

std::string to_string(Property property) { return kPropertyNames.at(static_cast<std::size_t>(property)); }

std::optional<Property> parse_property(std::string_view name) {
  for (std::size_t i = 0; i < kPropertyNames.size(); ++i) {
    if (name == kPropertyNames[i]) return static_cast<Property>(i);
  }
  return std::nullopt;
}

PropertyReport run_property(Property property, std::uint64_t seed, std::size_t count) {
  PropertyReport report;
  report.property = property;
  report.seed = seed;
  report.requested = count;
  Rng rng(seed);
  const auto max_draws = 200 * count;
  while (report.checked < count && report.sampled < max_draws) {
    ++report.sampled;
    bool admissible = false;
    try {
      switch (property) {
        case Property::Terao: admissible = check_terao(rng, report.counterexamples); break;
        case Property::Ha: admissible = check_ha(rng, report.counterexamples); break;
        case Property::Regp: admissible = check_regp(rng, report.counterexamples); break;
        case Property::LemmaH: admissible = check_lemma_h(rng, report.counterexamples); break;
        case Property::ThreeWay: admissible = check_three_way(rng, report.counterexamples); break;
        case Property::Chordal: admissible = check_chordal(rng, report.counterexamples); break;
      }
    } catch (const BudgetExceededError&) {
      admissible = false;
    } catch (const InternalError& err) {
      report.counterexamples.emplace_back(err.what());
      admissible = true;
    } catch (const InvalidCertificateError& err) {
      report.counterexamples.emplace_back(err.what());
      admissible = true;
    }
    if (admissible) ++report.checked;
  }
  return report;
}

}  // namespace kdecomp
