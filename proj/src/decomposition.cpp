#include "kdecomp/decomposition.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "kdecomp/errors.hpp"

namespace kdecomp {

namespace {

struct BudgetExhausted {};

// [u, M] = 1 without the u = 1 check.
bool matches_unchecked(const Monomial& u, const Monomial& m) {
  for (std::size_t i = 0; i < u.arity(); ++i) {
    if (u[i] != 0 && m[i] >= u[i]) return false;
  }
  return true;
}

// M_j : M_i == x_l
bool colon_is_variable(const Monomial& mj, const Monomial& mi, std::size_t l) {
  for (std::size_t t = 0; t < mj.arity(); ++t) {
    const int c = std::max(mj[t] - mi[t], 0);
    if (c != (t == l ? 1 : 0)) return false;
  }
  return true;
}

struct RawSplit {
  std::vector<Monomial> deletion;
  std::vector<Monomial> link;
};

RawSplit split_generators(std::span<const Monomial> gens, const Monomial& u) {
  RawSplit out;
  for (const auto& m : gens) {
    (matches_unchecked(u, m) ? out.link : out.deletion).push_back(m);
  }
  return out;
}

bool shedding_condition(const RawSplit& s, const Monomial& u) {
  if (s.link.empty() || s.deletion.empty()) return false;
  const auto supp = support(u);
  for (const auto& mi : s.link) {
    for (auto l : supp) {
      const bool found = std::any_of(s.deletion.begin(), s.deletion.end(),
                                     [&](const Monomial& mj) { return colon_is_variable(mj, mi, l); });
      if (!found) return false;
    }
  }
  return true;
}

// All size-`size` subsets of `pool`, in lexicographic order of their sorted
// element lists.
std::vector<VertexSet> combinations(VertexSet pool, std::size_t size) {
  std::vector<std::size_t> items(pool.begin(), pool.end());
  std::vector<VertexSet> out;
  if (size > items.size()) return out;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (auto i : idx) s = s.with(items[i]);
    out.push_back(s);
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == items.size() - size + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

std::size_t support_bound(int k, std::size_t available) {
  if (k < 0) return available;
  return std::min<std::size_t>(static_cast<std::size_t>(k) + 1, available);
}

// Candidate shedding monomials for `gens` in commit order.
std::vector<Monomial> candidate_monomials(const std::vector<Monomial>& gens, int k) {
  const std::size_t n = gens.front().arity();
  std::vector<std::vector<int>> exponents(n);
  VertexSet active;
  for (std::size_t i = 0; i < n; ++i) {
    std::set<int> seen;
    for (const auto& g : gens) {
      if (g[i] > 0) seen.insert(g[i]);
    }
    exponents[i].assign(seen.begin(), seen.end());
    if (!seen.empty()) active = active.with(i);
  }
  std::vector<Monomial> out;
  const auto max_size = support_bound(k, active.size());
  for (std::size_t size = 1; size <= max_size; ++size) {
    for (auto supp : combinations(active, size)) {
      std::vector<std::size_t> vars(supp.begin(), supp.end());
      std::vector<std::size_t> pick(vars.size(), 0);
      while (true) {
        std::vector<int> e(n, 0);
        for (std::size_t t = 0; t < vars.size(); ++t) e[vars[t]] = exponents[vars[t]][pick[t]];
        out.emplace_back(std::move(e));
        // Odometer, last variable fastest: ascending lex on exponent vectors.
        std::size_t t = vars.size();
        while (t > 0 && pick[t - 1] + 1 == exponents[vars[t - 1]].size()) {
          pick[t - 1] = 0;
          --t;
        }
        if (t == 0) break;
        ++pick[t - 1];
      }
    }
  }
  return out;
}

std::vector<VertexSet> candidate_faces(const SimplicialComplex& complex, int k) {
  std::unordered_set<VertexSet> seen;
  for (auto f : complex.facets()) {
    const auto max_size = support_bound(k, f.size());
    for (std::size_t size = 1; size <= max_size; ++size) {
      for (auto s : combinations(f, size)) seen.insert(s);
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  sort_shortlex(out);
  return out;
}

struct ComplexKey {
  VertexSet ground;
  std::vector<VertexSet> facets;
  friend bool operator==(const ComplexKey&, const ComplexKey&) = default;
};

struct ComplexKeyHash {
  std::size_t operator()(const ComplexKey& key) const noexcept {
    std::size_t seed = std::hash<VertexSet>{}(key.ground);
    for (auto f : key.facets) boost::hash_combine(seed, f.mask());
    return seed;
  }
};

class ComplexSearch {
 public:
  explicit ComplexSearch(SearchOptions options) : options_(options) {}

  ComplexCertificatePtr solve(const SimplicialComplex& complex) {
    if (complex.facets().size() <= 1) {
      ComplexCertificate::Leaf leaf;
      if (!complex.is_void()) leaf.facet = complex.facets().front();
      return std::make_shared<const ComplexCertificate>(std::move(leaf));
    }
    ComplexKey key{complex.ground(), complex.facets()};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++nodes_ > options_.node_limit) throw BudgetExhausted{};

    ComplexCertificatePtr result;
    for (auto face : candidate_faces(complex, options_.k)) {
      if (!is_shedding_face(complex, face)) continue;
      auto del = solve(delete_face(complex, face));
      if (!del) continue;
      auto lk = solve(link(complex, face));
      if (!lk) continue;
      result = std::make_shared<const ComplexCertificate>(ComplexCertificate::Split{face, del, lk});
      break;
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  SearchOptions options_;
  std::unordered_map<ComplexKey, ComplexCertificatePtr, ComplexKeyHash> memo_;
  std::size_t nodes_ = 0;
};

std::vector<Monomial> verify_ideal_node(const IdealCertificate& cert, int k) {
  if (cert.is_leaf()) {
    if (cert.leaf().generator.is_one()) throw InvalidCertificateError("leaf generator is 1");
    return {cert.leaf().generator};
  }
  const auto& node = cert.split();
  if (!node.deletion || !node.link) throw InvalidCertificateError("split node is missing a child");
  auto del = verify_ideal_node(*node.deletion, k);
  auto lk = verify_ideal_node(*node.link, k);
  const auto& u = node.shedding;
  if (u.is_one()) throw InvalidCertificateError("shedding monomial is 1");
  const auto m = support(u).size();
  if (k >= 0 && m > static_cast<std::size_t>(k) + 1) {
    throw InvalidCertificateError("shedding monomial support exceeds k + 1");
  }
  std::vector<Monomial> all = del;
  all.insert(all.end(), lk.begin(), lk.end());
  if (minimal_monomials(all).size() != all.size()) {
    throw InvalidCertificateError("leaves are not a minimal generating set");
  }
  for (const auto& g : del) {
    if (matches_unchecked(u, g)) throw InvalidCertificateError("deletion subtree holds a generator of I_u");
  }
  for (const auto& g : lk) {
    if (!matches_unchecked(u, g)) throw InvalidCertificateError("link subtree holds a generator of I^u");
  }
  if (!shedding_condition(RawSplit{del, lk}, u)) throw InvalidCertificateError("u is not a shedding monomial");
  return all;
}

}  // namespace

bool matches(const Monomial& u, const Monomial& m) {
  if (u.arity() != m.arity()) throw ContextMismatch("monomials have different numbers of variables");
  if (u.is_one()) throw PreconditionError("[u, M] is vacuous for u = 1");
  return matches_unchecked(u, m);
}

IdealSplit split(const MonomialIdeal& ideal, const Monomial& u) {
  if (u.arity() != ideal.arity()) throw ContextMismatch("u does not match the ideal's context");
  if (u.is_one()) throw PreconditionError("cannot split by u = 1");
  auto raw = split_generators(ideal.generators(), u);
  return {MonomialIdeal::from_minimal(ideal.context(), std::move(raw.deletion)),
          MonomialIdeal::from_minimal(ideal.context(), std::move(raw.link))};
}

bool is_shedding_monomial(std::span<const Monomial> generators, const Monomial& u) {
  if (u.is_one()) throw PreconditionError("u = 1 cannot be a shedding monomial");
  for (const auto& g : generators) {
    if (g.arity() != u.arity()) throw ContextMismatch("u does not match the generators' context");
  }
  return shedding_condition(split_generators(generators, u), u);
}

bool is_shedding_monomial(const MonomialIdeal& ideal, const Monomial& u) {
  return is_shedding_monomial(ideal.generators(), u);
}

std::size_t IdealCertificate::leaf_count() const {
  if (is_leaf()) return 1;
  return split().deletion->leaf_count() + split().link->leaf_count();
}

std::vector<Monomial> IdealCertificate::generators() const {
  if (is_leaf()) return {leaf().generator};
  auto out = split().deletion->generators();
  auto rest = split().link->generators();
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::size_t IdealCertificate::max_support() const {
  if (is_leaf()) return 0;
  return std::max({support(split().shedding).size(), split().deletion->max_support(), split().link->max_support()});
}

bool operator==(const ComplexCertificate& a, const ComplexCertificate& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.leaf().facet == b.leaf().facet;
  return a.split().face == b.split().face && *a.split().deletion == *b.split().deletion &&
         *a.split().link == *b.split().link;
}

std::size_t IdealSearch::KeyHash::operator()(const std::vector<Monomial>& gens) const noexcept {
  std::size_t seed = gens.size();
  for (const auto& g : gens) boost::hash_combine(seed, MonomialHash{}(g));
  return seed;
}

IdealCertificatePtr IdealSearch::solve(const std::vector<Monomial>& gens) {
  if (gens.size() == 1) return std::make_shared<const IdealCertificate>(IdealCertificate::Leaf{gens.front()});
  if (auto it = memo_.find(gens); it != memo_.end()) return it->second;
  if (++nodes_ > options_.node_limit) throw BudgetExhausted{};

  IdealCertificatePtr result;
  for (const auto& u : candidate_monomials(gens, options_.k)) {
    auto parts = split_generators(gens, u);
    if (parts.deletion.empty() || parts.link.empty()) continue;
    if (!shedding_condition(parts, u)) continue;
    auto del = solve(parts.deletion);
    if (!del) continue;
    auto lk = solve(parts.link);
    if (!lk) continue;
    result = std::make_shared<const IdealCertificate>(IdealCertificate::Split{u, del, lk});
    break;
  }
  memo_.emplace(gens, result);
  return result;
}

IdealDecision IdealSearch::decide(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ConventionError("k-decomposability is not defined for the zero ideal");
  nodes_ = 0;
  IdealDecision out;
  try {
    std::vector<Monomial> gens(ideal.generators().begin(), ideal.generators().end());
    out.certificate = solve(gens);
    out.verdict = out.certificate ? Verdict::Yes : Verdict::No;
  } catch (const BudgetExhausted&) {
    out.verdict = Verdict::Undecided;
    out.certificate.reset();
  }
  out.nodes = nodes_;
  return out;
}

IdealDecision k_decomposable_ideal(const MonomialIdeal& ideal, SearchOptions options) {
  return IdealSearch(options).decide(ideal);
}

bool is_shedding_face(const SimplicialComplex& complex, VertexSet face) {
  if (face.empty()) throw PreconditionError("a shedding face must be nonempty");
  if (!complex.contains_face(face)) throw NotAFaceError("candidate shedding face is not a face");
  // The exchange property passes from a face to all of its subfaces, so it
  // suffices to check the facets that contain sigma.
  const auto ground = complex.ground();
  for (auto tau : complex.facets()) {
    if (!face.is_subset_of(tau)) continue;
    for (auto v : face) {
      bool exchanged = false;
      for (auto w : ground - tau) {
        if (complex.contains_face(tau.with(w).without(v))) {
          exchanged = true;
          break;
        }
      }
      if (!exchanged) return false;
    }
  }
  return true;
}

ComplexCertificatePtr complex_certificate_from_ideal(const IdealCertificate& certificate, VertexSet ground) {
  if (certificate.is_leaf()) {
    return std::make_shared<const ComplexCertificate>(
        ComplexCertificate::Leaf{ground - support(certificate.leaf().generator)});
  }
  const auto& node = certificate.split();
  const auto face = support(node.shedding);
  return std::make_shared<const ComplexCertificate>(
      ComplexCertificate::Split{face, complex_certificate_from_ideal(*node.deletion, ground),
                                complex_certificate_from_ideal(*node.link, ground - face)});
}

ComplexDecision k_decomposable_complex(const SimplicialComplex& complex, SearchOptions options, SearchMode mode) {
  ComplexDecision out;
  if (mode == SearchMode::Direct) {
    ComplexSearch search(options);
    try {
      out.certificate = search.solve(complex);
      out.verdict = out.certificate ? Verdict::Yes : Verdict::No;
    } catch (const BudgetExhausted&) {
      out.verdict = Verdict::Undecided;
    }
    out.nodes = search.nodes();
    return out;
  }
  if (complex.facets().size() <= 1) {
    ComplexCertificate::Leaf leaf;
    if (!complex.is_void()) leaf.facet = complex.facets().front();
    out.verdict = Verdict::Yes;
    out.certificate = std::make_shared<const ComplexCertificate>(std::move(leaf));
    return out;
  }
  auto ideal_decision = k_decomposable_ideal(facet_complement_ideal(complex), options);
  out.verdict = ideal_decision.verdict;
  out.nodes = ideal_decision.nodes;
  if (ideal_decision.certificate) {
    out.certificate = complex_certificate_from_ideal(*ideal_decision.certificate, complex.ground());
  }
  return out;
}

std::vector<Monomial> verify_certificate(const IdealCertificate& certificate, int k) {
  return verify_ideal_node(certificate, k);
}

void verify_certificate(const IdealCertificate& certificate, const MonomialIdeal& ideal, int k) {
  auto gens = verify_ideal_node(certificate, k);
  std::sort(gens.begin(), gens.end(), term_order_greater);
  if (!std::equal(gens.begin(), gens.end(), ideal.generators().begin(), ideal.generators().end())) {
    throw InvalidCertificateError("certificate leaves differ from G(I)");
  }
}

void verify_certificate(const ComplexCertificate& certificate, const SimplicialComplex& complex, int k) {
  if (certificate.is_leaf()) {
    const auto& facet = certificate.leaf().facet;
    const bool ok = facet ? (complex.facets().size() == 1 && complex.facets().front() == *facet) : complex.is_void();
    if (!ok) throw InvalidCertificateError("leaf does not match the complex " + to_string(complex));
    return;
  }
  const auto& node = certificate.split();
  if (!node.deletion || !node.link) throw InvalidCertificateError("split node is missing a child");
  if (node.face.empty() || !complex.contains_face(node.face)) {
    throw InvalidCertificateError("split face is not a nonempty face of the complex");
  }
  if (k >= 0 && node.face.size() > static_cast<std::size_t>(k) + 1) {
    throw InvalidCertificateError("shedding face has dimension above k");
  }
  if (!is_shedding_face(complex, node.face)) throw InvalidCertificateError("face is not a shedding face");
  verify_certificate(*node.deletion, delete_face(complex, node.face), k);
  verify_certificate(*node.link, link(complex, node.face), k);
}

}  // namespace kdecomp
