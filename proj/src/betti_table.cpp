#include "kdecomp/betti_table.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "kdecomp/errors.hpp"

namespace kdecomp {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (int t = 1; t <= k; ++t) {
    out *= n - k + t;
    out /= t;
  }
  return out;
}

void BettiTable::add(int i, int j, const BigInt& count) {
  if (i < 0 || j < 0) throw PreconditionError("Betti indices must be nonnegative");
  if (count == 0) return;
  auto& slot = entries_[{i, j}];
  slot += count;
  if (slot == 0) entries_.erase({i, j});
}

BigInt BettiTable::operator()(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> BettiTable::totals() const {
  std::vector<BigInt> out;
  for (const auto& [key, count] : entries_) {
    const auto i = static_cast<std::size_t>(key.first);
    if (out.size() <= i) out.resize(i + 1);
    out[i] += count;
  }
  return out;
}

Invariants invariants_from_betti(const BettiTable& table) {
  if (table.empty()) throw ConventionError("pd and reg are undefined for an empty Betti table");
  if (!table.minimal_source()) throw PreconditionError("Betti table does not come from a minimal resolution");
  Invariants out{-1, std::numeric_limits<int>::min()};
  for (const auto& [key, count] : table.entries()) {
    out.pd = std::max(out.pd, key.first);
    out.reg = std::max(out.reg, key.second - key.first);
  }
  return out;
}

QuotientInvariants quotient_invariants(const Invariants& ideal) { return {ideal.reg - 1, ideal.pd + 1, false}; }

std::string render(const BettiTable& table) {
  if (table.empty()) return "total: 0\n";
  int max_i = 0;
  int min_row = std::numeric_limits<int>::max();
  int max_row = std::numeric_limits<int>::min();
  for (const auto& [key, count] : table.entries()) {
    max_i = std::max(max_i, key.first);
    min_row = std::min(min_row, key.second - key.first);
    max_row = std::max(max_row, key.second - key.first);
  }
  const auto totals = table.totals();
  auto cell = [&](int row, int i) {
    auto v = table(i, row + i);
    return v == 0 ? std::string(".") : v.str();
  };

  std::vector<std::size_t> width(static_cast<std::size_t>(max_i) + 1);
  for (int i = 0; i <= max_i; ++i) {
    auto& w = width[static_cast<std::size_t>(i)];
    w = std::to_string(i).size();
    if (static_cast<std::size_t>(i) < totals.size()) w = std::max(w, totals[static_cast<std::size_t>(i)].str().size());
    for (int row = min_row; row <= max_row; ++row) w = std::max(w, cell(row, i).size());
  }
  std::size_t label = std::string("total:").size();
  for (int row = min_row; row <= max_row; ++row) label = std::max(label, std::to_string(row).size() + 1);

  std::ostringstream out;
  auto pad = [&](const std::string& s, std::size_t w) { out << std::string(w - s.size(), ' ') << s; };
  out << std::string(label, ' ');
  for (int i = 0; i <= max_i; ++i) {
    out << ' ';
    pad(std::to_string(i), width[static_cast<std::size_t>(i)]);
  }
  out << '\n';
  pad("total:", label);
  for (int i = 0; i <= max_i; ++i) {
    out << ' ';
    const auto idx = static_cast<std::size_t>(i);
    pad(idx < totals.size() && totals[idx] != 0 ? totals[idx].str() : ".", width[idx]);
  }
  out << '\n';
  for (int row = min_row; row <= max_row; ++row) {
    pad(std::to_string(row) + ":", label);
    for (int i = 0; i <= max_i; ++i) {
      out << ' ';
      pad(cell(row, i), width[static_cast<std::size_t>(i)]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace kdecomp
