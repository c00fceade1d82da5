#pragma once

namespace kdecomp {

/// Outcome of a bounded exhaustive search. Undecided means the node budget
/// ran out before the search space was exhausted.
enum class Verdict { Yes, No, Undecided };

constexpr const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Undecided:
      return "undecided";
  }
  return "?";
}

}  // namespace kdecomp
