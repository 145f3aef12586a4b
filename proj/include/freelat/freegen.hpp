#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "freelat/engine.hpp"

namespace freelat {

// Outcome of a free-generation check. On failure `witness` names the
// offending member h and the bound it violates: either
// h <= join(Y \ {h}) or meet(Y \ {h}) <= h. Semantically equal members
// are reported as index pairs in `collisions` (the criterion is about
// sets, so a repeated element also fails).
struct FreegenReport {
  struct Witness {
    enum class Side { JoinBound, MeetBound };
    Term element;
    Side side;
    Term bound;
  };

  bool verdict = false;
  std::optional<Witness> witness;  // present iff verdict is false
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
};

// Decides whether `ys` freely generates a sublattice: members must be
// pairwise distinct elements, and no member may lie under the join (or
// over the meet) of the remaining ones. Testing only the maximal
// complement Y \ {h} covers every subset Z not containing h, because
// the join only grows with the joinand set. A singleton always
// generates freely.
FreegenReport freely_generates(Engine& engine, std::span<const Term> ys);

}  // namespace freelat
