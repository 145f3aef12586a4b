#pragma once

#include <span>

#include "freelat/engine.hpp"
#include "freelat/term.hpp"

namespace freelat {

// The two standard generators of Sym_n. A term is fixed by every
// permutation of the generators iff it is fixed by these two, which
// turns the symmetry test into two engine queries.
struct SymContext {
  explicit SymContext(int n);

  int n;
  Permutation transposition;  // (0 1)
  Permutation rotation;       // (0 1 ... n-1)
};

// Join (resp. meet) of apply_perm(sigma, t) over all sigma in Sym_n,
// enumerated in lexicographic one-line order. Duplicate images are
// kept, so the result is always an n!-ary node and
// tno(sym_join(t)) == n! * tno(t). Guarded to n <= 6.
Term sym_join(Term t);
Term sym_meet(Term t);

// t is fixed, as a free-lattice element, by every automorphism.
bool is_symmetric(Engine& engine, Term t);
// Same predicate checked against all n! permutations; a debug cross-check
// for the two-generator shortcut.
bool is_symmetric_full(Engine& engine, Term t);

// Near-unanimity: substituting y for any single variable and x for all
// the others collapses t to x in the free lattice on {x, y}.
bool is_nu(Term t);

// Every member's dual is again (semantically) a member of the set.
bool selfdual_closed(Engine& engine, std::span<const Term> terms);

}  // namespace freelat
