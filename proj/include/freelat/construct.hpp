#pragma once

#include <utility>

#include "freelat/term.hpp"

namespace freelat {

// Literal builders for the named terms: the p/m tower, the atom s of
// the symmetric sublattice, the generating pairs (a, b) and their
// deeper (m_5, m_7, m_8, m_9) variant, and the symmetrized family
// (a0, a', b'). Joinands and meetands are always emitted in ascending
// index order, so every build is reproducible node for node. Nothing
// is simplified: tno of the results is a meaningful size measure.

// p_0^(i) = x_i;
// p_j^(i) = x_i v JOIN_{i1<i2, i1,i2 != i} (p_{j-1}^(i1) ^ p_{j-1}^(i2)).
Term make_p(TermStore& store, int i, int j);

// m_j = JOIN_{i1<i2} (p_j^(i1) ^ p_j^(i2)).
Term make_m(TermStore& store, int j);

// s = JOIN_i MEET_{i' != i} x_{i'}, the atom of the symmetric part.
Term make_s(TermStore& store);

// a = m_1 v dual(m_3),  b = m_2 v dual(m_4).
std::pair<Term, Term> make_ab(TermStore& store);

// The same positional substitution with (m_5, m_7, m_8, m_9):
// a_v = m_5 v dual(m_8), b_v = m_7 v dual(m_9). Defined for exactly
// 3 generators.
std::pair<Term, Term> make_ab_variant(TermStore& store);

struct PrimedTerms {
  Term a0;
  Term aprime;
  Term bprime;
};

// The symmetrized generators over x, y, z (exactly 3 generators):
// a0 = sym_join((((x v y) ^ z) v y) ^ (((y v x) ^ z) v x)) and the
// derived a', b' built with sym_meet on top of a0 and a'.
PrimedTerms make_primed(TermStore& store);

}  // namespace freelat
