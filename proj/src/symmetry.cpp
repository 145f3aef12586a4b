#include "freelat/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace freelat {

namespace {

#ifndef NDEBUG
std::size_t closure_size(const Permutation& g1, const Permutation& g2) {
  std::set<std::vector<int>> seen{g1.images(), g2.images()};
  std::vector<Permutation> frontier{g1, g2};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto* g : {&g1, &g2}) {
        Permutation q = g->compose(p);
        if (seen.insert(q.images()).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}
#endif

Term symmetrize(Kind kind, Term t) {
  TermStore& s = *t.store();
  const int n = s.generator_count();
  if (n > 6)
    throw std::invalid_argument("symmetrization over Sym_n is limited to n <= 6");
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 0);
  std::vector<Term> images;
  do {
    images.push_back(apply_perm(Permutation(line), t));
  } while (std::next_permutation(line.begin(), line.end()));
  return kind == Kind::Join ? s.join(images) : s.meet(images);
}

}  // namespace

SymContext::SymContext(int n_)
    : n(n_), transposition(Permutation::transposition(n_, 0, 1)),
      rotation(Permutation::rotation(n_)) {
  // (0 1) and the n-cycle generate Sym_n; cheap to verify while small.
  assert(n > 5 || closure_size(transposition, rotation) == factorial(n));
}

Term sym_join(Term t) { return symmetrize(Kind::Join, t); }
Term sym_meet(Term t) { return symmetrize(Kind::Meet, t); }

bool is_symmetric(Engine& engine, Term t) {
  SymContext ctx(t.store()->generator_count());
  return engine.semantic_eq(t, apply_perm(ctx.transposition, t)) &&
         engine.semantic_eq(t, apply_perm(ctx.rotation, t));
}

bool is_symmetric_full(Engine& engine, Term t) {
  TermStore& s = *t.store();
  const int n = s.generator_count();
  if (n > 6)
    throw std::invalid_argument("full symmetry check is limited to n <= 6");
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 0);
  do {
    if (!engine.semantic_eq(t, apply_perm(Permutation(line), t))) return false;
  } while (std::next_permutation(line.begin(), line.end()));
  return true;
}

bool is_nu(Term t) {
  const int n = t.store()->generator_count();
  TermStore two(2);
  Engine engine(two);
  const Term x = two.var(0), y = two.var(1);
  for (int k = 0; k < n; ++k) {
    std::vector<Term> images(static_cast<std::size_t>(n), x);
    images[static_cast<std::size_t>(k)] = y;
    if (!engine.semantic_eq(substitute(t, images, two), x)) return false;
  }
  return true;
}

bool selfdual_closed(Engine& engine, std::span<const Term> terms) {
  for (Term t : terms) {
    const Term d = dual(t);
    bool found = false;
    for (Term u : terms)
      if (engine.semantic_eq(d, u)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace freelat
