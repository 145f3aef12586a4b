#include "freelat/construct.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "freelat/symmetry.hpp"

namespace freelat {

namespace {

void require_n3(const TermStore& s, const char* what) {
  if (s.generator_count() < 3)
    throw std::invalid_argument(std::string(what) + " needs at least 3 generators");
}

// All p_k^(r) for k <= j, built bottom-up so shared subterms intern once.
std::vector<std::vector<Term>> p_tower(TermStore& s, int j) {
  const int n = s.generator_count();
  std::vector<std::vector<Term>> p(static_cast<std::size_t>(j) + 1,
                                   std::vector<Term>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r) p[0][static_cast<std::size_t>(r)] = s.var(r);
  for (int k = 1; k <= j; ++k)
    for (int r = 0; r < n; ++r) {
      std::vector<Term> joinands{s.var(r)};
      for (int i1 = 0; i1 < n; ++i1) {
        if (i1 == r) continue;
        for (int i2 = i1 + 1; i2 < n; ++i2) {
          if (i2 == r) continue;
          joinands.push_back(s.meet({p[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i1)],
                                     p[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i2)]}));
        }
      }
      p[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] = s.join(joinands);
    }
  return p;
}

}  // namespace

Term make_p(TermStore& store, int i, int j) {
  require_n3(store, "make_p");
  if (i < 0 || i >= store.generator_count())
    throw std::invalid_argument("make_p: generator index out of range");
  if (j < 0) throw std::invalid_argument("make_p: negative depth index");
  return p_tower(store, j)[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
}

Term make_m(TermStore& store, int j) {
  require_n3(store, "make_m");
  if (j < 0) throw std::invalid_argument("make_m: negative depth index");
  const int n = store.generator_count();
  const auto p = p_tower(store, j);
  std::vector<Term> joinands;
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = i1 + 1; i2 < n; ++i2)
      joinands.push_back(store.meet({p[static_cast<std::size_t>(j)][static_cast<std::size_t>(i1)],
                                     p[static_cast<std::size_t>(j)][static_cast<std::size_t>(i2)]}));
  return store.join(joinands);
}

Term make_s(TermStore& store) {
  require_n3(store, "make_s");
  const int n = store.generator_count();
  std::vector<Term> joinands;
  for (int i = 0; i < n; ++i) {
    std::vector<Term> meetands;
    for (int k = 0; k < n; ++k)
      if (k != i) meetands.push_back(store.var(k));
    joinands.push_back(store.meet(meetands));
  }
  return store.join(joinands);
}

std::pair<Term, Term> make_ab(TermStore& store) {
  require_n3(store, "make_ab");
  Term a = store.join({make_m(store, 1), dual(make_m(store, 3))});
  Term b = store.join({make_m(store, 2), dual(make_m(store, 4))});
  return {a, b};
}

std::pair<Term, Term> make_ab_variant(TermStore& store) {
  if (store.generator_count() != 3)
    throw std::invalid_argument("make_ab_variant is defined for exactly 3 generators");
  Term a = store.join({make_m(store, 5), dual(make_m(store, 8))});
  Term b = store.join({make_m(store, 7), dual(make_m(store, 9))});
  return {a, b};
}

PrimedTerms make_primed(TermStore& s) {
  if (s.generator_count() != 3)
    throw std::invalid_argument("make_primed is defined for exactly 3 generators");
  const Term x = s.var(0), y = s.var(1), z = s.var(2);
  const Term a0 = sym_join(s.meet({s.join({s.meet({s.join({x, y}), z}), y}),
                                   s.join({s.meet({s.join({y, x}), z}), x})}));
  const Term aprime = sym_meet(s.join({s.meet({s.join({s.meet({a0, x}), y}), z}),
                                       s.meet({s.join({s.meet({z, x}), y}), a0})}));
  const Term bprime =
      sym_meet(s.join({s.meet({s.join({s.meet({s.join({x, y}), s.join({x, z})}), aprime}), x}),
                       s.meet({s.join({s.meet({x, a0}), y}), z})}));
  return {a0, aprime, bprime};
}

}  // namespace freelat
