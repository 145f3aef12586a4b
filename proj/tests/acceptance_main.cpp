// Acceptance suite: one pass/fail line per criterion, nonzero exit if
// any fails. Budgets are wall-clock and part of the criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "freelat/construct.hpp"
#include "freelat/engine.hpp"
#include "freelat/freegen.hpp"
#include "freelat/oracle.hpp"
#include "freelat/symmetry.hpp"
#include "freelat/term.hpp"
#include "support/naive_leq.hpp"
#include "support/random_terms.hpp"

using namespace freelat;
using freelat::testing::TermGen;

namespace {

struct Check {
  std::ostringstream log;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << (log.str().empty() ? "" : "; ") << what;
    }
  }
};

double run_ms(const std::function<void(Check&)>& body, Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  body(c);
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ---- criterion bodies ----

void term_sizes(Check& c) {
  TermStore s(3);
  const auto [a, b] = make_ab(s);
  c.require(tno(a) == 108, "tno(a) != 108");
  c.require(tno(b) == 228, "tno(b) != 228");
  c.require(tno(a) + tno(dual(a)) + tno(b) + tno(dual(b)) == 672, "quad total != 672");
  const PrimedTerms pr = make_primed(s);
  c.require(tno(pr.aprime) == 612, "tno(a') != 612");
  c.require(tno(pr.bprime) == 4008, "tno(b') != 4008");
  c.require(tno(pr.aprime) + tno(dual(pr.aprime)) + tno(pr.bprime) + tno(dual(pr.bprime)) ==
                9240,
            "primed quad total != 9240");
}

void five_element_set(int n, Check& c) {
  TermStore s(n);
  Engine e(s);
  const auto [a, b] = make_ab(s);
  const Term ys[] = {a, dual(a), b, dual(b), s.var(0)};
  c.require(freely_generates(e, ys).verdict,
            "{a, dual a, b, dual b, x0} must freely generate at n = " + std::to_string(n));
}

void variant(Check& c) {
  TermStore s(3);
  Engine e(s);
  const auto [av, bv] = make_ab_variant(s);
  const Term ys[] = {av, dual(av), bv, dual(bv), s.var(0)};
  c.require(freely_generates(e, ys).verdict, "the (m_5, m_7, m_8, m_9) set must freely generate");
}

void primed(Check& c) {
  TermStore s(3);
  Engine e(s);
  const PrimedTerms pr = make_primed(s);
  const Term four[] = {pr.aprime, dual(pr.aprime), pr.bprime, dual(pr.bprime)};
  c.require(freely_generates(e, four).verdict, "the primed quadruple must freely generate");
  const Term five[] = {pr.aprime, dual(pr.aprime), pr.bprime, dual(pr.bprime), s.var(0)};
  // Expected non-free here; the engine, the unmemoized recursion and an
  // out-of-tree reimplementation all find the set free, so this stays red.
  c.require(!freely_generates(e, five).verdict,
            "expected {a', dual a', b', dual b', x} to be non-free, but every "
            "independent check finds it freely generating (the non-free variant "
            "swaps b' for the plain b; see tests and the primed.fl script)");
}

void order_facts(Check& c) {
  for (int n : {3, 4}) {
    TermStore s(n);
    Engine e(s);
    const std::string at = " at n = " + std::to_string(n);
    for (int j = 0; j <= 4; ++j) {
      c.require(e.leq(make_m(s, j), make_m(s, j + 1)) && !e.leq(make_m(s, j + 1), make_m(s, j)),
                "m chain must be strict" + at);
      for (int i = 0; i < n; ++i)
        c.require(e.leq(make_p(s, i, j), make_p(s, i, j + 1)) &&
                      !e.leq(make_p(s, i, j + 1), make_p(s, i, j)),
                  "p chain must be strict" + at);
    }
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        c.require(!e.leq(make_m(s, i), dual(make_m(s, j))) &&
                      !e.leq(dual(make_m(s, j)), make_m(s, i)),
                  "m_i and dual m_j must be incomparable" + at);

    const auto [a, b] = make_ab(s);
    const Term x0 = s.var(0), ad = dual(a), bd = dual(b);
    const Term lhs[] = {x0, a, b, ad, bd};
    const Term rhs[] = {s.join({a, ad, b, bd}), s.join({x0, ad, b, bd}), s.join({x0, a, ad, bd}),
                        s.join({x0, a, b, bd}), s.join({x0, a, ad, b})};
    for (int k = 0; k < 5; ++k) {
      c.require(!e.leq(lhs[k], rhs[k]), "(ineq" + std::to_string(k + 1) + ") must fail" + at);
      c.require(!e.leq(dual(rhs[k]), dual(lhs[k])),
                "dual of (ineq" + std::to_string(k + 1) + ") must fail" + at);
    }
  }
  TermStore s3(3);
  Engine e3(s3);
  c.require(e3.semantic_eq(make_m(s3, 0), make_s(s3)), "m_0 = s must hold at n = 3");
  c.require(!e3.leq(make_m(s3, 1), dual(make_m(s3, 1))), "m_1 <= dual m_1 must fail at n = 3");
  TermStore s4(4);
  Engine e4(s4);
  c.require(!e4.leq(make_m(s4, 0), dual(make_m(s4, 0))), "m_0 <= dual m_0 must fail at n = 4");
}

void symmetry_suite(Check& c) {
  for (int n : {3, 4}) {
    TermStore s(n);
    Engine e(s);
    const std::string at = " at n = " + std::to_string(n);
    for (int j = 0; j <= 4; ++j)
      c.require(is_symmetric(e, make_m(s, j)), "m_j must be symmetric" + at);
    const auto [a, b] = make_ab(s);
    for (Term t : {a, b, dual(a), dual(b)})
      c.require(is_symmetric(e, t), "the quadruple must be symmetric" + at);
    if (n == 3) {
      const Term quad[] = {a, dual(a), b, dual(b)};
      c.require(selfdual_closed(e, quad), "the quadruple must be selfdually closed");
      for (int j = 1; j <= 4; ++j)
        c.require(is_nu(make_m(s, j)), "m_j must be near-unanimity at n = 3");
      c.require(is_nu(make_s(s)), "s must be near-unanimity");
      const PrimedTerms pr = make_primed(s);
      c.require(is_symmetric(e, pr.aprime), "a' must be symmetric");
      c.require(is_symmetric(e, pr.bprime), "b' must be symmetric");
    }
  }
}

void oracle_coupling(Check& c) {
  TermStore s(3);
  const FiniteLattice lattices[] = {FiniteLattice::two(), FiniteLattice::mn(3),
                                    FiniteLattice::mn(4), FiniteLattice::n5()};
  TermGen gen(s, 0x09ac1e);
  Engine e(s);
  int refuted = 0;
  for (int it = 0; it < 10000; ++it) {
    const Term u = gen(5), v = gen(5);
    const FiniteLattice& L = lattices[gen.pick(0, 3)];
    Assignment f(3);
    for (auto& value : f) value = gen.pick(0, L.size() - 1);
    if (refutes(L, f, u, v)) {
      ++refuted;
      if (e.leq(u, v)) {
        c.require(false, "a finite refutation contradicted the engine");
        return;
      }
    }
  }
  c.require(refuted > 1000, "too few refutations to be meaningful");

  for (int n : {3, 4}) {
    TermStore sn(n);
    const FiniteLattice mn = FiniteLattice::mn(n);
    Assignment f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) f[static_cast<std::size_t>(i)] = i + 1;
    for (int j = 0; j <= 4; ++j) {
      for (int i = 0; i < n; ++i)
        c.require(eval_in_lattice(mn, make_p(sn, i, j), f) == i + 1,
                  "eta(p_j^(i)) must be the atom a_i");
      c.require(eval_in_lattice(mn, make_m(sn, j), f) == mn.bottom(), "eta(m_j) must be 0");
    }
  }
}

void metamorphic(Check& c) {
  TermStore s(3);
  TermGen gen(s, 0x8f2c);
  {
    std::optional<Engine> e;
    e.emplace(s);
    int trans = 0;
    for (int it = 0; it < 10000; ++it) {
      if (it % 500 == 499) e.emplace(s);  // keep the memo bounded across fresh random terms
      const Term u = gen(5), v = gen(5);
      const bool r = e->leq(u, v);
      if (r != e->leq(dual(v), dual(u))) {
        c.require(false, "duality invariance failed");
        break;
      }
      const Permutation sigma = gen.random_perm();
      if (r != e->leq(apply_perm(sigma, u), apply_perm(sigma, v))) {
        c.require(false, "automorphism invariance failed");
        break;
      }
      if (!e->leq(u, u)) {
        c.require(false, "reflexivity failed");
        break;
      }
      const Term w = gen(5);
      if (e->leq(u, v) && e->leq(v, w)) {
        ++trans;
        if (!e->leq(u, w)) {
          c.require(false, "transitivity failed");
          break;
        }
      }
      if (r && e->leq(v, u) && !e->semantic_eq(u, v)) {
        c.require(false, "antisymmetry up to semantic_eq failed");
        break;
      }
    }
    c.require(trans > 0, "no transitivity premises sampled");
  }

  // exhaustive differential check against the naive recursion
  TermStore pool_store(3);
  Engine pe(pool_store);
  const auto pool = freelat::testing::binary_pool(pool_store, 3);
  c.require(pool.size() == 885, "depth-3 pool must hold 885 distinct terms");
  for (Term u : pool)
    for (Term v : pool)
      if (pe.leq(u, v) != freelat::testing::naive_leq(u, v)) {
        c.require(false, "engine disagrees with the naive recursion on " + format_term(u) +
                             " vs " + format_term(v));
        return;
      }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_ms;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "generating-set term sizes", 100, term_sizes},
      {2, "five-element set freely generates at n = 3 and n = 4", 10000,
       [](Check& c) {
         for (int n : {3, 4}) {
           Check sub;
           const double ms = run_ms([n](Check& cc) { five_element_set(n, cc); }, sub);
           if (!sub.ok) c.require(false, sub.log.str());
           c.require(ms <= 1000, "n = " + std::to_string(n) + " over its 1 s budget");
         }
       }},
      {3, "(m_5, m_7, m_8, m_9) variant freely generates at n = 3", 5000, variant},
      {4, "primed quadruple free, primed quadruple plus x not free", 5000, primed},
      {5, "chains, incomparabilities and the five failing inequalities", 10000, order_facts},
      {6, "symmetry, near-unanimity and selfdual closure", 60000, symmetry_suite},
      {7, "finite-lattice refutations respected; eta identities", 30000, oracle_coupling},
      {8, "metamorphic laws and exhaustive differential check", 60000, metamorphic},
  };

  bool all_ok = true;
  for (const auto& cr : criteria) {
    Check c;
    const double ms = run_ms(cr.body, c);
    if (ms > cr.budget_ms) c.require(false, "over budget");
    all_ok = all_ok && c.ok;
    std::printf("%s  criterion %d: %s (%.1f ms, budget %.0f ms)%s%s\n",
                c.ok ? "PASS" : "FAIL", cr.id, cr.title, ms, cr.budget_ms,
                c.ok ? "" : " — ", c.ok ? "" : c.log.str().c_str());
  }
  return all_ok ? 0 : 1;
}
