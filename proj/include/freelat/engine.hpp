#pragma once

#include <cstdint>
#include <unordered_map>

#include "freelat/term.hpp"

namespace freelat {

// Decides u <= v in the free lattice over the store's generators.
// The recursion follows Whitman's rules: joins on the left and meets
// on the right decompose conjunctively, generators are doubly prime,
// and a meet under a join falls to condition (W). Results are memoized
// on (id, id) pairs, which is what makes repeated queries over a
// shared DAG cheap.
//
// One instance is single-writer (queries fill the memo table); several
// engines over the same store may run on different threads as long as
// nobody interns concurrently.
class Engine {
public:
  explicit Engine(TermStore& store) : store_(&store) {}

  TermStore& store() const { return *store_; }

  bool leq(Term u, Term v);
  // Equality as free-lattice elements: mutual leq.
  bool semantic_eq(Term u, Term v);

  std::size_t memo_entries() const { return memo_.size(); }

private:
  enum class State : uint8_t { InProgress, Leq, Nleq };

  bool leq_rec(Term u, Term v);

  TermStore* store_;
  std::unordered_map<uint64_t, State> memo_;
};

}  // namespace freelat
