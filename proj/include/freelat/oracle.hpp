#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "freelat/term.hpp"

namespace freelat {

// A finite lattice given by explicit join/meet tables, used as a
// refutation oracle: if some assignment of generators separates u from
// v here, u <= v cannot hold in the free lattice. The converse proves
// nothing. Tables are validated exhaustively at construction
// (commutativity, idempotence, absorption, associativity, consistency
// of the two induced orders, existence of bounds).
class FiniteLattice {
public:
  FiniteLattice(std::string name, std::vector<std::string> labels,
                std::vector<std::vector<int>> join_table,
                std::vector<std::vector<int>> meet_table);

  static FiniteLattice two();      // the chain 0 < 1
  static FiniteLattice mn(int n);  // bottom, n pairwise incomparable atoms, top
  static FiniteLattice n5();       // the pentagon

  // Text form: the size k, then the k x k join table, then the k x k
  // meet table, as whitespace-separated element indices.
  static FiniteLattice parse_tables(std::istream& in, std::string name = "custom");
  std::string to_tables() const;

  int size() const { return static_cast<int>(labels_.size()); }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  bool leq(int a, int b) const { return join(a, b) == b; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::string& name() const { return name_; }
  const std::string& label(int e) const { return labels_[static_cast<std::size_t>(e)]; }

private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * labels_.size() + static_cast<std::size_t>(b);
  }
  void validate() const;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<int> join_;
  std::vector<int> meet_;
  int bottom_ = 0;
  int top_ = 0;
};

// Total map from generator index to lattice element.
using Assignment = std::vector<int>;

// Bottom-up table evaluation, memoized over the term DAG per call.
int eval_in_lattice(const FiniteLattice& lattice, Term t, const Assignment& assignment);

// True when the assignment separates u from v in the lattice, i.e.
// eval(u) <= eval(v) fails there. Whenever this returns true, the
// engine must answer u <= v negatively.
bool refutes(const FiniteLattice& lattice, const Assignment& assignment, Term u, Term v);

}  // namespace freelat
