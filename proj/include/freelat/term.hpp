#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace freelat {

class TermStore;
class Term;

Term dual(Term t);
uint64_t tno(Term t);

enum class Kind : uint8_t { Var, Join, Meet };

// Handle to an interned node of a TermStore. Cheap to copy, never owns
// anything. Terms over the same store are structurally equal iff their
// ids are equal (the store hash-conses every node), so operator==
// compares (store, id).
class Term {
public:
  Term() = default;

  bool valid() const { return store_ != nullptr; }
  TermStore* store() const { return store_; }
  uint32_t id() const { return id_; }

  Kind kind() const;
  int var_index() const;        // Var nodes only
  std::size_t arity() const;    // 0 for Var, >= 2 otherwise
  Term child(std::size_t k) const;

  friend bool operator==(Term a, Term b) {
    return a.store_ == b.store_ && a.id_ == b.id_;
  }

private:
  friend class TermStore;
  friend Term dual(Term);
  Term(TermStore* store, uint32_t id) : store_(store), id_(id) {}

  TermStore* store_ = nullptr;
  uint32_t id_ = 0;
};

// A bijection on generator indices {0, ..., n-1}, stored in one-line
// notation: i maps to images[i].
class Permutation {
public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  static Permutation rotation(int n);  // the n-cycle (0 1 ... n-1)
  // Cycle (c0 c1 ... ck) maps c0 -> c1 -> ... -> ck -> c0. Cycles must
  // be disjoint; unlisted points are fixed.
  static Permutation from_cycles(int n, std::span<const std::vector<int>> cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  // this after other: compose(other)(i) == (*this)(other(i))
  Permutation compose(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

// Append-only arena of hash-consed term nodes over the generators
// x_0, ..., x_{n-1}. Nodes are immutable once interned; building the
// same shape twice yields the same id. Child lists are kept exactly as
// written: no sorting, deduplication or flattening, so syntactic
// measures like tno are well defined. The kind-swapped dual of every
// node is interned together with it, which makes dualization a table
// lookup and a strict involution on ids.
//
// Not internally synchronized: callers must serialize interning.
// Reading already-interned nodes from other threads is safe.
class TermStore {
public:
  explicit TermStore(int generator_count);
  TermStore(const TermStore&) = delete;
  TermStore& operator=(const TermStore&) = delete;

  int generator_count() const { return n_; }
  std::size_t node_count() const { return nodes_.size(); }

  Term var(int index);
  Term join(std::span<const Term> children);
  Term meet(std::span<const Term> children);
  Term join(std::initializer_list<Term> children) {
    return join(std::span<const Term>(children.begin(), children.size()));
  }
  Term meet(std::initializer_list<Term> children) {
    return meet(std::span<const Term>(children.begin(), children.size()));
  }

private:
  friend class Term;
  friend Term dual(Term);
  friend uint64_t tno(Term);

  struct Node {
    Kind kind;
    int32_t var;       // Var only
    uint32_t dual;     // id of the kind-swapped mirror; vars point at themselves
    uint64_t leaves;   // variable occurrences in the unfolded term tree
    std::vector<uint32_t> children;
  };

  struct OpKey {
    Kind kind;
    std::vector<uint32_t> children;
    friend bool operator==(const OpKey&, const OpKey&) = default;
  };
  struct OpKeyHash {
    std::size_t operator()(const OpKey& k) const;
  };

  Term op(Kind kind, std::span<const Term> children);
  const Node& node(uint32_t id) const { return nodes_[id]; }

  int n_;
  std::vector<Node> nodes_;
  std::unordered_map<OpKey, uint32_t, OpKeyHash> interned_;
};

// Reported by parse_term and the script front end; position is a
// 0-based offset into the parsed text.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// term := meet ("|" meet)* ; meet := atom ("&" atom)* ;
// atom := VAR | "(" term ")". "&" binds tighter than "|"; a maximal
// run of one operator becomes a single k-ary node, exactly as written.
// VAR is "x" followed by digits, or one of the aliases x, y, z for
// x0, x1, x2.
Term parse_term(TermStore& store, std::string_view text);

// Canonical rendering: " | " and " & " separators, compound children
// always parenthesized, variables printed as x<i>.
// parse_term(format_term(t)) rebuilds t's id.
std::string format_term(Term t);

// Substitutes x_i -> x_{sigma(i)} throughout; a structure-preserving
// relabeling.
Term apply_perm(const Permutation& sigma, Term t);

// Simultaneous substitution of images[i] for x_i, built in `target`
// (which may be a different store); nothing is simplified. An invalid
// Term in `images` marks that variable as unmapped and is an error if
// the variable occurs in t.
Term substitute(Term t, std::span<const Term> images, TermStore& target);

inline Kind Term::kind() const {
  assert(valid());
  return store_->node(id_).kind;
}

inline int Term::var_index() const {
  const auto& nd = store_->node(id_);
  assert(nd.kind == Kind::Var);
  return nd.var;
}

inline std::size_t Term::arity() const { return store_->node(id_).children.size(); }

inline Term Term::child(std::size_t k) const {
  return Term(store_, store_->node(id_).children[k]);
}

// Number of variable occurrences in the term tree; O(1), the store
// keeps the count per node.
inline uint64_t tno(Term t) {
  assert(t.valid());
  return t.store()->node(t.id()).leaves;
}

// Kind-swapped structural mirror with the generators fixed;
// dual(dual(t)).id() == t.id().
inline Term dual(Term t) {
  assert(t.valid());
  return Term(t.store(), t.store()->node(t.id()).dual);
}

}  // namespace freelat
