#include "freelat/term.hpp"

#include <algorithm>
#include <cctype>

namespace freelat {

// ---------- Permutation ----------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation images are not a bijection on [0,n)");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw std::invalid_argument("transposition points out of range");
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i;
  std::swap(im[static_cast<std::size_t>(a)], im[static_cast<std::size_t>(b)]);
  return Permutation(std::move(im));
}

Permutation Permutation::rotation(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = (i + 1) % n;
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int n, std::span<const std::vector<int>> cycles) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const auto& cyc : cycles) {
    for (int v : cyc) {
      if (v < 0 || v >= n) throw std::invalid_argument("cycle point out of range");
      if (used[static_cast<std::size_t>(v)])
        throw std::invalid_argument("cycles are not disjoint");
      used[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      im[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
  }
  return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size())
    throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>(i)] = (*this)(other(i));
  return Permutation(std::move(im));
}

// ---------- TermStore ----------

std::size_t TermStore::OpKeyHash::operator()(const OpKey& k) const {
  uint64_t h = k.kind == Kind::Join ? 0x9e3779b97f4a7c15ull : 0xc2b2ae3d27d4eb4full;
  for (uint32_t c : k.children) h = (h ^ c) * 0x100000001b3ull;
  return static_cast<std::size_t>(h ^ (h >> 32));
}

TermStore::TermStore(int generator_count) : n_(generator_count) {
  if (n_ < 2) throw std::invalid_argument("a term store needs at least 2 generators");
  nodes_.reserve(static_cast<std::size_t>(n_) + 64);
  for (int i = 0; i < n_; ++i)
    nodes_.push_back(Node{Kind::Var, i, static_cast<uint32_t>(i), 1, {}});
}

Term TermStore::var(int index) {
  if (index < 0 || index >= n_)
    throw std::invalid_argument("variable index " + std::to_string(index) +
                                " out of range for " + std::to_string(n_) + " generators");
  return Term(this, static_cast<uint32_t>(index));
}

Term TermStore::join(std::span<const Term> children) { return op(Kind::Join, children); }
Term TermStore::meet(std::span<const Term> children) { return op(Kind::Meet, children); }

Term TermStore::op(Kind kind, std::span<const Term> children) {
  if (children.size() < 2)
    throw std::invalid_argument("join/meet takes at least 2 operands");
  OpKey key{kind, {}};
  key.children.reserve(children.size());
  for (Term c : children) {
    if (!c.valid() || c.store_ != this)
      throw std::invalid_argument("operand belongs to a different store");
    key.children.push_back(c.id_);
  }
  if (auto it = interned_.find(key); it != interned_.end()) return Term(this, it->second);

  uint64_t leaves = 0;
  for (uint32_t c : key.children) leaves += nodes_[c].leaves;

  OpKey dkey{kind == Kind::Join ? Kind::Meet : Kind::Join, {}};
  dkey.children.reserve(key.children.size());
  for (uint32_t c : key.children) dkey.children.push_back(nodes_[c].dual);
  // Every node is interned together with its dual, so if this node is
  // new its dual cannot exist yet.
  assert(interned_.find(dkey) == interned_.end());

  const auto id = static_cast<uint32_t>(nodes_.size());
  const auto dual_id = id + 1;
  nodes_.push_back(Node{kind, -1, dual_id, leaves, key.children});
  nodes_.push_back(Node{dkey.kind, -1, id, leaves, dkey.children});
  interned_.emplace(std::move(key), id);
  interned_.emplace(std::move(dkey), dual_id);
  return Term(this, id);
}

// ---------- parse / format ----------

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error("parse error at offset " + std::to_string(position) + ": " + what),
      position_(position) {}

namespace {

struct TermParser {
  TermStore& store;
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Term parse_join() {
    std::vector<Term> run{parse_meet()};
    while (eat('|')) run.push_back(parse_meet());
    return run.size() == 1 ? run.front() : store.join(run);
  }

  Term parse_meet() {
    std::vector<Term> run{parse_atom()};
    while (eat('&')) run.push_back(parse_atom());
    return run.size() == 1 ? run.front() : store.meet(run);
  }

  Term parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError(pos, "unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      Term t = parse_join();
      if (!eat(')')) throw ParseError(pos, "expected ')'");
      return t;
    }
    return parse_var();
  }

  Term parse_var() {
    const std::size_t start = pos;
    const char c = text[pos];
    if (c == 'y' || c == 'z') {
      ++pos;
      return checked_var(c == 'y' ? 1 : 2, start);
    }
    if (c != 'x') throw ParseError(pos, "expected a variable or '('");
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      return checked_var(0, start);  // bare x is x0
    long idx = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      idx = idx * 10 + (text[pos] - '0');
      if (idx > 1'000'000) throw ParseError(start, "variable index too large");
      ++pos;
    }
    return checked_var(static_cast<int>(idx), start);
  }

  Term checked_var(int idx, std::size_t at) {
    if (idx >= store.generator_count())
      throw ParseError(at, "variable index " + std::to_string(idx) + " out of range for " +
                               std::to_string(store.generator_count()) + " generators");
    return store.var(idx);
  }
};

void format_rec(Term t, std::string& out) {
  if (t.kind() == Kind::Var) {
    out += 'x';
    out += std::to_string(t.var_index());
    return;
  }
  const char* sep = t.kind() == Kind::Join ? " | " : " & ";
  for (std::size_t k = 0; k < t.arity(); ++k) {
    if (k) out += sep;
    Term c = t.child(k);
    if (c.kind() == Kind::Var) {
      format_rec(c, out);
    } else {
      out += '(';
      format_rec(c, out);
      out += ')';
    }
  }
}

}  // namespace

Term parse_term(TermStore& store, std::string_view text) {
  TermParser p{store, text};
  Term t = p.parse_join();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError(p.pos, "unexpected trailing input");
  return t;
}

std::string format_term(Term t) {
  std::string out;
  format_rec(t, out);
  return out;
}

// ---------- relabeling and substitution ----------

namespace {

template <typename MapVar>
Term rebuild(Term t, TermStore& target, std::unordered_map<uint32_t, Term>& memo,
             const MapVar& map_var) {
  if (auto it = memo.find(t.id()); it != memo.end()) return it->second;
  Term out;
  if (t.kind() == Kind::Var) {
    out = map_var(t.var_index());
  } else {
    std::vector<Term> kids;
    kids.reserve(t.arity());
    for (std::size_t k = 0; k < t.arity(); ++k)
      kids.push_back(rebuild(t.child(k), target, memo, map_var));
    out = t.kind() == Kind::Join ? target.join(kids) : target.meet(kids);
  }
  memo.emplace(t.id(), out);
  return out;
}

}  // namespace

Term apply_perm(const Permutation& sigma, Term t) {
  TermStore& s = *t.store();
  if (sigma.size() != s.generator_count())
    throw std::invalid_argument("permutation size does not match the generator count");
  std::unordered_map<uint32_t, Term> memo;
  return rebuild(t, s, memo, [&](int v) { return s.var(sigma(v)); });
}

Term substitute(Term t, std::span<const Term> images, TermStore& target) {
  for (Term im : images)
    if (im.valid() && im.store() != &target)
      throw std::invalid_argument("substitution image belongs to a different store");
  std::unordered_map<uint32_t, Term> memo;
  return rebuild(t, target, memo, [&](int v) {
    if (static_cast<std::size_t>(v) >= images.size() || !images[static_cast<std::size_t>(v)].valid())
      throw std::invalid_argument("unmapped variable x" + std::to_string(v));
    return images[static_cast<std::size_t>(v)];
  });
}

}  // namespace freelat
