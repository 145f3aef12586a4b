#include "freelat/engine.hpp"

#include <stdexcept>

namespace freelat {

bool Engine::leq(Term u, Term v) {
  if (!u.valid() || !v.valid() || u.store() != store_ || v.store() != store_)
    throw std::invalid_argument("leq: term does not belong to this engine's store");
  return leq_rec(u, v);
}

bool Engine::semantic_eq(Term u, Term v) { return leq(u, v) && leq(v, u); }

bool Engine::leq_rec(Term u, Term v) {
  if (u.id() == v.id()) return true;  // structural identity
  const uint64_t key = (static_cast<uint64_t>(u.id()) << 32) | v.id();
  if (auto it = memo_.find(key); it != memo_.end()) {
    // Every recursive step strictly shrinks the pair, so an open
    // subproblem can never come back around; seeing one is a bug.
    if (it->second == State::InProgress)
      throw std::logic_error("leq: revisited an open subproblem");
    return it->second == State::Leq;
  }
  memo_.emplace(key, State::InProgress);

  const Kind ku = u.kind(), kv = v.kind();
  bool r;
  if (ku == Kind::Join) {
    // u_1 v ... v u_r <= v  iff every u_k <= v.
    r = true;
    for (std::size_t k = 0; r && k < u.arity(); ++k) r = leq_rec(u.child(k), v);
  } else if (kv == Kind::Meet) {
    // u <= v_1 ^ ... ^ v_s  iff u <= every v_k.
    r = true;
    for (std::size_t k = 0; r && k < v.arity(); ++k) r = leq_rec(u, v.child(k));
  } else if (ku == Kind::Var && kv == Kind::Var) {
    r = false;  // distinct generators; equal ones share an id
  } else if (ku == Kind::Var) {
    // x_i <= v_1 v ... v v_s iff x_i <= some v_k: generators are join prime.
    r = false;
    for (std::size_t k = 0; !r && k < v.arity(); ++k) r = leq_rec(u, v.child(k));
  } else if (kv == Kind::Var) {
    // u_1 ^ ... ^ u_r <= x_j iff some u_k <= x_j: generators are meet prime.
    r = false;
    for (std::size_t k = 0; !r && k < u.arity(); ++k) r = leq_rec(u.child(k), v);
  } else {
    // Meet on the left, join on the right: condition (W).
    r = false;
    for (std::size_t k = 0; !r && k < u.arity(); ++k) r = leq_rec(u.child(k), v);
    for (std::size_t k = 0; !r && k < v.arity(); ++k) r = leq_rec(u, v.child(k));
  }

  memo_[key] = r ? State::Leq : State::Nleq;
  return r;
}

}  // namespace freelat
