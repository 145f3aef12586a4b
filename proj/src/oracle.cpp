#include "freelat/oracle.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace freelat {

namespace {

std::vector<std::vector<int>> square(int k, int fill = 0) {
  return std::vector<std::vector<int>>(static_cast<std::size_t>(k),
                                       std::vector<int>(static_cast<std::size_t>(k), fill));
}

// Builds join/meet tables from an explicit order relation by taking
// least upper / greatest lower bounds, which must exist.
FiniteLattice from_order(std::string name, std::vector<std::string> labels,
                         const std::vector<std::vector<char>>& le) {
  const int k = static_cast<int>(labels.size());
  auto join = square(k), meet = square(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int lub = -1, glb = -1;
      for (int u = 0; u < k; ++u) {
        if (le[a][u] && le[b][u] && (lub < 0 || le[u][lub])) lub = u;
        if (le[u][a] && le[u][b] && (glb < 0 || le[glb][u])) glb = u;
      }
      if (lub < 0 || glb < 0)
        throw std::invalid_argument(name + ": order has no bound for some pair");
      join[a][b] = lub;
      meet[a][b] = glb;
    }
  return FiniteLattice(std::move(name), std::move(labels), std::move(join), std::move(meet));
}

}  // namespace

FiniteLattice::FiniteLattice(std::string name, std::vector<std::string> labels,
                             std::vector<std::vector<int>> join_table,
                             std::vector<std::vector<int>> meet_table)
    : name_(std::move(name)), labels_(std::move(labels)) {
  const std::size_t k = labels_.size();
  if (k == 0) throw std::invalid_argument("empty lattice");
  if (join_table.size() != k || meet_table.size() != k)
    throw std::invalid_argument(name_ + ": table size does not match element count");
  join_.reserve(k * k);
  meet_.reserve(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    if (join_table[r].size() != k || meet_table[r].size() != k)
      throw std::invalid_argument(name_ + ": table row has wrong length");
    for (std::size_t c = 0; c < k; ++c) {
      join_.push_back(join_table[r][c]);
      meet_.push_back(meet_table[r][c]);
    }
  }
  validate();
  bottom_ = 0;
  top_ = 0;
  for (int e = 1; e < size(); ++e) {
    bottom_ = meet(bottom_, e);
    top_ = join(top_, e);
  }
}

void FiniteLattice::validate() const {
  const int k = static_cast<int>(labels_.size());
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument(name_ + ": not a lattice (" + what + ")");
  };
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const int j = join_[idx(a, b)], m = meet_[idx(a, b)];
      if (j < 0 || j >= k || m < 0 || m >= k) fail("table entry out of range");
      if (j != join_[idx(b, a)] || m != meet_[idx(b, a)]) fail("commutativity");
      if (a == b && (j != a || m != a)) fail("idempotence");
      if (meet_[idx(a, j)] != a || join_[idx(a, m)] != a) fail("absorption");
      if ((j == b) != (m == a)) fail("order consistency");
    }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        if (join(join(a, b), c) != join(a, join(b, c))) fail("join associativity");
        if (meet(meet(a, b), c) != meet(a, meet(b, c))) fail("meet associativity");
      }
}

FiniteLattice FiniteLattice::two() {
  return FiniteLattice("2", {"0", "1"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}});
}

FiniteLattice FiniteLattice::mn(int n) {
  if (n < 1) throw std::invalid_argument("M_n needs at least one atom");
  const int k = n + 2;  // 0 = bottom, 1..n = atoms, n+1 = top
  std::vector<std::string> labels{"0"};
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  labels.push_back("1");
  std::vector<std::vector<char>> le(static_cast<std::size_t>(k),
                                    std::vector<char>(static_cast<std::size_t>(k), 0));
  for (int e = 0; e < k; ++e) {
    le[static_cast<std::size_t>(e)][static_cast<std::size_t>(e)] = 1;
    le[0][static_cast<std::size_t>(e)] = 1;
    le[static_cast<std::size_t>(e)][static_cast<std::size_t>(k - 1)] = 1;
  }
  return from_order("M_" + std::to_string(n), std::move(labels), le);
}

FiniteLattice FiniteLattice::n5() {
  // 0 < p < q < 1 and 0 < r < 1, with r incomparable to p and q.
  const int k = 5;
  std::vector<std::string> labels{"0", "p", "q", "r", "1"};
  std::vector<std::vector<char>> le(k, std::vector<char>(k, 0));
  for (int e = 0; e < k; ++e) {
    le[static_cast<std::size_t>(e)][static_cast<std::size_t>(e)] = 1;
    le[0][static_cast<std::size_t>(e)] = 1;
    le[static_cast<std::size_t>(e)][4] = 1;
  }
  le[1][2] = 1;  // p < q
  return from_order("N_5", std::move(labels), le);
}

FiniteLattice FiniteLattice::parse_tables(std::istream& in, std::string name) {
  int k = 0;
  if (!(in >> k) || k < 1) throw std::invalid_argument("lattice tables: bad size");
  auto read_table = [&](const char* what) {
    auto t = square(k);
    for (auto& row : t)
      for (auto& e : row)
        if (!(in >> e))
          throw std::invalid_argument(std::string("lattice tables: truncated ") + what);
    return t;
  };
  auto join = read_table("join table");
  auto meet = read_table("meet table");
  std::vector<std::string> labels;
  for (int e = 0; e < k; ++e) labels.push_back(std::to_string(e));
  return FiniteLattice(std::move(name), std::move(labels), std::move(join), std::move(meet));
}

std::string FiniteLattice::to_tables() const {
  std::ostringstream out;
  out << size() << '\n';
  for (const auto* table : {&join_, &meet_}) {
    for (int a = 0; a < size(); ++a) {
      for (int b = 0; b < size(); ++b) out << (b ? " " : "") << (*table)[idx(a, b)];
      out << '\n';
    }
  }
  return out.str();
}

int eval_in_lattice(const FiniteLattice& lattice, Term t, const Assignment& assignment) {
  const int n = t.store()->generator_count();
  if (assignment.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("assignment does not cover the generators");
  for (int e : assignment)
    if (e < 0 || e >= lattice.size())
      throw std::invalid_argument("assignment value is not a lattice element");

  std::unordered_map<uint32_t, int> memo;
  auto rec = [&](auto&& self, Term u) -> int {
    if (auto it = memo.find(u.id()); it != memo.end()) return it->second;
    int value;
    if (u.kind() == Kind::Var) {
      value = assignment[static_cast<std::size_t>(u.var_index())];
    } else {
      value = self(self, u.child(0));
      for (std::size_t k = 1; k < u.arity(); ++k) {
        const int c = self(self, u.child(k));
        value = u.kind() == Kind::Join ? lattice.join(value, c) : lattice.meet(value, c);
      }
    }
    memo.emplace(u.id(), value);
    return value;
  };
  return rec(rec, t);
}

bool refutes(const FiniteLattice& lattice, const Assignment& assignment, Term u, Term v) {
  return !lattice.leq(eval_in_lattice(lattice, u, assignment),
                      eval_in_lattice(lattice, v, assignment));
}

}  // namespace freelat
