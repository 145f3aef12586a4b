#include "freelat/freegen.hpp"

#include <stdexcept>

namespace freelat {

FreegenReport freely_generates(Engine& engine, std::span<const Term> ys) {
  if (ys.empty())
    throw std::invalid_argument("freely_generates: empty candidate list");

  FreegenReport report;
  report.verdict = true;

  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j)
      if (engine.semantic_eq(ys[i], ys[j])) {
        report.collisions.emplace_back(i, j);
        report.verdict = false;
      }

  if (ys.size() < 2) return report;

  TermStore& store = engine.store();
  for (std::size_t h = 0; h < ys.size(); ++h) {
    std::vector<Term> rest;
    rest.reserve(ys.size() - 1);
    for (std::size_t k = 0; k < ys.size(); ++k)
      if (k != h) rest.push_back(ys[k]);
    const Term join_bound = rest.size() == 1 ? rest.front() : store.join(rest);
    const Term meet_bound = rest.size() == 1 ? rest.front() : store.meet(rest);
    if (engine.leq(ys[h], join_bound)) {
      report.verdict = false;
      report.witness = FreegenReport::Witness{ys[h], FreegenReport::Witness::Side::JoinBound,
                                              join_bound};
      return report;
    }
    if (engine.leq(meet_bound, ys[h])) {
      report.verdict = false;
      report.witness = FreegenReport::Witness{ys[h], FreegenReport::Witness::Side::MeetBound,
                                              meet_bound};
      return report;
    }
  }
  return report;
}

}  // namespace freelat
