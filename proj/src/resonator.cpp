#include "hdc/resonator.hpp"

#include <stdexcept>

namespace hdc {

ResonatorResult factorize(const ResonatorProblem& problem) {
  const auto& cbs = problem.codebooks;
  if (cbs.size() < 2) throw std::invalid_argument("need at least two codebooks");
  const std::size_t dim = problem.input.dim();
  for (const auto* cb : cbs) {
    if (cb == nullptr) throw std::invalid_argument("null codebook");
    if (cb->dim() != dim) throw std::invalid_argument("dimension mismatch");
    if (cb->size() == 0) throw std::invalid_argument("empty codebook");
  }
  const std::size_t F = cbs.size();

  std::vector<Hypervector> preds;
  preds.reserve(F);
  for (const auto* cb : cbs) preds.push_back(cb->normalize(cb->superposition()));

  ResonatorResult result;
  if (problem.record_trajectory) result.trajectory.emplace();
  if (result.trajectory) result.trajectory->push_back(preds);

  for (int iter = 0; iter < problem.max_iters; ++iter) {
    std::vector<Hypervector> next;
    next.reserve(F);
    for (std::size_t f = 0; f < F; ++f) {
      Hypervector unbound = problem.input;
      for (std::size_t g = 0; g < F; ++g)
        if (g != f) unbound = bind(unbound, preds[g]);
      next.push_back(cbs[f]->normalize(cbs[f]->project(unbound)));
    }
    result.iterations = iter + 1;
    const bool fixed = next == preds;
    preds = std::move(next);
    if (result.trajectory) result.trajectory->push_back(preds);
    if (fixed) break;
  }

  Hypervector rebound(dim);
  bool first = true;
  for (std::size_t f = 0; f < F; ++f) {
    const CleanupResult best = cbs[f]->cleanup(preds[f]);
    result.factors.push_back(best.name);
    const auto& v = cbs[f]->vector(best.index);
    rebound = first ? v : bind(rebound, v);
    first = false;
  }
  result.converged = rebound == problem.input;
  return result;
}

}  // namespace hdc
