#include "socreal/naming_game.hpp"

#include <algorithm>
#include <stdexcept>

namespace socreal {

std::size_t propose(const Categorical& xi_speaker, Rng& rng) { return sample(xi_speaker, rng); }

double acceptance_ratio(const Categorical& xi_listener, std::size_t w_sp, std::size_t w_li) {
  if (w_sp >= xi_listener.size() || w_li >= xi_listener.size())
    throw std::out_of_range("acceptance_ratio: symbol out of range");
  if (w_sp == w_li) return 1.0;
  return std::max(xi_listener[w_sp], kLogFloor) / std::max(xi_listener[w_li], kLogFloor);
}

ExchangeOutcome decide(const Categorical& xi_listener, std::size_t w_sp, std::size_t w_li, Rng& rng) {
  ExchangeOutcome out;
  out.speaker_symbol = w_sp;
  out.listener_symbol = w_li;
  out.acceptance_ratio = acceptance_ratio(xi_listener, w_sp, w_li);
  const double u = rng.uniform();
  out.accepted = u < std::min(1.0, out.acceptance_ratio);
  out.used_symbol = out.accepted ? w_sp : w_li;
  return out;
}

ExchangeOutcome exchange(const Categorical& xi_speaker, const Categorical& xi_listener, Rng& rng) {
  if (xi_speaker.size() != xi_listener.size()) throw std::invalid_argument("exchange: symbol dimension mismatch");
  const std::size_t w_sp = propose(xi_speaker, rng);
  const std::size_t w_li = sample(xi_listener, rng);
  return decide(xi_listener, w_sp, w_li, rng);
}

}  // namespace socreal
