#pragma once

#include <stdexcept>
#include <vector>

namespace netsac {

/// Per-agent finite state/action space sizes.
struct LocalSpace {
  int state_size = 1;
  int action_size = 1;

  LocalSpace() = default;
  LocalSpace(int states, int actions) : state_size(states), action_size(actions) {
    if (states < 1 || actions < 1)
      throw std::invalid_argument("LocalSpace: sizes must be >= 1");
  }
};

/// Dense per-agent local indices; entry i lies in [0, |S_i|) resp. [0, |A_i|).
using GlobalState = std::vector<int>;
using GlobalAction = std::vector<int>;

}  // namespace netsac
