#pragma once

#include "pspace/poset.hpp"

namespace fixtures {

// bot < a, b < top
inline pspace::Poset diamond() {
  return pspace::validate_poset({"bot", "a", "b", "top"},
                                {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

// bot < a, bot < b
inline pspace::Poset vee() { return pspace::validate_poset({"bot", "a", "b"}, {{"bot", "a"}, {"bot", "b"}}); }

inline pspace::Poset anti2() { return pspace::antichain(2); }
inline pspace::Poset chain2() { return pspace::chain(2); }

}  // namespace fixtures
