#pragma once

#include <vector>

#include "pgtk/game.hh"

namespace test_util {

struct V {
  pgtk::Owner owner;
  int priority;
  std::vector<int> succ;
};

inline pgtk::ParityGame make_game(std::vector<V> spec) {
  pgtk::ParityGame g;
  for (auto& v : spec) {
    pgtk::ParityGame::VertexData vd;
    vd.owner = v.owner;
    vd.priority = v.priority;
    vd.succ = v.succ;
    g.verts.push_back(vd);
  }
  return g;
}

constexpr pgtk::Owner E = pgtk::Owner::Even;
constexpr pgtk::Owner O = pgtk::Owner::Odd;

}  // namespace test_util
