#pragma once

#include <cstdint>

#include "pgtk/decomp.hh"
#include "pgtk/game.hh"

namespace pgtk {

struct GeneratedInstance {
  ParityGame game;
  TreeDecomposition decomposition;
};

// Random partial k-tree game: grow bags of size at most k+1 along a random
// tree, keep a random subset of the in-bag edges with random orientation,
// assign random owners and priorities 0..d, then repair dead ends with a
// back-edge inside the generating bag (or a self-loop on request). The
// emitted decomposition always validates with width at most k+1. Byte-stable
// across platforms: all draws go through the raw 64-bit generator.
GeneratedInstance generate_game(int n, int k, int d, std::uint64_t seed,
                                bool self_loop_repair = false);

}  // namespace pgtk
