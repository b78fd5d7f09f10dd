#pragma once

#include "pgtk/game.hh"

namespace pgtk {

// Recursive attractor-based solver. Returns the full partition together with
// positional witness strategies. Throws on an invalid game.
WinningPartition solve_zielonka(const ParityGame& g);

// Independent oracle: enumerates all positional strategies of the player whose
// vertices have the smaller product of out-degrees, and checks each against
// the opponent's best response. Throws if that product exceeds 10^6.
Owner solve_bruteforce(const ParityGame& g, int s);

// True if, in a graph restricted by one player's strategy, the opponent can
// reach a cycle from s whose maximum priority has the given parity owner.
// All remaining choices are treated as the opponent's.
bool adversary_cycle_reachable(const ParityGame& g_restricted, int s,
                               Owner cycle_parity);

// True if the strategy wins from v against every counter-play.
bool strategy_wins_from(const ParityGame& g, const Strategy& s, int v);

}  // namespace pgtk
