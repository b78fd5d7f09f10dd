#pragma once

#include <set>
#include <string>
#include <vector>

#include "pgtk/game.hh"

namespace pgtk {

// Marker for "no path exists"; distinct from every priority and serialized
// as "-".
constexpr int kUnreachable = -1;

// For each vertex of the final set, the best exit priority a strategy
// permits, or kUnreachable.
struct StrategyProfile {
  std::vector<int> final_set;  // sorted vertex ids
  std::vector<int> entries;    // parallel to final_set

  int at(int u) const;
  bool all_unreachable() const;
  bool operator==(const StrategyProfile& o) const {
    return final_set == o.final_set && entries == o.entries;
  }
};

std::string render_profile(const StrategyProfile& p);

// Maxima of walks from s to u whose interior vertices avoid F, in a graph
// already restricted by a strategy. A priority p is achievable exactly when
// some vertex w of priority p lies on such a walk through the subgraph of
// priorities at most p. Requires s outside F and u inside F.
std::set<int> achievable_maxima(const ParityGame& restricted, int s,
                                const std::vector<int>& F, int u);

// Exhaustive walk enumeration up to max_len edges; test oracle for
// achievable_maxima (walks of length 2n suffice at small scale).
std::set<int> oracle_enumerate_walks(const ParityGame& restricted, int s,
                                     const std::vector<int>& F, int u,
                                     int max_len);

// Even strategies summarize each exit by the significance-minimum achievable
// maximum, Odd strategies by the maximum. Requires s outside F.
StrategyProfile profile_of_strategy(const ParityGame& g, const Strategy& chi,
                                    int s, const std::vector<int>& F);

// Odd-side dishonesty test: true when the declared profile P is everywhere
// worse for Even than what tau_profile certifies.
bool refutes(const StrategyProfile& tau_profile, const StrategyProfile& P);

}  // namespace pgtk
