#pragma once

#include <string>
#include <vector>

namespace pgtk {

enum class Owner { Even, Odd };

inline Owner opponent(Owner o) { return o == Owner::Even ? Owner::Odd : Owner::Even; }

// Total order on priorities by attractiveness to Even: every odd priority is
// below every even one, even priorities ascend, odd priorities descend.
// Returns -1, 0 or 1.
int cmp_significance(int a, int b);

inline bool sig_less(int a, int b) { return cmp_significance(a, b) < 0; }
inline bool sig_leq(int a, int b) { return cmp_significance(a, b) <= 0; }

// Finite parity game. Vertex ids are dense 0..n-1; each vertex has an owner,
// a priority and a nonempty successor list (dead ends are a validation error).
struct ParityGame {
  struct VertexData {
    Owner owner = Owner::Even;
    int priority = 0;
    std::vector<int> succ;
    std::string name;
  };

  std::vector<VertexData> verts;

  int size() const { return static_cast<int>(verts.size()); }
  Owner owner(int v) const { return verts[v].owner; }
  int priority(int v) const { return verts[v].priority; }
  const std::vector<int>& succ(int v) const { return verts[v].succ; }

  // Sorted distinct priorities present in the game.
  std::vector<int> priority_values() const;
  int max_priority() const;
};

// Reports dead ends and out-of-range successor ids. Empty result means valid.
std::vector<std::string> validate_game(const ParityGame& g);

// Positional strategy: one chosen successor per vertex of the owner,
// -1 for vertices of the other player.
struct Strategy {
  Owner owner = Owner::Even;
  std::vector<int> choice;
};

bool strategy_valid(const ParityGame& g, const Strategy& s);

// Keeps every edge from the opponent's vertices and exactly the chosen edge
// from each vertex of the strategy owner. Throws on an invalid strategy.
ParityGame restrict(const ParityGame& g, const Strategy& s);

struct Lasso {
  std::vector<int> prefix;
  std::vector<int> cycle;
};

// The unique play from v0 under the two strategies, and its winner
// (parity of the maximum priority on the cycle).
std::pair<Lasso, Owner> play(const ParityGame& g, int v0, const Strategy& sigma,
                             const Strategy& tau);

struct WinningPartition {
  std::vector<bool> even_wins;  // indexed by vertex
  Strategy sigma;               // Even witness on even_wins vertices
  Strategy tau;                 // Odd witness on the complement
  Owner winner(int v) const { return even_wins[v] ? Owner::Even : Owner::Odd; }
};

}  // namespace pgtk
