#pragma once

#include <string>

#include "pgtk/game.hh"

namespace pgtk {

// PGSolver text format:
//   parity <max-id>;            (optional header)
//   <id> <priority> <owner> <succ>(,<succ>)* ("name")?;
// Owner 0 is Even, 1 is Odd. Input tolerates \r\n; output uses \n.
// Throws std::runtime_error with a line number on syntax errors, duplicate
// ids and unknown successor ids. Vertex ids are remapped to dense 0..n-1 in
// ascending id order. Dead ends are left to validate_game.
ParityGame parse_pgsolver(const std::string& text);

std::string write_pgsolver(const ParityGame& g);

}  // namespace pgtk
