#pragma once

#include "coalg/system.hpp"

namespace coalg::fixtures {

/// Small systems used by the bundled fixture suite, the tests, and the
/// README walk-through.

// lts: x -a-> x1; x1 terminal
System sx();
// lts: y -a-> y1, y -a-> y2; both terminal
System sy();
// mts: x steps to k parallel copies of (a, x1)
System sx_ms(std::int64_t k);
// mts: canonical multiset reading of sy
System sy_ms();
// pmts: x loops with one weight-1 arc
System pa();
// pmts: y loops with two weight-1/2 arcs
System pb();
// pmts: x branches 1/2, 1/2 to two terminal states
System sxp();
// pmts: y branches 1/3, 1/3, 1/3 to three terminal states
System syp();
// pmts: the 1/6-weight splitting of sxp (3 copies per branch)
System sxp3();
// pmts: the 1/6-weight splitting of syp (2 copies per branch)
System syp2();
// alt-mts: one nondeterministic and one probabilistic state
System alt_small();

// {(x,y), (x1,y1), (x1,y2)} over sx-like and sy-like carriers
Relation rel_main(const System& left, const System& right);
// {(x,y)} plus the full product of the branch targets, over sxp-like pairs
Relation rel_branching(const System& left, const System& right);

}  // namespace coalg::fixtures
