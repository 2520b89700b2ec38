#pragma once

// Two fully hand-checked worked examples shared by the unit and
// acceptance suites.
//
// ex41: rho=(4,1), lambda=(3,2,1).  Here one-box removal happens to be
// a bijection L -> R on its own.
// ex43: rho=(4,3), lambda=(3,3,2).  Here it is not: two tableaux of L
// can only drop into the same target, which is what makes the
// insertion-based bijection necessary.
//
// Letters follow canonical (row-reading word) order within each block:
// A.. for the covering-shape tableaux, L.. for the shape-rho tableaux.

#include "kostka/vershik.hpp"

namespace golden {

using kostka::Composition;
using kostka::Partition;
using kostka::Tableau;

namespace ex41 {

inline const Partition rho{4, 1};
inline const Partition lambda{3, 2, 1};

// L = SSYT(mu, lambda) over mu in {(5,1), (4,2), (4,1,1)}.
inline const Tableau A{{1, 1, 1, 2, 2}, {3}};
inline const Tableau B{{1, 1, 1, 2, 3}, {2}};
inline const Tableau C{{1, 1, 1, 2}, {2, 3}};
inline const Tableau D{{1, 1, 1, 3}, {2, 2}};
inline const Tableau E{{1, 1, 1, 2}, {2}, {3}};

// R = SSYT(rho, lambda^(x)): L, M for x=1; N, P for x=2; Q for x=3.
inline const Tableau L{{1, 1, 2, 2}, {3}};
inline const Tableau M{{1, 1, 2, 3}, {2}};
inline const Tableau N{{1, 1, 1, 2}, {3}};
inline const Tableau P{{1, 1, 1, 3}, {2}};
inline const Tableau Q{{1, 1, 1, 2}, {2}};

}  // namespace ex41

namespace ex43 {

inline const Partition rho{4, 3};
inline const Partition lambda{3, 3, 2};

// L = SSYT(mu, lambda) over mu in {(5,3), (4,4), (4,3,1)}.
// Canonical order is C, B, A, D, F, E.
inline const Tableau A{{1, 1, 1, 3, 3}, {2, 2, 2}};
inline const Tableau B{{1, 1, 1, 2, 3}, {2, 2, 3}};
inline const Tableau C{{1, 1, 1, 2, 2}, {2, 3, 3}};
inline const Tableau D{{1, 1, 1, 2}, {2, 2, 3, 3}};
inline const Tableau E{{1, 1, 1, 3}, {2, 2, 2}, {3}};
inline const Tableau F{{1, 1, 1, 2}, {2, 2, 3}, {3}};

// R = SSYT(rho, lambda^(x)): L, M for x=1; N, P for x=2; Q, R for x=3.
// Canonical order is M, L, P, N, R, Q.
inline const Tableau L{{1, 1, 2, 3}, {2, 2, 3}};
inline const Tableau M{{1, 1, 2, 2}, {2, 3, 3}};
inline const Tableau N{{1, 1, 1, 3}, {2, 2, 3}};
inline const Tableau P{{1, 1, 1, 2}, {2, 3, 3}};
inline const Tableau Q{{1, 1, 1, 3}, {2, 2, 2}};
inline const Tableau R{{1, 1, 1, 2}, {2, 2, 3}};

}  // namespace ex43

}  // namespace golden
