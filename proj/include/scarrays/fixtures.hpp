#pragma once

#include "scarrays/presentation.hpp"

#include <string>
#include <vector>

namespace sca::fixtures {

Presentation toy();          // <a,b,c | aabaBacaC>, C'(1/8)
Presentation q34();          // five generators, one relator of length 34, C'(1/33)
Presentation r35(const Rational& lambda = rat(1, 6));  // seven generators, pieces <= 1
Presentation p8();           // staircase of height 7, length 35
Presentation p140();         // staircase of height 140, length 10010, C'(1/33)
Presentation commutator();   // <a,b | [a,b]>
Presentation free_group(int rank);

// Sources for the embedding, all at lambda = 15/512.
Presentation chain_source(int n);  // <x1..xn | x1 x2 ... xn>, letter-graph valency n-1
Presentation r35_source();

// Base pair (g, h) with every generator step g -> gx.
struct DriftPair {
  std::string scenario;
  Word g;
  Word h;
  Letter x = 0;
};

// Scenarios built on the first relator r:
//   arc      h on a single contour, r[0..m) for a spread of m
//   chain    two contours glued along one edge, r[0..k) r'[..) through a repeated letter
//   bigon    h = r[0..|r|/2), joined to g by both halves of the contour
// Pairs come with every letter x. Empty when the presentation has no relators.
std::vector<DriftPair> drift_pairs(const Presentation& p);

}  // namespace sca::fixtures
