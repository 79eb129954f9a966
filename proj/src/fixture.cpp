#include "increval/fixture.hpp"

namespace increval {

// The example chart, one row per time step. The golden assertions in
// tests/acceptance.cpp pin, among others:
//
//   edits     (2,1) B>A   (4,1) A>B   (4,2) D>B   (4,3) B>A   (5,1) B>C
//             (5,3) A>B   (5,4) D>C   (6,1) C>A   (8,3) B>A   (9,3) A>D
//             (9,4) C>D   (9,6) A>C   (9,7) A>B   (10,3) D>B  (10,6) C>A
//   revisions at 2, 4, 5, 6, 8, 9, 10
//
// Pinned by those assertions: all of column 2 (one definite edit at t=4 from
// the correct D to the final B), column 3's five edits and its B-A-B swings,
// column 1's wrong start and its edit run at t=4..6, the effective short
// edit (5,4), the innovative-then-repetitive pair (9,6)/(10,6), the
// connected pair (9,6)/(9,7), and the correct prefix at t=3. Free choices,
// constrained only to keep the pinned classes intact: the gold labels at
// positions 1, 5, 7, 8, 9, 10, the additions at steps 5, 7, 8, 9, 10, and
// the token strings.
IncrementalChart builtin_fixture() {
  IncrementalChart chart;
  chart.id = "fixture";
  chart.tokens = {"w1", "w2", "w3", "w4", "w5", "w6", "w7", "w8", "w9", "w10"};
  chart.prefixes = {
      {"B"},
      {"A", "D"},
      {"A", "D", "B"},
      {"B", "B", "A", "D"},
      {"C", "B", "B", "C", "A"},
      {"A", "B", "B", "C", "A", "A"},
      {"A", "B", "B", "C", "A", "A", "A"},
      {"A", "B", "A", "C", "A", "A", "A", "A"},
      {"A", "B", "D", "D", "A", "C", "B", "A", "B"},
      {"A", "B", "B", "D", "A", "A", "B", "A", "B", "C"},
  };
  chart.gold = {{"A", "D", "B", "C", "A", "D", "B", "A", "B", "C"}};
  return chart;
}

}  // namespace increval
