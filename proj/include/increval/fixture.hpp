#pragma once

#include "increval/chart.hpp"

namespace increval {

// Built-in ten-step example chart over labels {A,B,C,D}. It is constructed
// so that, under the default gold target with binary correctness and
// distance parameter 2, every edit and revision class the analyzer can
// report occurs at a documented cell; the golden assertions live in the
// test suite. Revisions occur at steps 2, 4, 5, 6, 8, 9 and 10.
IncrementalChart builtin_fixture();

}  // namespace increval
