#pragma once

#include "chordwitness/connectivity.hpp"
#include "chordwitness/cycle.hpp"
#include "chordwitness/decomposition.hpp"
#include "chordwitness/error.hpp"
#include "chordwitness/extractor.hpp"
#include "chordwitness/generators.hpp"
#include "chordwitness/graph.hpp"
#include "chordwitness/io.hpp"
#include "chordwitness/longest_cycle.hpp"
#include "chordwitness/minors.hpp"
#include "chordwitness/report.hpp"
