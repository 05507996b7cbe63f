#pragma once

#include <map>
#include <vector>

#include "gsq/chordality.hpp"
#include "gsq/patterns.hpp"

namespace gsq {

// One entry per violated clause of the flower definition. kStructure covers
// malformed witnesses (sizes, duplicates, missing edges) on which the
// numbered conditions cannot be evaluated.
enum class FlowerCondition { kStructure, kCondI, kCondII, kCondIII, kCondIV, kCondV, kCondVI };
enum class SproutCondition { kStructure, kCondI, kCondII, kCondIII, kCondIV, kCondV };

const char* condition_name(FlowerCondition c);
const char* condition_name(SproutCondition c);

// Empty result means the witness satisfies every condition in g.
std::vector<FlowerCondition> verify_flower(const Graph& g, const FlowerWitness& f);
std::vector<SproutCondition> verify_sprout(const Graph& g, const SproutWitness& s);

// Builds an unwithered flower of size |hole| from an induced cycle of G^2,
// mirroring the constructive proof: pick a connector vertex for every hole
// pair that is non-adjacent in g, then demote u's between adjacent
// connectors to pending. Throws kNotAHole / kInternalContradiction.
FlowerWitness extract_flower(const Graph& g, const Hole& hole);

// Builds a fertile sprout of size |hole| from an induced cycle of L(G)^2:
// extract the flower in L(G), re-choose the cycle as an induced cycle of
// L(G) through the maximum number of w-vertices (dropping a w only in the
// one legal chord pattern), then map line-graph vertices back to edges of g.
SproutWitness extract_sprout(const Graph& g, const Hole& hole);

}  // namespace gsq
