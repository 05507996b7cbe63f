#pragma once

#include <string>

#include "gsq/chordality.hpp"
#include "gsq/patterns.hpp"

namespace gsq {

// Compact JSON renderings of certificates and witnesses, shared by the
// harness report and the CLI.
std::string to_json(const Hole& h);
std::string to_json(const ChordalityCertificate& c);
std::string to_json(const ClawWitness& w);
std::string to_json(const P5aWitness& w);
std::string to_json(const F4Witness& w);
std::string to_json(const SunflowerWitness& w);
std::string to_json(const FlowerWitness& w);
std::string to_json(const SproutWitness& w);

}  // namespace gsq
