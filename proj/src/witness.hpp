#pragma once

#include <optional>
#include <string>

#include "casazza.hpp"
#include "multiplier.hpp"

namespace gm {

struct ViolationWitness {
    PCGenerator G;           // Parseval generator (machine verified)
    PCGenerator H;           // M G, not Parseval
    CasazzaReport evidence;  // failing report of H with the localized cell
    std::string family;      // which construction produced it
};

enum class WitnessOutcome { found, inconclusive };

struct WitnessResult {
    WitnessOutcome outcome = WitnessOutcome::inconclusive;
    std::optional<ViolationWitness> witness;
    std::string note;
};

// Turns a failed conditions verdict into a concrete Parseval generator
// whose image under M breaks one of the two Parseval identities. The
// search follows the proof order: orthonormal-basis generators first
// (catches non-unitarity), then the pinned box-pair generators for the
// scalar-of-identity condition, then the shifted patterns for the
// periodicity condition, with the scalar five-set / in-orbit patterns
// for gamma = 1. Throws when M passed all conditions with certainty.
WitnessResult find_violation_witness(const MultiplierSpec& M, const ReducedLattice& R,
                                     Int k_radius = 4);

}  // namespace gm
