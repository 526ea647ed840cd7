#pragma once

#include <cstdint>

#include "covering.hpp"

namespace covsys {

// One class per residue of O_K/I, all with modulus I; exact by construction.
CoveringSystem trivialSystem(const FieldPtr& field, const Ideal& modulus,
                             std::size_t cap = kDefaultResidueCap);

// Refine class i into the N(P) classes alpha_i + s mod I_i*P, where s runs
// over representatives of I_i mod I_i*P. Preserves exactness.
CoveringSystem splitClass(const CoveringSystem& sys, std::size_t i, const PrimeIdeal& p,
                          std::size_t cap = kDefaultResidueCap);

struct GeneratedSystem {
    CoveringSystem system;
    bool capped = false; // generation stopped early at the cap
};

// Deterministic seeded generation: a trivial system on a pool prime,
// refined by `steps` random class splits. Stops (flagged) once another
// split would push the common modulus norm past the cap.
GeneratedSystem randomSystem(const FieldPtr& field, std::uint64_t seed, unsigned steps,
                             const std::vector<PrimeIdeal>& pool,
                             std::size_t cap = kDefaultResidueCap);

} // namespace covsys
