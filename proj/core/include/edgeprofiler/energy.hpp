#pragma once

#include "edgeprofiler/config.hpp"

namespace edgeprofiler {

// Joules to produce one token, split into the arithmetic term and the
// data-movement term.
struct EnergyEstimate {
    double e_compute = 0; // flops_per_token * e_flop
    double e_data = 0;    // memory footprint bytes * e_byte
    double e_total = 0;   // sum of the two
};

EnergyEstimate energy_per_token(const ModelConfig& m, const HardwareConfig& hw,
                                const PrecisionSpec& p);

} // namespace edgeprofiler
