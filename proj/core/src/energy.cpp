#include "edgeprofiler/energy.hpp"

#include "edgeprofiler/analytic.hpp"

namespace edgeprofiler {

EnergyEstimate energy_per_token(const ModelConfig& m, const HardwareConfig& hw,
                                const PrecisionSpec& p) {
    hw.validate();
    EnergyEstimate e;
    e.e_compute = static_cast<double>(flops_per_token(m)) * hw.e_flop;
    // The data term charges the full resident footprint, not just weights.
    e.e_data = memory_footprint(m, p).total().to_double() * hw.e_byte;
    e.e_total = e.e_compute + e.e_data;
    return e;
}

} // namespace edgeprofiler
