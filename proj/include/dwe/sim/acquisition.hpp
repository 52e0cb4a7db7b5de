#pragma once

#include <utility>
#include <vector>

#include "dwe/sim/motion.hpp"
#include "dwe/sim/transmit.hpp"

namespace dwe {

// All transmits belonging to one frame.
struct TransmitStack {
  std::vector<RawChannelData> transmits;
  double frame_time = 0.0;  // [s]
};

struct AcquisitionGeometry {
  double depth_min = 0.0;  // [m] record window, usually the scan grid range
  double depth_max = 0.0;
  double virtual_source_depth = 0.0;  // [m] 0 selects the probe default
  SimOptions sim{};
};

// Paired acquisition at frame time t: the reference fires every transmit on
// the medium frozen at t; the input advances the medium by 1/prf between its
// transmits, with the middle transmit aligned on t. Requires
// t >= (n_input-1)/2 * (1/prf) so the first input transmit is not before the
// sequence origin.
std::pair<TransmitStack, TransmitStack> generate_paired_acquisition(
    const ScattererMedium& medium0, const MotionModel& motion, const ProbeConfig& probe,
    const TransmitScheme& scheme_input, const TransmitScheme& scheme_reference,
    double frame_time, const AcquisitionGeometry& geom);

}  // namespace dwe
