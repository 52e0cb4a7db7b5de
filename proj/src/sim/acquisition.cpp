#include "dwe/sim/acquisition.hpp"

#include <stdexcept>

namespace dwe {

std::pair<TransmitStack, TransmitStack> generate_paired_acquisition(
    const ScattererMedium& medium0, const MotionModel& motion, const ProbeConfig& probe,
    const TransmitScheme& scheme_input, const TransmitScheme& scheme_reference,
    double frame_time, const AcquisitionGeometry& geom) {
  validate(scheme_input);
  validate(scheme_reference);
  if (scheme_input.mode != TransmitMode::dynamic) {
    throw std::invalid_argument("paired acquisition: input scheme must be dynamic");
  }
  if (scheme_reference.mode != TransmitMode::frozen_time) {
    throw std::invalid_argument("paired acquisition: reference scheme must be frozen_time");
  }
  const double dt = scheme_input.inter_transmit_dt();
  const double n_in = static_cast<double>(scheme_input.angles.size());
  const double lead = (n_in - 1.0) / 2.0 * dt;
  if (frame_time < lead) {
    throw std::invalid_argument("paired acquisition: frame_time must be >= (n-1)/2 * 1/prf");
  }
  const double vs_depth =
      geom.virtual_source_depth > 0 ? geom.virtual_source_depth : default_virtual_source_depth(probe);

  TransmitStack reference;
  reference.frame_time = frame_time;
  const ScattererMedium frozen = advance_medium(medium0, motion, frame_time);
  reference.transmits.reserve(scheme_reference.angles.size());
  for (double angle : scheme_reference.angles) {
    auto data = simulate_transmit(frozen, probe, angle, vs_depth, geom.depth_min, geom.depth_max,
                                  geom.sim);
    data.timestamp = frame_time;
    reference.transmits.push_back(std::move(data));
  }

  TransmitStack input;
  input.frame_time = frame_time;
  input.transmits.reserve(scheme_input.angles.size());
  for (size_t i = 0; i < scheme_input.angles.size(); ++i) {
    const double t_i = frame_time + (static_cast<double>(i) - (n_in - 1.0) / 2.0) * dt;
    const ScattererMedium medium_i = advance_medium(medium0, motion, t_i);
    auto data = simulate_transmit(medium_i, probe, scheme_input.angles[i], vs_depth,
                                  geom.depth_min, geom.depth_max, geom.sim);
    data.timestamp = t_i;
    input.transmits.push_back(std::move(data));
  }

  return {std::move(input), std::move(reference)};
}

}  // namespace dwe
