#pragma once

#include <limits>
#include <vector>

#include "greenradio/linkmodel.hpp"

namespace greenradio {

/// A FIFO batch of packets with known arrival times and one common deadline.
struct PacketBatch {
    std::vector<double> packet_bits;  // each > 0
    std::vector<double> arrival_s;    // non-decreasing, each < deadline_s
    double deadline_s = 0.0;

    void validate() const;
};

/// Per-packet transmission windows, FIFO order.
struct Schedule {
    std::vector<double> durations_s;
    std::vector<double> start_s;
};

// Energy to push `bits` through the link in `duration_s` seconds at constant
// rate: duration * supply power at rate bits/duration. Convex in duration;
// strictly decreasing under an ideal PowerModel, cup-shaped otherwise.
double packet_energy_j(double bits, double duration_s, const LinkParams& link,
                       const PowerModel& pm);

// Deadline-constrained minimum-energy schedule. Transmission is stretched as
// far as causality allows; with circuit/static power a packet is never
// stretched past its own energy-optimal duration. An optional transmit power
// cap can make tight deadlines infeasible (std::domain_error).
Schedule lazy_schedule(const PacketBatch& batch, const LinkParams& link, const PowerModel& pm,
                       double max_tx_power_w = std::numeric_limits<double>::infinity());

// Throws std::invalid_argument naming the violated invariant.
void validate_schedule(const PacketBatch& batch, const Schedule& schedule);

// Total transmission energy of a valid schedule.
double schedule_energy_j(const PacketBatch& batch, const Schedule& schedule,
                         const LinkParams& link, const PowerModel& pm);

}  // namespace greenradio
