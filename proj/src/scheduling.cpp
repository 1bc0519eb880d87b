#include "greenradio/scheduling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "greenradio/numerics.hpp"

namespace greenradio {

namespace {

// Seconds per bit at the bottom of the practical energy cup for this link.
// Only meaningful when circuit or static power is present.
double cup_seconds_per_bit(const LinkParams& link, const PowerModel& pm) {
    const auto energy_per_bit = [&](double u) { return packet_energy_j(1.0, u, link, pm); };
    double hi = 1.0;
    for (int i = 0; i < 200 && energy_per_bit(hi * 2.0) < energy_per_bit(hi); ++i) {
        hi *= 2.0;
    }
    double lo = 1.0;
    for (int i = 0; i < 200 && energy_per_bit(lo / 2.0) < energy_per_bit(lo); ++i) {
        lo /= 2.0;
    }
    const Extremum bottom = minimize_unimodal(energy_per_bit, SearchBracket{lo / 4.0, hi * 4.0, 1e-12});
    return bottom.x;
}

// Lowest-peak ("taut") rate profile: every packet in a contiguous block is
// sent at the block rate, and blocks are separated exactly at the arrival
// constraints that would otherwise be violated. Splitting at the most
// violated arrival and recursing yields the exact convex-program optimum for
// energy strictly decreasing in duration.
void allocate_taut_rates(const PacketBatch& batch, std::size_t lo, std::size_t hi, double t0,
                         double t1, std::vector<double>& rates) {
    double total_bits = 0.0;
    for (std::size_t k = lo; k <= hi; ++k) {
        total_bits += batch.packet_bits[k];
    }
    const double rate = total_bits / (t1 - t0);

    // Violations below float noise are not worth splitting on; the final
    // start chain absorbs them within the deadline tolerance.
    double worst = 1e-12 * (t1 - t0);
    std::size_t split = lo;
    bool found = false;
    double cum_bits = 0.0;
    for (std::size_t k = lo; k <= hi; ++k) {
        const double start_k = t0 + cum_bits / rate;
        const double violation = batch.arrival_s[k] - start_k;
        if (violation > worst) {
            worst = violation;
            split = k;
            found = true;
        }
        cum_bits += batch.packet_bits[k];
    }

    if (!found) {
        for (std::size_t k = lo; k <= hi; ++k) {
            rates[k] = rate;
        }
        return;
    }
    allocate_taut_rates(batch, lo, split - 1, t0, batch.arrival_s[split], rates);
    allocate_taut_rates(batch, split, hi, batch.arrival_s[split], t1, rates);
}

}  // namespace

void PacketBatch::validate() const {
    if (packet_bits.size() != arrival_s.size()) {
        throw std::invalid_argument("packet_bits and arrival_s must have the same length");
    }
    if (!(deadline_s > 0.0) || !std::isfinite(deadline_s)) {
        throw std::invalid_argument("deadline_s must be finite and > 0");
    }
    for (std::size_t i = 0; i < packet_bits.size(); ++i) {
        if (!(packet_bits[i] > 0.0) || !std::isfinite(packet_bits[i])) {
            throw std::invalid_argument("packet_bits must be finite and > 0");
        }
        if (!(arrival_s[i] >= 0.0) || !std::isfinite(arrival_s[i])) {
            throw std::invalid_argument("arrival times must be finite and >= 0");
        }
        if (i > 0 && arrival_s[i] < arrival_s[i - 1]) {
            throw std::invalid_argument("arrival times must be non-decreasing");
        }
        if (!(arrival_s[i] < deadline_s)) {
            throw std::invalid_argument("every arrival must precede the deadline");
        }
    }
}

double packet_energy_j(double bits, double duration_s, const LinkParams& link,
                       const PowerModel& pm) {
    if (!(bits > 0.0) || !std::isfinite(bits)) {
        throw std::invalid_argument("bits must be finite and > 0");
    }
    if (!(duration_s > 0.0) || !std::isfinite(duration_s)) {
        throw std::invalid_argument("duration_s must be finite and > 0");
    }
    const double tx_w = tx_power_for_rate_w(bits / duration_s, link);
    return duration_s * supply_power_w(tx_w, link.bandwidth_hz, pm);
}

Schedule lazy_schedule(const PacketBatch& batch, const LinkParams& link, const PowerModel& pm,
                       double max_tx_power_w) {
    batch.validate();
    link.validate();
    pm.validate();

    Schedule schedule;
    const std::size_t n = batch.packet_bits.size();
    if (n == 0) {
        return schedule;
    }

    std::vector<double> rates(n, 0.0);
    allocate_taut_rates(batch, 0, n - 1, batch.arrival_s.front(), batch.deadline_s, rates);

    if (std::isnan(max_tx_power_w)) {
        throw std::invalid_argument("max_tx_power_w must not be NaN");
    }
    double rate_cap = std::numeric_limits<double>::infinity();
    if (std::isfinite(max_tx_power_w)) {
        if (!(max_tx_power_w > 0.0)) {
            throw std::invalid_argument("max_tx_power_w must be > 0");
        }
        rate_cap = capacity_bps(max_tx_power_w, link);
        for (double r : rates) {
            if (r > rate_cap * (1.0 + 1e-9)) {
                throw std::domain_error(
                    "infeasible: the deadline cannot be met under the transmit power cap "
                    "(required rate " + std::to_string(r) + " bit/s exceeds the cap rate " +
                    std::to_string(rate_cap) + " bit/s)");
            }
        }
    }

    // Laziness stops paying once circuit/static power dominates: no packet is
    // stretched slower than the cup-bottom rate.
    const double floor_w = pm.circuit_psd * link.bandwidth_hz + pm.static_power_w;
    if (floor_w > 0.0) {
        const double cup_rate = std::min(1.0 / cup_seconds_per_bit(link, pm), rate_cap);
        for (double& r : rates) {
            r = std::max(r, cup_rate);
        }
    }

    schedule.durations_s.resize(n);
    schedule.start_s.resize(n);
    double ready = batch.arrival_s.front();
    for (std::size_t k = 0; k < n; ++k) {
        schedule.start_s[k] = std::max(batch.arrival_s[k], ready);
        schedule.durations_s[k] = batch.packet_bits[k] / rates[k];
        ready = schedule.start_s[k] + schedule.durations_s[k];
    }
    return schedule;
}

void validate_schedule(const PacketBatch& batch, const Schedule& schedule) {
    batch.validate();
    const std::size_t n = batch.packet_bits.size();
    if (schedule.durations_s.size() != n || schedule.start_s.size() != n) {
        throw std::invalid_argument("schedule length does not match the batch");
    }
    const double slack = 1e-12 * batch.deadline_s;
    for (std::size_t k = 0; k < n; ++k) {
        if (!(schedule.durations_s[k] > 0.0) || !std::isfinite(schedule.durations_s[k])) {
            throw std::invalid_argument("schedule invariant violated: durations must be finite and > 0");
        }
        if (!std::isfinite(schedule.start_s[k])) {
            throw std::invalid_argument("schedule invariant violated: starts must be finite");
        }
        if (schedule.start_s[k] < batch.arrival_s[k] - slack) {
            throw std::invalid_argument(
                "schedule invariant violated: packet " + std::to_string(k) +
                " starts before its arrival");
        }
        if (k > 0 &&
            schedule.start_s[k] < schedule.start_s[k - 1] + schedule.durations_s[k - 1] - slack) {
            throw std::invalid_argument(
                "schedule invariant violated: packet " + std::to_string(k) +
                " starts before the previous packet finishes");
        }
    }
    if (n > 0) {
        const double finish = schedule.start_s.back() + schedule.durations_s.back();
        if (finish > batch.deadline_s * (1.0 + 1e-9)) {
            throw std::invalid_argument("schedule invariant violated: last packet finishes after the deadline");
        }
    }
}

double schedule_energy_j(const PacketBatch& batch, const Schedule& schedule,
                         const LinkParams& link, const PowerModel& pm) {
    validate_schedule(batch, schedule);
    double total_j = 0.0;
    for (std::size_t k = 0; k < batch.packet_bits.size(); ++k) {
        total_j += packet_energy_j(batch.packet_bits[k], schedule.durations_s[k], link, pm);
    }
    return total_j;
}

}  // namespace greenradio
