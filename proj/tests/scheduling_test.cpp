#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "greenradio/scheduling.hpp"
#include "greenradio/tradeoffs.hpp"

using namespace greenradio;

namespace {

const LinkParams kUnitLink{1.0, 1.0, 0.0};

PacketBatch identical_at_zero(int n, double deadline) {
    PacketBatch b;
    b.packet_bits.assign(n, 1.0);
    b.arrival_s.assign(n, 0.0);
    b.deadline_s = deadline;
    return b;
}

PacketBatch random_batch(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(1, 8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    PacketBatch b;
    const int n = count(rng);
    b.deadline_s = 1.0 + 2.0 * u(rng);
    double arrival = 0.0;
    for (int i = 0; i < n; ++i) {
        b.packet_bits.push_back(0.2 + 2.8 * u(rng));
        arrival += 0.8 * b.deadline_s * u(rng) / n;
        b.arrival_s.push_back(arrival);
    }
    return b;
}

}  // namespace

TEST_CASE("per-packet energy basics") {
    CHECK(packet_energy_j(1.0, 1.0, kUnitLink, PowerModel::ideal()) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(packet_energy_j(1.0, 1e4, kUnitLink, PowerModel::ideal()) ==
          doctest::Approx(std::numbers::ln2).epsilon(1e-4));

    // Convex in duration.
    const double e1 = packet_energy_j(2.0, 1.0, kUnitLink, PowerModel::ideal());
    const double e2 = packet_energy_j(2.0, 2.0, kUnitLink, PowerModel::ideal());
    const double e3 = packet_energy_j(2.0, 3.0, kUnitLink, PowerModel::ideal());
    CHECK(e1 + e3 > 2.0 * e2);

    CHECK_THROWS_AS(packet_energy_j(0.0, 1.0, kUnitLink, PowerModel::ideal()),
                    std::invalid_argument);
    CHECK_THROWS_AS(packet_energy_j(1.0, 0.0, kUnitLink, PowerModel::ideal()),
                    std::invalid_argument);
}

TEST_CASE("four identical packets split the deadline evenly") {
    const PacketBatch batch = identical_at_zero(4, 2.0);
    const Schedule s = lazy_schedule(batch, kUnitLink, PowerModel::ideal());
    REQUIRE(s.durations_s.size() == 4);
    for (double d : s.durations_s) {
        CHECK(d == 0.5);
    }
    CHECK(s.start_s[0] == 0.0);
    CHECK(s.start_s[1] == 0.5);
    CHECK(s.start_s[2] == 1.0);
    CHECK(s.start_s[3] == 1.5);
}

TEST_CASE("a single packet is stretched across the whole deadline") {
    PacketBatch batch = identical_at_zero(1, 3.0);
    const Schedule s = lazy_schedule(batch, kUnitLink, PowerModel::ideal());
    CHECK(s.start_s[0] == 0.0);
    CHECK(s.durations_s[0] == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("staggered arrivals match the two-packet brute-force oracle") {
    PacketBatch batch;
    batch.packet_bits = {1.0, 1.0};
    batch.arrival_s = {0.0, 0.6};
    batch.deadline_s = 1.0;
    const Schedule s = lazy_schedule(batch, kUnitLink, PowerModel::ideal());

    // The arrival constraint splits the pool: [0, 0.6] and [0.6, 1.0].
    CHECK(s.durations_s[0] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(s.durations_s[1] == doctest::Approx(0.4).epsilon(1e-12));
    const double lazy_j = schedule_energy_j(batch, s, kUnitLink, PowerModel::ideal());

    // Exhaustive (d1, d2) grid; the second packet starts at max(0.6, d1).
    double best = 1e300;
    const int n = 1000;
    for (int i = 1; i <= n; ++i) {
        const double d1 = i * 1.0 / n;
        const double start2 = std::max(0.6, d1);
        for (int j = 1; j <= n; ++j) {
            const double d2 = j * (1.0 - start2) / n;
            if (d2 <= 0.0 || 1.0 / d2 > 500.0) {  // 2^rate overflows past ~1024 bit/s
                continue;
            }
            const double e = packet_energy_j(1.0, d1, kUnitLink, PowerModel::ideal()) +
                             packet_energy_j(1.0, d2, kUnitLink, PowerModel::ideal());
            best = std::min(best, e);
        }
    }
    CHECK(lazy_j == doctest::Approx(best).epsilon(1e-3));
    CHECK(lazy_j <= best * (1.0 + 1e-12));
}

TEST_CASE("three packets with arrivals match the three-packet oracle") {
    PacketBatch batch;
    batch.packet_bits = {1.0, 0.5, 2.0};
    batch.arrival_s = {0.0, 0.3, 0.45};
    batch.deadline_s = 1.5;
    const Schedule s = lazy_schedule(batch, kUnitLink, PowerModel::ideal());
    const double lazy_j = schedule_energy_j(batch, s, kUnitLink, PowerModel::ideal());

    // Energy falls with duration, so the last packet always runs to the
    // deadline; brute force only needs the (d1, d2) grid.
    double best = 1e300;
    const int n = 700;
    for (int i = 1; i <= n; ++i) {
        const double d1 = i * 1.5 / n;
        const double s2 = std::max(0.3, d1);
        for (int j = 1; j <= n; ++j) {
            const double d2 = j * (1.5 - s2) / n;
            const double s3 = std::max(0.45, s2 + d2);
            const double d3 = 1.5 - s3;
            if (d2 <= 0.0 || d3 <= 0.0 || 0.5 / d2 > 500.0 || 2.0 / d3 > 500.0) {
                continue;
            }
            const double e = packet_energy_j(1.0, d1, kUnitLink, PowerModel::ideal()) +
                             packet_energy_j(0.5, d2, kUnitLink, PowerModel::ideal()) +
                             packet_energy_j(2.0, d3, kUnitLink, PowerModel::ideal());
            best = std::min(best, e);
        }
    }
    CHECK(lazy_j == doctest::Approx(best).epsilon(1e-3));
    CHECK(lazy_j <= best * (1.0 + 1e-12));
}

TEST_CASE("optimality certificate: perturbing the even split never helps") {
    const PacketBatch batch = identical_at_zero(5, 1.0);
    const Schedule s = lazy_schedule(batch, kUnitLink, PowerModel::ideal());
    const double base = schedule_energy_j(batch, s, kUnitLink, PowerModel::ideal());
    for (double d : s.durations_s) {
        CHECK(d == doctest::Approx(0.2).epsilon(1e-12));
    }

    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> pick(0, 4);
    const double eps = 1e-3;
    for (int trial = 0; trial < 100; ++trial) {
        const int from = pick(rng);
        int to = pick(rng);
        if (to == from) {
            to = (to + 1) % 5;
        }
        Schedule perturbed = s;
        perturbed.durations_s[from] -= eps;
        perturbed.durations_s[to] += eps;
        double clock = 0.0;
        for (int k = 0; k < 5; ++k) {
            perturbed.start_s[k] = clock;
            clock += perturbed.durations_s[k];
        }
        const double e = schedule_energy_j(batch, perturbed, kUnitLink, PowerModel::ideal());
        CHECK(e >= base);
    }
}

TEST_CASE("uniform split beats rushing identical packets") {
    const PacketBatch batch = identical_at_zero(4, 2.0);
    Schedule fast;
    fast.durations_s.assign(4, 2.0 / 8.0);  // each packet in T/(2N)
    fast.start_s = {0.0, 0.25, 0.5, 0.75};
    const double rushed = schedule_energy_j(batch, fast, kUnitLink, PowerModel::ideal());
    const Schedule lazy = lazy_schedule(batch, kUnitLink, PowerModel::ideal());
    const double relaxed = schedule_energy_j(batch, lazy, kUnitLink, PowerModel::ideal());
    CHECK(relaxed < rushed);
}

TEST_CASE("empty batch has zero energy") {
    PacketBatch batch;
    batch.deadline_s = 1.0;
    const Schedule s = lazy_schedule(batch, kUnitLink, PowerModel::ideal());
    CHECK(s.durations_s.empty());
    CHECK(schedule_energy_j(batch, s, kUnitLink, PowerModel::ideal()) == 0.0);
}

TEST_CASE("output schedules always satisfy the schedule invariants") {
    std::mt19937 rng(555);
    const PowerModel practical{0.6, 0.2, 0.4};
    for (int trial = 0; trial < 100; ++trial) {
        const PacketBatch batch = random_batch(rng);
        const Schedule ideal_s = lazy_schedule(batch, kUnitLink, PowerModel::ideal());
        CHECK_NOTHROW(validate_schedule(batch, ideal_s));
        const Schedule prac_s = lazy_schedule(batch, kUnitLink, practical);
        CHECK_NOTHROW(validate_schedule(batch, prac_s));
    }
}

TEST_CASE("extending the deadline never raises the minimum energy") {
    std::mt19937 rng(8080);
    const PowerModel practical{0.6, 0.2, 0.4};
    for (int trial = 0; trial < 100; ++trial) {
        PacketBatch batch = random_batch(rng);
        for (const PowerModel& pm : {PowerModel::ideal(), practical}) {
            const double tight = schedule_energy_j(
                batch, lazy_schedule(batch, kUnitLink, pm), kUnitLink, pm);
            PacketBatch longer = batch;
            longer.deadline_s *= 1.5;
            const double loose = schedule_energy_j(
                longer, lazy_schedule(longer, kUnitLink, pm), kUnitLink, pm);
            CHECK(loose <= tight * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("with static power and ample slack every packet sits at the cup bottom") {
    const PowerModel pm{0.8, 0.3, 0.7};
    const double t_star = optimal_bit_duration(1.0, 1.0, pm, {1e-6, 1e6, 1e-12}).x;

    PacketBatch batch;
    batch.packet_bits = {1.0, 2.0, 0.5};
    batch.arrival_s = {0.0, 0.1, 0.2};
    batch.deadline_s = 1e6;
    const Schedule s = lazy_schedule(batch, kUnitLink, pm);
    for (std::size_t k = 0; k < batch.packet_bits.size(); ++k) {
        CHECK(s.durations_s[k] ==
              doctest::Approx(batch.packet_bits[k] * t_star).epsilon(1e-6));
    }
}

TEST_CASE("a transmit power cap can make tight deadlines infeasible") {
    PacketBatch batch = identical_at_zero(2, 0.5);  // needs 4 bit/s
    CHECK_THROWS_WITH_AS(lazy_schedule(batch, kUnitLink, PowerModel::ideal(), 10.0),
                         doctest::Contains("infeasible"), std::domain_error);

    // log2(1 + 100) > 4, so a looser cap is fine.
    const Schedule s = lazy_schedule(batch, kUnitLink, PowerModel::ideal(), 100.0);
    CHECK(s.durations_s[0] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("schedule validation names the violated invariant") {
    PacketBatch batch;
    batch.packet_bits = {1.0, 1.0};
    batch.arrival_s = {0.0, 0.5};
    batch.deadline_s = 1.0;

    Schedule wrong_len;
    wrong_len.durations_s = {0.4};
    wrong_len.start_s = {0.0};
    CHECK_THROWS_WITH_AS(schedule_energy_j(batch, wrong_len, kUnitLink, PowerModel::ideal()),
                         doctest::Contains("length"), std::invalid_argument);

    Schedule early;
    early.durations_s = {0.4, 0.4};
    early.start_s = {0.0, 0.4};  // second packet arrives at 0.5
    CHECK_THROWS_WITH_AS(schedule_energy_j(batch, early, kUnitLink, PowerModel::ideal()),
                         doctest::Contains("arrival"), std::invalid_argument);

    Schedule overlapping;
    overlapping.durations_s = {0.6, 0.3};
    overlapping.start_s = {0.0, 0.5};
    CHECK_THROWS_WITH_AS(schedule_energy_j(batch, overlapping, kUnitLink, PowerModel::ideal()),
                         doctest::Contains("previous"), std::invalid_argument);

    Schedule late;
    late.durations_s = {0.4, 0.6};
    late.start_s = {0.0, 0.5};
    CHECK_THROWS_WITH_AS(schedule_energy_j(batch, late, kUnitLink, PowerModel::ideal()),
                         doctest::Contains("deadline"), std::invalid_argument);
}

TEST_CASE("identical inputs give bit-identical schedules") {
    std::mt19937 rng(31);
    const PacketBatch batch = random_batch(rng);
    const Schedule a = lazy_schedule(batch, kUnitLink, PowerModel::ideal());
    const Schedule b = lazy_schedule(batch, kUnitLink, PowerModel::ideal());
    CHECK(a.durations_s == b.durations_s);
    CHECK(a.start_s == b.start_s);
}
