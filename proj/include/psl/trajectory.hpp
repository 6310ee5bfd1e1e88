#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "psl/tuple_structure.hpp"

namespace psl {

struct EvalOptions {
    unsigned target_bits = 64;
    unsigned max_escalations = 8;
    unsigned threads = 1;
};

struct DistanceSample {
    unsigned long n = 0;
    Int closest_integer;
    RealInterval distance;              // enclosure of |x - p|
    bool decided = false;               // p unambiguous and enclosure tight
    std::optional<Rational> exact_distance;  // set on the all-rational path
};

struct ScanRow {
    DistanceSample sample;
    std::optional<bool> in_member_set;  // distance < theta^n, when decidable
    bool has_rate = false;
    double rate_estimate = 0.0;         // log(distance)/n from the midpoint
};

struct ScanReport {
    unsigned long n_from = 0, n_to = 0;
    std::optional<Rational> theta;
    std::vector<ScanRow> rows;
};

// Enclosure of || sum q_i alpha_i^n ||_Z by binary powering with interval
// arithmetic at escalating precision. The nearest-integer tie goes to the
// smaller integer; an exact tie is only reachable on the rational path.
// Precision exhaustion yields decided = false with the best enclosure.
DistanceSample eval_distance(const PowerSumSpec& spec, unsigned long n,
                             const EvalOptions& opt = {});

// Per-n samples over [n_from, n_to]; with theta, each row carries a rigorous
// membership verdict where the enclosure separates. Rows merge in index
// order regardless of thread count.
ScanReport scan(const PowerSumSpec& spec, unsigned long n_from, unsigned long n_to,
                std::optional<Rational> theta, const EvalOptions& opt = {});

// CSV columns: n, p, dist_lo, dist_hi, decided, theta_power, in_M.
void write_csv(const ScanReport& report, std::ostream& os);

struct WaringRow {
    unsigned k;
    Int g;           // 2^k + floor((3/2)^k) - 2
    Int floor_term;  // floor((3/2)^k)
    Int closest;
    Rational distance;  // ||(3/2)^k||_Z, exact
};

std::vector<WaringRow> waring_check(unsigned k_max);

} // namespace psl
