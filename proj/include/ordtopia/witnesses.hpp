#pragma once

#include "ordtopia/report.hpp"
#include "ordtopia/sequence.hpp"

#include <string>
#include <vector>

namespace ordtopia {

// Block-pattern streams: a two-coordinate head followed by blocks
// (0, 1/k, ..., k/k) for k = 2, 3, .... Blocks up to `last_block` are
// materialized and the rest is the shared "svensson-blocks" tail, so every
// pair built with the same `last_block` is aligned.

/// x = (0, 1, 0, 1/2, 1, 0, 1/3, 2/3, 1, ...)
SeqModel svensson_x(std::size_t last_block);
/// l = x with the first coordinate raised to 1.
SeqModel svensson_l(std::size_t last_block);
/// y_1 = x; for n >= 2, y_n has head (1, 1) and block n shifted right by one
/// (0, 0, 1/n, ..., (n-1)/n). Requires 1 <= n <= last_block.
SeqModel svensson_y(std::size_t n, std::size_t last_block);
/// Index of the first coordinate of block k (k >= 2).
std::size_t svensson_block_start(std::size_t k);

/// (1/2 - 2^-n, 1/2 - 2^-n, 0, ...)
SeqModel eneg_x(std::size_t n);
/// (1/2, 1/2, 0, ...)
SeqModel eneg_z();
/// (1/2, 0, ...)
SeqModel eneg_y();
/// (1/2, 1/2, ...)
SeqModel half_ones();

SeqModel zero_stream();
/// n coordinates equal to 1/n, then zeros.
SeqModel uniform_block(std::size_t n);
/// 1 at the 1-based coordinate n, zeros elsewhere.
SeqModel spike(std::size_t n);

enum class SeqMetric { ds, dc, dp, d1, dq };

const char* seq_metric_name(SeqMetric m) noexcept;

struct MetricParams {
  double p = 2.0;
  double q = 0.5;
};

/// Distance from the zero stream to simplex points. For d_s, d_c and d_p it
/// emits witnesses whose distances decrease to 0 (uniform blocks, or spikes
/// for d_c); for d_1 and d_q it certifies that every witness sits at exactly 1.
CheckReport simplex_witnesses(SeqMetric metric, std::size_t n_max, const MetricParams& params = {});

/// Witness sizes visited for a given bound: 1..64, then powers of two, then
/// n_max itself.
std::vector<std::size_t> witness_schedule(std::size_t n_max);

}  // namespace ordtopia
