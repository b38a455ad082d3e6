#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sc6/report.hpp"

namespace sc6 {

struct SweepConfig {
    std::uint64_t n_max = 916348;
    std::uint64_t chunk_size = 65536;
    unsigned worker_count = 0; // 0 = hardware concurrency
    std::optional<std::string> checkpoint_path;
    bool counting_kernel = false; // full r_Q per n instead of early-exit positivity
    // Testing hook: stop after this many newly processed chunks (0 = run to
    // completion). A stopped run leaves a resumable checkpoint behind.
    std::uint64_t stop_after_chunks = 0;
};

struct ChunkDigest {
    std::uint64_t start = 0; // first n of the chunk
    std::uint64_t end = 0;   // one past the last n
    std::uint64_t digest = 0;
};

struct SweepReport {
    std::uint64_t n_max = 0;
    std::vector<std::uint64_t> exceptions; // n with r_Q(24n+35) = 0, ascending
    std::vector<ChunkDigest> chunk_digests;
    std::chrono::milliseconds elapsed{0};
    std::uint64_t table_bound = 0;
    bool counting_kernel = false;
    bool complete = true;

    // {schema_version, n_max, exceptions, chunk_digests, elapsed_ms, kernel}
    std::string to_json() const;
};

// Verifies r_Q(24n+35) > 0 for every n in [0, n_max], recording the n where
// it fails. One Loeschian table serves all chunks; chunks are independent
// work units merged in range order, so the outcome is identical for any
// worker count and completion order.
SweepReport sweep_positivity(const SweepConfig& cfg);

// 12 sc6(n) = r_Q(24n+35) for every n <= n_max, with sc6 from the eta
// product and r_Q from the lattice kernel.
CheckReport verify_sc6_identity(std::int64_t n_max);

// For each exceptional squarefree N in {83, 323, 347, 1787} and each prime
// p in the list with p not dividing N, asserts r_Q(N p^2) > 0; then scans
// every non-squarefree N = 24n+35 <= 100000 and asserts r_Q(N) > 0.
CheckReport verify_squarefree_theorem(std::span<const std::int64_t> p_list);

} // namespace sc6
