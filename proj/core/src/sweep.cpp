#include "sc6/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include <json.hpp>
#include <zlib.h>

#include "sc6/binaryqf.hpp"
#include "sc6/qseries.hpp"
#include "sc6/ternary.hpp"

namespace sc6 {

namespace {

// FNV-1a fold of the (n, value) pairs of a chunk, little-endian u64 bytes,
// n ascending. value is r_Q(24n+35) under the counting kernel and the 0/1
// positivity indicator under the fast kernel.
struct Fnv64 {
    std::uint64_t h = 0xcbf29ce484222325ull;
    void feed_u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ull;
        }
    }
};

struct ChunkResult {
    ChunkDigest digest;
    std::vector<std::uint64_t> exceptions;
    bool from_checkpoint = false;
};

// ---- checkpoint file --------------------------------------------------
// Little-endian layout:
//   magic "SC6CKPT1" | n_max u64 | table_bound u64 | kernel u8 |
//   completed u32 | completed x (start u64, end u64, digest u64) |
//   exceptions u32 | exceptions x u64 | crc32 u32 (of everything before)

constexpr char kMagic[8] = {'S', 'C', '6', 'C', 'K', 'P', 'T', '1'};

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back((char)((v >> (8 * i)) & 0xff));
}
void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back((char)((v >> (8 * i)) & 0xff));
}

struct CheckpointState {
    std::uint64_t n_max = 0;
    std::uint64_t table_bound = 0;
    bool counting_kernel = false;
    std::vector<ChunkResult> completed;
};

std::string serialize_checkpoint(const CheckpointState& st) {
    std::string out(kMagic, sizeof kMagic);
    put_u64(out, st.n_max);
    put_u64(out, st.table_bound);
    out.push_back(st.counting_kernel ? 1 : 0);
    put_u32(out, (std::uint32_t)st.completed.size());
    for (const ChunkResult& c : st.completed) {
        put_u64(out, c.digest.start);
        put_u64(out, c.digest.end);
        put_u64(out, c.digest.digest);
    }
    std::size_t total_exceptions = 0;
    for (const ChunkResult& c : st.completed) total_exceptions += c.exceptions.size();
    put_u32(out, (std::uint32_t)total_exceptions);
    for (const ChunkResult& c : st.completed)
        for (std::uint64_t n : c.exceptions) put_u64(out, n);
    std::uint32_t crc = (std::uint32_t)crc32(0, (const Bytef*)out.data(), (uInt)out.size());
    put_u32(out, crc);
    return out;
}

void write_checkpoint_atomically(const std::string& path, const CheckpointState& st) {
    std::string payload = serialize_checkpoint(st);
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("checkpoint: cannot open " + tmp);
        f.write(payload.data(), (std::streamsize)payload.size());
        if (!f) throw std::runtime_error("checkpoint: short write to " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw std::runtime_error("checkpoint: rename failed: " + ec.message());
}

class CheckpointReader {
public:
    explicit CheckpointReader(const std::string& bytes) : bytes_(bytes) {}
    std::uint64_t u64() {
        require(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= (std::uint64_t)(std::uint8_t)bytes_[pos_ + (std::size_t)i] << (8 * i);
        pos_ += 8;
        return v;
    }
    std::uint32_t u32() {
        require(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= (std::uint32_t)(std::uint8_t)bytes_[pos_ + (std::size_t)i] << (8 * i);
        pos_ += 4;
        return v;
    }
    std::uint8_t u8() {
        require(1);
        return (std::uint8_t)bytes_[pos_++];
    }
    std::size_t pos() const { return pos_; }

private:
    void require(std::size_t n) {
        if (pos_ + n > bytes_.size())
            throw std::runtime_error("checkpoint: truncated file; start fresh");
    }
    const std::string& bytes_;
    std::size_t pos_ = 0;
};

CheckpointState read_checkpoint(const std::string& path, std::uint64_t n_max,
                                std::uint64_t table_bound, bool counting_kernel) {
    std::ifstream f(path, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (bytes.size() < sizeof kMagic + 4 || std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0)
        throw std::runtime_error("checkpoint: bad magic/version; refuse to resume, start fresh");
    std::uint32_t stored_crc = 0;
    std::memcpy(&stored_crc, bytes.data() + bytes.size() - 4, 4);
    std::uint32_t computed =
        (std::uint32_t)crc32(0, (const Bytef*)bytes.data(), (uInt)(bytes.size() - 4));
    if (stored_crc != computed)
        throw std::runtime_error("checkpoint: CRC mismatch; refuse to resume, start fresh");

    CheckpointReader r(bytes);
    r.u64(); // skip magic (read as one u64)
    CheckpointState st;
    st.n_max = r.u64();
    st.table_bound = r.u64();
    st.counting_kernel = r.u8() != 0;
    if (st.n_max != n_max)
        throw std::runtime_error("checkpoint: n_max mismatch with config; start fresh");
    if (st.table_bound != table_bound)
        throw std::runtime_error("checkpoint: table bound mismatch with config; start fresh");
    if (st.counting_kernel != counting_kernel)
        throw std::runtime_error("checkpoint: kernel mismatch with config; start fresh");
    std::uint32_t ranges = r.u32();
    st.completed.resize(ranges);
    for (std::uint32_t i = 0; i < ranges; ++i) {
        st.completed[i].digest.start = r.u64();
        st.completed[i].digest.end = r.u64();
        st.completed[i].digest.digest = r.u64();
        st.completed[i].from_checkpoint = true;
    }
    std::uint32_t exceptions = r.u32();
    for (std::uint32_t i = 0; i < exceptions; ++i) {
        std::uint64_t n = r.u64();
        // Exceptions are stored grouped per completed range, in file order.
        for (ChunkResult& c : st.completed)
            if (n >= c.digest.start && n < c.digest.end) {
                c.exceptions.push_back(n);
                break;
            }
    }
    return st;
}

ChunkResult process_chunk(std::uint64_t start, std::uint64_t end,
                          std::span<const std::uint32_t> table, bool counting_kernel) {
    ChunkResult result;
    result.digest.start = start;
    result.digest.end = end;
    Fnv64 fnv;
    for (std::uint64_t n = start; n < end; ++n) {
        std::int64_t N = 24 * (std::int64_t)n + 35;
        std::uint64_t value;
        if (counting_kernel) value = (std::uint64_t)rq_fast(N, table);
        else value = rq_positive(N, table) ? 1 : 0;
        fnv.feed_u64(n);
        fnv.feed_u64(value);
        if (value == 0) result.exceptions.push_back(n);
    }
    result.digest.digest = fnv.h;
    return result;
}

} // namespace

std::string SweepReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["n_max"] = n_max;
    j["exceptions"] = exceptions;
    j["chunk_digests"] = nlohmann::ordered_json::array();
    for (const ChunkDigest& c : chunk_digests) {
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx", (unsigned long long)c.digest);
        j["chunk_digests"].push_back(
            {{"start", c.start}, {"end", c.end}, {"digest_hex", hex}});
    }
    j["elapsed_ms"] = elapsed.count();
    j["kernel"] = counting_kernel ? "counting" : "fast";
    return j.dump(2) + "\n";
}

SweepReport sweep_positivity(const SweepConfig& cfg) {
    if (cfg.chunk_size < 1) throw std::invalid_argument("sweep: chunk_size must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();

    const std::uint64_t table_bound = (24 * cfg.n_max + 35 + 31) / 32;
    const auto table = loeschian_table((std::int64_t)table_bound);

    const std::uint64_t total = cfg.n_max + 1;
    const std::uint64_t chunk_count = (total + cfg.chunk_size - 1) / cfg.chunk_size;
    std::vector<ChunkResult> results(chunk_count);
    std::vector<char> done(chunk_count, 0);

    CheckpointState ckpt{cfg.n_max, table_bound, cfg.counting_kernel, {}};
    if (cfg.checkpoint_path && std::filesystem::exists(*cfg.checkpoint_path)) {
        ckpt = read_checkpoint(*cfg.checkpoint_path, cfg.n_max, table_bound, cfg.counting_kernel);
        for (ChunkResult& c : ckpt.completed) {
            if (c.digest.start % cfg.chunk_size != 0)
                throw std::runtime_error("checkpoint: range does not align with chunk size; start fresh");
            std::uint64_t idx = c.digest.start / cfg.chunk_size;
            if (idx >= chunk_count || results[idx].digest.end != 0)
                throw std::runtime_error("checkpoint: overlapping or out-of-range chunk; start fresh");
            results[idx] = c;
            done[idx] = 1;
        }
    }

    unsigned workers = cfg.worker_count != 0 ? cfg.worker_count
                                             : std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> newly_done{0};
    std::mutex ckpt_mutex;
    std::exception_ptr worker_error;
    bool stopped_early = false;

    // Highest n whose result has actually reached disk; reported when a
    // later checkpoint write fails (the previous file stays valid thanks
    // to the atomic rename).
    std::int64_t durable_through = -1;
    for (const ChunkResult& c : ckpt.completed)
        durable_through = std::max(durable_through, (std::int64_t)c.digest.end - 1);

    auto worker = [&] {
        for (;;) {
            std::uint64_t idx = next.fetch_add(1);
            if (idx >= chunk_count) return;
            if (done[idx]) continue;
            if (cfg.stop_after_chunks != 0 && newly_done.load() >= cfg.stop_after_chunks) return;
            std::uint64_t start = idx * cfg.chunk_size;
            std::uint64_t end = std::min(start + cfg.chunk_size, total);
            ChunkResult r = process_chunk(start, end, table, cfg.counting_kernel);
            if (cfg.checkpoint_path) {
                std::lock_guard<std::mutex> lock(ckpt_mutex);
                results[idx] = std::move(r);
                done[idx] = 1;
                ckpt.completed.clear();
                for (std::uint64_t i = 0; i < chunk_count; ++i)
                    if (done[i]) ckpt.completed.push_back(results[i]);
                try {
                    write_checkpoint_atomically(*cfg.checkpoint_path, ckpt);
                } catch (const std::exception& e) {
                    throw std::runtime_error(std::string(e.what()) +
                                             "; last durable checkpoint covers n <= " +
                                             std::to_string(durable_through));
                }
                for (const ChunkResult& c : ckpt.completed)
                    durable_through = std::max(durable_through, (std::int64_t)c.digest.end - 1);
            } else {
                results[idx] = std::move(r);
                done[idx] = 1;
            }
            newly_done.fetch_add(1);
        }
    };
    auto guarded_worker = [&] {
        try {
            worker();
        } catch (...) {
            std::lock_guard<std::mutex> lock(ckpt_mutex);
            if (!worker_error) worker_error = std::current_exception();
        }
    };

    if (workers == 1) {
        worker(); // propagate directly
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(guarded_worker);
        for (auto& t : pool) t.join();
        if (worker_error) std::rethrow_exception(worker_error);
    }

    for (std::uint64_t i = 0; i < chunk_count; ++i)
        if (!done[i]) stopped_early = true;

    SweepReport report;
    report.n_max = cfg.n_max;
    report.table_bound = table_bound;
    report.counting_kernel = cfg.counting_kernel;
    report.complete = !stopped_early;
    for (std::uint64_t i = 0; i < chunk_count; ++i) {
        if (!done[i]) continue;
        report.chunk_digests.push_back(results[i].digest);
        report.exceptions.insert(report.exceptions.end(), results[i].exceptions.begin(),
                                 results[i].exceptions.end());
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return report;
}

CheckReport verify_sc6_identity(std::int64_t n_max) {
    if (n_max < 0) throw std::invalid_argument("verify_sc6_identity: negative bound");
    CheckReport report("sc6-lattice-identity");
    IntSeries sc6 = sc6_series(n_max + 1);
    auto table = loeschian_table((24 * n_max + 35) / 32 + 1);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        report.count();
        mpz_class lhs = 12 * sc6[n];
        std::int64_t rhs = rq_fast(24 * n + 35, table);
        if (lhs != rhs)
            report.fail(n, "n=" + std::to_string(n) + ": 12*sc6=" + lhs.get_str() +
                               " vs r_Q=" + std::to_string(rhs));
    }
    return report;
}

CheckReport verify_squarefree_theorem(std::span<const std::int64_t> p_list) {
    CheckReport report("squarefree-theorem");
    for (std::int64_t p : p_list)
        if (p < 5 || !is_prime(p))
            throw std::invalid_argument("verify_squarefree_theorem: primes must be >= 5");

    static constexpr std::int64_t exceptional_N[] = {83, 323, 347, 1787};
    std::int64_t max_p = 0;
    for (std::int64_t p : p_list) max_p = std::max(max_p, p);
    auto table = loeschian_table(std::max<std::int64_t>(1787 * max_p * max_p, 100000) / 32 + 1);

    for (std::int64_t N : exceptional_N) {
        report.count();
        if (!is_squarefree(N))
            report.fail(N, "exceptional N=" + std::to_string(N) + " is not squarefree");
        for (std::int64_t p : p_list) {
            if (N % p == 0) continue;
            report.count();
            if (rq_fast(N * p * p, table) <= 0)
                report.fail(N, "r_Q(" + std::to_string(N) + "*" + std::to_string(p) +
                                   "^2) is zero");
        }
    }
    for (std::int64_t n = 0; 24 * n + 35 <= 100000; ++n) {
        std::int64_t N = 24 * n + 35;
        if (is_squarefree(N)) continue;
        report.count();
        if (!rq_positive(N, table))
            report.fail(N, "non-squarefree N=" + std::to_string(N) + " has r_Q = 0");
    }
    return report;
}

} // namespace sc6
