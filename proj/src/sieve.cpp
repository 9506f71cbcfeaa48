#include "nfbertrand/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <thread>

#include "nfbertrand/errors.hpp"
#include "split_fast.hpp"

namespace nfb {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

constexpr u64 kCoeffMax = 0xFFFFFFFFull;

} // namespace

std::uint64_t local_coefficient(const std::vector<std::pair<int, int>>& factors, int k) {
    if (k < 0) throw validation_error("local_coefficient: k must be nonnegative");
    // number of ways to write k = sum f_i a_i, a_i >= 0
    std::vector<u64> ways(k + 1, 0);
    ways[0] = 1;
    for (auto [e, f] : factors) {
        (void)e;
        for (int j = f; j <= k; ++j) ways[j] += ways[j - f];
    }
    return ways[k];
}

CoefficientTable CoefficientTable::build(const NumberField& field, std::uint64_t limit,
                                         const BuildOptions& options) {
    field.validate();
    if (limit < 1) throw validation_error("build_table: limit must be >= 1");
    if (limit > options.memory_cap)
        throw computation_error("build_table: limit " + std::to_string(limit) +
                                " exceeds memory cap " + std::to_string(options.memory_cap));
    if (limit > kCoeffMax)
        throw computation_error("build_table: limit exceeds 32-bit table addressing");

    CoefficientTable table;
    table.limit_ = limit;
    table.label_ = field.label;
    table.degree_ = field.degree;

    const u64 X = limit;
    std::vector<u32>& c = table.coeff_;
    c.assign(X + 1, 0);
    c[1] = 1;

    // pw[n] = spf(n)^v_spf(n); linear sieve
    std::vector<u32> pw(X + 1, 0);
    std::vector<u32> primes;
    if (X >= 1) pw[1] = 1;
    for (u64 i = 2; i <= X; ++i) {
        if (pw[i] == 0) {
            pw[i] = u32(i);
            primes.push_back(u32(i));
        }
        for (u32 p : primes) {
            if (p > X / i) break;
            if (i % p == 0) {
                pw[p * i] = pw[i] * p;
                break;
            }
            pw[p * i] = p;
        }
    }

    // per-prime splitting work, chunked across workers
    struct Local {
        std::vector<std::pair<u64, double>> mangoldt;
        std::vector<u64> norms;
        std::exception_ptr error;
    };
    int workers = std::max(1, options.workers);
    if (u64(workers) > primes.size() / 64 + 1) workers = int(primes.size() / 64 + 1);
    std::vector<Local> locals(workers);

    auto process_range = [&](std::size_t lo, std::size_t hi, Local& local) {
        try {
            for (std::size_t idx = lo; idx < hi; ++idx) {
                const u64 p = primes[idx];
                if (field.degree >= 3 && field.polynomial.empty() &&
                    !field.splitting_overrides.count(std::int64_t(p)))
                    throw computation_error("build_table: field '" + field.label +
                                            "' needs a defining polynomial or splitting data");
                SplittingRecord rec = detail::split_prime_fast(field, p, options.seed);
                if (!rec.reliable)
                    throw computation_error(
                        "build_table: unreliable splitting at p=" + std::to_string(p) +
                        " (p^2 | disc); supply explicit splitting data for field '" +
                        field.label + "'");
                if (rec.degree() != field.degree)
                    throw computation_error("build_table: splitting at p=" + std::to_string(p) +
                                            " violates sum e_i f_i = d");

                // prime norms
                for (auto [e, f] : rec.factors) {
                    (void)e;
                    u64 norm = 1;
                    bool fits = true;
                    for (int i = 0; i < f; ++i) {
                        if (norm > X / p) {
                            fits = false;
                            break;
                        }
                        norm *= p;
                    }
                    if (fits && norm <= X) local.norms.push_back(norm);
                }

                // local coefficients and von Mangoldt at p^k
                const double logp = std::log(double(p));
                int k = 0;
                for (u64 q = p; q <= X; q *= p) {
                    ++k;
                    u64 ck = local_coefficient(rec.factors, k);
                    if (ck > kCoeffMax)
                        throw computation_error("build_table: coefficient overflow at " +
                                                std::to_string(q));
                    c[q] = u32(ck);
                    int weight = 0;
                    for (auto [e, f] : rec.factors) {
                        (void)e;
                        if (k % f == 0) weight += f;
                    }
                    if (weight > 0) local.mangoldt.emplace_back(q, double(weight) * logp);
                    if (q > X / p) break;
                }
            }
        } catch (...) {
            local.error = std::current_exception();
        }
    };

    if (workers == 1) {
        process_range(0, primes.size(), locals[0]);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (primes.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::size_t lo = std::min(std::size_t(w) * chunk, primes.size());
            std::size_t hi = std::min(lo + chunk, primes.size());
            pool.emplace_back(process_range, lo, hi, std::ref(locals[w]));
        }
        for (auto& t : pool) t.join();
    }
    for (auto& local : locals)
        if (local.error) std::rethrow_exception(local.error);

    for (auto& local : locals) {
        table.mangoldt_.insert(table.mangoldt_.end(), local.mangoldt.begin(), local.mangoldt.end());
        table.norms_.insert(table.norms_.end(), local.norms.begin(), local.norms.end());
    }
    std::sort(table.mangoldt_.begin(), table.mangoldt_.end());
    std::sort(table.norms_.begin(), table.norms_.end());

    // multiplicative fill over smallest-prime-factor decomposition
    for (u64 n = 2; n <= X; ++n) {
        if (pw[n] == n) continue; // prime power, already set
        u64 prod = u64(c[pw[n]]) * u64(c[n / pw[n]]);
        if (prod > kCoeffMax)
            throw computation_error("build_table: coefficient overflow at " + std::to_string(n));
        c[n] = u32(prod);
    }

    table.finalize();
    return table;
}

void CoefficientTable::finalize() {
    prefix_.assign(limit_ + 1, 0);
    u64 acc = 0;
    for (u64 n = 1; n <= limit_; ++n) {
        acc += coeff_[n];
        prefix_[n] = acc;
    }

    mangoldt_prefix_.resize(mangoldt_.size());
    mangoldt_over_n_prefix_.resize(mangoldt_.size());
    long double s1 = 0, s2 = 0;
    for (std::size_t i = 0; i < mangoldt_.size(); ++i) {
        s1 += mangoldt_[i].second;
        s2 += mangoldt_[i].second / (long double)(mangoldt_[i].first);
        mangoldt_prefix_[i] = double(s1);
        mangoldt_over_n_prefix_[i] = double(s2);
    }

    norm_log_ratio_prefix_.resize(norms_.size());
    long double s3 = 0;
    for (std::size_t i = 0; i < norms_.size(); ++i) {
        long double q = (long double)(norms_[i]);
        s3 += std::log(double(norms_[i])) / q;
        norm_log_ratio_prefix_[i] = double(s3);
    }
}

std::uint32_t CoefficientTable::coefficient(std::uint64_t n) const {
    if (n < 1 || n > limit_)
        throw validation_error("coefficient: index out of range");
    return coeff_[n];
}

double CoefficientTable::mangoldt(std::uint64_t n) const {
    if (n < 1 || n > limit_)
        throw validation_error("mangoldt: index out of range");
    auto it = std::lower_bound(mangoldt_.begin(), mangoldt_.end(), std::make_pair(n, 0.0));
    if (it != mangoldt_.end() && it->first == n) return it->second;
    return 0.0;
}

std::uint64_t CoefficientTable::count_ideals(double x) const {
    if (!(x >= 1) || x > double(limit_))
        throw validation_error("count_ideals: x out of range [1, limit]");
    return prefix_[u64(x)];
}

namespace {

constexpr char kCacheMagic[4] = {'N', 'F', 'B', 'T'};
constexpr u32 kCacheVersion = 1;

template <class T>
void write_raw(std::ostream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
bool read_raw(std::istream& in, T& v) {
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    return bool(in);
}

} // namespace

void CoefficientTable::save_cache(const std::string& path) const {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot write table cache: " + path);
        out.write(kCacheMagic, 4);
        write_raw(out, kCacheVersion);
        u32 label_len = u32(label_.size());
        write_raw(out, label_len);
        out.write(label_.data(), label_len);
        write_raw(out, limit_);
        write_raw(out, degree_);
        out.write(reinterpret_cast<const char*>(coeff_.data() + 1),
                  std::streamsize(limit_ * sizeof(u32)));
        u64 msize = mangoldt_.size();
        write_raw(out, msize);
        for (const auto& [n, v] : mangoldt_) {
            write_raw(out, n);
            write_raw(out, v);
        }
        u64 nsize = norms_.size();
        write_raw(out, nsize);
        out.write(reinterpret_cast<const char*>(norms_.data()),
                  std::streamsize(nsize * sizeof(u64)));
        if (!out) throw io_error("short write to table cache: " + path);
    }
    std::filesystem::rename(tmp, target);
}

std::optional<CoefficientTable> CoefficientTable::load_cache(const std::string& path,
                                                             const std::string& label,
                                                             std::uint64_t limit) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kCacheMagic, 4) != 0) return std::nullopt;
    u32 version = 0, label_len = 0;
    if (!read_raw(in, version) || version != kCacheVersion) return std::nullopt;
    if (!read_raw(in, label_len) || label_len > 4096) return std::nullopt;
    std::string stored(label_len, '\0');
    in.read(stored.data(), label_len);
    u64 stored_limit = 0;
    int degree = 0;
    if (!in || !read_raw(in, stored_limit) || !read_raw(in, degree)) return std::nullopt;
    if (stored != label || stored_limit != limit) return std::nullopt;

    CoefficientTable table;
    table.limit_ = limit;
    table.label_ = stored;
    table.degree_ = degree;
    table.coeff_.assign(limit + 1, 0);
    in.read(reinterpret_cast<char*>(table.coeff_.data() + 1), std::streamsize(limit * sizeof(u32)));
    u64 msize = 0;
    if (!in || !read_raw(in, msize) || msize > limit) return std::nullopt;
    table.mangoldt_.resize(msize);
    for (auto& [n, v] : table.mangoldt_) {
        if (!read_raw(in, n) || !read_raw(in, v)) return std::nullopt;
    }
    u64 nsize = 0;
    if (!read_raw(in, nsize) || nsize > u64(std::max(degree, 1)) * limit + 1) return std::nullopt;
    table.norms_.resize(nsize);
    in.read(reinterpret_cast<char*>(table.norms_.data()), std::streamsize(nsize * sizeof(u64)));
    if (!in) return std::nullopt;
    table.finalize();
    return table;
}

} // namespace nfb
