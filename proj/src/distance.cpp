#include "lcdring/distance.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace lcdring {

std::string to_string(Metric m) { return m == Metric::Lee ? "lee" : "hamming"; }
std::string to_string(DistanceStatus s) { return s == DistanceStatus::Exact ? "exact" : "bounds"; }
std::string to_string(SearchStrategy s) {
    return s == SearchStrategy::FullEnumeration ? "FullEnumeration" : "BoundedWeightSearch";
}

unsigned worker_count(unsigned requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("LCDRING_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------
// Weights and the Gray map

std::size_t element_weight(const Ring& ring, Elem a, Metric metric) {
    if (a == 0) return 0;
    if (metric == Metric::Hamming) return 1;
    if (!ring.is_integer_residue()) fail(ErrorCode::Unsupported, "Lee weight is defined only over Z_m");
    const std::uint64_t m = ring.characteristic();
    const std::uint64_t x = ring.to_integer(a);
    return static_cast<std::size_t>(std::min(x, m - x));
}

std::size_t weight(const Ring& ring, std::span<const Elem> v, Metric metric) {
    std::size_t w = 0;
    for (auto a : v) w += element_weight(ring, a, metric);
    return w;
}

namespace {

void require_z4(const Ring& ring) {
    if (!(ring.is_chain() && ring.p() == 2 && ring.s() == 2 && ring.m() == 1))
        fail(ErrorCode::Unsupported, "the Gray map is defined on Z4");
}

} // namespace

BitWord gray_map(const Ring& ring, std::span<const Elem> v) {
    require_z4(ring);
    static constexpr std::array<std::array<std::uint8_t, 2>, 4> table{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
    BitWord out;
    out.reserve(2 * v.size());
    for (auto a : v) {
        const auto& bits = table[ring.to_integer(a)];
        out.push_back(bits[0]);
        out.push_back(bits[1]);
    }
    return out;
}

std::vector<BitWord> gray_image(const LinearCode& c) {
    require_z4(c.ring());
    std::vector<BitWord> out;
    for (const auto& w : enumerate_codewords(c)) out.push_back(gray_map(c.ring(), w));
    return out;
}

bool is_image_linear(const std::vector<BitWord>& words) {
    if (words.empty()) return false;
    const std::set<BitWord> set(words.begin(), words.end());
    const BitWord zero(words.front().size(), 0);
    if (!set.count(zero)) return false;
    BitWord sum(zero.size());
    for (auto a = set.begin(); a != set.end(); ++a)
        for (auto b = std::next(a); b != set.end(); ++b) {
            if (a->size() != b->size()) fail(ErrorCode::ShapeMismatch, "words differ in length");
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (*a)[i] ^ (*b)[i];
            if (!set.count(sum)) return false;
        }
    return true;
}

std::size_t min_pairwise_distance(const std::vector<BitWord>& words) {
    std::size_t best = 0;
    bool any = false;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            std::size_t d = 0;
            for (std::size_t t = 0; t < words[i].size(); ++t) d += words[i][t] != words[j][t];
            if (d == 0) continue;
            if (!any || d < best) best = d;
            any = true;
        }
    return best;
}

// ---------------------------------------------------------------------------
// Full enumeration

namespace {

struct Basis {
    std::vector<RingVector> gens;
    std::vector<std::uint64_t> orders;
    std::uint64_t total = 1;
};

Basis make_basis(const LinearCode& c) {
    Basis b;
    for (auto& g : c.additive_basis()) {
        b.gens.push_back(std::move(g.vector));
        b.orders.push_back(g.order);
    }
    return b;
}

std::vector<std::uint64_t> decode_index(const Basis& b, std::uint64_t idx) {
    std::vector<std::uint64_t> d(b.orders.size());
    for (std::size_t j = 0; j < d.size(); ++j) {
        d[j] = idx % b.orders[j];
        idx /= b.orders[j];
    }
    return d;
}

RingVector codeword_at(const Ring& ring, std::size_t n, const Basis& b, std::uint64_t idx) {
    const auto d = decode_index(b, idx);
    RingVector v(n, 0);
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (d[j] == 0) continue;
        for (std::size_t c = 0; c < n; ++c) v[c] = ring.add(v[c], ring.times(b.gens[j][c], d[j]));
    }
    return v;
}

// Codewords as s bit-planes over at most 64 coordinates of Z_{2^s}.
class BitslicedKernel {
public:
    BitslicedKernel(const Ring& ring, const Basis& b, Metric metric) : s_(ring.s()), metric_(metric) {
        for (const auto& g : b.gens) {
            Planes p{};
            for (std::size_t c = 0; c < g.size(); ++c) {
                const auto x = ring.to_integer(g[c]);
                for (int k = 0; k < s_; ++k)
                    if ((x >> k) & 1U) p[static_cast<std::size_t>(k)] |= std::uint64_t{1} << c;
            }
            gens_.push_back(p);
        }
    }

    void init(const std::vector<std::uint64_t>& digits) {
        state_ = Planes{};
        for (std::size_t j = 0; j < digits.size(); ++j)
            for (std::uint64_t t = 0; t < digits[j]; ++t) add(j);
    }

    void add(std::size_t j) {
        const Planes& g = gens_[j];
        std::uint64_t carry = 0;
        for (int k = 0; k < s_; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            const std::uint64_t a = state_[kk], b = g[kk];
            state_[kk] = a ^ b ^ carry;
            carry = (a & b) | (carry & (a ^ b));
        }
    }

    std::size_t weight() const {
        if (metric_ == Metric::Hamming) {
            std::uint64_t any = 0;
            for (int k = 0; k < s_; ++k) any |= state_[static_cast<std::size_t>(k)];
            return static_cast<std::size_t>(std::popcount(any));
        }
        // Negate lanes with the top bit set, then sum weighted popcounts.
        const std::uint64_t neg = state_[static_cast<std::size_t>(s_ - 1)];
        std::uint64_t carry = neg;
        std::size_t w = 0;
        for (int k = 0; k < s_; ++k) {
            const std::uint64_t t = state_[static_cast<std::size_t>(k)] ^ neg;
            const std::uint64_t bit = t ^ carry;
            carry = t & carry;
            w += static_cast<std::size_t>(std::popcount(bit)) << k;
        }
        return w;
    }

private:
    using Planes = std::array<std::uint64_t, 8>;
    int s_;
    Metric metric_;
    std::vector<Planes> gens_;
    Planes state_{};
};

// Integer residues Z_m with m <= 255.
class ByteKernel {
public:
    ByteKernel(const Ring& ring, const Basis& b, Metric metric)
        : m_(static_cast<std::uint8_t>(ring.characteristic())) {
        for (std::uint64_t x = 0; x < ring.characteristic(); ++x)
            table_.push_back(static_cast<std::uint8_t>(element_weight(ring, ring.from_integer(static_cast<std::int64_t>(x)), metric)));
        for (const auto& g : b.gens) {
            std::vector<std::uint8_t> v(g.size());
            for (std::size_t c = 0; c < g.size(); ++c) v[c] = static_cast<std::uint8_t>(ring.to_integer(g[c]));
            gens_.push_back(std::move(v));
        }
        state_.assign(b.gens.empty() ? 0 : b.gens[0].size(), 0);
    }

    void init(const std::vector<std::uint64_t>& digits) {
        std::fill(state_.begin(), state_.end(), 0);
        for (std::size_t j = 0; j < digits.size(); ++j)
            for (std::uint64_t t = 0; t < digits[j]; ++t) add(j);
    }

    void add(std::size_t j) {
        const auto& g = gens_[j];
        for (std::size_t c = 0; c < state_.size(); ++c) {
            const unsigned v = static_cast<unsigned>(state_[c]) + g[c];
            state_[c] = static_cast<std::uint8_t>(v >= m_ ? v - m_ : v);
        }
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto x : state_) w += table_[x];
        return w;
    }

private:
    std::uint8_t m_;
    std::vector<std::uint8_t> table_;
    std::vector<std::vector<std::uint8_t>> gens_;
    std::vector<std::uint8_t> state_;
};

class GenericKernel {
public:
    GenericKernel(const Ring& ring, const Basis& b, Metric metric) : ring_(ring), gens_(b.gens) {
        if (ring.cardinality() <= (std::uint64_t{1} << 16))
            for (Elem a = 0; a < ring.cardinality(); ++a) table_.push_back(element_weight(ring, a, metric));
        metric_ = metric;
        state_.assign(gens_.empty() ? 0 : gens_[0].size(), 0);
    }

    void init(const std::vector<std::uint64_t>& digits) {
        std::fill(state_.begin(), state_.end(), 0);
        for (std::size_t j = 0; j < digits.size(); ++j)
            for (std::uint64_t t = 0; t < digits[j]; ++t) add(j);
    }

    void add(std::size_t j) {
        for (std::size_t c = 0; c < state_.size(); ++c) state_[c] = ring_.add(state_[c], gens_[j][c]);
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto x : state_) w += table_.empty() ? element_weight(ring_, x, metric_) : table_[x];
        return w;
    }

private:
    Ring ring_;
    std::vector<RingVector> gens_;
    std::vector<std::size_t> table_;
    Metric metric_;
    RingVector state_;
};

struct RangeResult {
    std::size_t weight = std::numeric_limits<std::size_t>::max();
    std::uint64_t index = 0;
};

template <class Kernel>
RangeResult scan_range(Kernel kernel, const Basis& b, std::uint64_t start, std::uint64_t end) {
    RangeResult best;
    if (start >= end) return best;
    auto digits = decode_index(b, start);
    kernel.init(digits);
    for (std::uint64_t idx = start;;) {
        if (idx != 0) {
            const std::size_t w = kernel.weight();
            if (w < best.weight) {
                best.weight = w;
                best.index = idx;
            }
        }
        if (++idx == end) break;
        for (std::size_t j = 0; j < digits.size(); ++j) {
            kernel.add(j);
            if (++digits[j] < b.orders[j]) break;
            digits[j] = 0;
        }
    }
    return best;
}

template <class Kernel>
RangeResult scan_parallel(const Kernel& proto, const Basis& b, unsigned threads) {
    const std::uint64_t total = b.total;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 4096)));
    threads = std::max(1U, threads);
    std::vector<RangeResult> results(threads);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t lo = std::min(total, t * chunk);
        const std::uint64_t hi = std::min(total, lo + chunk);
        if (threads == 1) results[t] = scan_range(proto, b, lo, hi);
        else pool.emplace_back([&, t, lo, hi] { results[t] = scan_range(proto, b, lo, hi); });
    }
    for (auto& th : pool) th.join();
    RangeResult best;
    for (const auto& r : results)
        if (r.weight < best.weight || (r.weight == best.weight && r.index < best.index)) best = r;
    return best;
}

DistanceReport full_enumeration(const LinearCode& c, Metric metric, const Basis& b, unsigned threads) {
    const Ring& ring = c.ring();
    RangeResult best;
    const bool z2s = ring.is_chain() && ring.p() == 2 && ring.m() == 1 && ring.s() <= 8;
    if (z2s && c.length() <= 64) best = scan_parallel(BitslicedKernel(ring, b, metric), b, threads);
    else if (ring.is_integer_residue() && ring.characteristic() <= 255)
        best = scan_parallel(ByteKernel(ring, b, metric), b, threads);
    else best = scan_parallel(GenericKernel(ring, b, metric), b, threads);

    DistanceReport r;
    r.metric = metric;
    r.status = DistanceStatus::Exact;
    r.strategy = SearchStrategy::FullEnumeration;
    r.examined = b.total - 1;
    r.value = r.lower = r.upper = best.weight;
    r.witness = codeword_at(ring, c.length(), b, best.index);
    return r;
}

// ---------------------------------------------------------------------------
// Bounded-weight syndrome search

struct Sample {
    std::size_t weight = std::numeric_limits<std::size_t>::max();
    RingVector word;
};

Sample sampled_upper(const LinearCode& c, Metric metric, const Basis& b, std::size_t samples) {
    const Ring& ring = c.ring();
    Sample best;
    auto consider = [&](RingVector v) {
        if (is_zero_vector(v)) return;
        const std::size_t w = weight(ring, v, metric);
        if (w < best.weight || (w == best.weight && v < best.word)) {
            best.weight = w;
            best.word = std::move(v);
        }
    };
    for (const auto& g : b.gens) consider(g);
    for (std::size_t i = 0; i < c.reduced().rows(); ++i) consider(c.reduced().row_vector(i));
    std::mt19937_64 rng(0x1cdd157aULL);
    for (std::size_t s = 0; s < samples && !b.gens.empty(); ++s) {
        RingVector v(c.length(), 0);
        for (std::size_t j = 0; j < b.gens.size(); ++j) {
            const std::uint64_t d = std::uniform_int_distribution<std::uint64_t>(0, b.orders[j] - 1)(rng);
            if (d == 0) continue;
            for (std::size_t t = 0; t < v.size(); ++t) v[t] = ring.add(v[t], ring.times(b.gens[j][t], d));
        }
        consider(std::move(v));
    }
    return best;
}

class SyndromeSearch {
public:
    SyndromeSearch(const LinearCode& c, Metric metric) : ring_(c.ring()), n_(c.length()), metric_(metric) {
        const RingMatrix h = dual(c).reduced();
        r_ = h.rows();
        for (Elem a = 1; a < ring_.cardinality(); ++a) {
            values_.push_back(a);
            max_weight_ = std::max(max_weight_, element_weight(ring_, a, metric));
        }
        std::stable_sort(values_.begin(), values_.end(), [&](Elem x, Elem y) {
            return element_weight(ring_, x, metric_) < element_weight(ring_, y, metric_);
        });
        contrib_.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            contrib_[j].resize(values_.size());
            for (std::size_t v = 0; v < values_.size(); ++v) {
                RingVector s(r_);
                for (std::size_t i = 0; i < r_; ++i) s[i] = ring_.mul(values_[v], h(i, j));
                contrib_[j][v] = std::move(s);
            }
        }
    }

    /// Number of length-n vectors of exact weight w (saturating).
    long double pattern_count(std::size_t w) const {
        std::vector<long double> per(max_weight_ + 1, 0);
        for (auto a : values_) per[element_weight(ring_, a, metric_)] += 1;
        per[0] = 1;
        std::vector<long double> dp(w + 1, 0);
        dp[0] = 1;
        for (std::size_t pos = 0; pos < n_; ++pos) {
            std::vector<long double> next(w + 1, 0);
            for (std::size_t a = 0; a <= w; ++a) {
                if (dp[a] == 0) continue;
                for (std::size_t k = 0; k <= max_weight_ && a + k <= w; ++k) next[a + k] += dp[a] * per[k];
            }
            dp = std::move(next);
        }
        return dp[w];
    }

    /// Searches weight level w; the witness with the smallest first support
    /// position (then DFS order) wins.
    std::optional<RingVector> level(std::size_t w, unsigned threads, std::uint64_t& examined) {
        std::vector<std::optional<RingVector>> found(n_);
        std::vector<std::uint64_t> counts(n_, 0);
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> best_first{n_};
        auto worker = [&] {
            for (;;) {
                const std::size_t j0 = next.fetch_add(1);
                if (j0 >= n_) return;
                if (j0 > best_first.load()) continue;
                Frame f{RingVector(r_, 0), std::vector<std::pair<std::size_t, Elem>>{}, 0};
                if (dfs(j0, true, w, f, counts[j0])) {
                    RingVector v(n_, 0);
                    for (auto [pos, val] : f.support) v[pos] = val;
                    found[j0] = std::move(v);
                    std::size_t cur = best_first.load();
                    while (j0 < cur && !best_first.compare_exchange_weak(cur, j0)) {}
                }
            }
        };
        threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n_)));
        if (threads == 1) worker();
        else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        const std::size_t first = best_first.load();
        for (std::size_t j = 0; j < n_ && j <= first; ++j) examined += counts[j];
        if (first < n_) return found[first];
        return std::nullopt;
    }

private:
    struct Frame {
        RingVector syndrome;
        std::vector<std::pair<std::size_t, Elem>> support;
        std::size_t depth;
    };

    bool dfs(std::size_t pos, bool fixed, std::size_t remaining, Frame& f, std::uint64_t& count) {
        const std::size_t end = fixed ? pos + 1 : n_;
        for (std::size_t j = pos; j < end; ++j) {
            const std::size_t left = n_ - j - 1;
            for (std::size_t v = 0; v < values_.size(); ++v) {
                const std::size_t wv = element_weight(ring_, values_[v], metric_);
                if (wv > remaining) break;
                const std::size_t rest = remaining - wv;
                if (rest > left * max_weight_) continue;
                const auto& add = contrib_[j][v];
                if (rest == 0) {
                    ++count;
                    bool zero = true;
                    for (std::size_t i = 0; i < r_ && zero; ++i) zero = ring_.add(f.syndrome[i], add[i]) == 0;
                    if (zero) {
                        f.support.emplace_back(j, values_[v]);
                        return true;
                    }
                    continue;
                }
                RingVector saved = f.syndrome;
                for (std::size_t i = 0; i < r_; ++i) f.syndrome[i] = ring_.add(f.syndrome[i], add[i]);
                f.support.emplace_back(j, values_[v]);
                if (dfs(j + 1, false, rest, f, count)) return true;
                f.support.pop_back();
                f.syndrome = std::move(saved);
            }
        }
        return false;
    }

    Ring ring_;
    std::size_t n_;
    Metric metric_;
    std::size_t r_ = 0;
    std::size_t max_weight_ = 0;
    std::vector<Elem> values_;
    std::vector<std::vector<RingVector>> contrib_;
};

DistanceReport bounded_search(const LinearCode& c, Metric metric, const Basis& b, const DistanceOptions& o,
                              unsigned threads) {
    DistanceReport r;
    r.metric = metric;
    r.strategy = SearchStrategy::BoundedWeightSearch;
    Sample up = sampled_upper(c, metric, b, o.samples);
    SyndromeSearch search(c, metric);
    const std::size_t limit = o.target ? std::min(*o.target, up.weight - 1) : up.weight - 1;
    std::uint64_t examined = 0;
    std::size_t w = 1;
    for (; w <= limit; ++w) {
        const long double patterns = search.pattern_count(w);
        if (static_cast<long double>(examined) + patterns > static_cast<long double>(o.pattern_cap)) break;
        if (auto hit = search.level(w, threads, examined)) {
            r.status = DistanceStatus::Exact;
            r.value = r.lower = r.upper = w;
            r.witness = std::move(*hit);
            r.examined = examined;
            return r;
        }
    }
    r.examined = examined;
    if (w == up.weight) {
        r.status = DistanceStatus::Exact;
        r.value = r.lower = r.upper = up.weight;
        r.witness = std::move(up.word);
        return r;
    }
    r.status = DistanceStatus::Bounds;
    r.lower = w;
    r.upper = up.weight;
    r.witness = std::move(up.word);
    return r;
}

} // namespace

std::vector<RingVector> enumerate_codewords(const LinearCode& c) {
    Basis b = make_basis(c);
    BigInt total = 1;
    for (auto o : b.orders) total *= o;
    if (total > BigInt(std::uint64_t{1} << 32)) fail(ErrorCode::Unsupported, "code too large to enumerate");
    b.total = static_cast<std::uint64_t>(total);
    std::vector<RingVector> out;
    out.reserve(b.total);
    RingVector v(c.length(), 0);
    std::vector<std::uint64_t> digits(b.orders.size(), 0);
    const Ring& ring = c.ring();
    for (std::uint64_t idx = 0; idx < b.total; ++idx) {
        out.push_back(v);
        for (std::size_t j = 0; j < digits.size(); ++j) {
            for (std::size_t t = 0; t < v.size(); ++t) v[t] = ring.add(v[t], b.gens[j][t]);
            if (++digits[j] < b.orders[j]) break;
            digits[j] = 0;
        }
    }
    return out;
}

DistanceReport min_distance(const LinearCode& c, Metric metric, const DistanceOptions& options) {
    if (metric == Metric::Lee && !c.ring().is_integer_residue())
        fail(ErrorCode::Unsupported, "Lee weight is defined only over Z_m");
    Basis b = make_basis(c);
    if (c.cardinality() == 1) {
        DistanceReport r;
        r.metric = metric;
        r.strategy = options.strategy.value_or(SearchStrategy::FullEnumeration);
        return r;
    }
    const bool small = c.cardinality() <= BigInt(options.budget);
    if (small) b.total = static_cast<std::uint64_t>(c.cardinality());
    const SearchStrategy strategy =
        options.strategy.value_or(small ? SearchStrategy::FullEnumeration : SearchStrategy::BoundedWeightSearch);
    const unsigned threads = worker_count(options.threads);
    if (strategy == SearchStrategy::FullEnumeration) {
        if (!small) fail(ErrorCode::Unsupported, "code exceeds the enumeration budget");
        return full_enumeration(c, metric, b, threads);
    }
    return bounded_search(c, metric, b, options, threads);
}

} // namespace lcdring
