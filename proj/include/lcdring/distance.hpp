#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcdring/code.hpp"

namespace lcdring {

enum class Metric { Hamming, Lee };
enum class DistanceStatus { Exact, Bounds };
enum class SearchStrategy { FullEnumeration, BoundedWeightSearch };

std::string to_string(Metric m);
std::string to_string(DistanceStatus s);
std::string to_string(SearchStrategy s);

struct DistanceOptions {
    /// Largest |C| handled by full enumeration.
    std::uint64_t budget = std::uint64_t{1} << 26;
    /// Largest number of candidate patterns the bounded search may examine.
    std::uint64_t pattern_cap = std::uint64_t{1} << 31;
    /// Highest weight level the bounded search explores.
    std::optional<std::size_t> target;
    std::optional<SearchStrategy> strategy;
    /// 0 selects LCDRING_THREADS or the hardware concurrency.
    unsigned threads = 0;
    /// Random combinations drawn for the sampled upper bound.
    std::size_t samples = 4096;
};

struct DistanceReport {
    Metric metric = Metric::Hamming;
    DistanceStatus status = DistanceStatus::Exact;
    /// Exact value; for Bounds, lower and upper hold the interval.
    std::size_t value = 0;
    std::size_t lower = 0;
    std::size_t upper = 0;
    RingVector witness;
    SearchStrategy strategy = SearchStrategy::FullEnumeration;
    std::uint64_t examined = 0;
};

std::size_t element_weight(const Ring& ring, Elem a, Metric metric);
std::size_t weight(const Ring& ring, std::span<const Elem> v, Metric metric);

using BitWord = std::vector<std::uint8_t>;

/// 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10 on Z4.
BitWord gray_map(const Ring& ring, std::span<const Elem> v);
/// Gray images of every codeword of a Z4 code, in enumeration order.
std::vector<BitWord> gray_image(const LinearCode& c);
bool is_image_linear(const std::vector<BitWord>& words);
/// Minimum Hamming distance between distinct words (0 for fewer than two).
std::size_t min_pairwise_distance(const std::vector<BitWord>& words);

/// Every codeword, in additive-basis odometer order starting from 0.
std::vector<RingVector> enumerate_codewords(const LinearCode& c);

DistanceReport min_distance(const LinearCode& c, Metric metric, const DistanceOptions& options = {});

unsigned worker_count(unsigned requested);

} // namespace lcdring
