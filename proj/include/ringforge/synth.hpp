#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace ringforge {

struct SynthOptions {
  std::size_t n_graphs = 80;
  std::uint64_t seed = 7;
  bool with_node_labels = true;
  /// Class 0 graphs carry small rings (3..6), class 1 graphs large rings
  /// (7..10), so ring granularity separates the classes.
  std::size_t small_ring_min = 3, small_ring_max = 6;
  std::size_t large_ring_min = 7, large_ring_max = 10;
};

/// Writes a two-class synthetic dataset in TU text format under
/// `dir/<name>/` and returns that directory. Deterministic in the seed.
std::filesystem::path write_synthetic_tu_dataset(const std::filesystem::path& dir,
                                                 const std::string& name,
                                                 const SynthOptions& options = {});

}  // namespace ringforge
