#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ringforge/complex.hpp"
#include "ringforge/graph.hpp"

namespace ringforge {

inline constexpr std::uint32_t kCacheFormatVersion = 1;

/// FNV-1a 64-bit content hash, used for cache validation.
std::uint64_t fnv1a(const void* data, std::size_t len);
std::string fnv1a_hex(const std::string& bytes);

// Binary little-endian serialization (versioned headers).
std::string serialize_complex(const CellularComplex& cx);
CellularComplex deserialize_complex(const std::string& bytes);
void write_complex_file(const std::filesystem::path& file, const CellularComplex& cx);
CellularComplex read_complex_file(const std::filesystem::path& file);

std::string serialize_dataset(const GraphDataset& ds);
GraphDataset deserialize_dataset(const std::string& bytes);
void write_dataset_file(const std::filesystem::path& file, const GraphDataset& ds);
GraphDataset read_dataset_file(const std::filesystem::path& file);

/// On-disk layout: <cache_dir>/<dataset>/<m>/<graph_idx>.cplx plus
/// index.json (format version, dataset hash, per-file content hashes, cell
/// counts) and dataset.bin (the parsed graphs, features and labels).
struct ComplexCache {
  std::filesystem::path root;  // <cache_dir>/<dataset>
  std::string dataset_name;
  std::vector<std::size_t> granularities;
  std::map<std::size_t, std::vector<CellularComplex>> complexes;  // m -> per graph

  std::size_t n_graphs() const {
    return complexes.empty() ? 0 : complexes.begin()->second.size();
  }
  bool covers(const std::vector<std::size_t>& ms) const;
  const CellularComplex& get(std::size_t m, std::size_t graph_idx) const;

  // Rebuild statistics from the producing preprocess call.
  std::size_t built = 0;
  std::size_t reused = 0;
};

/// One-time preprocessing: lifts every graph at every granularity and
/// persists the results. Reruns verify content hashes and rebuild nothing.
/// Granularities must be strictly increasing and >= 3 (ConfigError).
ComplexCache preprocess_dataset(const GraphDataset& dataset,
                                const std::vector<std::size_t>& granularities,
                                const std::filesystem::path& cache_dir);

/// Loads a previously preprocessed cache; IoError when absent or stale.
ComplexCache load_cache(const std::filesystem::path& cache_dir, const std::string& dataset_name);

/// Loads only the serialized dataset from a cache directory.
GraphDataset load_cached_dataset(const std::filesystem::path& cache_dir,
                                 const std::string& dataset_name);

}  // namespace ringforge
