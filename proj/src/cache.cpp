#include "ringforge/cache.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include <nlohmann/json.hpp>

#include "ringforge/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "cache serialization assumes a little-endian host");

namespace ringforge {

using ordered_json = nlohmann::ordered_json;

std::uint64_t fnv1a(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a(bytes.data(), bytes.size());
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  char buf[4];
  std::memcpy(buf, &v, 4);
  out.append(buf, 4);
}

void put_i32(std::string& out, std::int32_t v) { put_u32(out, static_cast<std::uint32_t>(v)); }

void put_f64(std::string& out, double v) {
  char buf[8];
  std::memcpy(buf, &v, 8);
  out.append(buf, 8);
}

struct Reader {
  const std::string& bytes;
  std::size_t pos = 0;

  void need(std::size_t n) const {
    if (pos + n > bytes.size()) throw FormatError("serialized blob truncated");
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v;
    std::memcpy(&v, bytes.data() + pos, 4);
    pos += 4;
    return v;
  }
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  double f64() {
    need(8);
    double v;
    std::memcpy(&v, bytes.data() + pos, 8);
    pos += 8;
    return v;
  }
  std::string str(std::size_t n) {
    need(n);
    std::string s = bytes.substr(pos, n);
    pos += n;
    return s;
  }
  void expect_magic(const char* magic) {
    const std::size_t n = std::strlen(magic);
    if (str(n) != magic) throw FormatError(std::string("bad magic, expected ") + magic);
  }
};

std::string slurp(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return bytes;
}

void spill(const std::filesystem::path& file, const std::string& bytes) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + file.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("short write to " + file.string());
}

}  // namespace

std::string serialize_complex(const CellularComplex& cx) {
  std::string out;
  out += "RFCPLX";
  put_u32(out, kCacheFormatVersion);
  put_u32(out, static_cast<std::uint32_t>(cx.n0));
  put_u32(out, static_cast<std::uint32_t>(cx.n1));
  put_u32(out, static_cast<std::uint32_t>(cx.n2));
  put_u32(out, static_cast<std::uint32_t>(cx.granularity));
  for (const auto& [u, v] : cx.edge_boundary) {
    put_u32(out, u);
    put_u32(out, v);
  }
  for (std::size_t r = 0; r < cx.n2; ++r) {
    put_u32(out, static_cast<std::uint32_t>(cx.ring_vertices[r].size()));
    for (VertexId v : cx.ring_vertices[r]) put_u32(out, v);
    for (EdgeId e : cx.ring_boundary[r]) put_u32(out, e);
  }
  return out;
}

CellularComplex deserialize_complex(const std::string& bytes) {
  Reader r{bytes};
  r.expect_magic("RFCPLX");
  if (r.u32() != kCacheFormatVersion) throw FormatError("complex blob: unsupported version");
  CellularComplex cx;
  cx.n0 = r.u32();
  cx.n1 = r.u32();
  cx.n2 = r.u32();
  cx.granularity = r.u32();
  cx.edge_boundary.resize(cx.n1);
  for (auto& [u, v] : cx.edge_boundary) {
    u = r.u32();
    v = r.u32();
  }
  cx.ring_vertices.resize(cx.n2);
  cx.ring_boundary.resize(cx.n2);
  for (std::size_t i = 0; i < cx.n2; ++i) {
    const std::uint32_t len = r.u32();
    cx.ring_vertices[i].resize(len);
    for (auto& v : cx.ring_vertices[i]) v = r.u32();
    cx.ring_boundary[i].resize(len);
    for (auto& e : cx.ring_boundary[i]) e = r.u32();
  }
  cx.validate();
  return cx;
}

void write_complex_file(const std::filesystem::path& file, const CellularComplex& cx) {
  spill(file, serialize_complex(cx));
}

CellularComplex read_complex_file(const std::filesystem::path& file) {
  return deserialize_complex(slurp(file));
}

std::string serialize_dataset(const GraphDataset& ds) {
  std::string out;
  out += "RFDATA";
  put_u32(out, kCacheFormatVersion);
  put_u32(out, static_cast<std::uint32_t>(ds.name.size()));
  out += ds.name;
  put_u32(out, static_cast<std::uint32_t>(ds.graphs.size()));
  put_u32(out, static_cast<std::uint32_t>(ds.n_classes));
  put_u32(out, ds.feature_mode == FeatureMode::node_labels_onehot ? 1u : 0u);
  put_u32(out, static_cast<std::uint32_t>(ds.feature_dim()));
  for (const auto& g : ds.graphs) {
    put_u32(out, static_cast<std::uint32_t>(g.n_nodes));
    put_i32(out, g.label);
    put_u32(out, static_cast<std::uint32_t>(g.edges.size()));
    for (const auto& [u, v] : g.edges) {
      put_u32(out, u);
      put_u32(out, v);
    }
    for (double x : g.node_features.data()) put_f64(out, x);
  }
  return out;
}

GraphDataset deserialize_dataset(const std::string& bytes) {
  Reader r{bytes};
  r.expect_magic("RFDATA");
  if (r.u32() != kCacheFormatVersion) throw FormatError("dataset blob: unsupported version");
  GraphDataset ds;
  ds.name = r.str(r.u32());
  const std::uint32_t n_graphs = r.u32();
  ds.n_classes = r.u32();
  ds.feature_mode = r.u32() == 1 ? FeatureMode::node_labels_onehot : FeatureMode::degree_onehot;
  const std::uint32_t f0 = r.u32();
  ds.graphs.resize(n_graphs);
  for (auto& g : ds.graphs) {
    g.n_nodes = r.u32();
    g.label = r.i32();
    g.edges.resize(r.u32());
    for (auto& [u, v] : g.edges) {
      u = r.u32();
      v = r.u32();
    }
    std::vector<double> feat(g.n_nodes * f0);
    for (auto& x : feat) x = r.f64();
    g.node_features = Mat(g.n_nodes, f0, std::move(feat));
    g.validate();
  }
  return ds;
}

void write_dataset_file(const std::filesystem::path& file, const GraphDataset& ds) {
  spill(file, serialize_dataset(ds));
}

GraphDataset read_dataset_file(const std::filesystem::path& file) {
  return deserialize_dataset(slurp(file));
}

bool ComplexCache::covers(const std::vector<std::size_t>& ms) const {
  for (std::size_t m : ms) {
    if (!complexes.count(m)) return false;
  }
  return true;
}

const CellularComplex& ComplexCache::get(std::size_t m, std::size_t graph_idx) const {
  const auto it = complexes.find(m);
  if (it == complexes.end()) {
    throw ConfigError("cache: granularity " + std::to_string(m) + " not preprocessed");
  }
  return it->second.at(graph_idx);
}

namespace {

void check_granularities(const std::vector<std::size_t>& ms) {
  if (ms.empty()) throw ConfigError("granularities: at least one required");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i] < 3) throw ConfigError("granularities: each must be >= 3");
    if (i > 0 && ms[i] <= ms[i - 1]) {
      throw ConfigError("granularities: must be strictly increasing");
    }
  }
}

ordered_json load_index(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return {};
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::exception&) {
    return {};  // stale/corrupt index forces a rebuild
  }
}

}  // namespace

ComplexCache preprocess_dataset(const GraphDataset& dataset,
                                const std::vector<std::size_t>& granularities,
                                const std::filesystem::path& cache_dir) {
  check_granularities(granularities);
  if (dataset.graphs.empty()) throw ContractError("preprocess_dataset: empty dataset");

  ComplexCache cache;
  cache.root = cache_dir / dataset.name;
  cache.dataset_name = dataset.name;
  cache.granularities = granularities;

  std::error_code ec;
  std::filesystem::create_directories(cache.root, ec);
  if (ec) throw IoError("cannot create cache dir " + cache.root.string() + ": " + ec.message());

  const std::string dataset_bytes = serialize_dataset(dataset);
  const std::string dataset_hash = fnv1a_hex(dataset_bytes);

  ordered_json index = load_index(cache.root / "index.json");
  const bool index_valid = index.is_object() &&
                           index.value("format_version", 0u) == kCacheFormatVersion &&
                           index.value("dataset_hash", "") == dataset_hash;
  ordered_json old_files = index_valid && index.contains("files") ? index["files"] : ordered_json::object();

  const auto dataset_file = cache.root / "dataset.bin";
  if (!index_valid || !std::filesystem::exists(dataset_file)) {
    write_dataset_file(dataset_file, dataset);
  }

  ordered_json files = old_files;
  for (std::size_t m : granularities) {
    const auto mdir = cache.root / std::to_string(m);
    std::filesystem::create_directories(mdir, ec);
    if (ec) throw IoError("cannot create " + mdir.string() + ": " + ec.message());
    auto& vec = cache.complexes[m];
    vec.reserve(dataset.graphs.size());
    for (std::size_t i = 0; i < dataset.graphs.size(); ++i) {
      const std::string rel = std::to_string(m) + "/" + std::to_string(i) + ".cplx";
      const auto file = cache.root / rel;
      bool reuse = false;
      if (files.contains(rel) && std::filesystem::exists(file)) {
        const std::string bytes = slurp(file);
        if (fnv1a_hex(bytes) == files[rel].get<std::string>()) {
          vec.push_back(deserialize_complex(bytes));
          reuse = true;
        }
      }
      if (!reuse) {
        CellularComplex cx = build_complex(dataset.graphs[i], m);
        const std::string bytes = serialize_complex(cx);
        spill(file, bytes);
        files[rel] = fnv1a_hex(bytes);
        vec.push_back(std::move(cx));
        ++cache.built;
      } else {
        ++cache.reused;
      }
    }
  }

  // Rebuild the index with deterministic ordering and per-m cell counts.
  std::vector<std::size_t> all_ms;
  for (std::size_t m : granularities) all_ms.push_back(m);
  if (index_valid && index.contains("granularities")) {
    for (const auto& m : index["granularities"]) {
      const auto mv = m.get<std::size_t>();
      if (std::find(all_ms.begin(), all_ms.end(), mv) == all_ms.end()) all_ms.push_back(mv);
    }
  }
  std::sort(all_ms.begin(), all_ms.end());

  ordered_json out;
  out["format_version"] = kCacheFormatVersion;
  out["dataset"] = dataset.name;
  out["dataset_hash"] = dataset_hash;
  out["n_graphs"] = dataset.graphs.size();
  out["granularities"] = all_ms;
  ordered_json sorted_files = ordered_json::object();
  {
    std::vector<std::string> keys;
    for (auto& [k, v] : files.items()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    for (const auto& k : keys) sorted_files[k] = files[k];
  }
  out["files"] = sorted_files;
  ordered_json counts = ordered_json::object();
  for (const auto& [m, vec] : cache.complexes) {
    std::size_t n2_total = 0;
    for (const auto& cx : vec) n2_total += cx.n2;
    counts[std::to_string(m)] = {{"n2_total", n2_total}};
  }
  out["counts"] = counts;
  spill(cache.root / "index.json", out.dump(2) + "\n");

  return cache;
}

ComplexCache load_cache(const std::filesystem::path& cache_dir, const std::string& dataset_name) {
  ComplexCache cache;
  cache.root = cache_dir / dataset_name;
  cache.dataset_name = dataset_name;
  const auto index_file = cache.root / "index.json";
  if (!std::filesystem::exists(index_file)) {
    throw IoError("cache missing: " + index_file.string() + " (run preprocess first)");
  }
  ordered_json index = load_index(index_file);
  if (!index.is_object() || index.value("format_version", 0u) != kCacheFormatVersion) {
    throw IoError("cache index invalid or unsupported version: " + index_file.string());
  }
  const std::size_t n_graphs = index.value("n_graphs", std::size_t{0});
  for (const auto& mj : index["granularities"]) {
    const std::size_t m = mj.get<std::size_t>();
    auto& vec = cache.complexes[m];
    vec.reserve(n_graphs);
    for (std::size_t i = 0; i < n_graphs; ++i) {
      const std::string rel = std::to_string(m) + "/" + std::to_string(i) + ".cplx";
      const auto file = cache.root / rel;
      const std::string bytes = slurp(file);
      if (!index["files"].contains(rel) ||
          index["files"][rel].get<std::string>() != fnv1a_hex(bytes)) {
        throw IoError("cache file stale or corrupt: " + file.string());
      }
      vec.push_back(deserialize_complex(bytes));
    }
    cache.granularities.push_back(m);
  }
  return cache;
}

GraphDataset load_cached_dataset(const std::filesystem::path& cache_dir,
                                 const std::string& dataset_name) {
  const auto file = cache_dir / dataset_name / "dataset.bin";
  if (!std::filesystem::exists(file)) {
    throw IoError("cache missing: " + file.string() + " (run preprocess first)");
  }
  return read_dataset_file(file);
}

}  // namespace ringforge
