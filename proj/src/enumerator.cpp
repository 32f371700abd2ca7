#include "empty4/enumerator.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "empty4/error.hpp"
#include "empty4/families.hpp"
#include "empty4/lattice.hpp"

namespace empty4 {
namespace {

using Key = std::array<i64, 5>;

struct VolumeContext {
  i64 v = 1;
  std::vector<std::uint32_t> mask;  // bit k set iff the k-th prime of V divides r
  explicit VolumeContext(i64 volume) : v(volume), mask(static_cast<std::size_t>(volume), 0) {
    const auto primes = prime_factors(volume);
    for (i64 r = 0; r < volume; ++r)
      for (std::size_t k = 0; k < primes.size(); ++k)
        if (r % primes[k] == 0) mask[r] |= 1u << k;
  }
};

// Every class j in [1, V) must have fractional barycentric sum >= 2. Class
// V - j has sum (#nonzero - sum_j), so half the range suffices.
bool classes_empty(const Key& e, i64 v) {
  i64 r[5] = {0, 0, 0, 0, 0};
  for (i64 j = 1; 2 * j <= v; ++j) {
    i64 s = 0, nz = 0;
    for (int i = 0; i < 5; ++i) {
      r[i] += e[i];
      if (r[i] >= v) r[i] -= v;
      s += r[i];
      nz += (r[i] != 0);
    }
    if (s < 2 * v || nz * v - s < 2 * v) return false;
  }
  return true;
}

bool facet_pairs(const Key& e, i64 v) {
  for (int i = 0; i < 5; ++i) {
    const i64 vi = std::gcd(v, e[i]);
    if (vi == 1) continue;
    i64 x[4];
    int n = 0;
    for (int j = 0; j < 5; ++j) {
      if (j == i) continue;
      x[n] = e[j] % vi;
      if (std::gcd(x[n], vi) != 1) return false;
      ++n;
    }
    auto opp = [vi](i64 a, i64 b) { return (a + b) % vi == 0; };
    if (!((opp(x[0], x[1]) && opp(x[2], x[3])) || (opp(x[0], x[2]) && opp(x[1], x[3])) ||
          (opp(x[0], x[3]) && opp(x[1], x[2]))))
      return false;
  }
  return true;
}

class Scanner {
 public:
  Scanner(const VolumeContext& ctx, const EnumerateOptions& opts, std::vector<Key>& out)
      : c_(ctx), o_(opts), out_(out) {}

  // The chunk fixes the first free entry: b1 when b0 = -1, else b0.
  void run(i64 chunk) {
    const i64 v = c_.v;
    if (o_.unit_first) {
      e_[0] = v - 1;
      e_[1] = chunk;
      target_ = 1;
      level(2, o_.sorted ? chunk : 0, c_.mask[chunk], chunk);
    } else {
      e_[0] = chunk;
      target_ = 0;
      level(1, o_.sorted ? chunk : 0, c_.mask[chunk], chunk);
    }
  }

 private:
  void level(int pos, i64 lo, std::uint32_t used, i64 sum) {
    const i64 v = c_.v;
    if (pos < 3) {
      for (i64 x = lo; x < v; ++x) {
        const std::uint32_t m = c_.mask[x];
        if (o_.gcd_screen && (used & m)) continue;
        e_[pos] = x;
        level(pos + 1, o_.sorted ? x : 0, used | m, sum + x);
      }
      return;
    }
    // Last free entry; b4 is forced by the zero-sum condition and moves
    // down by one as b3 moves up.
    i64 y = mod(target_ - sum - lo, v);
    for (i64 x = lo; x < v; ++x, y = (y == 0 ? v - 1 : y - 1)) {
      if (o_.sorted && y < x) continue;
      const std::uint32_t m = c_.mask[x] | used;
      if (o_.gcd_screen && ((c_.mask[x] & used) || (m & c_.mask[y]))) continue;
      e_[3] = x;
      e_[4] = y;
      if (o_.facet_screen && (m | c_.mask[y]) != 0 && !facet_pairs(e_, v)) continue;
      if (!classes_empty(e_, v)) continue;
      Key k;
      canonical_residues(v, e_, k);
      out_.push_back(k);
    }
  }

  const VolumeContext& c_;
  const EnumerateOptions& o_;
  std::vector<Key>& out_;
  Key e_{};
  i64 target_ = 0;
};

std::vector<Key> scan_chunk(const VolumeContext& ctx, const EnumerateOptions& opts, i64 chunk) {
  std::vector<Key> out;
  if (ctx.v == 1) {
    if (chunk == 0) out.push_back(Key{});
    return out;
  }
  Scanner(ctx, opts, out).run(chunk);
  return out;
}

std::vector<CanonicalTuple> to_tuples(i64 v, std::vector<Key>& keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<CanonicalTuple> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(canonical_from_sorted(v, k));
  return out;
}

std::vector<CanonicalTuple> drop_family_members(std::vector<CanonicalTuple> all) {
  std::vector<CanonicalTuple> out;
  for (auto& t : all)
    if (!in_any_family(t)) out.push_back(std::move(t));
  return out;
}

}  // namespace

std::vector<CanonicalTuple> enumerate_empty(i64 volume, const EnumerateOptions& opts) {
  if (volume < 1) raise(ErrorCode::InvalidArgument, "volume must be positive");
  if (volume > kVolumeCap) raise(ErrorCode::VolumeTooLarge, "volume above " + std::to_string(kVolumeCap));
  VolumeContext ctx(volume);
  std::vector<Key> keys;
  for (i64 chunk = 0; chunk < volume; ++chunk) {
    auto part = scan_chunk(ctx, opts, chunk);
    keys.insert(keys.end(), part.begin(), part.end());
  }
  return to_tuples(volume, keys);
}

std::vector<CanonicalTuple> sporadic_tuples(i64 volume) { return drop_family_members(enumerate_empty(volume)); }

i64 singularity_count(i64 volume) {
  i64 total = 0;
  for (const auto& t : sporadic_tuples(volume)) total += symmetry_group(t).orbit_count;
  return total;
}

void validate_config(const SearchConfig& cfg) {
  if (cfg.v_min < 1 || cfg.v_min > cfg.v_max)
    raise(ErrorCode::InvalidArgument, "volume range must satisfy 1 <= from <= to");
  if (cfg.v_max > kVolumeCap) raise(ErrorCode::VolumeTooLarge, "volume above " + std::to_string(kVolumeCap));
  if (cfg.workers < 1) raise(ErrorCode::InvalidArgument, "workers must be at least 1");
}

std::string describe_config(const SearchConfig& cfg) {
  std::string s = "from=" + std::to_string(cfg.v_min) + " to=" + std::to_string(cfg.v_max) +
                  (cfg.prune_families ? " sporadic" : " all");
  const auto& o = cfg.options;
  if (!o.unit_first) s += " no-unit-first";
  if (!o.sorted) s += " unsorted";
  if (!o.gcd_screen) s += " no-gcd-screen";
  if (!o.facet_screen) s += " no-facet-screen";
  return s;
}

void run_search(const SearchConfig& cfg, const std::function<void(const VolumeBatch&)>& sink) {
  validate_config(cfg);
  const i64 nvol = cfg.v_max - cfg.v_min + 1;

  struct Task {
    std::size_t vol_index;
    i64 chunk;
  };
  std::vector<Task> tasks;
  std::vector<VolumeContext> contexts;
  contexts.reserve(static_cast<std::size_t>(nvol));
  std::vector<std::size_t> first_task;
  for (i64 v = cfg.v_min; v <= cfg.v_max; ++v) {
    const std::size_t vi = contexts.size();
    contexts.emplace_back(v);
    first_task.push_back(tasks.size());
    for (i64 c = 0; c < v; ++c) tasks.push_back({vi, c});
  }
  first_task.push_back(tasks.size());

  std::vector<std::vector<Key>> partial(tasks.size());
  std::vector<std::atomic<std::size_t>> remaining(static_cast<std::size_t>(nvol));
  for (std::size_t vi = 0; vi < remaining.size(); ++vi) remaining[vi] = first_task[vi + 1] - first_task[vi];
  std::vector<std::optional<VolumeBatch>> done(static_cast<std::size_t>(nvol));

  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::exception_ptr failure;

  auto finish_volume = [&](std::size_t vi) {
    std::vector<Key> keys;
    for (std::size_t t = first_task[vi]; t < first_task[vi + 1]; ++t) {
      keys.insert(keys.end(), partial[t].begin(), partial[t].end());
      std::vector<Key>().swap(partial[t]);
    }
    VolumeBatch batch;
    batch.volume = contexts[vi].v;
    batch.tuples = to_tuples(batch.volume, keys);
    if (cfg.prune_families) batch.tuples = drop_family_members(std::move(batch.tuples));
    std::lock_guard lock(mu);
    done[vi] = std::move(batch);
    cv.notify_all();
  };

  auto worker = [&]() {
    try {
      while (!abort) {
        const std::size_t t = next.fetch_add(1);
        if (t >= tasks.size()) break;
        const auto& task = tasks[t];
        partial[t] = scan_chunk(contexts[task.vol_index], cfg.options, task.chunk);
        if (remaining[task.vol_index].fetch_sub(1) == 1) finish_volume(task.vol_index);
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      abort = true;
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (int w = 0; w < cfg.workers; ++w) pool.emplace_back(worker);
  auto stop = [&]() {
    abort = true;
    for (auto& th : pool)
      if (th.joinable()) th.join();
  };

  try {
    for (std::size_t vi = 0; vi < done.size(); ++vi) {
      VolumeBatch batch;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return done[vi].has_value() || failure; });
        if (failure) break;
        batch = std::move(*done[vi]);
        done[vi].reset();
      }
      sink(batch);
    }
  } catch (...) {
    stop();
    throw;
  }
  stop();
  if (failure) std::rethrow_exception(failure);
}

namespace {

std::vector<std::pair<std::string, std::string>> census_header(const SearchConfig& cfg) {
  const std::string desc = describe_config(cfg);
  return {{"generator", "empty4 1.0"}, {"config", desc}, {"config-hash", config_hash(desc)}};
}

}  // namespace

Census enumerate_census(const SearchConfig& cfg) {
  Census c;
  c.metadata = census_header(cfg);
  run_search(cfg, [&](const VolumeBatch& b) { c.rows.insert(c.rows.end(), b.tuples.begin(), b.tuples.end()); });
  return c;
}

Census enumerate_sporadic(SearchConfig cfg) {
  cfg.prune_families = true;
  return enumerate_census(cfg);
}

void enumerate_to_file(const SearchConfig& cfg, const std::string& out_path) {
  validate_config(cfg);
  namespace fs = std::filesystem;
  using nlohmann::json;
  const auto header = census_header(cfg);
  const std::string hash = header.back().second;

  SearchConfig run = cfg;
  bool resume = false;
  if (!cfg.checkpoint_path.empty() && fs::exists(cfg.checkpoint_path)) {
    json state;
    try {
      std::ifstream in(cfg.checkpoint_path);
      state = json::parse(in);
      if (state.at("config_hash").get<std::string>() != hash)
        raise(ErrorCode::Checkpoint, "checkpoint " + cfg.checkpoint_path + " belongs to a different configuration");
      const i64 last = state.at("last_volume").get<i64>();
      const auto offset = state.at("offset").get<std::uintmax_t>();
      if (!fs::exists(out_path) || fs::file_size(out_path) < offset)
        raise(ErrorCode::Checkpoint, "output file is shorter than the checkpoint records");
      fs::resize_file(out_path, offset);
      if (last >= cfg.v_max) return;
      run.v_min = last + 1;
      resume = true;
    } catch (const json::exception& e) {
      raise(ErrorCode::Checkpoint, std::string("unreadable checkpoint: ") + e.what());
    } catch (const fs::filesystem_error& e) {
      raise(ErrorCode::Checkpoint, e.what());
    }
  }

  std::ofstream out(out_path, resume ? std::ios::binary | std::ios::app : std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::Io, "cannot open " + out_path + " for writing");
  if (!resume) {
    Census head;
    head.metadata = header;
    write_census(head, out);
  }

  auto save = [&](i64 last_volume) {
    out.flush();
    if (!out) raise(ErrorCode::Io, "write to " + out_path + " failed");
    if (cfg.checkpoint_path.empty()) return;
    json state = {{"config_hash", hash},
                  {"config", header[1].second},
                  {"last_volume", last_volume},
                  {"offset", static_cast<std::uintmax_t>(fs::file_size(out_path))}};
    const std::string tmp = cfg.checkpoint_path + ".tmp";
    {
      std::ofstream cp(tmp, std::ios::trunc);
      cp << state.dump(2) << '\n';
      if (!cp) raise(ErrorCode::Checkpoint, "cannot write " + tmp);
    }
    fs::rename(tmp, cfg.checkpoint_path);
  };

  if (!resume) save(cfg.v_min - 1);
  run_search(run, [&](const VolumeBatch& b) {
    for (const auto& t : b.tuples) out << census_row(t) << '\n';
    save(b.volume);
  });
}

std::vector<SimplexCoords> enumerate_via_sublattices(i64 volume, i64 max_volume) {
  if (volume < 1) raise(ErrorCode::InvalidArgument, "volume must be positive");
  if (volume > max_volume)
    raise(ErrorCode::VolumeTooLarge, "sublattice enumeration is limited to V <= " + std::to_string(max_volume));
  constexpr int d = 4;

  std::vector<SimplexCoords> reps;
  std::multimap<std::vector<i64>, std::size_t> buckets;

  auto consider = [&](const IntMatrix& h) {
    std::vector<std::vector<i64>> verts(1, std::vector<i64>(d, 0));
    // The standard simplex in the superlattice dual to h's column lattice,
    // written in the basis dual to h: its vertices are the rows of h.
    for (int r = 0; r < d; ++r) {
      std::vector<i64> row(d);
      for (int c = 0; c < d; ++c) row[c] = h(r, c);
      verts.push_back(std::move(row));
    }
    auto s = SimplexCoords::make(std::move(verts));
    if (count_lattice_points_brute(s) != static_cast<std::uint64_t>(d + 1)) return;
    auto key = facet_volumes_geometric(s);
    std::sort(key.begin(), key.end());
    auto [lo, hi] = buckets.equal_range(key);
    for (auto it = lo; it != hi; ++it)
      if (lattice_equivalent(reps[it->second], s)) return;
    buckets.emplace(key, reps.size());
    reps.push_back(std::move(s));
  };

  // Upper-triangular Hermite bases: diagonal (d0..d3) with product V and
  // entries right of the diagonal in row r reduced into [0, d_r).
  std::array<i64, d> diag{};
  IntMatrix h(d, d);
  auto fill = [&](auto&& self, int r, int c) -> void {
    if (r < 0) {
      consider(h);
      return;
    }
    if (c == d) {
      self(self, r - 1, r - 1);
      return;
    }
    if (c == r) {
      h(r, c) = diag[r];
      self(self, r, c + 1);
      return;
    }
    for (i64 x = 0; x < diag[r]; ++x) {
      h(r, c) = x;
      self(self, r, c + 1);
    }
  };
  auto split = [&](auto&& self, int i, i64 rest) -> void {
    if (i == d - 1) {
      diag[i] = rest;
      fill(fill, d - 1, d - 1);
      return;
    }
    for (i64 x = 1; x <= rest; ++x)
      if (rest % x == 0) {
        diag[i] = x;
        self(self, i + 1, rest / x);
      }
  };
  split(split, 0, volume);
  return reps;
}

}  // namespace empty4
