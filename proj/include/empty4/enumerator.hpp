#pragma once

#include <functional>
#include <string>
#include <vector>

#include "empty4/census.hpp"
#include "empty4/geometry.hpp"
#include "empty4/tuple.hpp"

namespace empty4 {

inline constexpr i64 kVolumeCap = 7600;
inline constexpr i64 kSublatticeCap = 20;

/// Switches for the search space reductions. The defaults are the fast path;
/// the others exist to test that each reduction loses nothing.
struct EnumerateOptions {
  bool unit_first = true;    // b0 = -1
  bool sorted = true;        // remaining entries nondecreasing
  bool gcd_screen = true;    // no prime of V divides two entries
  bool facet_screen = true;  // facet pairing condition
};

/// One canonical tuple per isomorphism class of empty 4-simplices of volume
/// V, in increasing order.
std::vector<CanonicalTuple> enumerate_empty(i64 volume, const EnumerateOptions& opts = {});

/// enumerate_empty(V) without the members of any infinite family.
std::vector<CanonicalTuple> sporadic_tuples(i64 volume);

/// Sum of vertex-orbit counts over the sporadic tuples of volume V.
i64 singularity_count(i64 volume);

struct SearchConfig {
  i64 v_min = 1;
  i64 v_max = 1;
  int workers = 1;
  bool prune_families = true;
  std::string checkpoint_path;  // empty: no checkpointing
  EnumerateOptions options;
};

/// Throws InvalidArgument or VolumeTooLarge.
void validate_config(const SearchConfig& cfg);
/// Text describing the output-relevant parts of the config (not workers).
std::string describe_config(const SearchConfig& cfg);

struct VolumeBatch {
  i64 volume = 0;
  std::vector<CanonicalTuple> tuples;
};

/// Runs the search on cfg.workers threads and hands each volume's result
/// to sink in increasing V, from the calling thread.
void run_search(const SearchConfig& cfg, const std::function<void(const VolumeBatch&)>& sink);

/// Families pruned or not according to cfg.prune_families.
Census enumerate_census(const SearchConfig& cfg);
/// Same with prune_families forced on.
Census enumerate_sporadic(SearchConfig cfg);

/// Streams rows to a census file. With a checkpoint path, progress is
/// recorded after every volume and an interrupted run resumes where it
/// stopped. Throws Checkpoint if the checkpoint belongs to another config.
void enumerate_to_file(const SearchConfig& cfg, const std::string& out_path);

/// Empty 4-simplices of volume V found without assuming cyclicity: all
/// index-V sublattices in Hermite form, filtered by point counting, one per
/// lattice-equivalence class. Throws VolumeTooLarge above max_volume.
std::vector<SimplexCoords> enumerate_via_sublattices(i64 volume, i64 max_volume = kSublatticeCap);

}  // namespace empty4
