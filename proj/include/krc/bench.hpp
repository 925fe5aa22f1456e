#pragma once

#include <string>
#include <vector>

namespace krc {

// Runs a JSON manifest and returns one JSON text line per record, in
// manifest order regardless of thread scheduling.
//
// Manifest shapes:
//   {"instances": [{"id", "spec" or "file", "r", "k", "profile",
//                   "oracle": bool, "audit": bool}, ...]}
//   {"scaling": {"family": <planted spec without s>, "profile", "r",
//                "k_min", "k_max", "seed"}}
//
// Instance records echo the inputs plus decision and stats; when "oracle"
// is set the oracle verdict is recorded and mismatches counted. Scaling
// manifests emit one measurement line per k plus a least-squares fit line
// relating log2(leaves) to k^epsilon * log2(k) and kernel width to
// k^((1+epsilon(phi+1))*alpha).
struct BenchResult {
    std::vector<std::string> lines;
    int mismatches = 0;
};

// threads <= 0 reads KRC_THREADS, then hardware concurrency.
BenchResult run_bench_manifest(const std::string& manifest_json, int threads = 0);

}  // namespace krc
