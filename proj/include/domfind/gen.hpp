#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domfind/graph.hpp"

namespace domfind {

// SplitMix64: state advances by 0x9E3779B97F4A7C15, output is the
// xor-shift-multiply finalizer (constants 0xBF58476D1CE4E5B9 and
// 0x94D049BB133111EB).  Fixed here so any reimplementation can reproduce
// generated graphs bit for bit.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection against the largest multiple of
    // bound, so the retry sequence is platform independent.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t limit = ~0ULL - ~0ULL % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

enum class GenKind { Random, Dag, NestedLoops, Ladder, CompleteDag };

const char* to_string(GenKind k);
bool gen_kind_from_string(const std::string& name, GenKind& out);

struct GenSpec {
    GenKind kind = GenKind::Random;
    int n = 2;
    long long m = 0;  // 0 = smallest/derived arc count for the kind
    std::uint64_t seed = 1;
    int depth = 1;  // nesting depth, nested_loops only
};

// Deterministic generator: identical spec, identical graph, on any platform.
// Every output passes validate().  Throws std::invalid_argument on an
// infeasible spec.
FlowGraph generate(const GenSpec& spec);

// Every flow graph on n vertices with start 1: all subsets of the candidate
// arcs (no loops, nothing into vertex 1) that keep every vertex reachable.
// Supported for 2 <= n <= 4.
std::vector<FlowGraph> enumerate_small(int n);

}  // namespace domfind
