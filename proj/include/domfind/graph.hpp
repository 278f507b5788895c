#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace domfind {

// Vertices are numbered 1..n; the start vertex is part of the graph.
struct Arc {
    int tail = 0;
    int head = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

// A flow graph: a directed graph with a start vertex from which every vertex
// is reachable.  The arc sequence is the canonical iteration order; all
// adjacency lists preserve it, so every traversal in this library is a pure
// function of the input.  Immutable after construction.
class FlowGraph {
public:
    FlowGraph() = default;
    // Range-checks vertex ids only; semantic rules (loop arcs, duplicates,
    // reachability) are reported by validate().
    FlowGraph(int n, int start, std::vector<Arc> arcs);

    int n() const { return n_; }
    int m() const { return static_cast<int>(arcs_.size()); }
    int start() const { return start_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int a) const { return arcs_[static_cast<size_t>(a)]; }

    // Arc indices, in input order.
    const std::vector<int>& out_arcs(int v) const { return out_[static_cast<size_t>(v)]; }
    const std::vector<int>& in_arcs(int v) const { return in_[static_cast<size_t>(v)]; }

    int in_degree(int v) const { return static_cast<int>(in_[static_cast<size_t>(v)].size()); }

private:
    int n_ = 0;
    int start_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

// Text format:
//   # comment
//   p <n> <m> <s>
//   a <tail> <head>     (exactly m such lines)
FlowGraph parse_graph(std::istream& in);
void serialize_graph(const FlowGraph& g, std::ostream& out);

enum class ViolationKind {
    TooFewVertices,
    UnreachableVertex,
    ArcIntoStart,
    LoopArc,
    DuplicateArc,
};

struct Violation {
    ViolationKind kind;
    int vertex = 0;     // offending vertex, when applicable
    int arc_index = 0;  // offending arc, when applicable
    std::string to_string() const;
};

// Reports every semantic rule the graph breaks; empty result means valid.
// Graphs produced by the acyclic reduction may carry duplicate arcs, so the
// duplicate check can be waived for them.
std::vector<Violation> validate(const FlowGraph& g, bool allow_duplicate_arcs = false);

struct NormalizeResult {
    FlowGraph graph;
    // old_to_new[v] is the new id of old vertex v, or 0 if v was dropped.
    std::vector<int> old_to_new;
};

// Drops loop arcs, arcs into the start vertex, and duplicate arcs (first
// occurrence kept), restricts to the part reachable from the start, and
// renumbers vertices preserving relative order.  Throws std::runtime_error
// if fewer than two vertices remain.
NormalizeResult normalize(const FlowGraph& g);

}  // namespace domfind
