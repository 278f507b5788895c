#include "domfind/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace domfind {

FlowGraph::FlowGraph(int n, int start, std::vector<Arc> arcs)
    : n_(n), start_(start), arcs_(std::move(arcs)) {
    if (n < 1)
        throw std::invalid_argument("flow graph needs at least one vertex");
    if (start < 1 || start > n)
        throw std::invalid_argument("start vertex out of range");
    out_.assign(static_cast<size_t>(n) + 1, {});
    in_.assign(static_cast<size_t>(n) + 1, {});
    for (size_t a = 0; a < arcs_.size(); ++a) {
        const Arc& arc = arcs_[a];
        if (arc.tail < 1 || arc.tail > n || arc.head < 1 || arc.head > n)
            throw std::invalid_argument("arc endpoint out of range");
        out_[static_cast<size_t>(arc.tail)].push_back(static_cast<int>(a));
        in_[static_cast<size_t>(arc.head)].push_back(static_cast<int>(a));
    }
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

// Splits on single spaces; the format is rigid enough that a failed numeric
// conversion or a stray token is a syntax error.
std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : line) {
        if (c == ' ') {
            if (!cur.empty()) tokens.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("expected integer for ") + what);
    }
    if (pos != tok.size())
        throw ParseError(line_no, std::string("trailing characters after ") + what);
    if (value < -2147483647L || value > 2147483647L)
        throw ParseError(line_no, std::string("integer out of range for ") + what);
    return static_cast<int>(value);
}

}  // namespace

FlowGraph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0, m = 0, s = 0;
    std::vector<Arc> arcs;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        std::vector<std::string> tok = tokenize(line);
        if (!have_header) {
            if (tok.size() != 4 || tok[0] != "p")
                throw ParseError(line_no, "expected header 'p <n> <m> <s>'");
            n = parse_int(tok[1], line_no, "vertex count");
            m = parse_int(tok[2], line_no, "arc count");
            s = parse_int(tok[3], line_no, "start vertex");
            if (n < 1) throw ParseError(line_no, "vertex count must be positive");
            if (m < 0) throw ParseError(line_no, "arc count must be non-negative");
            if (s < 1 || s > n) throw ParseError(line_no, "start vertex out of range");
            arcs.reserve(static_cast<size_t>(m));
            have_header = true;
            continue;
        }
        if (tok.size() != 3 || tok[0] != "a")
            throw ParseError(line_no, "expected arc line 'a <tail> <head>'");
        int tail = parse_int(tok[1], line_no, "arc tail");
        int head = parse_int(tok[2], line_no, "arc head");
        if (tail < 1 || tail > n) throw ParseError(line_no, "vertex id out of range");
        if (head < 1 || head > n) throw ParseError(line_no, "vertex id out of range");
        arcs.push_back(Arc{tail, head});
        if (static_cast<int>(arcs.size()) > m)
            throw ParseError(line_no, "more arc lines than declared in header");
    }
    if (!have_header) throw ParseError(line_no, "missing header line");
    if (static_cast<int>(arcs.size()) != m)
        throw ParseError(line_no, "fewer arc lines than declared in header");
    return FlowGraph(n, s, std::move(arcs));
}

void serialize_graph(const FlowGraph& g, std::ostream& out) {
    out << "p " << g.n() << ' ' << g.m() << ' ' << g.start() << '\n';
    for (const Arc& a : g.arcs()) out << "a " << a.tail << ' ' << a.head << '\n';
}

std::string Violation::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case ViolationKind::TooFewVertices:
            os << "graph has fewer than 2 vertices";
            break;
        case ViolationKind::UnreachableVertex:
            os << "vertex " << vertex << " unreachable from start";
            break;
        case ViolationKind::ArcIntoStart:
            os << "arc " << arc_index << " enters the start vertex";
            break;
        case ViolationKind::LoopArc:
            os << "arc " << arc_index << " is a loop arc at vertex " << vertex;
            break;
        case ViolationKind::DuplicateArc:
            os << "arc " << arc_index << " duplicates an earlier arc";
            break;
    }
    return os.str();
}

namespace {

std::vector<char> reachable_from_start(const FlowGraph& g) {
    std::vector<char> seen(static_cast<size_t>(g.n()) + 1, 0);
    std::vector<int> stack{g.start()};
    seen[static_cast<size_t>(g.start())] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int a : g.out_arcs(v)) {
            int w = g.arc(a).head;
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

std::uint64_t arc_key(const Arc& a) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a.tail)) << 32) |
           static_cast<std::uint32_t>(a.head);
}

}  // namespace

std::vector<Violation> validate(const FlowGraph& g, bool allow_duplicate_arcs) {
    std::vector<Violation> out;
    if (g.n() < 2) out.push_back({ViolationKind::TooFewVertices, 0, 0});

    std::vector<char> seen = reachable_from_start(g);
    for (int v = 1; v <= g.n(); ++v)
        if (!seen[static_cast<size_t>(v)]) out.push_back({ViolationKind::UnreachableVertex, v, 0});

    std::unordered_set<std::uint64_t> keys;
    keys.reserve(g.arcs().size() * 2);
    for (int a = 0; a < g.m(); ++a) {
        const Arc& arc = g.arc(a);
        if (arc.head == g.start()) out.push_back({ViolationKind::ArcIntoStart, arc.head, a});
        if (arc.tail == arc.head) out.push_back({ViolationKind::LoopArc, arc.tail, a});
        if (!allow_duplicate_arcs && !keys.insert(arc_key(arc)).second)
            out.push_back({ViolationKind::DuplicateArc, arc.tail, a});
    }
    return out;
}

NormalizeResult normalize(const FlowGraph& g) {
    std::vector<char> keep = reachable_from_start(g);

    std::vector<int> old_to_new(static_cast<size_t>(g.n()) + 1, 0);
    int next_id = 0;
    for (int v = 1; v <= g.n(); ++v)
        if (keep[static_cast<size_t>(v)]) old_to_new[static_cast<size_t>(v)] = ++next_id;
    if (next_id < 2) throw std::runtime_error("normalization left fewer than 2 vertices");

    std::vector<Arc> arcs;
    std::unordered_set<std::uint64_t> kept_keys;
    for (const Arc& a : g.arcs()) {
        int tail = old_to_new[static_cast<size_t>(a.tail)];
        int head = old_to_new[static_cast<size_t>(a.head)];
        if (tail == 0 || head == 0) continue;
        if (tail == head) continue;
        if (head == old_to_new[static_cast<size_t>(g.start())]) continue;
        if (!kept_keys.insert(arc_key(Arc{tail, head})).second) continue;
        arcs.push_back(Arc{tail, head});
    }
    FlowGraph out(next_id, old_to_new[static_cast<size_t>(g.start())], std::move(arcs));
    return NormalizeResult{std::move(out), std::move(old_to_new)};
}

}  // namespace domfind
