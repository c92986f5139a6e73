#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphring {

// Critical fiber with framing b/a: the meridian of the filling torus is
// glued to b*c + a*t. Coprime, a >= 1, b != 0. The classical constraint
// 0 < a < |b| is deliberately relaxed; see lint().
struct CriticalFiber {
    long long b = 1;
    long long a = 1;

    friend bool operator==(const CriticalFiber&, const CriticalFiber&) = default;
};

struct SeifertNode {
    std::string id;
    long long genus = 0;  // negative g encodes the nonorientable #_{|g|} RP^2
    std::vector<CriticalFiber> fibers;

    bool orientable() const { return genus >= 0; }

    friend bool operator==(const SeifertNode&, const SeifertNode&) = default;
};

struct PlumbingEdge {
    std::string a, b;
    int sign = 1;  // +1 for J, -1 for -J

    friend bool operator==(const PlumbingEdge&, const PlumbingEdge&) = default;
};

// Orientation-reversing torus gluing, det = -1. m[0][0], m[0][1] act on the
// meridian row, m[1][0], m[1][1] on the longitude row.
struct GluingMatrix {
    long long m[2][2] = {{0, 1}, {1, 0}};

    long long det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

    friend bool operator==(const GluingMatrix& x, const GluingMatrix& y) {
        return x.m[0][0] == y.m[0][0] && x.m[0][1] == y.m[0][1] &&
               x.m[1][0] == y.m[1][0] && x.m[1][1] == y.m[1][1];
    }
};

// Edge as parsed: either already a signed plumbing or a raw gluing matrix.
struct RawEdge {
    std::string a, b;
    int sign = 1;
    std::optional<GluingMatrix> matrix;
};

struct RawGraph {
    std::vector<SeifertNode> nodes;
    std::vector<RawEdge> edges;
};

struct PlumbingGraph {
    std::vector<SeifertNode> nodes;
    std::vector<PlumbingEdge> edges;

    const SeifertNode* find_node(const std::string& id) const;
    std::size_t node_index(const std::string& id) const;  // throws if absent

    friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;
};

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, std::size_t col, const std::string& msg);
    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

private:
    std::size_t line_, col_;
};

class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Text or JSON document (autodetected) -> raw graph. Node/fiber invariants
// are enforced here; graph-level invariants are left to validate().
RawGraph parse_raw(const std::string& document);

// Strict validation: unique labels, known endpoints, no self-loops, all
// gluings already +/-J, connected. Throws validation_error.
PlumbingGraph validate(const RawGraph& raw);

// parse_raw followed by validate.
PlumbingGraph parse(const std::string& document);

std::string serialize_text(const PlumbingGraph& g);
std::string serialize_json(const PlumbingGraph& g);

// Non-fatal warnings: fibers outside the classical 0 < a < |b| range.
std::vector<std::string> lint(const PlumbingGraph& g);

// Replaces every self-loop by two fresh trivial nodes (genus 0, no fibers,
// the T^2 x I pieces) and three edges, keeping the loop's sign on the first.
RawGraph resolve_self_loops(const RawGraph& raw);

// One Euclidean step of the gluing reduction. right_side = true means the
// update (a,c) <- (a - n b, c - n d) with the 1/n fiber absorbed by the
// right node; right_side = false means (b,d) <- (b - n a, d - n c) with the
// fiber absorbed by the left node.
struct ReductionStep {
    bool right_side;
    long long n;
};

struct NormalizedGluing {
    int sign;  // resulting matrix is sign * J
    SeifertNode left, right;
    std::vector<ReductionStep> steps;
};

// Reduces a det -1 gluing matrix to +/-J by iterated column operations,
// appending one critical fiber of type 1/n per step to the absorbing node.
// Throws std::invalid_argument if det != -1.
NormalizedGluing normalize_gluing(const GluingMatrix& m,
                                  const SeifertNode& left,
                                  const SeifertNode& right);

GluingMatrix apply_reduction_step(const GluingMatrix& m, const ReductionStep& s);

struct EdgeReduction {
    std::string a, b;
    int sign;
    std::vector<ReductionStep> steps;
};

struct NormalizeResult {
    PlumbingGraph graph;
    std::vector<EdgeReduction> reductions;  // one per raw-matrix edge
    std::size_t resolved_self_loops = 0;
};

// Full normalization of a raw graph: self-loop resolution, then gluing
// matrix reduction, then strict validation.
NormalizeResult normalize(const RawGraph& raw);

// Induced subgraph on the orientable-base nodes. May be disconnected; the
// connectedness invariant is waived for this derived object.
PlumbingGraph orientable_subgraph(const PlumbingGraph& g);

struct SpanningTree {
    std::vector<std::size_t> tree_edges;   // indices into g.edges
    std::vector<std::size_t> extra_edges;  // document order
};

// Deterministic maximal tree: breadth-first from the lexicographically least
// node label, edges explored in document order. Requires a connected graph.
SpanningTree spanning_tree(const PlumbingGraph& g);

}  // namespace graphring
