#include "graphring/plumbing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

namespace graphring {

using ordered_json = nlohmann::ordered_json;

parse_error::parse_error(std::size_t line, std::size_t col, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                         ": " + msg),
      line_(line),
      col_(col) {}

const SeifertNode* PlumbingGraph::find_node(const std::string& id) const {
    for (const auto& n : nodes)
        if (n.id == id) return &n;
    return nullptr;
}

std::size_t PlumbingGraph::node_index(const std::string& id) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].id == id) return i;
    throw std::out_of_range("unknown node label '" + id + "'");
}

namespace {

long long checked_ll(const std::string& tok, std::size_t line, std::size_t col,
                     const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error(line, col, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

CriticalFiber check_fiber(long long b, long long a, std::size_t line, std::size_t col) {
    if (a < 1) throw parse_error(line, col, "fiber denominator a must be >= 1");
    if (b == 0) throw parse_error(line, col, "fiber numerator b must be nonzero");
    if (std::gcd(std::abs(b), a) != 1)
        throw parse_error(line, col,
                          "non-coprime fiber " + std::to_string(b) + "/" + std::to_string(a));
    return CriticalFiber{b, a};
}

CriticalFiber parse_fiber_token(const std::string& tok, std::size_t line, std::size_t col) {
    auto slash = tok.find('/');
    if (slash == std::string::npos)
        throw parse_error(line, col, "fiber must be written b/a, got '" + tok + "'");
    long long b = checked_ll(tok.substr(0, slash), line, col, "integer fiber numerator");
    long long a = checked_ll(tok.substr(slash + 1), line, col, "positive fiber denominator");
    return check_fiber(b, a, line, col);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

RawGraph parse_raw_text(const std::string& document) {
    RawGraph g;
    std::istringstream is(document);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "node") {
            if (toks.size() < 4 || toks[2] != "genus")
                throw parse_error(lineno, 1,
                                  "expected 'node <label> genus <int> [fibers b/a, ...]'");
            SeifertNode n;
            n.id = toks[1];
            n.genus = checked_ll(toks[3], lineno, 1, "integer genus");
            if (toks.size() > 4) {
                if (toks[4] != "fibers")
                    throw parse_error(lineno, 1, "expected 'fibers', got '" + toks[4] + "'");
                std::string rest;
                for (std::size_t i = 5; i < toks.size(); ++i) rest += toks[i] + " ";
                std::size_t pos = 0;
                bool seen = false;
                while (pos < rest.size()) {
                    auto comma = rest.find(',', pos);
                    std::string piece = rest.substr(pos, comma == std::string::npos
                                                             ? std::string::npos
                                                             : comma - pos);
                    auto ptoks = split_ws(piece);
                    if (ptoks.size() != 1)
                        throw parse_error(lineno, 1, "malformed fiber list");
                    n.fibers.push_back(parse_fiber_token(ptoks[0], lineno, 1));
                    seen = true;
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
                if (!seen) throw parse_error(lineno, 1, "empty fiber list after 'fibers'");
            }
            g.nodes.push_back(std::move(n));
        } else if (toks[0] == "edge") {
            if (toks.size() < 4)
                throw parse_error(lineno, 1, "expected 'edge <label> <label> <+|-> '");
            RawEdge e;
            e.a = toks[1];
            e.b = toks[2];
            if (toks[3] == "+" || toks[3] == "-") {
                if (toks.size() != 4) throw parse_error(lineno, 1, "trailing tokens after edge");
                e.sign = toks[3] == "+" ? 1 : -1;
            } else if (toks[3] == "matrix") {
                if (toks.size() != 8)
                    throw parse_error(lineno, 1, "expected 'matrix <a> <b> <c> <d>'");
                GluingMatrix m;
                m.m[0][0] = checked_ll(toks[4], lineno, 1, "integer matrix entry");
                m.m[0][1] = checked_ll(toks[5], lineno, 1, "integer matrix entry");
                m.m[1][0] = checked_ll(toks[6], lineno, 1, "integer matrix entry");
                m.m[1][1] = checked_ll(toks[7], lineno, 1, "integer matrix entry");
                e.matrix = m;
            } else {
                throw parse_error(lineno, 1, "edge decoration must be +, - or matrix");
            }
            g.edges.push_back(std::move(e));
        } else {
            throw parse_error(lineno, 1, "unknown statement '" + toks[0] + "'");
        }
    }
    return g;
}

RawGraph parse_raw_json(const std::string& document) {
    ordered_json j;
    try {
        j = ordered_json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(1, e.byte, std::string("invalid JSON: ") + e.what());
    }
    RawGraph g;
    try {
        for (const auto& jn : j.at("nodes")) {
            SeifertNode n;
            n.id = jn.at("id").get<std::string>();
            n.genus = jn.at("genus").get<long long>();
            if (jn.contains("fibers"))
                for (const auto& jf : jn["fibers"]) {
                    long long b = jf.at(0).get<long long>();
                    long long a = jf.at(1).get<long long>();
                    n.fibers.push_back(check_fiber(b, a, 1, 1));
                }
            g.nodes.push_back(std::move(n));
        }
        if (j.contains("edges"))
            for (const auto& je : j["edges"]) {
                RawEdge e;
                e.a = je.at("ends").at(0).get<std::string>();
                e.b = je.at("ends").at(1).get<std::string>();
                if (je.contains("matrix")) {
                    GluingMatrix m;
                    for (int r = 0; r < 2; ++r)
                        for (int c = 0; c < 2; ++c)
                            m.m[r][c] = je["matrix"].at(r).at(c).get<long long>();
                    e.matrix = m;
                } else {
                    int s = je.at("sign").get<int>();
                    if (s != 1 && s != -1)
                        throw parse_error(1, 1, "edge sign must be +1 or -1");
                    e.sign = s;
                }
                g.edges.push_back(std::move(e));
            }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(1, 1, std::string("graph JSON schema violation: ") + e.what());
    }
    return g;
}

bool connected(const std::vector<SeifertNode>& nodes,
               const std::vector<PlumbingEdge>& edges) {
    if (nodes.empty()) return true;
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < nodes.size(); ++i) idx[nodes[i].id] = i;
    std::vector<bool> seen(nodes.size(), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        for (const auto& e : edges) {
            std::size_t x = idx.at(e.a), y = idx.at(e.b);
            std::size_t other;
            if (x == u) other = y;
            else if (y == u) other = x;
            else continue;
            if (!seen[other]) {
                seen[other] = true;
                ++count;
                q.push(other);
            }
        }
    }
    return count == nodes.size();
}

}  // namespace

RawGraph parse_raw(const std::string& document) {
    auto first = document.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && document[first] == '{')
        return parse_raw_json(document);
    return parse_raw_text(document);
}

PlumbingGraph validate(const RawGraph& raw) {
    std::set<std::string> labels;
    for (const auto& n : raw.nodes) {
        if (n.id.empty()) throw validation_error("empty node label");
        if (!labels.insert(n.id).second)
            throw validation_error("duplicate node label '" + n.id + "'");
    }
    PlumbingGraph g;
    g.nodes = raw.nodes;
    for (const auto& e : raw.edges) {
        if (!labels.count(e.a) || !labels.count(e.b))
            throw validation_error("edge references unknown node '" +
                                   (labels.count(e.a) ? e.b : e.a) + "'");
        if (e.a == e.b)
            throw validation_error("self-loop at node '" + e.a +
                                   "' (run normalize to resolve self-loops)");
        if (e.matrix) {
            long long d = e.matrix->det();
            if (d != -1 && d != 1)
                throw validation_error("raw gluing on edge (" + e.a + ", " + e.b +
                                       ") has |det| != 1");
            throw validation_error("edge (" + e.a + ", " + e.b +
                                   ") carries an unreduced gluing matrix (run normalize)");
        }
        g.edges.push_back(PlumbingEdge{e.a, e.b, e.sign});
    }
    if (!connected(g.nodes, g.edges))
        throw validation_error("graph is not connected");
    return g;
}

PlumbingGraph parse(const std::string& document) { return validate(parse_raw(document)); }

std::string serialize_text(const PlumbingGraph& g) {
    std::ostringstream os;
    for (const auto& n : g.nodes) {
        os << "node " << n.id << " genus " << n.genus;
        if (!n.fibers.empty()) {
            os << " fibers ";
            for (std::size_t i = 0; i < n.fibers.size(); ++i)
                os << (i ? ", " : "") << n.fibers[i].b << "/" << n.fibers[i].a;
        }
        os << "\n";
    }
    for (const auto& e : g.edges)
        os << "edge " << e.a << " " << e.b << " " << (e.sign > 0 ? "+" : "-") << "\n";
    return os.str();
}

std::string serialize_json(const PlumbingGraph& g) {
    ordered_json j;
    j["nodes"] = ordered_json::array();
    for (const auto& n : g.nodes) {
        ordered_json jn;
        jn["id"] = n.id;
        jn["genus"] = n.genus;
        jn["fibers"] = ordered_json::array();
        for (const auto& f : n.fibers) jn["fibers"].push_back({f.b, f.a});
        j["nodes"].push_back(std::move(jn));
    }
    j["edges"] = ordered_json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({{"ends", {e.a, e.b}}, {"sign", e.sign}});
    return j.dump(2);
}

std::vector<std::string> lint(const PlumbingGraph& g) {
    std::vector<std::string> warnings;
    for (const auto& n : g.nodes)
        for (const auto& f : n.fibers)
            if (!(0 < f.a && f.a < std::abs(f.b)))
                warnings.push_back("node " + n.id + ": fiber " + std::to_string(f.b) + "/" +
                                   std::to_string(f.a) +
                                   " is outside the classical range 0 < a < |b|; the relaxed "
                                   "encoding feeds -a/b into the connectivity matrix as written");
    return warnings;
}

RawGraph resolve_self_loops(const RawGraph& raw) {
    RawGraph out;
    out.nodes = raw.nodes;
    std::set<std::string> labels;
    for (const auto& n : raw.nodes) labels.insert(n.id);
    std::size_t loop_count = 0;
    for (const auto& e : raw.edges) {
        if (e.a != e.b) {
            out.edges.push_back(e);
            continue;
        }
        ++loop_count;
        auto fresh = [&](int k) {
            std::string base = e.a + ".loop" + std::to_string(loop_count) + (k == 0 ? "a" : "b");
            std::string name = base;
            int suffix = 0;
            while (labels.count(name)) name = base + std::to_string(++suffix);
            labels.insert(name);
            return name;
        };
        std::string v1 = fresh(0), v2 = fresh(1);
        out.nodes.push_back(SeifertNode{v1, 0, {}});
        out.nodes.push_back(SeifertNode{v2, 0, {}});
        RawEdge first = e;  // sign or matrix rides on the first replacement edge
        first.b = v1;
        out.edges.push_back(first);
        out.edges.push_back(RawEdge{v1, v2, 1, std::nullopt});
        out.edges.push_back(RawEdge{v2, e.a, 1, std::nullopt});
    }
    return out;
}

GluingMatrix apply_reduction_step(const GluingMatrix& m, const ReductionStep& s) {
    GluingMatrix r = m;
    if (s.right_side) {
        r.m[0][0] = m.m[0][0] - s.n * m.m[0][1];
        r.m[1][0] = m.m[1][0] - s.n * m.m[1][1];
    } else {
        r.m[0][1] = m.m[0][1] - s.n * m.m[0][0];
        r.m[1][1] = m.m[1][1] - s.n * m.m[1][0];
    }
    return r;
}

namespace {

// Nearest integer to a/b, ties toward zero; |a - round_div(a,b)*b| <= |b|/2.
long long round_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    if (2 * std::abs(r) > std::abs(b)) q += (a > 0) == (b > 0) ? 1 : -1;
    return q;
}

CriticalFiber fiber_of_type_one_over(long long n) {
    // 1/n with n < 0 is stored as the equivalent filling -1/(-n).
    return n > 0 ? CriticalFiber{1, n} : CriticalFiber{-1, -n};
}

}  // namespace

NormalizedGluing normalize_gluing(const GluingMatrix& m, const SeifertNode& left,
                                  const SeifertNode& right) {
    if (m.det() != -1)
        throw std::invalid_argument("gluing matrix must have determinant -1, got " +
                                    std::to_string(m.det()));
    NormalizedGluing out{+1, left, right, {}};
    GluingMatrix cur = m;
    auto step = [&](bool right_side, long long n) {
        if (n == 0) return;
        ReductionStep s{right_side, n};
        cur = apply_reduction_step(cur, s);
        (right_side ? out.right : out.left).fibers.push_back(fiber_of_type_one_over(n));
        out.steps.push_back(s);
    };
    // Euclid on the top row via column operations, steering to a = 0. The
    // right node absorbs fibers whenever the first column is reduced; only
    // the complementary column operation falls to the left node.
    while (cur.m[0][0] != 0) {
        if (cur.m[0][1] == 0) {
            step(false, -cur.m[0][0]);  // make b nonzero; a = +/-1 here
        } else if (std::abs(cur.m[0][0]) >= std::abs(cur.m[0][1])) {
            step(true, round_div(cur.m[0][0], cur.m[0][1]));
        } else {
            step(false, round_div(cur.m[0][1], cur.m[0][0]));
        }
    }
    // Now [[0, b], [c, d]] with bc = 1; one left operation clears d.
    if (cur.m[1][1] != 0) step(false, cur.m[1][1] * cur.m[1][0]);
    out.sign = static_cast<int>(cur.m[0][1]);
    if (cur.m[0][0] != 0 || cur.m[1][1] != 0 || cur.m[0][1] != cur.m[1][0] ||
        std::abs(cur.m[0][1]) != 1)
        throw std::logic_error("gluing reduction did not reach +/-J");
    return out;
}

NormalizeResult normalize(const RawGraph& raw) {
    NormalizeResult result;
    RawGraph flat = resolve_self_loops(raw);
    result.resolved_self_loops = (flat.nodes.size() - raw.nodes.size()) / 2;

    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < flat.nodes.size(); ++i) idx[flat.nodes[i].id] = i;

    std::vector<RawEdge> edges;
    for (const auto& e : flat.edges) {
        if (!e.matrix) {
            edges.push_back(e);
            continue;
        }
        if (!idx.count(e.a) || !idx.count(e.b))
            throw validation_error("edge references unknown node '" +
                                   (idx.count(e.a) ? e.b : e.a) + "'");
        long long d = e.matrix->det();
        if (d != -1)
            throw validation_error("raw gluing on edge (" + e.a + ", " + e.b + ") has " +
                                   (std::abs(d) != 1 ? "|det| != 1" : "det +1; an "
                                    "orientation-reversing gluing needs det -1"));
        auto reduced =
            normalize_gluing(*e.matrix, flat.nodes[idx[e.a]], flat.nodes[idx[e.b]]);
        flat.nodes[idx[e.a]] = reduced.left;
        flat.nodes[idx[e.b]] = reduced.right;
        edges.push_back(RawEdge{e.a, e.b, reduced.sign, std::nullopt});
        result.reductions.push_back(EdgeReduction{e.a, e.b, reduced.sign, reduced.steps});
    }
    flat.edges = std::move(edges);
    result.graph = validate(flat);
    return result;
}

PlumbingGraph orientable_subgraph(const PlumbingGraph& g) {
    PlumbingGraph h;
    std::set<std::string> kept;
    for (const auto& n : g.nodes)
        if (n.orientable()) {
            h.nodes.push_back(n);
            kept.insert(n.id);
        }
    for (const auto& e : g.edges)
        if (kept.count(e.a) && kept.count(e.b)) h.edges.push_back(e);
    return h;
}

SpanningTree spanning_tree(const PlumbingGraph& g) {
    SpanningTree st;
    if (g.nodes.empty()) return st;
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) idx[g.nodes[i].id] = i;

    std::size_t root = 0;
    for (std::size_t i = 1; i < g.nodes.size(); ++i)
        if (g.nodes[i].id < g.nodes[root].id) root = i;

    std::vector<bool> seen(g.nodes.size(), false);
    std::vector<bool> in_tree(g.edges.size(), false);
    std::queue<std::size_t> q;
    q.push(root);
    seen[root] = true;
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
            const auto& e = g.edges[ei];
            std::size_t x = idx.at(e.a), y = idx.at(e.b);
            std::size_t other;
            if (x == u) other = y;
            else if (y == u) other = x;
            else continue;
            if (!seen[other]) {
                seen[other] = true;
                in_tree[ei] = true;
                st.tree_edges.push_back(ei);
                q.push(other);
            }
        }
    }
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        if (!seen[i]) throw std::invalid_argument("spanning_tree requires a connected graph");
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei)
        if (!in_tree[ei]) st.extra_edges.push_back(ei);
    std::sort(st.tree_edges.begin(), st.tree_edges.end());
    return st;
}

}  // namespace graphring
