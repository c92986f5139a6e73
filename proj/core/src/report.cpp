#include "graphring/report.hpp"

#include <sstream>

#include <json.hpp>

namespace graphring {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* kind_name(GenKind k) {
    switch (k) {
        case GenKind::alpha: return "alpha";
        case GenKind::beta: return "beta";
        case GenKind::delta: return "delta";
        case GenKind::gamma: return "gamma";
        case GenKind::fiber: return "fiber";
    }
    return "?";
}

ordered_json generator_json(const Generator& gen, const PlumbingGraph& g) {
    ordered_json j;
    j["name"] = gen.display;
    j["kind"] = kind_name(gen.kind);
    if (gen.kind == GenKind::gamma) {
        const auto& e = g.edges[gen.edge];
        j["edge"] = {e.a, e.b};
    } else {
        j["node"] = gen.node;
        if (gen.kind != GenKind::fiber) j["index"] = gen.index;
    }
    return j;
}

ordered_json fiber_expression_json(const H1Basis& basis) {
    ordered_json j = ordered_json::object();
    for (const auto& [node, fe] : basis.fiber_expression) {
        ordered_json row = ordered_json::object();
        for (std::size_t k = 0; k < fe.size(); ++k)
            if (!fe[k].is_zero()) row["t_" + basis.survivors[k]] = fe[k].str();
        j[node] = std::move(row);
    }
    return j;
}

ordered_json surfaces_json(const std::vector<SurfaceRecipe>& surfaces) {
    ordered_json j = ordered_json::array();
    for (const auto& s : surfaces) {
        ordered_json js;
        js["dual_of"] = "t_" + s.survivor;
        js["multiplicities"] = ordered_json::object();
        for (const auto& [node, m] : s.multiplicities)
            js["multiplicities"][node] = m.get_str();
        js["klein_caps"] = ordered_json::object();
        for (const auto& [node, m] : s.klein_caps) js["klein_caps"][node] = m.get_str();
        js["scale"] = s.scale.str();
        js["doubled"] = s.doubled;
        j.push_back(std::move(js));
    }
    return j;
}

std::string sparse_line(const std::map<std::string, std::string>& entries) {
    if (entries.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : entries) {
        bool neg = !v.empty() && v[0] == '-';
        std::string mag = neg ? v.substr(1) : v;
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        s += mag == "1" ? k : mag + "·" + k;
    }
    return s;
}

}  // namespace

std::string homology_report_json(const PlumbingGraph& g, const H1Basis& basis,
                                 const std::vector<SurfaceRecipe>& surfaces,
                                 const std::vector<std::string>& warnings) {
    ordered_json j;
    j["rank_parts"] = {{"b", basis.rank_parts.b},
                       {"r", basis.rank_parts.r},
                       {"g_plus", basis.rank_parts.g_plus},
                       {"g_minus", basis.rank_parts.g_minus},
                       {"total", basis.rank_parts.total()}};
    j["generators"] = ordered_json::array();
    for (const auto& gen : basis.generators) j["generators"].push_back(generator_json(gen, g));
    j["fiber_expression"] = fiber_expression_json(basis);
    j["surfaces"] = surfaces_json(surfaces);
    j["survivors"] = basis.survivors;
    ordered_json cm;
    cm["nodes"] = basis.cm.node_order;
    cm["entries"] = ordered_json::array();
    for (std::size_t i = 0; i < basis.cm.matrix.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < basis.cm.matrix.cols(); ++c)
            row.push_back(basis.cm.matrix.at(i, c).str());
        cm["entries"].push_back(std::move(row));
    }
    j["connectivity_matrix"] = std::move(cm);
    j["warnings"] = warnings;
    return j.dump(2);
}

std::string homology_report_text(const PlumbingGraph& g, const H1Basis& basis,
                                 const std::vector<SurfaceRecipe>& surfaces,
                                 const std::vector<std::string>& warnings) {
    std::ostringstream os;
    const auto& rp = basis.rank_parts;
    os << "H_1(M;Q) rank " << rp.total() << " = b(" << rp.b << ") + r(" << rp.r
       << ") + 2g+(" << rp.g_plus << ") + g-(" << rp.g_minus << ")\n";
    os << "basis:";
    for (const auto& gen : basis.generators) os << " " << gen.display;
    os << "\n";
    os << "connectivity matrix over (";
    for (std::size_t i = 0; i < basis.cm.node_order.size(); ++i)
        os << (i ? ", " : "") << basis.cm.node_order[i];
    os << "):\n";
    if (basis.cm.matrix.rows() > 0) os << basis.cm.matrix.str() << "\n";
    os << "fiber expressions:\n";
    for (const auto& [node, fe] : basis.fiber_expression) {
        std::map<std::string, std::string> entries;
        for (std::size_t k = 0; k < fe.size(); ++k)
            if (!fe[k].is_zero()) entries["t_" + basis.survivors[k]] = fe[k].str();
        os << "  t_" << node << " = " << sparse_line(entries) << "\n";
    }
    for (const auto& s : surfaces) {
        os << "surface dual to t_" << s.survivor << ": ";
        std::map<std::string, std::string> entries;
        for (const auto& [node, m] : s.multiplicities) entries[node] = m.get_str();
        os << sparse_line(entries) << "  (scale " << s.scale.str();
        if (!s.klein_caps.empty()) {
            os << ", klein caps:";
            for (const auto& [node, m] : s.klein_caps) os << " " << node << ":" << m.get_str();
        }
        if (s.doubled) os << ", doubled";
        os << ")\n";
    }
    for (const auto& w : warnings) os << "warning: " << w << "\n";
    (void)g;
    return os.str();
}

std::string ring_report_json(const ProductTable& table) {
    ordered_json j;
    j["basis"] = ordered_json::array();
    for (const auto& d : table.basis) {
        ordered_json jd;
        jd["name"] = d.display;
        j["basis"].push_back(std::move(jd));
    }
    j["labels"] = ordered_json::array();
    for (const auto& gen : table.generators) j["labels"].push_back(gen.display);
    j["table"] = ordered_json::array();
    for (const auto& [ij, vec] : table.products) {
        if (ij.first >= ij.second) continue;
        ordered_json entry;
        entry["i"] = table.basis[ij.first].display;
        entry["j"] = table.basis[ij.second].display;
        ordered_json val = ordered_json::object();
        for (const auto& [k, c] : vec) val[table.generators[k].display] = c.str();
        entry["value"] = std::move(val);
        j["table"].push_back(std::move(entry));
    }
    try {
        Trivector omega = to_trivector(table);
        j["trivector"] = ordered_json::parse(omega.to_json());
    } catch (const std::invalid_argument& e) {
        j["trivector"] = nullptr;
        j["trivector_note"] = e.what();
    }
    j["tt_convention"] =
        "T·T entries are routing-dependent and zeroed by convention";
    return j.dump(2);
}

std::string ring_report_text(const ProductTable& table) {
    std::ostringstream os;
    os << render_table(table);
    try {
        Trivector omega = to_trivector(table);
        std::vector<std::string> labels;
        for (const auto& gen : table.generators) labels.push_back(gen.display);
        os << "3-form: " << omega.str(&labels) << "\n";
    } catch (const std::invalid_argument& e) {
        os << "3-form: unavailable (" << e.what() << ")\n";
    }
    return os.str();
}

std::string consum_report_json(const RingPresentation& p, const Theorem53Result& check) {
    ordered_json j;
    j["blocks"] = ordered_json::array();
    for (const auto& b : p.blocks)
        j["blocks"].push_back({{"label", b.label}, {"genus", b.genus}});
    j["target_ring"] = p.glue.target;
    j["epsilon"] = ordered_json::object();
    for (const auto& b : p.blocks) {
        const auto& eps = p.glue.epsilon.at(b.label);
        ordered_json row = ordered_json::object();
        for (std::size_t k = 0; k < eps.size(); ++k)
            if (!eps[k].is_zero())
                row[p.glue.r == 1 ? "F" : "F" + std::to_string(k + 1)] = eps[k].str();
        j["epsilon"][b.label] = std::move(row);
    }
    j["fiber_identifications"] = ordered_json::object();
    for (const auto& b : p.blocks) {
        const auto& fe = p.glue.fiber_identifications.at(b.label);
        ordered_json row = ordered_json::object();
        for (std::size_t k = 0; k < fe.size(); ++k)
            if (!fe[k].is_zero()) row["t_" + p.survivors[k]] = fe[k].str();
        j["fiber_identifications"][b.label] = std::move(row);
    }
    j["fundamental_identifications"] = ordered_json::array();
    for (const auto& [a, b] : p.glue.fundamental_identifications)
        j["fundamental_identifications"].push_back({a, b});
    j["generating_set_size"] = p.generating_set_size;
    j["relations"] = p.relations;
    j["r_extension"] = p.glue.extension;
    ordered_json v;
    v["match"] = check.match;
    v["dim"] = check.direct.dim();
    v["basis_map_identity"] = check.basis_map == RatMatrix::identity(check.basis_map.rows());
    v["basis_map"] = ordered_json::array();
    for (std::size_t i = 0; i < check.basis_map.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < check.basis_map.cols(); ++c)
            row.push_back(check.basis_map.at(i, c).str());
        v["basis_map"].push_back(std::move(row));
    }
    if (check.first_mismatch) v["first_mismatch"] = *check.first_mismatch;
    v["trivector"] = ordered_json::parse(check.direct.to_json());
    j["verification"] = std::move(v);
    return j.dump(2);
}

std::string consum_report_text(const RingPresentation& p, const Theorem53Result& check) {
    std::ostringstream os;
    os << "connected sum of " << p.blocks.size() << " block ring(s) over T = "
       << p.glue.target << "\n";
    for (const auto& b : p.blocks) {
        os << "  block " << b.label << " (genus " << b.genus << "): ε(" << b.label << ") = ";
        const auto& eps = p.glue.epsilon.at(b.label);
        std::map<std::string, std::string> entries;
        for (std::size_t k = 0; k < eps.size(); ++k)
            if (!eps[k].is_zero())
                entries[p.glue.r == 1 ? "F" : "F" + std::to_string(k + 1)] = eps[k].str();
        os << sparse_line(entries) << "\n";
    }
    os << "quotient relations:\n";
    for (const auto& rel : p.relations) os << "  " << rel << "\n";
    os << "verification against the intersection product: "
       << (check.match ? "exact match" : "MISMATCH") << "\n";
    if (check.first_mismatch) os << "  " << *check.first_mismatch << "\n";
    return os.str();
}

namespace {

ordered_json vectors_json(const std::vector<std::vector<Rational>>& vecs) {
    ordered_json j = ordered_json::array();
    for (const auto& v : vecs) {
        ordered_json row = ordered_json::array();
        for (const auto& x : v) row.push_back(x.str());
        j.push_back(std::move(row));
    }
    return j;
}

const char* verdict_name(SplitVerdict v) {
    switch (v) {
        case SplitVerdict::splits: return "splits";
        case SplitVerdict::does_not_split: return "does-not-split";
        case SplitVerdict::not_applicable: return "not-applicable";
    }
    return "?";
}

ordered_json split_json(const SplitReport& r) {
    ordered_json j;
    j["radical_dim"] = r.radical_dim;
    j["radical_basis"] = vectors_json(r.radical_basis);
    j["verdict"] = verdict_name(r.verdict);
    if (r.q_known) {
        j["q"] = r.q.str();
        j["degenerate"] = r.degenerate;
    }
    if (!r.certificate.empty()) j["certificate"] = r.certificate;
    if (r.witness) {
        j["witness"] = ordered_json::array();
        j["witness"].push_back(ordered_json::parse(r.witness->first.to_json()));
        j["witness"].push_back(ordered_json::parse(r.witness->second.to_json()));
    }
    return j;
}

}  // namespace

std::string split_report_json(const Form3& omega, const SplitReport& report) {
    ordered_json j;
    j["dim"] = omega.dim();
    j["form"] = ordered_json::parse(omega.to_json());
    j["report"] = split_json(report);
    return j.dump(2);
}

std::string split_report_text(const Form3& omega, const SplitReport& report) {
    std::ostringstream os;
    os << "form: " << omega.str() << "\n";
    os << "radical dimension: " << report.radical_dim << "\n";
    for (const auto& v : report.radical_basis) {
        os << "  radical vector:";
        for (const auto& x : v) os << " " << x.str();
        os << "\n";
    }
    os << "rank-3 split: " << verdict_name(report.verdict);
    if (report.q_known) os << "  (q = " << report.q.str() << ")";
    os << "\n";
    if (!report.certificate.empty()) os << "  " << report.certificate << "\n";
    if (report.witness)
        os << "  witness: " << report.witness->first.str() << "  |  "
           << report.witness->second.str() << "\n";
    return os.str();
}

std::string obstruction_report_json(const Form3& omega, const ObstructionVerdict& v) {
    ordered_json j;
    j["dim"] = omega.dim();
    j["obstructed"] = v.obstructed;
    j["verdict"] = v.verdict;
    j["evidence"] = split_json(v.detail);
    return j.dump(2);
}

std::string obstruction_report_text(const Form3& omega, const ObstructionVerdict& v) {
    std::ostringstream os;
    os << "form: " << omega.str() << "\n";
    os << "verdict: " << v.verdict << "\n";
    if (v.detail.radical_dim > 0)
        os << "  radical dimension " << v.detail.radical_dim << "\n";
    else if (v.detail.q_known)
        os << "  radical 0, q = " << v.detail.q.str() << "\n";
    return os.str();
}

std::string normalize_report_json(const NormalizeResult& result,
                                  const std::vector<std::string>& warnings) {
    ordered_json j;
    j["graph"] = ordered_json::parse(serialize_json(result.graph));
    j["resolved_self_loops"] = result.resolved_self_loops;
    j["reductions"] = ordered_json::array();
    for (const auto& r : result.reductions) {
        ordered_json jr;
        jr["edge"] = {r.a, r.b};
        jr["sign"] = r.sign;
        jr["steps"] = ordered_json::array();
        for (const auto& s : r.steps)
            jr["steps"].push_back(
                {{"side", s.right_side ? "right" : "left"}, {"n", s.n}});
        j["reductions"].push_back(std::move(jr));
    }
    j["warnings"] = warnings;
    return j.dump(2);
}

}  // namespace graphring
