#include "graphring/trivector.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace graphring {

using ordered_json = nlohmann::ordered_json;

namespace {

// Sorts indices ascending; returns the permutation sign, or 0 on repeats.
int sort_sign(std::vector<std::size_t>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

}  // namespace

void Trivector::add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (i >= dim_ || j >= dim_ || k >= dim_)
        throw std::invalid_argument("trivector index out of range");
    if (c.is_zero()) return;
    std::vector<std::size_t> idx{i, j, k};
    int s = sort_sign(idx);
    if (s == 0) return;
    Key key{idx[0], idx[1], idx[2]};
    Rational& slot = terms_[key];
    slot += s > 0 ? c : -c;
    if (slot.is_zero()) terms_.erase(key);
}

Rational Trivector::coeff(std::size_t i, std::size_t j, std::size_t k) const {
    std::vector<std::size_t> idx{i, j, k};
    int s = sort_sign(idx);
    if (s == 0) return Rational(0);
    auto it = terms_.find(Key{idx[0], idx[1], idx[2]});
    if (it == terms_.end()) return Rational(0);
    return s > 0 ? it->second : -it->second;
}

Trivector operator+(const Trivector& a, const Trivector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("trivector dimension mismatch");
    Trivector r = a;
    for (const auto& [k, c] : b.terms_) r.add(k[0], k[1], k[2], c);
    return r;
}

Trivector operator*(const Rational& c, const Trivector& t) {
    Trivector r(t.dim());
    if (c.is_zero()) return r;
    for (const auto& [k, v] : t.terms_) r.terms_[k] = c * v;
    return r;
}

Trivector Trivector::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid form JSON: ") + e.what());
    }
    try {
        Trivector t(j.at("dim").get<std::size_t>());
        for (const auto& term : j.at("terms")) {
            std::size_t i = term.at(0).get<std::size_t>();
            std::size_t jj = term.at(1).get<std::size_t>();
            std::size_t k = term.at(2).get<std::size_t>();
            Rational c = term.at(3).is_string() ? Rational::parse(term.at(3).get<std::string>())
                                                : Rational(term.at(3).get<long long>());
            if (!(i < jj && jj < k))
                throw std::invalid_argument("form indices must be strictly increasing");
            t.add(i, jj, k, c);
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("form JSON schema violation: ") + e.what());
    }
}

std::string Trivector::to_json() const {
    ordered_json j;
    j["dim"] = dim_;
    j["terms"] = ordered_json::array();
    for (const auto& [k, c] : terms_)
        j["terms"].push_back({k[0], k[1], k[2], c.str()});
    return j.dump();
}

std::string Trivector::str(const std::vector<std::string>* labels) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i) mono += "∧";
            mono += labels && k[i] < labels->size() ? (*labels)[k[i]]
                                                    : "e" + std::to_string(k[i]);
        }
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        if (a != Rational(1)) os << a.str() << "·";
        os << mono;
    }
    return os.str();
}

std::vector<Rational> form_product(const Form3& omega, const std::vector<Rational>& x,
                                    const std::vector<Rational>& y) {
    if (x.size() != omega.dim() || y.size() != omega.dim())
        throw std::invalid_argument("vector dimension does not match the form");
    std::vector<Rational> res(omega.dim());
    for (const auto& [k, c] : omega.terms()) {
        std::size_t a = k[0], b = k[1], d = k[2];
        res[d] += c * (x[a] * y[b] - x[b] * y[a]);
        res[b] += c * (x[d] * y[a] - x[a] * y[d]);
        res[a] += c * (x[b] * y[d] - x[d] * y[b]);
    }
    return res;
}

Form3 basis_change(const Form3& omega, const RatMatrix& n) {
    if (n.rows() != n.cols() || n.rows() != omega.dim())
        throw std::invalid_argument("basis change must be square of the form's dimension");
    if (det(n).is_zero()) throw std::invalid_argument("basis change matrix is singular");
    Form3 out(omega.dim());
    for (std::size_t i = 0; i < omega.dim(); ++i)
        for (std::size_t j = i + 1; j < omega.dim(); ++j)
            for (std::size_t k = j + 1; k < omega.dim(); ++k) {
                Rational sum = 0;
                for (const auto& [t, c] : omega.terms()) {
                    std::size_t a = t[0], b = t[1], d = t[2];
                    // det of the (a,b,d) x (i,j,k) minor of n
                    Rational m =
                        n.at(a, i) * (n.at(b, j) * n.at(d, k) - n.at(b, k) * n.at(d, j)) -
                        n.at(a, j) * (n.at(b, i) * n.at(d, k) - n.at(b, k) * n.at(d, i)) +
                        n.at(a, k) * (n.at(b, i) * n.at(d, j) - n.at(b, j) * n.at(d, i));
                    sum += c * m;
                }
                out.add(i, j, k, sum);
            }
    return out;
}

std::vector<std::vector<Rational>> radical(const Form3& omega) {
    std::size_t n = omega.dim();
    RatMatrix m(n * (n - 1) / 2, n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) m.at(row, i) = omega.coeff(i, j, k);
            ++row;
        }
    return kernel(m);
}

DecompResult is_decomposable(const Form3& delta) {
    if (delta.is_zero())
        throw std::invalid_argument("decomposability is undefined for the zero form");
    std::size_t n = delta.dim();

    // Span of all contractions by dual-basis 2-covectors.
    RatMatrix contractions(n * (n - 1) / 2, n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) contractions.at(row, i) = delta.coeff(j, k, i);
            ++row;
        }
    RrefResult r = rref(contractions);

    DecompResult res;
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p) {
        std::vector<Rational> v(n);
        for (std::size_t c = 0; c < n; ++c) v[c] = r.matrix.at(p, c);
        res.support.push_back(normalize_integer_vector(std::move(v)));
    }
    if (res.support.size() != 3) return res;  // decomposable = false

    // delta ^ v must vanish for every v in the support span.
    for (const auto& v : res.support)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (std::size_t c = b + 1; c < n; ++c)
                    for (std::size_t d = c + 1; d < n; ++d) {
                        Rational w = delta.coeff(b, c, d) * v[a] - delta.coeff(a, c, d) * v[b] +
                                     delta.coeff(a, b, d) * v[c] - delta.coeff(a, b, c) * v[d];
                        if (!w.is_zero()) return res;
                    }

    // delta = c * u ^ v ^ w for the span basis; recover c and fold it in.
    const auto& u = res.support[0];
    const auto& v = res.support[1];
    const auto& w = res.support[2];
    Form3 uvw(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Rational m = u[i] * (v[j] * w[k] - v[k] * w[j]) -
                             u[j] * (v[i] * w[k] - v[k] * w[i]) +
                             u[k] * (v[i] * w[j] - v[j] * w[i]);
                uvw.add(i, j, k, m);
            }
    if (uvw.is_zero()) return res;
    const auto& [key, base] = *uvw.terms().begin();
    Rational c = delta.coeff(key[0], key[1], key[2]) / base;
    if (!(c * uvw == delta)) return res;
    res.decomposable = true;
    res.factors[0] = u;
    for (auto& x : res.factors[0]) x *= c;
    res.factors[1] = v;
    res.factors[2] = w;
    return res;
}

RatMatrix split_endomorphism(const Form3& omega) {
    if (omega.dim() != 6)
        throw std::invalid_argument("split endomorphism is defined in dimension 6");
    RatMatrix k(6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
        // iota_{e_i} omega as a list of ((j<k), coeff)
        std::vector<std::pair<std::array<std::size_t, 2>, Rational>> two_form;
        for (const auto& [t, c] : omega.terms()) {
            if (t[0] == i) two_form.push_back({{t[1], t[2]}, c});
            else if (t[1] == i) two_form.push_back({{t[0], t[2]}, -c});
            else if (t[2] == i) two_form.push_back({{t[0], t[1]}, c});
        }
        // (iota_{e_i} omega) ^ omega: coefficients over 5-subsets, indexed by
        // the missing element m.
        std::vector<Rational> five(6);
        for (const auto& [jk, c2] : two_form)
            for (const auto& [t, c3] : omega.terms()) {
                std::vector<std::size_t> idx{jk[0], jk[1], t[0], t[1], t[2]};
                int s = sort_sign(idx);
                if (s == 0) continue;
                std::size_t m = 15 - (idx[0] + idx[1] + idx[2] + idx[3] + idx[4]);
                five[m] += (s > 0 ? c2 : -c2) * c3;
            }
        // iota_{e_m} vol = (-1)^m e_{complement}; read the image vector off.
        for (std::size_t m = 0; m < 6; ++m)
            k.at(m, i) = m % 2 == 0 ? five[m] : -five[m];
    }
    return k;
}

namespace {

Rational trace_of_square_over_6(const RatMatrix& k, bool* scalar_ok) {
    RatMatrix k2 = k * k;
    Rational tr = 0;
    for (std::size_t i = 0; i < 6; ++i) tr += k2.at(i, i);
    Rational q = tr / Rational(6);
    *scalar_ok = true;
    for (std::size_t i = 0; i < 6 && *scalar_ok; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if (k2.at(i, j) != (i == j ? q : Rational(0))) {
                *scalar_ok = false;
                break;
            }
    return q;
}

Form3 restrict_to_block(const Form3& primed, std::size_t lo, std::size_t hi) {
    Form3 out(primed.dim());
    for (const auto& [t, c] : primed.terms())
        if (t[0] >= lo && t[2] < hi) out.add(t[0], t[1], t[2], c);
    return out;
}

}  // namespace

SplitReport rank3_split_dim6(const Form3& omega) {
    if (omega.dim() != 6)
        throw std::invalid_argument("rank-3 split decision requires dimension 6");
    SplitReport report;
    report.radical_basis = radical(omega);
    report.radical_dim = report.radical_basis.size();
    if (report.radical_dim != 0)
        throw std::invalid_argument("rank-3 split decision requires a zero radical");

    RatMatrix k = split_endomorphism(omega);
    bool scalar_ok = false;
    report.q = trace_of_square_over_6(k, &scalar_ok);
    report.q_known = true;
    if (!scalar_ok)
        throw std::logic_error("K^2 is not scalar; split certificate is broken");

    if (report.q.is_zero()) {
        report.verdict = SplitVerdict::does_not_split;
        report.degenerate = true;
        report.certificate =
            "q = 0 (degenerate orbit): no split of type uvw+xyz over Q exists";
        return report;
    }
    Rational root;
    if (!report.q.is_square(&root)) {
        report.verdict = SplitVerdict::does_not_split;
        report.certificate = "q = " + report.q.str() +
                             " is not a rational square: no split of type uvw+xyz over Q "
                             "found by this certificate";
        return report;
    }

    // K has rational eigenvalues +/-sqrt(q) with 3-dimensional eigenspaces;
    // omega restricts to a decomposable form on each.
    auto eigenspace = [&](const Rational& lambda) {
        RatMatrix m = k;
        for (std::size_t i = 0; i < 6; ++i) m.at(i, i) -= lambda;
        return kernel(m);
    };
    auto plus = eigenspace(root), minus = eigenspace(-root);
    if (plus.size() != 3 || minus.size() != 3)
        throw std::logic_error("split eigenspace dimensions are not 3+3");
    RatMatrix p(6, 6);
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < 6; ++i) {
            p.at(i, c) = plus[c][i];
            p.at(i, 3 + c) = minus[c][i];
        }
    Form3 primed = basis_change(omega, p);
    Form3 d1p = restrict_to_block(primed, 0, 3);
    Form3 d2p = restrict_to_block(primed, 3, 6);
    if (!(d1p + d2p == primed))
        throw std::logic_error("split certificate produced mixed terms");
    RatMatrix pinv = inverse(p);
    Form3 d1 = basis_change(d1p, pinv);
    Form3 d2 = basis_change(d2p, pinv);
    if (!(d1 + d2 == omega))
        throw std::logic_error("split witness does not recombine to the input form");
    report.verdict = SplitVerdict::splits;
    report.witness = {d1, d2};
    report.certificate = "q = " + report.q.str() + " = (" + root.str() +
                         ")^2: the +/-sqrt(q) eigenspaces of K give rational decomposable "
                         "summands with complementary supports";
    return report;
}

ObstructionVerdict obstruct(const Form3& omega) {
    ObstructionVerdict v;
    v.detail.radical_basis = radical(omega);
    v.detail.radical_dim = v.detail.radical_basis.size();
    if (v.detail.radical_dim > 0) {
        v.obstructed = false;
        v.detail.verdict = SplitVerdict::not_applicable;
        v.verdict = "no obstruction from this invariant: the radical is nonzero (a rank-1 "
                    "summand splits off)";
        return v;
    }
    if (omega.dim() != 6) {
        v.obstructed = false;
        v.detail.verdict = SplitVerdict::not_applicable;
        v.verdict = "no obstruction from this invariant: the rank-3 stage applies only in "
                    "rank 6";
        return v;
    }
    v.detail = rank3_split_dim6(omega);
    if (v.detail.verdict == SplitVerdict::does_not_split) {
        v.obstructed = true;
        v.verdict = "obstructed from tree-graph-manifold cobordism";
    } else {
        v.obstructed = false;
        v.verdict = "no obstruction from this invariant: the form splits two rank-3 "
                    "summands";
    }
    return v;
}

ParallelismReport opp_para_check(const std::vector<std::vector<Rational>>& rows) {
    if (rows.size() != 6)
        throw std::invalid_argument("expected six coefficient vectors");
    for (const auto& r : rows)
        if (r.size() != 6) throw std::invalid_argument("expected vectors of dimension 6");

    // Coordinate pairs whose 2x2 determinants are the C, D and F coefficients
    // of the product expansion (0-based coordinates 0/1, 1/4, 0/4).
    static const std::array<std::array<std::size_t, 2>, 3> pairs = {
        {{0, 1}, {1, 4}, {0, 4}}};
    static const char* duals[3] = {"C", "D", "F"};

    ParallelismReport report;
    auto det2 = [&](std::size_t i, std::size_t j, const std::array<std::size_t, 2>& p) {
        return rows[i][p[0]] * rows[j][p[1]] - rows[i][p[1]] * rows[j][p[0]];
    };
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 3; j < 6; ++j)
            for (const auto& p : pairs) {
                Rational d = det2(i, j, p);
                if (!d.is_zero()) report.violations.push_back({i, j, p, d});
            }
    for (std::size_t pi = 0; pi < 3; ++pi) {
        bool all = true;
        for (std::size_t i = 0; i < 6 && all; ++i)
            for (std::size_t j = i + 1; j < 6 && all; ++j)
                if (!det2(i, j, pairs[pi]).is_zero()) all = false;
        if (all) {
            report.all_parallel_pair = pairs[pi];
            report.missing_dual = duals[pi];
            break;
        }
    }
    return report;
}

}  // namespace graphring
