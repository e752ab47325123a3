#include "rigidity/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rigidity/error.hpp"
#include "rigidity/parallel.hpp"
#include "rigidity/spectral.hpp"

namespace rigidity {

namespace {

constexpr Vertex kNone = -1;

// μ2 and min degree of G - {a, b} (kNone entries are ignored), without building the subgraph.
struct Deleted {
    double mu2 = 0.0;
    int min_degree = 0;
};

Deleted deleted_stats(const Graph& g, Vertex a, Vertex b) {
    const int n = g.order();
    std::vector<int> label(n, 0);
    int next = 0;
    for (Vertex v = 0; v < n; ++v) {
        label[v] = (v == a || v == b) ? -1 : next++;
    }
    SymmetricMatrix l(next);
    int min_deg = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < n; ++v) {
        if (label[v] < 0) {
            continue;
        }
        int deg = 0;
        for (Vertex w : g.neighbors(v)) {
            if (label[w] >= 0) {
                ++deg;
                if (w < v) {
                    l.set(label[v], label[w], -1.0);
                }
            }
        }
        l.set(label[v], label[v], deg);
        min_deg = std::min(min_deg, deg);
    }
    return {eigenvalues(l).values[1], min_deg};
}

ConditionStatus strict_status(double margin) {
    if (margin > kBoundaryBand) {
        return ConditionStatus::pass;
    }
    if (margin < -kBoundaryBand) {
        return ConditionStatus::fail;
    }
    return ConditionStatus::boundary;
}

Condition strict_condition(std::string description, double lhs, double rhs, VertexSet witness = {}) {
    Condition c;
    c.description = std::move(description);
    c.relation = ">";
    c.lhs = lhs;
    c.rhs = rhs;
    c.margin = lhs - rhs;
    c.status = strict_status(c.margin);
    c.witness = std::move(witness);
    return c;
}

Condition precondition(std::string description, double lhs, double rhs, bool holds) {
    Condition c;
    c.description = std::move(description);
    c.relation = ">=";
    c.lhs = lhs;
    c.rhs = rhs;
    c.margin = lhs - rhs;
    c.status = holds ? ConditionStatus::pass : ConditionStatus::fail;
    c.precondition = true;
    return c;
}

void settle(Certificate& cert) {
    cert.verdict = Verdict::certified;
    for (const auto& c : cert.conditions) {
        if (c.status == ConditionStatus::fail) {
            cert.verdict = c.precondition ? Verdict::not_applicable : Verdict::condition_failed;
            return;
        }
        if (c.status == ConditionStatus::boundary) {
            cert.verdict = Verdict::boundary;
        }
    }
}

std::string fraction(int numerator, const std::string& denominator) {
    return std::to_string(numerator) + "/(" + denominator + "+1)";
}

// Shared body of the three-level theorems; numerators[i] is the numerator for |Z| = i.
Certificate three_level(const Graph& g, std::string id, int k, int degree_floor, const int (&numerators)[3],
                        std::string implied, const CertifyOptions& options) {
    const int n = g.order();
    Certificate cert;
    cert.theorem_id = std::move(id);
    cert.k = k;
    cert.implied_property = std::move(implied);
    const int delta = g.min_degree();
    cert.conditions.push_back(precondition("min degree >= " + std::to_string(degree_floor), delta, degree_floor,
                                           delta >= degree_floor && n >= 3));
    if (cert.conditions.back().status == ConditionStatus::fail) {
        settle(cert);
        return cert;
    }
    if (n > kTheoremLevelMaxOrder && !options.force) {
        throw SizeGuardError("theorem-level certification needs C(n,2) eigensolves; n = " + std::to_string(n) +
                             " exceeds " + std::to_string(kTheoremLevelMaxOrder) + " (use force)");
    }

    const Deleted whole = deleted_stats(g, kNone, kNone);
    cert.conditions.push_back(strict_condition("(1) mu2(G) > " + fraction(numerators[0], "delta(G)"), whole.mu2,
                                               static_cast<double>(numerators[0]) / (whole.min_degree + 1)));

    std::vector<double> margins(n);
    std::vector<Deleted> singles(n);
    parallel_for(n, options.jobs, [&](int u) { singles[u] = deleted_stats(g, u, kNone); });
    int worst = 0;
    for (Vertex u = 0; u < n; ++u) {
        margins[u] = singles[u].mu2 - static_cast<double>(numerators[1]) / (singles[u].min_degree + 1);
        if (margins[u] < margins[worst]) {
            worst = u;
        }
    }
    cert.conditions.push_back(strict_condition("(2) mu2(G-u) > " + fraction(numerators[1], "delta(G-u)") +
                                                   " for every u",
                                               singles[worst].mu2,
                                               static_cast<double>(numerators[1]) / (singles[worst].min_degree + 1),
                                               {worst}));

    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w = v + 1; w < n; ++w) {
            pairs.emplace_back(v, w);
        }
    }
    std::vector<Deleted> doubles(pairs.size());
    parallel_for(static_cast<int>(pairs.size()), options.jobs,
                 [&](int i) { doubles[i] = deleted_stats(g, pairs[i].first, pairs[i].second); });
    std::size_t worst_pair = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const double margin = doubles[i].mu2 - static_cast<double>(numerators[2]) / (doubles[i].min_degree + 1);
        if (margin < worst_margin) {
            worst_margin = margin;
            worst_pair = i;
        }
    }
    cert.conditions.push_back(strict_condition(
        "(3) mu2(G-v-w) > " + fraction(numerators[2], "delta(G-v-w)") + " for every v, w", doubles[worst_pair].mu2,
        static_cast<double>(numerators[2]) / (doubles[worst_pair].min_degree + 1),
        {pairs[worst_pair].first, pairs[worst_pair].second}));
    settle(cert);
    return cert;
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::certified: return "certified";
        case Verdict::not_applicable: return "not_applicable";
        case Verdict::condition_failed: return "condition_failed";
        case Verdict::boundary: return "boundary";
    }
    return "unknown";
}

std::string_view to_string(ConditionStatus s) {
    switch (s) {
        case ConditionStatus::pass: return "PASS";
        case ConditionStatus::fail: return "FAIL";
        case ConditionStatus::boundary: return "BOUNDARY";
    }
    return "unknown";
}

Verdict verdict_from_string(std::string_view s) {
    for (Verdict v : {Verdict::certified, Verdict::not_applicable, Verdict::condition_failed, Verdict::boundary}) {
        if (to_string(v) == s) {
            return v;
        }
    }
    throw InputError("unknown verdict '" + std::string(s) + "'");
}

ConditionStatus condition_status_from_string(std::string_view s) {
    for (ConditionStatus c : {ConditionStatus::pass, ConditionStatus::fail, ConditionStatus::boundary}) {
        if (to_string(c) == s) {
            return c;
        }
    }
    throw InputError("unknown condition status '" + std::string(s) + "'");
}

const Condition* Certificate::first_unmet() const {
    for (const auto& c : conditions) {
        if (c.status != ConditionStatus::pass) {
            return &c;
        }
    }
    return nullptr;
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = {"eigkrig", "kdisrig", "strcor", "maincor",
                                                 "redund",  "glob",    "gzeig",  "ramanujan_glob"};
    return ids;
}

Certificate certify_eigkrig(const Graph& g, int k, const CertifyOptions& options) {
    if (k < 1) {
        throw PreconditionError("certify_eigkrig needs k >= 1");
    }
    const int numerators[3] = {6 * k - 1, 4 * k - 1, 2 * k - 1};
    return three_level(g, "eigkrig", k, 6 * k, numerators,
                       std::to_string(k) + " edge-disjoint spanning rigid subgraphs", options);
}

Certificate certify_redund(const Graph& g, const CertifyOptions& options) {
    const int numerators[3] = {6, 4, 2};
    return three_level(g, "redund", 1, 6, numerators, "redundantly rigid", options);
}

Certificate certify_corollary(const Graph& g, int k, Corollary which) {
    if (k < 1 || (which != Corollary::kdisrig && k != 1)) {
        throw PreconditionError("maincor and glob take k = 1; kdisrig needs k >= 1");
    }
    Certificate cert;
    cert.k = k;
    int numerator = 2 * k - 1;
    switch (which) {
        case Corollary::kdisrig:
            cert.theorem_id = "kdisrig";
            cert.implied_property = std::to_string(k) + " edge-disjoint spanning rigid subgraphs";
            break;
        case Corollary::maincor:
            cert.theorem_id = "maincor";
            cert.implied_property = "rigid";
            numerator = 1;
            break;
        case Corollary::glob:
            cert.theorem_id = "glob";
            cert.implied_property = "globally rigid";
            numerator = 2;
            break;
    }
    const int delta = g.min_degree();
    cert.conditions.push_back(
        precondition("min degree >= " + std::to_string(6 * k), delta, 6 * k, delta >= 6 * k && g.order() >= 2));
    if (cert.conditions.back().status == ConditionStatus::pass) {
        cert.conditions.push_back(strict_condition("mu2(G) > 2 + " + std::to_string(numerator) + "/(delta-1)", mu2(g),
                                                   2.0 + static_cast<double>(numerator) / (delta - 1)));
    }
    settle(cert);
    return cert;
}

Certificate certify_ramanujan_glob(const Graph& g) {
    Certificate cert;
    cert.theorem_id = "ramanujan_glob";
    cert.k = 1;
    cert.implied_property = "globally rigid";
    const bool connected = is_connected(g);
    const bool regular = g.is_regular();
    const int d = g.max_degree();
    cert.conditions.push_back(precondition("connected", connected ? 1 : 0, 1, connected));
    cert.conditions.push_back(precondition("regular", regular ? 1 : 0, 1, regular));
    cert.conditions.push_back(precondition("degree >= 8", d, 8, d >= 8));
    const bool applicable = connected && regular && d >= 8;
    if (applicable) {
        const double bound = 2.0 * std::sqrt(static_cast<double>(d - 1));
        auto values = eigenvalues(adjacency(g)).values;
        values.pop_back();
        double largest = 0.0;
        for (double lambda : values) {
            if (std::fabs(std::fabs(lambda) - d) > 1e-8) {
                largest = std::max(largest, std::fabs(lambda));
            }
        }
        Condition ramanujan;
        ramanujan.description = "Ramanujan: |lambda_i| <= 2 sqrt(d-1) for lambda_i != +-d";
        ramanujan.relation = "<=";
        ramanujan.lhs = largest;
        ramanujan.rhs = bound;
        ramanujan.margin = bound - largest;
        ramanujan.status = ramanujan.margin >= -1e-8 ? ConditionStatus::pass : ConditionStatus::fail;
        cert.conditions.push_back(ramanujan);
        const double glob_rhs = 2.0 + 2.0 / (d - 1);
        cert.conditions.push_back(
            strict_condition("d - 2 sqrt(d-1) > 2 + 2/(d-1)", static_cast<double>(d) - bound, glob_rhs));
        cert.conditions.push_back(strict_condition("mu2(G) > 2 + 2/(d-1)", mu2(g), glob_rhs));
    }
    settle(cert);
    return cert;
}

Certificate certify(const Graph& g, std::string_view theorem_id, int k, const CertifyOptions& options) {
    if (theorem_id == "eigkrig" || theorem_id == "gzeig") {
        auto cert = certify_eigkrig(g, k, options);
        cert.theorem_id = std::string(theorem_id);
        return cert;
    }
    if (theorem_id == "strcor") {
        auto cert = certify_eigkrig(g, 1, options);
        cert.theorem_id = "strcor";
        cert.implied_property = "rigid";
        return cert;
    }
    if (theorem_id == "kdisrig") return certify_corollary(g, k, Corollary::kdisrig);
    if (theorem_id == "maincor") return certify_corollary(g, 1, Corollary::maincor);
    if (theorem_id == "glob") return certify_corollary(g, 1, Corollary::glob);
    if (theorem_id == "redund") return certify_redund(g, options);
    if (theorem_id == "ramanujan_glob") return certify_ramanujan_glob(g);
    throw InputError("unknown theorem id '" + std::string(theorem_id) + "'");
}

VariantReport eigenvalue_variant_report(const Graph& g) {
    VariantReport report;
    report.min_degree = g.min_degree();
    report.applicable = report.min_degree >= 6 && g.order() >= 2;
    if (!report.applicable) {
        return report;
    }
    const double delta = report.min_degree;
    const double slack = 2.0 / (delta - 1.0);
    report.lambda2 = lambda2(g);
    report.lambda2_bound = delta - 2.0 - slack;
    report.lambda2_fires = report.lambda2_bound - report.lambda2 > kStrictEpsilon;
    report.q2 = q2(g);
    report.q2_bound = 2.0 * delta - 2.0 - slack;
    report.q2_fires = report.q2_bound - report.q2 > kStrictEpsilon;
    return report;
}

}  // namespace rigidity
