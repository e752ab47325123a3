#include "rigidity/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "rigidity/error.hpp"
#include "rigidity/numeric_oracle.hpp"
#include "rigidity/sparsity.hpp"
#include "rigidity/spectral.hpp"

namespace rigidity {

namespace {

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& value) {
    if (value) {
        j[key] = *value;
    } else {
        j[key] = nullptr;
    }
}

template <typename T>
void get_optional(const json& j, const char* key, std::optional<T>& value) {
    if (!j.contains(key) || j.at(key).is_null()) {
        value.reset();
    } else {
        value = j.at(key).get<T>();
    }
}

bool property_holds(const Report& r, const Certificate& c) {
    if (c.implied_property == "rigid") return r.verdicts.rigid;
    if (c.implied_property == "redundantly rigid") return r.verdicts.redundantly_rigid;
    if (c.implied_property == "globally rigid") return r.verdicts.globally_rigid;
    // k-packing certificates are confirmed by an attached packing.
    return r.packing && r.packing->k == c.k && r.packing->found;
}

}  // namespace

std::string format_real(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", x);
    return buffer;
}

Report analyze(const Graph& g, std::string input, const AnalyzeOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    // redund has the lowest degree floor of the guarded certificates
    if (g.order() > kTheoremLevelMaxOrder && !options.force && g.min_degree() >= 6) {
        throw SizeGuardError("analyze runs theorem-level certificates; n = " + std::to_string(g.order()) +
                             " exceeds " + std::to_string(kTheoremLevelMaxOrder) + " (use force)");
    }
    Report r;
    r.input = std::move(input);
    r.stats.n = g.order();
    r.stats.m = g.size();
    r.stats.min_degree = g.min_degree();
    if (g.order() >= 2) {
        r.stats.connectivity = vertex_connectivity(g);
        r.spectral = SpectralValues{mu2(g), lambda2(g), lambda_abs(g), q2(g)};
    }

    r.verdicts.rank = g.order() >= 2 ? rigidity_rank(g).rank : 0;
    r.verdicts.rigid = is_rigid(g);
    r.verdicts.redundantly_rigid = is_redundantly_rigid(g);
    r.verdicts.globally_rigid = is_globally_rigid(g);

    const CertifyOptions certify_options{options.jobs, options.force};
    for (const char* id : {"eigkrig", "kdisrig"}) {
        r.certificates.push_back(certify(g, id, options.k, certify_options));
    }
    for (const char* id : {"maincor", "redund", "glob", "ramanujan_glob"}) {
        r.certificates.push_back(certify(g, id, 1, certify_options));
    }
    r.variant = eigenvalue_variant_report(g);

    if (r.verdicts.rigid) {
        r.laman_subgraph = extract_spanning_tight(g);
        std::sort(r.laman_subgraph->begin(), r.laman_subgraph->end());
    } else {
        Cover cover = rigid_component_cover(g);
        const CoverCheck check = verify_cover(g, cover);
        r.cover = CoverWitness{std::move(cover), check};
    }
    const bool packing_claimed = std::any_of(r.certificates.begin(), r.certificates.end(), [&](const Certificate& c) {
        return (c.theorem_id == "eigkrig" || c.theorem_id == "kdisrig") && c.verdict == Verdict::certified;
    });
    if (packing_claimed && g.order() >= 3) {
        r.packing = pack_spanning_rigid(g, options.k);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<std::string> report_inconsistencies(const Report& r) {
    std::vector<std::string> issues;
    if (r.verdicts.globally_rigid && !r.verdicts.rigid) {
        issues.emplace_back("globally rigid but not rigid");
    }
    if (r.verdicts.redundantly_rigid && !r.verdicts.rigid) {
        issues.emplace_back("redundantly rigid but not rigid");
    }
    if (r.verdicts.rigid == r.cover.has_value()) {
        issues.emplace_back("witness does not match the rigidity verdict");
    }
    if (r.cover && !r.cover->check.is_nonrigidity_witness) {
        issues.emplace_back("attached cover is not a non-rigidity witness");
    }
    for (const auto& c : r.certificates) {
        if (c.verdict == Verdict::certified && !property_holds(r, c)) {
            issues.push_back(c.theorem_id + " certified '" + c.implied_property +
                             "' but the combinatorial check disagrees");
        }
    }
    return issues;
}

std::string format_certificate_text(const Certificate& cert) {
    std::ostringstream out;
    out << cert.theorem_id << " (k=" << cert.k << "): " << to_string(cert.verdict) << " -> "
        << cert.implied_property << '\n';
    for (const auto& c : cert.conditions) {
        out << "  [" << to_string(c.status) << "] " << c.description << ": " << format_real(c.lhs) << ' '
            << c.relation << ' ' << format_real(c.rhs) << " (margin " << format_real(c.margin) << ')';
        if (!c.witness.empty()) {
            out << " at";
            for (Vertex v : c.witness) {
                out << ' ' << v;
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string format_report_text(const Report& r) {
    std::ostringstream out;
    auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    out << "input: " << r.input << '\n';
    out << "n = " << r.stats.n << ", m = " << r.stats.m << ", min degree = " << r.stats.min_degree;
    if (r.stats.connectivity) {
        out << ", connectivity = " << *r.stats.connectivity;
    }
    out << '\n';
    if (r.spectral) {
        out << "mu2 = " << format_real(r.spectral->mu2) << ", lambda2 = " << format_real(r.spectral->lambda2)
            << ", lambda = " << format_real(r.spectral->lambda_abs) << ", q2 = " << format_real(r.spectral->q2)
            << '\n';
    }
    out << "rigidity rank = " << r.verdicts.rank << "\nrigid: " << yes_no(r.verdicts.rigid)
        << "\nredundantly rigid: " << yes_no(r.verdicts.redundantly_rigid)
        << "\nglobally rigid: " << yes_no(r.verdicts.globally_rigid) << "\n\ncertificates:\n";
    for (const auto& c : r.certificates) {
        out << format_certificate_text(c);
    }
    if (r.variant && r.variant->applicable) {
        out << "lambda2 variant: " << format_real(r.variant->lambda2) << " < " << format_real(r.variant->lambda2_bound)
            << (r.variant->lambda2_fires ? " fires" : " does not fire") << '\n';
        out << "q2 variant: " << format_real(r.variant->q2) << " < " << format_real(r.variant->q2_bound)
            << (r.variant->q2_fires ? " fires" : " does not fire") << '\n';
    }
    if (r.cover) {
        out << "\nnon-rigidity cover: value " << r.cover->check.value << " < " << r.cover->check.threshold << ", "
            << r.cover->cover.blocks.size() << " blocks\n";
        for (const auto& block : r.cover->cover.blocks) {
            out << ' ';
            for (Vertex v : block) {
                out << ' ' << v;
            }
            out << '\n';
        }
    }
    if (r.laman_subgraph) {
        out << "\nspanning Laman subgraph (" << r.laman_subgraph->size() << " edges):\n";
        for (const Edge& e : *r.laman_subgraph) {
            out << e.u << ' ' << e.v << '\n';
        }
    }
    if (r.packing) {
        out << "\npacking k=" << r.packing->k << ": " << (r.packing->found ? "found" : "not found") << '\n';
    }
    out << "\ntime: " << format_real(r.seconds) << " s\n";
    return out.str();
}

void to_json(json& j, const Edge& e) { j = json::array({e.u, e.v}); }

void from_json(const json& j, Edge& e) {
    if (!j.is_array() || j.size() != 2) {
        throw InputError("edge must be a two-element array");
    }
    e = Edge(j[0].get<Vertex>(), j[1].get<Vertex>());
}

void to_json(json& j, const Condition& c) {
    j = json{{"description", c.description}, {"relation", c.relation}, {"lhs", c.lhs},
             {"rhs", c.rhs},                 {"margin", c.margin},     {"status", std::string(to_string(c.status))},
             {"precondition", c.precondition}, {"witness", c.witness}};
}

void from_json(const json& j, Condition& c) {
    j.at("description").get_to(c.description);
    j.at("relation").get_to(c.relation);
    j.at("lhs").get_to(c.lhs);
    j.at("rhs").get_to(c.rhs);
    j.at("margin").get_to(c.margin);
    c.status = condition_status_from_string(j.at("status").get<std::string>());
    j.at("precondition").get_to(c.precondition);
    j.at("witness").get_to(c.witness);
}

void to_json(json& j, const Certificate& c) {
    j = json{{"theorem_id", c.theorem_id},
             {"k", c.k},
             {"verdict", std::string(to_string(c.verdict))},
             {"conditions", c.conditions},
             {"implied_property", c.implied_property}};
}

void from_json(const json& j, Certificate& c) {
    j.at("theorem_id").get_to(c.theorem_id);
    j.at("k").get_to(c.k);
    c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    j.at("conditions").get_to(c.conditions);
    j.at("implied_property").get_to(c.implied_property);
}

void to_json(json& j, const PackingResult& p) {
    j = json{{"k", p.k}, {"found", p.found}, {"union_rank", p.union_rank}, {"parts", p.parts}};
}

void from_json(const json& j, PackingResult& p) {
    j.at("k").get_to(p.k);
    j.at("found").get_to(p.found);
    p.union_rank = j.value("union_rank", 0);
    j.at("parts").get_to(p.parts);
}

void to_json(json& j, const VariantReport& v) {
    j = json{{"applicable", v.applicable},       {"min_degree", v.min_degree}, {"lambda2", v.lambda2},
             {"lambda2_bound", v.lambda2_bound}, {"lambda2_fires", v.lambda2_fires}, {"q2", v.q2},
             {"q2_bound", v.q2_bound},           {"q2_fires", v.q2_fires}};
}

void from_json(const json& j, VariantReport& v) {
    j.at("applicable").get_to(v.applicable);
    j.at("min_degree").get_to(v.min_degree);
    j.at("lambda2").get_to(v.lambda2);
    j.at("lambda2_bound").get_to(v.lambda2_bound);
    j.at("lambda2_fires").get_to(v.lambda2_fires);
    j.at("q2").get_to(v.q2);
    j.at("q2_bound").get_to(v.q2_bound);
    j.at("q2_fires").get_to(v.q2_fires);
}

json cover_json(const Cover& cover, const CoverCheck& check) {
    return json{{"blocks", cover.blocks}, {"value", check.value}, {"threshold", check.threshold}};
}

void to_json(json& j, const CoverWitness& c) {
    j = cover_json(c.cover, c.check);
    j["is_nonrigidity_witness"] = c.check.is_nonrigidity_witness;
}

void from_json(const json& j, CoverWitness& c) {
    j.at("blocks").get_to(c.cover.blocks);
    j.at("value").get_to(c.check.value);
    j.at("threshold").get_to(c.check.threshold);
    c.check.is_nonrigidity_witness = j.value("is_nonrigidity_witness", c.check.value < c.check.threshold);
}

void to_json(json& j, const FamilySpec& f) {
    j = json{{"family", f.family}, {"n", f.n}, {"d", f.d}, {"q", f.q},
             {"a", f.a},           {"b", f.b}, {"p", f.p}, {"seed", f.seed}};
}

void from_json(const json& j, FamilySpec& f) {
    j.at("family").get_to(f.family);
    f.n = j.value("n", 0);
    f.d = j.value("d", 0);
    f.q = j.value("q", 0);
    f.a = j.value("a", 0);
    f.b = j.value("b", 0);
    f.p = j.value("p", 0.0);
    f.seed = j.value("seed", std::uint64_t{0});
}

void to_json(json& j, const Report& r) {
    j = json::object();
    j["input"] = r.input;
    j["stats"] = {{"n", r.stats.n}, {"m", r.stats.m}, {"min_degree", r.stats.min_degree}};
    put_optional(j["stats"], "connectivity", r.stats.connectivity);
    if (r.spectral) {
        j["spectral"] = {{"mu2", r.spectral->mu2},
                         {"lambda2", r.spectral->lambda2},
                         {"lambda_abs", r.spectral->lambda_abs},
                         {"q2", r.spectral->q2}};
    } else {
        j["spectral"] = nullptr;
    }
    j["verdicts"] = {{"rank", r.verdicts.rank},
                     {"rigid", r.verdicts.rigid},
                     {"redundantly_rigid", r.verdicts.redundantly_rigid},
                     {"globally_rigid", r.verdicts.globally_rigid}};
    j["certificates"] = r.certificates;
    put_optional(j, "variant", r.variant);
    put_optional(j, "cover", r.cover);
    put_optional(j, "laman_subgraph", r.laman_subgraph);
    put_optional(j, "packing", r.packing);
    j["seconds"] = r.seconds;
}

void from_json(const json& j, Report& r) {
    j.at("input").get_to(r.input);
    const auto& stats = j.at("stats");
    stats.at("n").get_to(r.stats.n);
    stats.at("m").get_to(r.stats.m);
    stats.at("min_degree").get_to(r.stats.min_degree);
    get_optional(stats, "connectivity", r.stats.connectivity);
    if (j.at("spectral").is_null()) {
        r.spectral.reset();
    } else {
        const auto& s = j.at("spectral");
        r.spectral = SpectralValues{s.at("mu2").get<double>(), s.at("lambda2").get<double>(),
                                    s.at("lambda_abs").get<double>(), s.at("q2").get<double>()};
    }
    const auto& v = j.at("verdicts");
    v.at("rank").get_to(r.verdicts.rank);
    v.at("rigid").get_to(r.verdicts.rigid);
    v.at("redundantly_rigid").get_to(r.verdicts.redundantly_rigid);
    v.at("globally_rigid").get_to(r.verdicts.globally_rigid);
    j.at("certificates").get_to(r.certificates);
    get_optional(j, "variant", r.variant);
    get_optional(j, "cover", r.cover);
    get_optional(j, "laman_subgraph", r.laman_subgraph);
    get_optional(j, "packing", r.packing);
    j.at("seconds").get_to(r.seconds);
}

HdRow reproduce_hd(int d) {
    const Graph g = gen_hd(d);
    HdRow row;
    row.d = d;
    row.n = g.order();
    row.m = g.size();
    row.regular = g.is_regular() && g.min_degree() == d;
    row.mu2 = mu2(g);
    row.lower = 5.0 / (d + 3);
    row.upper = 5.0 / (d + 1);
    row.bounds_hold = row.mu2 > row.lower && row.mu2 <= row.upper + kHdUpperSlack;
    const CoverCheck check = verify_cover(g, hd_canonical_cover(d));
    row.cover_value = check.value;
    row.cover_threshold = check.threshold;
    row.rigid_pebble = is_rigid(g);
    row.rigid_numeric = is_rigid_numeric(g);
    return row;
}

void to_json(json& j, const HdRow& row) {
    j = json{{"d", row.d},
             {"n", row.n},
             {"m", row.m},
             {"regular", row.regular},
             {"mu2", row.mu2},
             {"lower", row.lower},
             {"upper", row.upper},
             {"bounds_hold", row.bounds_hold},
             {"cover_value", row.cover_value},
             {"cover_threshold", row.cover_threshold},
             {"rigid_pebble", row.rigid_pebble},
             {"rigid_numeric", row.rigid_numeric},
             {"agree", row.agrees()}};
}

}  // namespace rigidity
