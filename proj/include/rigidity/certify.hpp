#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

/// A strict condition lhs > rhs holds only when lhs > rhs + kStrictEpsilon.
inline constexpr double kStrictEpsilon = 1e-9;
/// |margin| within this band is reported as boundary instead of a verdict.
inline constexpr double kBoundaryBand = 1e-7;
/// Theorem-level certificates need C(n,2) eigensolves; refused above this order unless forced.
inline constexpr int kTheoremLevelMaxOrder = 300;

enum class Verdict { certified, not_applicable, condition_failed, boundary };
enum class ConditionStatus { pass, fail, boundary };

std::string_view to_string(Verdict v);
std::string_view to_string(ConditionStatus s);
Verdict verdict_from_string(std::string_view s);
ConditionStatus condition_status_from_string(std::string_view s);

/// One checked inequality. margin > 0 means satisfied, whatever the relation.
struct Condition {
    std::string description;
    std::string relation;  // ">", ">=" or "<="
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    ConditionStatus status = ConditionStatus::pass;
    bool precondition = false;
    /// Vertices attaining the worst margin (u, or v and w), when the condition ranges over them.
    VertexSet witness;

    friend bool operator==(const Condition&, const Condition&) = default;
};

struct Certificate {
    std::string theorem_id;
    int k = 1;
    Verdict verdict = Verdict::not_applicable;
    std::vector<Condition> conditions;
    std::string implied_property;

    /// First condition that did not pass, if any.
    const Condition* first_unmet() const;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertifyOptions {
    int jobs = 0;
    bool force = false;
};

/// Theorem ids accepted by certify(): eigkrig, kdisrig, strcor, maincor, redund, glob, gzeig, ramanujan_glob.
const std::vector<std::string>& theorem_ids();

/**
 * Three-level algebraic-connectivity test for k edge-disjoint spanning rigid
 * subgraphs: δ(G) >= 6k, then
 *   (1) μ2(G)     > (6k-1)/(δ(G)+1),
 *   (2) μ2(G-u)   > (4k-1)/(δ(G-u)+1)   for every u,
 *   (3) μ2(G-v-w) > (2k-1)/(δ(G-v-w)+1) for every pair v, w.
 * Conditions (2) and (3) are reported by their worst case.
 * Throws SizeGuardError when n > kTheoremLevelMaxOrder without options.force.
 */
Certificate certify_eigkrig(const Graph& g, int k, const CertifyOptions& options = {});

/// Same three levels with numerators 6, 4, 2; grants redundant rigidity. Requires δ >= 6.
Certificate certify_redund(const Graph& g, const CertifyOptions& options = {});

enum class Corollary { kdisrig, maincor, glob };

/// Single-eigenvalue tests, δ >= 6k:
///   kdisrig: μ2 > 2 + (2k-1)/(δ-1); maincor: μ2 > 2 + 1/(δ-1); glob: μ2 > 2 + 2/(δ-1).
/// maincor and glob take k = 1 only (PreconditionError otherwise).
Certificate certify_corollary(const Graph& g, int k, Corollary which);

/// Connected d-regular Ramanujan graphs with d >= 8 are globally rigid: checks
/// the Ramanujan bound, that d - 2√(d-1) > 2 + 2/(d-1), and μ2 > 2 + 2/(d-1).
Certificate certify_ramanujan_glob(const Graph& g);

/// Dispatch by theorem id; strcor is eigkrig with k = 1 and gzeig is eigkrig
/// phrased over Z with |Z| <= 2. Throws InputError on an unknown id.
Certificate certify(const Graph& g, std::string_view theorem_id, int k, const CertifyOptions& options = {});

/// λ2 and q2 forms of the global-rigidity corollary.
struct VariantReport {
    bool applicable = false;  // δ >= 6
    int min_degree = 0;
    double lambda2 = 0.0;
    double lambda2_bound = 0.0;  // δ - 2 - 2/(δ-1)
    bool lambda2_fires = false;
    double q2 = 0.0;
    double q2_bound = 0.0;  // 2δ - 2 - 2/(δ-1)
    bool q2_fires = false;

    friend bool operator==(const VariantReport&, const VariantReport&) = default;
};

VariantReport eigenvalue_variant_report(const Graph& g);

}  // namespace rigidity
