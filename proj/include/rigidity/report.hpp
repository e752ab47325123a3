#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigidity/certify.hpp"
#include "rigidity/cover.hpp"
#include "rigidity/families.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/packing.hpp"

namespace rigidity {

struct GraphStats {
    int n = 0;
    int m = 0;
    int min_degree = 0;
    std::optional<int> connectivity;  // needs n >= 2

    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

struct SpectralValues {
    double mu2 = 0.0;
    double lambda2 = 0.0;
    double lambda_abs = 0.0;
    double q2 = 0.0;

    friend bool operator==(const SpectralValues&, const SpectralValues&) = default;
};

struct RigidityVerdicts {
    int rank = 0;
    bool rigid = false;
    bool redundantly_rigid = false;
    bool globally_rigid = false;

    friend bool operator==(const RigidityVerdicts&, const RigidityVerdicts&) = default;
};

struct CoverWitness {
    Cover cover;
    CoverCheck check;

    friend bool operator==(const CoverWitness& a, const CoverWitness& b) {
        return a.cover == b.cover && a.check.value == b.check.value && a.check.threshold == b.check.threshold &&
               a.check.is_nonrigidity_witness == b.check.is_nonrigidity_witness;
    }
};

/// Everything `analyze` learns about one graph.
struct Report {
    std::string input;
    GraphStats stats;
    std::optional<SpectralValues> spectral;
    RigidityVerdicts verdicts;
    std::vector<Certificate> certificates;
    std::optional<VariantReport> variant;
    std::optional<CoverWitness> cover;
    std::optional<EdgeList> laman_subgraph;
    std::optional<PackingResult> packing;
    double seconds = 0.0;

    friend bool operator==(const Report&, const Report&) = default;
};

struct AnalyzeOptions {
    int k = 1;
    int jobs = 0;
    bool force = false;
};

/// Full analysis: stats, spectra, combinatorial verdicts, every certificate,
/// and a witness (rigid-component cover when flexible, Laman subgraph when
/// rigid, packing when a k-packing certificate fires).
Report analyze(const Graph& g, std::string input, const AnalyzeOptions& options = {});

/// Cross-checks inside a report; returns one message per inconsistency.
std::vector<std::string> report_inconsistencies(const Report& report);

/// Human-readable report; floating-point values use 12 significant digits.
std::string format_report_text(const Report& report);
std::string format_certificate_text(const Certificate& cert);

/// 12-significant-digit rendering used by every text output.
std::string format_real(double x);

/// One row of the H_d table: spectral bounds, canonical cover, rigidity agreement.
struct HdRow {
    int d = 0;
    int n = 0;
    int m = 0;
    bool regular = false;
    double mu2 = 0.0;
    double lower = 0.0;  // 5/(d+3), strict
    double upper = 0.0;  // 5/(d+1)
    bool bounds_hold = false;
    long long cover_value = 0;
    long long cover_threshold = 0;
    bool rigid_pebble = false;
    bool rigid_numeric = false;

    bool agrees() const { return rigid_pebble == rigid_numeric; }
};

/// Tolerance on the upper bound 5/(d+1).
inline constexpr double kHdUpperSlack = 1e-8;

HdRow reproduce_hd(int d);

using nlohmann::json;

void to_json(json& j, const Edge& e);
void from_json(const json& j, Edge& e);
void to_json(json& j, const Condition& c);
void from_json(const json& j, Condition& c);
void to_json(json& j, const Certificate& c);
void from_json(const json& j, Certificate& c);
void to_json(json& j, const PackingResult& p);
void from_json(const json& j, PackingResult& p);
void to_json(json& j, const VariantReport& v);
void from_json(const json& j, VariantReport& v);
void to_json(json& j, const CoverWitness& c);
void from_json(const json& j, CoverWitness& c);
void to_json(json& j, const FamilySpec& f);
void from_json(const json& j, FamilySpec& f);
void to_json(json& j, const Report& r);
void from_json(const json& j, Report& r);

void to_json(json& j, const HdRow& row);

/// {"blocks":[[v...]...], "value":..., "threshold":...}
json cover_json(const Cover& cover, const CoverCheck& check);

}  // namespace rigidity
