#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burger/classify.hpp"
#include "burger/errors.hpp"
#include "burger/group_ring.hpp"
#include "burger/linear_system.hpp"
#include "burger/motive_model.hpp"
#include "burger/report.hpp"
#include "burger/residue.hpp"
#include "burger/wpolynomial.hpp"

namespace {

using namespace burger;
using nlohmann::ordered_json;

std::vector<Integer> parse_integer_list(const std::string& csv) {
    std::vector<Integer> out;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) throw DomainError("empty entry in list '" + csv + "'");
        out.emplace_back(item);
    }
    if (out.empty()) throw DomainError("empty list");
    return out;
}

std::set<std::size_t> parse_index_set(const std::string& csv) {
    std::set<std::size_t> out;
    if (csv.empty()) return out;
    for (const Integer& v : parse_integer_list(csv)) {
        if (v < 0) throw DomainError("negative index in '" + csv + "'");
        out.insert(static_cast<std::size_t>(v));
    }
    return out;
}

std::string signs_string(const std::array<int, 3>& signs) {
    std::string s;
    for (int v : signs) s += sign_char(v);
    return s;
}

std::string involution_names(const std::vector<SignInvolution>& list) {
    std::string s;
    for (const auto& inv : list) {
        if (!s.empty()) s += ",";
        s += inv.name();
    }
    return "{" + s + "}";
}

std::string class_set_string(const std::vector<ScalarClass>& classes) {
    std::string s;
    for (const auto& c : classes) {
        if (!s.empty()) s += " ";
        s += c.to_string();
    }
    return s;
}

ordered_json candidate_json(const BurgerCandidate& cand) {
    ordered_json j;
    j["involutions"] = involution_names(cand.triple);
    j["f_signs"] = signs_string(cand.f_signs);
    ordered_json rows = ordered_json::array();
    for (const auto& r : cand.matrix.row_strings()) rows.push_back(r);
    j["rows"] = std::move(rows);
    const GroupDescriptor g = verify_group_structure(cand);
    j["group_order"] = g.order;
    if (g.dependent) j["relation"] = g.relation;
    std::string elements;
    for (const auto& flips : g.elements) {
        if (!elements.empty()) elements += ",";
        elements += SignInvolution(cand.family.space, flips).name();
    }
    j["group_elements"] = "{" + elements + "}";
    j["automorphism_classes"] = class_set_string(canonicalize_automorphism_class(cand));
    return j;
}

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write the report to FILE instead of stdout");
}

int emit(const Report& report, const OutputOptions& opts) {
    const std::string rendered =
        report.render(opts.format == "json" ? ReportFormat::json : ReportFormat::text);
    if (opts.out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) throw DomainError("cannot open output file '" + opts.out_path + "'");
        out << rendered;
    }
    if (const Assertion* failure = report.ledger.first_failure()) {
        std::cerr << "FAILED assertion: " << failure->name << "\n";
        return 1;
    }
    return 0;
}

Report run_classify(const std::string& weights, const Integer& degree, const std::string& even,
                    const std::string& pool_mode) {
    WeightedSpace space(parse_integer_list(weights));
    SurfaceFamily fam(space, degree, EvennessConstraint{parse_index_set(even)});
    const bool restricted = pool_mode == "restricted";
    const auto pool = enumerate_sign_involutions(space, restricted);
    const ClassificationReport result = classify_triples(fam, pool);

    Report report;
    report.command = "classify";
    report.echo("weights", space.to_string());
    report.echo("degree", degree.str());
    report.echo("even", fam.evenness.to_string());
    report.echo("pool", pool_mode);

    report.payload["family"] = fam.to_string();
    report.payload["pool_size"] = result.pool_size;
    report.payload["triples_examined"] = result.triples_examined;
    report.payload["assignments_examined"] = result.assignments_examined;
    report.payload["valid_candidates"] = result.valid.size();
    ordered_json cands = ordered_json::array();
    for (const auto& cand : result.valid) cands.push_back(candidate_json(cand));
    report.payload["candidates"] = std::move(cands);
    ordered_json orbits = ordered_json::array();
    for (const auto& orbit : result.orbits) {
        ordered_json j;
        j["label"] = orbit.label;
        j["size"] = orbit.member_indices.size();
        j["representative"] = involution_names(result.valid[orbit.representative_index].triple);
        orbits.push_back(std::move(j));
    }
    report.payload["orbits"] = std::move(orbits);
    ordered_json class_sets = ordered_json::array();
    for (const auto& classes : result.automorphism_class_sets)
        class_sets.push_back(class_set_string(classes));
    report.payload["automorphism_class_sets"] = std::move(class_sets);

    const std::size_t expected_pool =
        (std::size_t(1) << (restricted ? std::min<std::size_t>(3, space.coordinate_count())
                                       : space.coordinate_count())) -
        1;
    report.ledger.check("pool enumerated completely", result.pool_size == expected_pool);
    bool commute = true;
    for (const auto& cand : result.valid)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (!(cand.triple[i].compose(cand.triple[j]) ==
                      cand.triple[j].compose(cand.triple[i])))
                    commute = false;
    report.ledger.check("involutions of every candidate pairwise commute", commute);
    bool rows_ok = true;
    for (const auto& cand : result.valid)
        for (std::size_t j = 0; j < 3; ++j)
            if (quotient_pg(cand.matrix.row(j)) != 1) rows_ok = false;
    report.ledger.check("every valid row has quotient p_g = 1", rows_ok);
    std::size_t members = 0;
    for (const auto& orbit : result.orbits) members += orbit.member_indices.size();
    report.ledger.check("orbits partition the valid set", members == result.valid.size());
    bool coset_ok = true;
    for (const auto& cand : result.valid) {
        std::vector<SignInvolution> partner_triple;
        std::set<std::size_t> scalar;
        const auto signs = space.scalar_sign_vector();
        for (std::size_t i = 0; i < signs.size(); ++i)
            if (signs[i] < 0) scalar.insert(i);
        for (const auto& inv : cand.triple)
            partner_triple.push_back(inv.compose(SignInvolution(space, scalar)));
        BurgerCandidate partner{cand.family, partner_triple, cand.f_signs, cand.matrix};
        if (canonicalize_automorphism_class(partner) != canonicalize_automorphism_class(cand))
            coset_ok = false;
    }
    report.ledger.check("scalar canonicalization constant on scalar cosets", coset_ok);
    bool unclassified = false;
    for (const auto& orbit : result.orbits)
        if (orbit.label == "unclassified") unclassified = true;
    report.ledger.check("no unclassified orbits", !unclassified,
                        "an orbit matched none of the patterns (i)-(iv)");
    return report;
}

Report run_invariants(const std::string& weights, const Integer& degree, const std::string& even) {
    WeightedSpace space(parse_integer_list(weights));
    SurfaceFamily fam(space, degree, EvennessConstraint{parse_index_set(even)});

    Report report;
    report.command = "invariants";
    report.echo("weights", space.to_string());
    report.echo("degree", degree.str());
    if (!fam.evenness.empty()) report.echo("even", fam.evenness.to_string());

    const Integer pg = geometric_genus(fam);
    const Rational k2 = canonical_square(fam);
    const Rational gap = noether_gap(fam);
    report.payload["p_g"] = pg.str();
    report.payload["K^2"] = format_rational(k2);
    report.payload["noether_gap"] = format_rational(gap);
    report.payload["canonical_twist"] = Integer(degree - space.weight_sum()).str();
    ordered_json gens = ordered_json::array();
    for (const auto& g : fam.residue_generators()) gens.push_back(g.to_string());
    report.payload["residue_generators"] = std::move(gens);
    auto [normalized, reduced_degree] = normalize_weights(space, degree);
    report.payload["well_formed_model"] =
        normalized.to_string() + ", degree " + reduced_degree.str();
    report.payload["note"] = "K^2 is the weighted-hypersurface formula on the well-formed model; "
                             "cross-check value, not a certified intersection number";

    report.ledger.check("general type: degree exceeds the weight sum",
                        degree > space.weight_sum());
    report.ledger.check("noether gap consistent: K^2 - (2 p_g - 4)",
                        gap == k2 - Rational(2 * pg - 4));
    return report;
}

Report run_moduli(const Integer& params, const Integer& normalized, const Integer& pgl_k) {
    Report report;
    report.command = "moduli";
    report.echo("params", params.str());
    report.echo("normalized", normalized.str());
    report.echo("pgl", pgl_k.str());

    const Integer group_dim = pgl_dimension(pgl_k);
    const Integer moduli = moduli_dimension({params, normalized, group_dim});
    report.payload["parameter_count"] = params.str();
    report.payload["normalizations"] = normalized.str();
    report.payload["group_dimension"] = group_dim.str();
    report.payload["moduli"] = moduli.str();
    if (moduli < 0)
        report.payload["warning"] =
            "negative moduli dimension: the group action is over-counted on this family";
    return report;
}

Report run_ample(const std::string& weights, const Integer& twist, long k_max) {
    WeightedSpace space(parse_integer_list(weights));
    Report report;
    report.command = "ample";
    report.echo("weights", space.to_string());
    report.echo("twist", twist.str());

    const AmpleResult result = very_ample_verdict(space, twist, k_max);
    report.echo("kmax", std::to_string(result.k_max_used));
    report.payload["lcm"] = space.weight_lcm().str();
    report.payload["verdict"] = result.very_ample ? "VeryAmpleByCriterion" : "NotDecided";
    if (result.very_ample) {
        report.payload["passing_m"] = result.passing_m.str();
        report.ledger.check("divisibility criterion passes at m = " + result.passing_m.str() +
                                " up to k_max " + std::to_string(result.k_max_used),
                            delorme_divisibility(space, result.passing_m, result.k_max_used).pass);
    } else {
        report.payload["note"] = "the criterion is sufficient, not necessary; NotDecided is not a "
                                 "non-ampleness claim";
    }
    return report;
}

Report run_bpf(const std::string& weights, const Integer& degree, const std::string& even) {
    WeightedSpace space(parse_integer_list(weights));
    MonomialSystem sys(space, degree, EvennessConstraint{parse_index_set(even)});

    Report report;
    report.command = "bpf";
    report.echo("weights", space.to_string());
    report.echo("degree", degree.str());
    report.echo("even", sys.constraint.to_string());

    const BaseLocusResult result = base_locus(sys);
    report.payload["basis_size"] = sys.basis.size();
    if (sys.basis.size() <= 64) {
        ordered_json basis = ordered_json::array();
        for (const auto& m : sys.basis) basis.push_back(m.to_string());
        report.payload["basis"] = std::move(basis);
    }
    report.payload["verdict"] = result.to_string();
    return report;
}

Report run_projectors(const Integer& kunneth_d, long kunneth_b2) {
    Report report;
    report.command = "projectors";
    report.echo("kunneth_d", kunneth_d.str());
    report.echo("kunneth_b2", std::to_string(kunneth_b2));

    report.ledger.merge(verify_projector_system(), "group ring: ");
    report.ledger.merge(kunneth_model(kunneth_d, kunneth_b2), "kunneth model: ");
    EigenspaceProfile profile;
    profile.ranks[EigenspaceProfile::index_of({+1, -1, -1})] = 1;
    profile.ranks[EigenspaceProfile::index_of({-1, +1, -1})] = 1;
    profile.ranks[EigenspaceProfile::index_of({-1, -1, +1})] = 1;
    report.ledger.merge(claim_decomposition_check(profile), "eigenspace model: ");

    ordered_json table = ordered_json::array();
    for (std::size_t i = 0; i < 8; ++i) {
        const auto pi = eigenprojector(sign_pattern_from_index(i));
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < 8; ++j) {
            const auto prod = pi * eigenprojector(sign_pattern_from_index(j));
            row.push_back(prod.is_zero()
                              ? "0"
                              : "Gamma^" + sign_pattern_string(sign_pattern_from_index(i)));
        }
        table.push_back(std::move(row));
    }
    report.payload["projector_multiplication_table"] = std::move(table);
    report.payload["note"] = "symbolic model: group-ring and G-module identities, fibrewise; no "
                             "cycle-level claims";
    return report;
}

Report run_fermat_demo() {
    Report report;
    report.command = "fermat-demo";

    struct Family {
        std::string weights;
        Integer degree;
        std::string polynomial;
    };
    const std::vector<Family> families = {
        {"1,1,1,4", 8, "x0^8 + x1^8 + x2^8 + x3^2"},
        {"1,1,1,2", 6, "x0^6 + x1^6 + x2^6 + x3^3"},
    };

    ordered_json payload_families = ordered_json::array();
    for (const auto& family : families) {
        WeightedSpace space(parse_integer_list(family.weights));
        SurfaceFamily fam(space, family.degree, EvennessConstraint{{0, 1, 2}});
        const WPolynomial f = parse_wpoly(family.polynomial, space);
        const std::string tag = space.to_string() + " degree " + family.degree.str();

        ordered_json j;
        j["family"] = tag;
        j["polynomial"] = f.to_string();
        j["p_g"] = geometric_genus(fam).str();
        j["K^2"] = format_rational(canonical_square(fam));
        j["noether_gap"] = format_rational(noether_gap(fam));

        ordered_json semi = ordered_json::object();
        bool all_plus = true;
        for (const auto& inv : enumerate_sign_involutions(space, true)) {
            const SemiInvariance sign = semi_invariance_sign(f, inv);
            semi[inv.name()] = to_string(sign);
            if (sign != SemiInvariance::plus) all_plus = false;
        }
        j["semi_invariance"] = std::move(semi);
        report.ledger.check(tag + ": semi-invariant with sign +1 under the restricted pool",
                            all_plus);

        const QuasiSmoothResult qs = quasi_smooth_check(f, QuasiSmoothMode::diagonal_exact);
        j["quasi_smooth"] = to_string(qs.verdict);
        j["quasi_smooth_detail"] = qs.detail;
        report.ledger.check(tag + ": diagonal-exact quasi-smoothness",
                            qs.verdict == QuasiSmoothVerdict::quasi_smooth, qs.detail);

        bool meets_singular_stratum = false;
        for (std::size_t i = 0; i < space.coordinate_count(); ++i)
            if (space.weight(i) > 1 && vanishes_at_coordinate_point(f, i))
                meets_singular_stratum = true;
        j["meets_singular_coordinate_point"] = meets_singular_stratum ? "yes" : "no";

        std::vector<SignInvolution> case_i = {SignInvolution(space, {0}), SignInvolution(space, {1}),
                                              SignInvolution(space, {2})};
        const SignMatrix m = generator_sign_matrix(fam, case_i, {+1, +1, +1});
        ordered_json rows = ordered_json::array();
        for (const auto& r : m.row_strings()) rows.push_back(r);
        j["case_i_sign_matrix"] = std::move(rows);
        report.ledger.check(tag + ": case (i) matrix splits the eigenspaces", eigensplit_check(m));

        payload_families.push_back(std::move(j));
    }
    report.payload["families"] = std::move(payload_families);
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for sign-involution structures on weighted "
                 "projective hypersurfaces"};
    app.set_version_flag("--version", std::string(tool_name) + " " + tool_version);
    app.require_subcommand(1);

    std::string weights, even, pool_mode = "restricted";
    std::string degree_str, twist_str = "1", params_str, normalized_str = "0", pgl_str = "3";
    std::string kunneth_d_str = "2";
    long k_max = 0, kunneth_b2 = 44;
    OutputOptions classify_out, invariants_out, moduli_out, ample_out, bpf_out, projectors_out,
        fermat_out;

    CLI::App* classify_cmd = app.add_subcommand("classify", "Enumerate and filter involution triples");
    classify_cmd->add_option("--weights", weights, "Comma-separated weights, e.g. 1,1,1,4")
        ->required();
    classify_cmd->add_option("--degree", degree_str, "Weighted degree of the family")->required();
    classify_cmd->add_option("--even", even, "Indices constrained to even exponents, e.g. 0,1,2");
    classify_cmd->add_option("--pool", pool_mode, "Candidate pool")
        ->check(CLI::IsMember({"restricted", "unrestricted"}))
        ->capture_default_str();
    add_output_options(classify_cmd, classify_out);

    CLI::App* invariants_cmd = app.add_subcommand("invariants", "p_g, K^2 and the Noether gap");
    invariants_cmd->add_option("--weights", weights, "Comma-separated weights")->required();
    invariants_cmd->add_option("--degree", degree_str, "Weighted degree")->required();
    invariants_cmd->add_option("--even", even, "Evenness constraint indices");
    add_output_options(invariants_cmd, invariants_out);

    CLI::App* moduli_cmd = app.add_subcommand("moduli", "Projective parameter/moduli counting");
    moduli_cmd->add_option("--params", params_str, "Projective parameter count")->required();
    moduli_cmd->add_option("--normalized", normalized_str, "Coefficients fixed by normalization")
        ->capture_default_str();
    moduli_cmd->add_option("--pgl", pgl_str, "k of the acting PGL(k)")->capture_default_str();
    add_output_options(moduli_cmd, moduli_out);

    CLI::App* ample_cmd = app.add_subcommand("ample", "Divisibility criterion for very ampleness");
    ample_cmd->add_option("--weights", weights, "Comma-separated weights")->required();
    ample_cmd->add_option("--twist", twist_str, "Twist t of O(t)")->required();
    ample_cmd->add_option("--kmax", k_max, "Bound for the k-loop (default 1 + weight sum)");
    add_output_options(ample_cmd, ample_out);

    CLI::App* bpf_cmd = app.add_subcommand("bpf", "Base locus of a constrained monomial system");
    bpf_cmd->add_option("--weights", weights, "Comma-separated weights")->required();
    bpf_cmd->add_option("--degree", degree_str, "Weighted degree")->required();
    bpf_cmd->add_option("--even", even, "Evenness constraint indices");
    add_output_options(bpf_cmd, bpf_out);

    CLI::App* projectors_cmd =
        app.add_subcommand("projectors", "Group-ring projector and cohomology-model verification");
    projectors_cmd->add_option("--kunneth-d", kunneth_d_str, "Polarization degree of the model")
        ->capture_default_str();
    projectors_cmd->add_option("--kunneth-b2", kunneth_b2, "Middle rank of the model")
        ->capture_default_str();
    add_output_options(projectors_cmd, projectors_out);

    CLI::App* fermat_cmd =
        app.add_subcommand("fermat-demo", "End-to-end run on the two weighted Fermat hypersurfaces");
    add_output_options(fermat_cmd, fermat_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify_cmd)
            return emit(run_classify(weights, Integer(degree_str), even, pool_mode), classify_out);
        if (*invariants_cmd)
            return emit(run_invariants(weights, Integer(degree_str), even), invariants_out);
        if (*moduli_cmd)
            return emit(run_moduli(Integer(params_str), Integer(normalized_str), Integer(pgl_str)),
                        moduli_out);
        if (*ample_cmd) return emit(run_ample(weights, Integer(twist_str), k_max), ample_out);
        if (*bpf_cmd) return emit(run_bpf(weights, Integer(degree_str), even), bpf_out);
        if (*projectors_cmd)
            return emit(run_projectors(Integer(kunneth_d_str), kunneth_b2), projectors_out);
        if (*fermat_cmd) return emit(run_fermat_demo(), fermat_out);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
