#include "parafock/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "parafock/basis.hpp"
#include "parafock/defining.hpp"
#include "parafock/fock.hpp"
#include "parafock/matrix_rep.hpp"
#include "parafock/triples.hpp"

namespace parafock::cli {

const char* to_string(Format f) {
    switch (f) {
        case Format::json: return "json";
        case Format::csv: return "csv";
        case Format::plain: return "plain";
    }
    return "?";
}

void RunConfig::validate(bool verification) const {
    if (p < 1) throw std::invalid_argument("config: p must be >= 1");
    if (cutoff < 0) throw std::invalid_argument("config: cutoff must be >= 0");
    if (!(tol > 0.0) || !(tol < 1.0))
        throw std::invalid_argument("config: tolerance must lie in (0, 1)");
    params.validate();
    if (verification && cutoff < 3)
        throw std::invalid_argument(
            "config: verification commands need cutoff >= 3 (interior-block headroom)");
}

CheckRecord make_check(std::string id, std::string realization, int probe_size, double residual,
                       double threshold, bool at_least) {
    CheckRecord c;
    c.id = std::move(id);
    c.realization = std::move(realization);
    c.probe_size = probe_size;
    c.residual = residual;
    c.threshold = threshold;
    c.at_least = at_least;
    c.pass = at_least ? residual >= threshold : residual <= threshold;
    return c;
}

void VerificationReport::finalize() {
    pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
}

namespace {

// Exact 5x5 arithmetic: fixed tight threshold independent of --tol.
constexpr double kMatrixTol = 1e-12;

void defining_suite(std::vector<CheckRecord>& checks) {
    const alg::GeneratorSextet g = alg::defining_realization();
    for (const auto& t : alg::all_triple_instances())
        checks.push_back(make_check(alg::instance_id(t), "matrix", 5,
                                    alg::triple_residual_matrix(g, t), kMatrixTol));
    checks.push_back(make_check("cartan[c1-,c1+]=-2h1", "matrix", 5,
                                alg::cartan_closure_residual_c1(g), kMatrixTol));
    checks.push_back(make_check("cartan{c2-,c2+}=+2h2", "matrix", 5,
                                alg::cartan_closure_residual_c2(g), kMatrixTol));
    checks.push_back(
        make_check("block_structure", "matrix", 5, alg::block_structure_residual(g), kMatrixTol));
}

void triple_suite(const RunConfig& cfg, std::vector<CheckRecord>& checks) {
    const rep::FockSpace space(cfg.p, cfg.variant);
    const rep::FockBasis probes(cfg.p, cfg.cutoff);
    const alg::GeneratorSextet g = alg::fock_sextet(space);
    const int n = int(probes.size());

    for (const auto& t : alg::all_triple_instances())
        checks.push_back(make_check(alg::instance_id(t), "fock", n,
                                    alg::triple_residual_action(g, t, probes), cfg.tol));

    checks.push_back(make_check("vacuum_conditions", "fock", 1,
                                rep::vacuum_condition_residual(space), 1e-12));

    // Cartan eigenvalues are integers or half-integers; the action must
    // reproduce them with zero floating error.
    double cartan_worst = 0.0;
    for (const auto& label : probes)
        for (int k : {1, 2}) {
            const rep::Gen h = k == 1 ? rep::Gen::h1 : rep::Gen::h2;
            rep::StateVector diff = space.apply(h, rep::StateVector{label});
            diff.accumulate(label, -space.h_eigenvalue(k, label));
            cartan_worst = std::max(cartan_worst, diff.max_abs());
        }
    checks.push_back(make_check("cartan_eigenvalues_exact", "fock", n, cartan_worst, 0.0));
}

void adjoint_suite(const RunConfig& cfg, std::vector<CheckRecord>& checks) {
    const rep::FockSpace space(cfg.p, cfg.variant);
    const rep::FockBasis basis(cfg.p, cfg.cutoff);
    const alg::GeneratorSextet g = alg::fock_sextet(space);
    checks.push_back(make_check("adjoint(c1-,c1+)", "fock", int(basis.size()),
                                alg::adjointness_residual(g.c1m, g.c1p, basis), cfg.tol));
    checks.push_back(make_check("adjoint(c2-,c2+)", "fock", int(basis.size()),
                                alg::adjointness_residual(g.c2m, g.c2p, basis), cfg.tol));
}

void wqs_suite(const RunConfig& cfg, std::vector<CheckRecord>& checks,
               std::vector<M3TableRow>& m3_table) {
    const osc::WignerOscillator osc(cfg.p, cfg.params, cfg.variant);
    const rep::FockBasis probes(cfg.p, cfg.cutoff);
    const int n = int(probes.size());

    for (int k = 1; k <= 3; ++k)
        for (int sign : {+1, -1}) {
            const std::string id =
                "ccs(a" + std::to_string(k) + std::string(sign > 0 ? "+" : "-") + ")";
            checks.push_back(make_check(id, "fock", n,
                                        osc::compatibility_residual(osc, k, sign, probes),
                                        cfg.tol));
        }
    checks.push_back(make_check("ladder_sum={c2+,c2-}", "fock", n,
                                osc::ladder_sum_identity_residual(osc, probes), cfg.tol));
    checks.push_back(make_check("hamiltonian_diagonal", "fock", n,
                                osc::hamiltonian_diagonal_residual(osc, probes), cfg.tol));
    checks.push_back(make_check("hamilton_heisenberg", "fock", n,
                                osc::hamilton_heisenberg_residual(osc, probes), cfg.tol));

    for (int k = 1; k <= 3; ++k) {
        checks.push_back(make_check("hermitian(r" + std::to_string(k) + ")", "fock", n,
                                    alg::hermiticity_residual(osc.position(k), probes), cfg.tol));
        checks.push_back(make_check("hermitian(p" + std::to_string(k) + ")", "fock", n,
                                    alg::hermiticity_residual(osc.momentum(k), probes), cfg.tol));
    }

    const osc::SpectrumResult spec = osc::spectrum(osc, cfg.cutoff);
    checks.push_back(
        make_check("spectrum_dual_route", "fock", n, spec.dual_route_residual, cfg.tol));
    checks.push_back(make_check("spectrum_multiplicities", "fock", n,
                                spec.multiplicities_match ? 0.0 : 1.0, 0.5));

    const osc::NoncommutativityReport nc = osc::noncommutativity_report(osc, probes);
    checks.push_back(make_check("anticomm(r_i,r_j)", "fock", n, nc.rr_anticomm_max, cfg.tol));
    checks.push_back(make_check("anticomm(p_i,p_j)", "fock", n, nc.pp_anticomm_max, cfg.tol));
    checks.push_back(
        make_check("witness[r1,r2]!=0", "fock", n, nc.rr_witness, 1e-3, /*at_least=*/true));
    checks.push_back(
        make_check("witness[p1,p2]!=0", "fock", n, nc.pp_witness, 1e-3, /*at_least=*/true));
    checks.push_back(make_check("so3_closure", "fock", n, nc.so3_residual, cfg.tol));

    checks.push_back(make_check(
        "vector_transform(M)", "fock", n,
        osc::vector_transform_residual(osc, osc::VectorTriple::angular_momentum, probes),
        cfg.tol));
    checks.push_back(
        make_check("vector_transform(r)", "fock", n,
                   osc::vector_transform_residual(osc, osc::VectorTriple::position, probes),
                   cfg.tol));
    checks.push_back(
        make_check("vector_transform(p)", "fock", n,
                   osc::vector_transform_residual(osc, osc::VectorTriple::momentum, probes),
                   cfg.tol));

    // The two angular-momentum constructions agree on components 1 and 2;
    // component 3 differs by 2 h1 (documented, reported, not gated).
    const std::array<double, 3> diff = osc::angular_momentum_form_difference(osc, probes);
    checks.push_back(
        make_check("m_form_agreement(M1,M2)", "fock", n, std::max(diff[0], diff[1]), cfg.tol));

    const osc::M3Audit audit = osc::m3_audit(osc, probes);
    checks.push_back(make_check("m3_diagonal", "fock", n, audit.offdiag_max, cfg.tol));
    checks.push_back(make_check("m3_eigenvalue_set", "fock", n,
                                audit.eigenvalue_set_ok ? 0.0 : 1.0, 0.5));
    for (const auto& row : audit.rows)
        m3_table.push_back({row.label, row.realized, row.printed_formula});
}

}  // namespace

VerificationReport run_suite(const std::string& suite, const RunConfig& config) {
    config.validate(/*verification=*/true);
    VerificationReport report;
    report.suite = suite;
    report.config = config;

    if (suite == "defining") {
        defining_suite(report.checks);
    } else if (suite == "triple") {
        triple_suite(config, report.checks);
    } else if (suite == "adjoint") {
        adjoint_suite(config, report.checks);
    } else if (suite == "wqs") {
        wqs_suite(config, report.checks, report.m3_table);
    } else if (suite == "all") {
        defining_suite(report.checks);
        triple_suite(config, report.checks);
        adjoint_suite(config, report.checks);
        wqs_suite(config, report.checks, report.m3_table);
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    report.finalize();
    return report;
}

std::string fmt_g17(double x) {
    if (x == 0.0) return "0";  // normalize negative zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string render_json(const VerificationReport& r) {
    std::ostringstream os;
    os << "{\"schema\":" << VerificationReport::schema;
    os << ",\"suite\":\"" << json_escape(r.suite) << "\"";
    os << ",\"config\":{\"p\":" << r.config.p << ",\"cutoff\":" << r.config.cutoff
       << ",\"tol\":" << fmt_g17(r.config.tol) << ",\"mass\":" << fmt_g17(r.config.params.mass)
       << ",\"omega\":" << fmt_g17(r.config.params.omega)
       << ",\"hbar\":" << fmt_g17(r.config.params.hbar) << ",\"coeffs\":\""
       << rep::to_string(r.config.variant) << "\"}";
    os << ",\"checks\":[";
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        const auto& c = r.checks[i];
        if (i) os << ",";
        os << "{\"id\":\"" << json_escape(c.id) << "\",\"realization\":\"" << c.realization
           << "\",\"probe_size\":" << c.probe_size << ",\"residual\":" << fmt_g17(c.residual)
           << ",\"threshold\":" << fmt_g17(c.threshold) << ",\"comparison\":\""
           << (c.at_least ? ">=" : "<=") << "\",\"pass\":" << (c.pass ? "true" : "false") << "}";
    }
    os << "]";
    os << ",\"m3_table\":[";
    for (std::size_t i = 0; i < r.m3_table.size(); ++i) {
        const auto& row = r.m3_table[i];
        if (i) os << ",";
        os << "[" << row.label.mu12 << "," << row.label.mu22 << "," << row.label.mu11 << ","
           << fmt_g17(row.realized) << "," << fmt_g17(row.printed) << "]";
    }
    os << "]";
    os << ",\"pass\":" << (r.pass ? "true" : "false") << "}";
    os << "\n";
    return os.str();
}

std::string render_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << "id,realization,probe_size,residual,threshold,comparison,pass\n";
    for (const auto& c : r.checks)
        os << c.id << "," << c.realization << "," << c.probe_size << "," << fmt_g17(c.residual)
           << "," << fmt_g17(c.threshold) << "," << (c.at_least ? ">=" : "<=") << ","
           << (c.pass ? "true" : "false") << "\n";
    return os.str();
}

std::string render_plain(const VerificationReport& r) {
    std::ostringstream os;
    os << "suite: " << r.suite << "  (p=" << r.config.p << ", cutoff=" << r.config.cutoff
       << ", tol=" << fmt_g17(r.config.tol) << ", coeffs=" << rep::to_string(r.config.variant)
       << ")\n";
    for (const auto& c : r.checks) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3e", c.residual);
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  residual=" << buf
           << (c.at_least ? " >= " : " <= ") << fmt_g17(c.threshold) << "  [" << c.realization
           << ", " << c.probe_size << " probes]\n";
    }
    if (!r.m3_table.empty()) {
        os << "M3 audit (realized diagonal vs tabulated closed form p/2 - 2*mu12):\n";
        for (const auto& row : r.m3_table) {
            char a[32], b[32];
            std::snprintf(a, sizeof(a), "%+.6g", row.realized);
            std::snprintf(b, sizeof(b), "%+.6g", row.printed);
            os << "  " << rep::to_string(row.label) << "  realized=" << a << "  tabulated=" << b
               << (std::abs(row.realized - row.printed) < 1e-9 ? "" : "  (differs)") << "\n";
        }
    }
    os << (r.pass ? "OVERALL PASS" : "OVERALL FAIL") << "  (" << r.checks.size() << " checks)\n";
    return os.str();
}

}  // namespace

std::string render_report(const VerificationReport& r) {
    switch (r.config.format) {
        case Format::json: return render_json(r);
        case Format::csv: return render_csv(r);
        case Format::plain: return render_plain(r);
    }
    throw std::logic_error("render_report: bad format");
}

}  // namespace parafock::cli
