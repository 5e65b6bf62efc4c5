#include "parafock/oscillator.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "parafock/matrix_rep.hpp"

namespace parafock::osc {

void OscillatorParams::validate() const {
    if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0))
        throw std::invalid_argument("OscillatorParams: mass, omega, hbar must be positive");
}

int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    // Even permutations of (1,2,3).
    if ((i == 1 && j == 2 && k == 3) || (i == 2 && j == 3 && k == 1) ||
        (i == 3 && j == 1 && k == 2))
        return 1;
    return -1;
}

const GradedOperator& WignerOscillator::pick(const std::array<GradedOperator, 3>& a, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("WignerOscillator: component k must be 1..3");
    return a[std::size_t(k - 1)];
}

WignerOscillator::WignerOscillator(int p, OscillatorParams params, rep::CoeffVariant variant)
    : space_(p, variant), params_(params), gens_(alg::fock_sextet(space_)) {
    params_.validate();
    const Complex I{0.0, 1.0};
    const double inv_2s3 = 1.0 / (2.0 * std::sqrt(3.0));
    const double inv_s3 = 1.0 / std::sqrt(3.0);

    auto build_ladder = [&](const GradedOperator& c2) {
        std::array<GradedOperator, 3> a;
        a[0] = Complex{inv_2s3} * alg::super_bracket(gens_.c1m - gens_.c1p, c2);
        a[1] = (I * inv_2s3) * alg::super_bracket(gens_.c1m + gens_.c1p, c2);
        a[2] = Complex{inv_s3} * c2;
        return a;
    };
    a_plus_ = build_ladder(gens_.c2p);
    a_minus_ = build_ladder(gens_.c2m);
    for (int k = 0; k < 3; ++k) {
        a_plus_[k].name = "a" + std::to_string(k + 1) + "+";
        a_minus_[k].name = "a" + std::to_string(k + 1) + "-";
    }

    const double r_scale = std::sqrt(params_.hbar / (2.0 * params_.mass * params_.omega));
    const double p_scale = std::sqrt(params_.mass * params_.omega * params_.hbar / 2.0);
    for (int k = 0; k < 3; ++k) {
        r_[k] = Complex{r_scale} * (a_plus_[k] + a_minus_[k]);
        r_[k].name = "r" + std::to_string(k + 1);
        p_[k] = (I * p_scale) * (a_plus_[k] - a_minus_[k]);
        p_[k].name = "p" + std::to_string(k + 1);
    }

    number_like_ = alg::super_bracket(a_plus_[0], a_minus_[0]) +
                   alg::super_bracket(a_plus_[1], a_minus_[1]) +
                   alg::super_bracket(a_plus_[2], a_minus_[2]);
    number_like_.name = "sum{a+,a-}";
    h_ = Complex{0.5 * params_.omega * params_.hbar} * number_like_;
    h_.name = "H";

    // Bilinear angular momentum: M_i = -(3/(4 hbar)) sum_jk eps_ijk {r_j, p_k}.
    const double m_scale = -3.0 / (4.0 * params_.hbar);
    for (int i = 1; i <= 3; ++i) {
        const int j = i % 3 + 1;      // cyclic successor
        const int k = (i + 1) % 3 + 1;
        m_[i - 1] = Complex{m_scale} * (alg::super_bracket(position(j), momentum(k)) -
                                        alg::super_bracket(position(k), momentum(j)));
        m_[i - 1].name = "M" + std::to_string(i);
    }

    // Literal c1-bilinear shortcut forms.
    m_c1_[0] = Complex{0.5} * (gens_.c1p + gens_.c1m);
    m_c1_[1] = (-I * 0.5) * (gens_.c1p - gens_.c1m);
    m_c1_[2] = Complex{0.5} * alg::super_bracket(gens_.c1m, gens_.c1p);
    for (int k = 0; k < 3; ++k) m_c1_[k].name = "M" + std::to_string(k + 1) + "_c1";
}

double WignerOscillator::energy(const BasisLabel& m) const {
    return params_.hbar * params_.omega * (double(m.level()) + 0.5 * double(order()));
}

double compatibility_residual(const WignerOscillator& osc, int k, int sign,
                              const FockBasis& probes) {
    const GradedOperator& a = sign > 0 ? osc.a_plus(k) : osc.a_minus(k);
    const GradedOperator lhs = alg::super_bracket(osc.number_like(), a);
    return alg::action_residual(lhs, Complex{2.0 * sign} * a, probes);
}

double ladder_sum_identity_residual(const WignerOscillator& osc, const FockBasis& probes) {
    const GeneratorSextet& g = osc.generators();
    return alg::action_residual(osc.number_like(), alg::super_bracket(g.c2p, g.c2m), probes);
}

double hamilton_heisenberg_residual(const WignerOscillator& osc, const FockBasis& probes) {
    const Complex I{0.0, 1.0};
    const OscillatorParams& par = osc.params();
    double worst = 0.0;
    for (int k = 1; k <= 3; ++k) {
        // dr/dt = p/m  <->  [[H, r_k]] = -(i hbar/m) p_k
        worst = std::max(worst, alg::action_residual(
                                    alg::super_bracket(osc.hamiltonian(), osc.position(k)),
                                    (-I * (par.hbar / par.mass)) * osc.momentum(k), probes));
        // dp/dt = -m omega^2 r  <->  [[H, p_k]] = i hbar m omega^2 r_k
        worst = std::max(worst,
                         alg::action_residual(
                             alg::super_bracket(osc.hamiltonian(), osc.momentum(k)),
                             (I * (par.hbar * par.mass * par.omega * par.omega)) * osc.position(k),
                             probes));
    }
    return worst;
}

double hamiltonian_diagonal_residual(const WignerOscillator& osc, const FockBasis& probes) {
    double worst = 0.0;
    for (const auto& label : probes) {
        StateVector diff = osc.hamiltonian()(StateVector{label});
        diff.accumulate(label, -osc.energy(label));
        worst = std::max(worst, diff.max_abs());
    }
    return worst;
}

double so3_closure_residual(const WignerOscillator& osc, const FockBasis& probes) {
    const Complex I{0.0, 1.0};
    double worst = 0.0;
    for (int i = 1; i <= 3; ++i) {
        const int j = i % 3 + 1;
        const int k = (i + 1) % 3 + 1;  // eps_ijk = +1
        worst = std::max(
            worst,
            alg::action_residual(alg::super_bracket(osc.angular_momentum(i),
                                                    osc.angular_momentum(j)),
                                 I * osc.angular_momentum(k), probes));
    }
    return worst;
}

namespace {

const GradedOperator& triple_component(const WignerOscillator& osc, VectorTriple which, int k) {
    switch (which) {
        case VectorTriple::angular_momentum: return osc.angular_momentum(k);
        case VectorTriple::position: return osc.position(k);
        case VectorTriple::momentum: return osc.momentum(k);
    }
    throw std::invalid_argument("triple_component: bad triple");
}

}  // namespace

double vector_transform_residual(const WignerOscillator& osc, VectorTriple which,
                                 const FockBasis& probes) {
    const Complex I{0.0, 1.0};
    double worst = 0.0;
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) {
            const GradedOperator lhs =
                alg::super_bracket(osc.angular_momentum(j), triple_component(osc, which, k));
            int l_found = 0, eps = 0;
            for (int l = 1; l <= 3; ++l)
                if (int e = levi_civita(j, k, l); e != 0) {
                    l_found = l;
                    eps = e;
                }
            if (eps == 0) {
                worst = std::max(worst, alg::action_residual_zero(lhs, probes));
            } else {
                worst = std::max(worst,
                                 alg::action_residual(
                                     lhs, (I * double(eps)) * triple_component(osc, which, l_found),
                                     probes));
            }
        }
    return worst;
}

std::array<double, 3> angular_momentum_form_difference(const WignerOscillator& osc,
                                                       const FockBasis& probes) {
    std::array<double, 3> out{};
    for (int k = 1; k <= 3; ++k)
        out[std::size_t(k - 1)] = alg::action_residual(osc.angular_momentum(k),
                                                       osc.angular_momentum_c1form(k), probes);
    return out;
}

SpectrumResult spectrum(const WignerOscillator& osc, int cutoff) {
    const FockBasis basis(osc.order(), cutoff);
    SpectrumResult out;

    // Closed-form route: energies and label counts per interior level.
    std::map<int, int> level_counts;
    std::vector<double> closed;
    for (const auto& label : basis)
        if (label.level() < cutoff) {
            ++level_counts[label.level()];
            closed.push_back(osc.energy(label));
        }
    for (const auto& [n, count] : level_counts)
        out.levels.push_back(
            {n, osc.params().hbar * osc.params().omega * (n + 0.5 * osc.order()), count});

    // Diagonalization route: dense interior block of H.
    const alg::SparseComplexMatrix hmat = alg::matrix_of(osc.hamiltonian(), basis);
    std::vector<int> interior;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis.label(i).level() < cutoff) interior.push_back(int(i));
    std::vector<int> where(basis.size(), -1);
    for (std::size_t d = 0; d < interior.size(); ++d) where[std::size_t(interior[d])] = int(d);

    Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(Eigen::Index(interior.size()),
                                                    Eigen::Index(interior.size()));
    for (const auto& [rc, v] : hmat.entries()) {
        const int r = where[std::size_t(rc.first)], c = where[std::size_t(rc.second)];
        if (r >= 0 && c >= 0) dense(r, c) = v;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("spectrum: eigensolver failed");

    std::vector<double> diag(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(closed.begin(), closed.end());
    std::sort(diag.begin(), diag.end());

    double residual = 0.0;
    for (std::size_t i = 0; i < closed.size(); ++i)
        residual = std::max(residual, std::abs(closed[i] - diag[i]));
    out.dual_route_residual = residual;

    // Cluster eigenvalues to the nearest level and compare multiplicities.
    const double quantum = osc.params().hbar * osc.params().omega;
    std::map<int, int> diag_counts;
    bool ok = true;
    for (double ev : diag) {
        const double n_est = ev / quantum - 0.5 * osc.order();
        const int n = int(std::lround(n_est));
        if (std::abs(n_est - n) > 1e-6) ok = false;
        ++diag_counts[n];
    }
    out.multiplicities_match = ok && diag_counts == level_counts;
    return out;
}

NoncommutativityReport noncommutativity_report(const WignerOscillator& osc,
                                               const FockBasis& probes) {
    NoncommutativityReport rep;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            rep.rr_anticomm_max = std::max(
                rep.rr_anticomm_max,
                alg::action_residual_zero(
                    alg::anticommutator(osc.position(i), osc.position(j)), probes));
            rep.pp_anticomm_max = std::max(
                rep.pp_anticomm_max,
                alg::action_residual_zero(
                    alg::anticommutator(osc.momentum(i), osc.momentum(j)), probes));
        }
    rep.rr_witness = alg::action_residual_zero(
        alg::commutator(osc.position(1), osc.position(2)), probes);
    rep.pp_witness = alg::action_residual_zero(
        alg::commutator(osc.momentum(1), osc.momentum(2)), probes);
    rep.so3_residual = so3_closure_residual(osc, probes);
    return rep;
}

M3Audit m3_audit(const WignerOscillator& osc, const FockBasis& basis) {
    M3Audit audit;
    const alg::SparseComplexMatrix mat =
        alg::matrix_of(osc.angular_momentum_c1form(3), basis);

    for (const auto& [rc, v] : mat.entries()) {
        if (rc.first != rc.second)
            audit.offdiag_max = std::max(audit.offdiag_max, std::abs(v));
        else
            audit.offdiag_max = std::max(audit.offdiag_max, std::abs(v.imag()));
    }

    const double p_half = 0.5 * osc.order();
    std::vector<double> seen;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const BasisLabel& label = basis.label(i);
        const double realized = mat.at(int(i), int(i)).real();
        audit.rows.push_back({label, realized, p_half - 2.0 * label.mu12});
        seen.push_back(realized);
    }

    // Realized values must exhaust {-p/2, -p/2 + 1, ..., p/2}.
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-9; }),
               seen.end());
    bool ok = seen.size() == std::size_t(osc.order() + 1);
    if (ok)
        for (std::size_t t = 0; t < seen.size(); ++t)
            ok = ok && std::abs(seen[t] - (-p_half + double(t))) < 1e-9;
    audit.eigenvalue_set_ok = ok;
    return audit;
}

}  // namespace parafock::osc
