// SPDX-License-Identifier: Apache-2.0
//
// wetkit: planning and simulation toolkit for RF wireless energy transfer networks
// Copyright (C) 2026 The wetkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "wet/beam_power.hpp"
#include "wet/parallel.hpp"
#include "wet/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace
{
    using Eigen::MatrixXcd;
    using Eigen::MatrixXd;
    using Eigen::VectorXd;
    using wet::CVector;

    // Linear complementarity problem: find mu >= 0 with G mu + q >= 0 and mu^T (G mu + q) = 0,
    // for symmetric PSD G with positive diagonal. Projected Gauss-Seidel, then an exact solve on
    // the detected active set when it satisfies the conditions. `mu` is a warm start.
    void solve_lcp(const MatrixXd &G, const VectorXd &q, VectorXd &mu)
    {
        const Eigen::Index n = q.size();
        if (mu.size() != n)
            mu = VectorXd::Zero(n);

        const double scale = std::max(q.cwiseAbs().maxCoeff(), 1e-300);
        for (int sweep = 0; sweep < 5000; ++sweep)
        {
            double change = 0.0;
            for (Eigen::Index i = 0; i < n; ++i)
            {
                const double r = G.row(i).dot(mu) + q[i];
                const double next = std::max(0.0, mu[i] - r / G(i, i));
                change = std::max(change, std::abs(next - mu[i]) * G(i, i));
                mu[i] = next;
            }
            if (change <= 1e-15 * scale)
                break;
        }

        std::vector<Eigen::Index> active;
        for (Eigen::Index i = 0; i < n; ++i)
            if (mu[i] > 0.0)
                active.push_back(i);
        if (active.empty())
            return;

        const auto na = static_cast<Eigen::Index>(active.size());
        MatrixXd Ga(na, na);
        VectorXd qa(na);
        for (Eigen::Index r = 0; r < na; ++r)
        {
            qa[r] = -q[active[r]];
            for (Eigen::Index c = 0; c < na; ++c)
                Ga(r, c) = G(active[r], active[c]);
        }
        const Eigen::LDLT<MatrixXd> ldlt(Ga);
        if (ldlt.info() != Eigen::Success)
            return;
        const VectorXd xa = ldlt.solve(qa);
        if (!xa.allFinite() || (xa.array() < 0.0).any())
            return;
        VectorXd cand = VectorXd::Zero(n);
        for (Eigen::Index r = 0; r < na; ++r)
            cand[active[r]] = xa[r];
        const VectorXd w = G * cand + q;
        if ((w.array() >= -1e-12 * scale).all())
            mu = cand;
    }

    MatrixXcd project_psd(const MatrixXcd &X)
    {
        const MatrixXcd H = 0.5 * (X + X.adjoint());
        const Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H);
        const VectorXd lam = es.eigenvalues().cwiseMax(0.0);
        return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
    }

    double quad(const CVector &a, const MatrixXcd &V)
    {
        return (a.adjoint() * V * a)(0, 0).real();
    }

    double min_gain(const std::vector<CVector> &a, const CVector &v)
    {
        double m = std::numeric_limits<double>::infinity();
        for (const auto &ai : a)
            m = std::min(m, std::norm(ai.dot(v)));
        return m;
    }

    // Scales v so that min_i |a_i^H v|^2 = 1. Returns false if some gain vanishes.
    bool rescale(const std::vector<CVector> &a, CVector &v)
    {
        const double g = min_gain(a, v);
        if (!(g > 0.0) || !std::isfinite(g))
            return false;
        v /= std::sqrt(g);
        return true;
    }

    // Normalized problem: min tr(V) s.t. a_i^H V a_i >= 1, V PSD.
    struct Relaxation
    {
        MatrixXcd V;        // feasible for the normalized constraints
        double upper = 0.0; // tr(V)
        double lower = 0.0; // dual bound
        int iterations = 0;
        bool converged = false;
    };

    Relaxation solve_relaxation(const std::vector<CVector> &a, int M, double tol, int max_iterations)
    {
        const auto N = static_cast<Eigen::Index>(a.size());
        MatrixXd G(N, N);
        for (Eigen::Index i = 0; i < N; ++i)
            for (Eigen::Index j = 0; j < N; ++j)
                G(i, j) = std::norm(a[i].dot(a[j]));

        const MatrixXcd I = MatrixXcd::Identity(M, M);
        VectorXd mu = VectorXd::Zero(N);
        VectorXd q(N);

        auto project_constraints = [&](const MatrixXcd &X)
        {
            for (Eigen::Index i = 0; i < N; ++i)
                q[i] = quad(a[i], X) - 1.0;
            solve_lcp(G, q, mu);
            MatrixXcd Z = X;
            for (Eigen::Index i = 0; i < N; ++i)
                if (mu[i] > 0.0)
                    Z += mu[i] * (a[i] * a[i].adjoint());
            return Z;
        };

        MatrixXcd Z = project_constraints(MatrixXcd::Zero(M, M));
        MatrixXcd U = MatrixXcd::Zero(M, M);
        MatrixXcd V = Z;
        double rho = 1.0 / std::max(1.0, Z.trace().real());

        Relaxation best;
        best.upper = std::numeric_limits<double>::infinity();

        for (int it = 1; it <= max_iterations; ++it)
        {
            V = project_psd(Z - U - I / rho);
            const MatrixXcd Z_prev = Z;
            Z = project_constraints(V + U);
            U += V - Z;

            const double r_norm = (V - Z).norm();
            const double s_norm = rho * (Z - Z_prev).norm();

            if (it % 10 == 0 || it == max_iterations)
            {
                // Primal bound: V scaled onto the feasible set.
                double worst = std::numeric_limits<double>::infinity();
                for (const auto &ai : a)
                    worst = std::min(worst, quad(ai, V));
                if (worst > 0.0)
                {
                    const double ub = V.trace().real() / worst;
                    if (ub < best.upper)
                    {
                        best.upper = ub;
                        best.V = V / worst;
                    }
                }
                // Any rescaled rank-one point is feasible too, and is often much closer to
                // the optimum than V itself when the relaxation is tight.
                {
                    const Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (V + V.adjoint()));
                    CVector v = es.eigenvectors().col(M - 1);
                    if (rescale(a, v) && v.squaredNorm() < best.upper)
                    {
                        best.upper = v.squaredNorm();
                        best.V = v * v.adjoint();
                    }
                }
                // Dual bound: multipliers of the constraint projection, scaled to dual feasibility.
                const VectorXd lambda = rho * mu;
                if (lambda.sum() > 0.0)
                {
                    MatrixXcd A = MatrixXcd::Zero(M, M);
                    for (Eigen::Index i = 0; i < N; ++i)
                        A += lambda[i] * (a[i] * a[i].adjoint());
                    const Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (A + A.adjoint()), Eigen::EigenvaluesOnly);
                    const double lmax = es.eigenvalues().maxCoeff();
                    if (lmax > 0.0)
                        best.lower = std::max(best.lower, lambda.sum() / lmax);
                }
                best.iterations = it;
                if (best.lower > 0.0 && best.upper - best.lower <= tol * best.lower)
                {
                    best.converged = true;
                    return best;
                }
            }

            // Residual balancing.
            if (r_norm > 10.0 * s_norm)
            {
                rho *= 2.0;
                U /= 2.0;
            }
            else if (s_norm > 10.0 * r_norm)
            {
                rho /= 2.0;
                U *= 2.0;
            }
        }
        return best;
    }

    // min ||v||^2 s.t. |a_i^H v|^2 >= 1, by successive linearization of the constraints around
    // the incumbent. Each step solves a small QP through its dual; the objective never increases.
    CVector refine_sca(const std::vector<CVector> &a, CVector v, int max_steps)
    {
        const auto N = static_cast<Eigen::Index>(a.size());
        double power = v.squaredNorm();
        VectorXd mu;
        for (int step = 0; step < max_steps; ++step)
        {
            std::vector<CVector> b(a.size());
            VectorXd c(N);
            for (Eigen::Index i = 0; i < N; ++i)
            {
                const auto z = a[i].dot(v);
                b[i] = a[i] * z;
                c[i] = 0.5 * (1.0 + std::norm(z));
            }
            MatrixXd G(N, N);
            for (Eigen::Index i = 0; i < N; ++i)
                for (Eigen::Index j = 0; j < N; ++j)
                    G(i, j) = 0.5 * b[i].dot(b[j]).real();
            solve_lcp(G, -c, mu);

            CVector next = CVector::Zero(v.size());
            for (Eigen::Index i = 0; i < N; ++i)
                next += 0.5 * mu[i] * b[i];
            if (!rescale(a, next))
                break;
            const double next_power = next.squaredNorm();
            if (!(next_power < power))
                break;
            const double gain = (power - next_power) / power;
            v = std::move(next);
            power = next_power;
            if (gain < 1e-12)
                break;
        }
        return v;
    }
}

void wet::MulticastProblem::validate() const
{
    if (channels.empty())
        throw std::invalid_argument("multicast problem has no devices");
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("required received power must be positive");
    const auto M = channels.front().size();
    if (M < 1)
        throw std::invalid_argument("channels must have at least one antenna");
    for (const auto &h : channels)
    {
        if (h.size() != M)
            throw std::invalid_argument("channels differ in antenna count");
        if (!h.allFinite() || h.squaredNorm() == 0.0)
            throw std::invalid_argument("channel is zero or not finite");
    }
}

wet::PrecoderSolution wet::min_power_precoder(const MulticastProblem &problem, const PrecoderOptions &options)
{
    problem.validate();
    const int M = problem.n_antennas();

    double c2 = 0.0;
    for (const auto &h : problem.channels)
        c2 = std::max(c2, h.squaredNorm());
    const double c = std::sqrt(c2);
    std::vector<CVector> a;
    for (const auto &h : problem.channels)
        a.push_back(h / c);
    const double gamma_n = problem.gamma / c2; // |a^H w|^2 >= gamma_n

    const Relaxation rel = solve_relaxation(a, M, options.tol, options.max_iterations);

    // Rank-one extraction.
    CVector best;
    double best_power = std::numeric_limits<double>::infinity();
    auto consider = [&](CVector v)
    {
        if (!rescale(a, v))
            return;
        const double p = v.squaredNorm();
        if (p < best_power)
        {
            best_power = p;
            best = std::move(v);
        }
    };

    if (rel.V.size() > 0)
    {
        const Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (rel.V + rel.V.adjoint()));
        const VectorXd lam = es.eigenvalues().cwiseMax(0.0);
        const MatrixXcd root = es.eigenvectors() * lam.cwiseSqrt().asDiagonal();
        consider(es.eigenvectors().col(M - 1));

        Rng rng = make_rng(derive_seed(options.seed, stream::randomization));
        std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
        for (int s = 0; s < options.randomizations; ++s)
        {
            CVector e(M);
            for (int m = 0; m < M; ++m)
            {
                const double re = gauss(rng);
                e[m] = cplx(re, gauss(rng));
            }
            consider(root * e);
        }
    }
    if (best.size() == 0)
    {
        // Fall back on the strongest matched filter, always rescalable unless channels are orthogonal.
        for (const auto &ai : a)
            consider(ai);
    }

    std::optional<PrecoderSolution> sol;
    if (best.size() > 0)
    {
        if (options.refine)
            best = refine_sca(a, best, 500);
        PrecoderSolution s;
        s.precoder = best * std::sqrt(gamma_n);
        s.tx_power = s.precoder.squaredNorm();
        s.sdr_lower_bound = gamma_n * rel.lower;
        s.iterations = rel.iterations;
        double worst = std::numeric_limits<double>::infinity();
        for (const auto &h : problem.channels)
            worst = std::min(worst, std::norm(h.dot(s.precoder)));
        s.feasible = worst >= problem.gamma * (1.0 - options.tol);
        sol = std::move(s);
    }

    // A refined rank-one point that meets the dual bound certifies the relaxation as well.
    const bool certified = rel.converged || (best.size() > 0 && rel.lower > 0.0 &&
                                             best.squaredNorm() - rel.lower <= options.tol * rel.lower);
    if (!certified)
        throw ConvergenceError("multicast relaxation did not converge within " + std::to_string(options.max_iterations) +
                                   " iterations",
                               sol && sol->feasible ? sol : std::nullopt);
    if (!sol)
        throw std::runtime_error("no feasible precoder found");
    return *sol;
}

double wet::consumption(double tx_power, int n_rf, const ConsumptionModel &model)
{
    if (!(tx_power >= 0.0))
        throw std::invalid_argument("transmit power must be non-negative");
    if (!(model.pa_efficiency > 0.0 && model.pa_efficiency <= 1.0))
        throw std::invalid_argument("PA efficiency must lie in (0, 1]");
    if (n_rf < 0 || !(model.p_rf >= 0.0))
        throw std::invalid_argument("RF chain count and per-chain power must be non-negative");
    return tx_power / model.pa_efficiency + n_rf * model.p_rf;
}

wet::RfChainSweep wet::sweep_rf_chains(const std::vector<CVector> &full_channels, double gamma,
                                       const std::vector<int> &m_values, const ConsumptionModel &model,
                                       const PrecoderOptions &options, unsigned workers)
{
    if (m_values.empty())
        throw std::invalid_argument("RF chain sweep needs at least one M");
    if (full_channels.empty())
        throw std::invalid_argument("RF chain sweep needs at least one device");
    const Eigen::Index available = full_channels.front().size();
    for (std::size_t i = 0; i < m_values.size(); ++i)
    {
        if (m_values[i] < 1 || m_values[i] > available)
            throw std::invalid_argument("M = " + std::to_string(m_values[i]) + " outside [1, " +
                                        std::to_string(available) + "]");
        if (i > 0 && m_values[i] <= m_values[i - 1])
            throw std::invalid_argument("M values must be strictly increasing");
    }

    RfChainSweep out;
    out.points.resize(m_values.size());
    parallel_for(m_values.size(), workers, [&](std::size_t i)
    {
        const int M = m_values[i];
        MulticastProblem p;
        p.gamma = gamma;
        for (const auto &h : full_channels)
            p.channels.push_back(h.head(M));
        PrecoderOptions opt = options;
        opt.seed = derive_seed(options.seed, stream::randomization, static_cast<std::uint64_t>(M));

        PrecoderSolution s;
        try
        {
            s = min_power_precoder(p, opt);
        }
        catch (const std::exception &e)
        {
            throw std::runtime_error("M = " + std::to_string(M) + ": " + e.what());
        }
        if (!s.feasible)
            throw std::runtime_error("M = " + std::to_string(M) + ": precoder is infeasible");
        out.points[i] = {M, s.tx_power, consumption(s.tx_power, M, model)};
    });

    for (std::size_t i = 1; i < out.points.size(); ++i)
        if (out.points[i].total_consumption < out.points[out.argmin].total_consumption)
            out.argmin = i;
    return out;
}

std::vector<wet::CVector> wet::beacon_channels(const BeaconScenario &scenario, int n_antennas, std::uint64_t seed)
{
    const ArrayConfig array{n_antennas, scenario.element_spacing};
    const Position2D beacon{};
    std::vector<CVector> out;
    for (std::size_t i = 0; i < scenario.devices.size(); ++i)
        out.push_back(sample_channel(scenario.devices[i], beacon, array, scenario.rician, scenario.pathloss,
                                     derive_seed(seed, stream::fading, i)));
    return out;
}

wet::RfChainSweep wet::sweep_rf_chains(const BeaconScenario &scenario, double gamma, const std::vector<int> &m_values,
                                       std::uint64_t seed, const ConsumptionModel &model,
                                       const PrecoderOptions &options, unsigned workers)
{
    if (m_values.empty())
        throw std::invalid_argument("RF chain sweep needs at least one M");
    const int m_max = *std::max_element(m_values.begin(), m_values.end());
    PrecoderOptions opt = options;
    opt.seed = seed;
    return sweep_rf_chains(beacon_channels(scenario, m_max, seed), gamma, m_values, model, opt, workers);
}

std::vector<wet::Position2D> wet::sample_uniform_disk(std::size_t n, double radius, std::uint64_t seed)
{
    if (!(radius > 0.0))
        throw std::invalid_argument("disk radius must be positive");
    Rng rng = make_rng(derive_seed(seed, stream::devices));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Position2D> out;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double r = radius * std::sqrt(unit(rng));
        const double phi = 2.0 * std::numbers::pi * unit(rng);
        out.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return out;
}
