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

#include "wet/deployment.hpp"
#include "wet/parallel.hpp"
#include "wet/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace
{
    using Point = std::vector<double>; // x0, y0, x1, y1, ...

    std::vector<wet::Position2D> to_positions(const Point &x, const wet::Rect &area)
    {
        std::vector<wet::Position2D> out(x.size() / 2);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = area.clamp({x[2 * i], x[2 * i + 1]});
        return out;
    }

    // Tracks every evaluated candidate so the solver can return the best one it has seen.
    class Evaluator
    {
    public:
        explicit Evaluator(const wet::DeploymentProblem &problem) : problem_(problem) {}

        double operator()(const Point &x)
        {
            ++evaluations_;
            auto pbs = to_positions(x, problem_.map.area);
            const double v = wet::objective(pbs, problem_).value;
            if (v > best_value_)
            {
                best_value_ = v;
                best_ = std::move(pbs);
            }
            return v;
        }

        int evaluations() const { return evaluations_; }
        double best_value() const { return best_value_; }
        const std::vector<wet::Position2D> &best() const { return best_; }

        Point best_point() const
        {
            Point x;
            for (const auto &p : best_)
            {
                x.push_back(p.x);
                x.push_back(p.y);
            }
            return x;
        }

    private:
        const wet::DeploymentProblem &problem_;
        int evaluations_ = 0;
        double best_value_ = -1.0;
        std::vector<wet::Position2D> best_;
    };

    // Nelder-Mead maximization of the evaluator starting from x0 with an axis-aligned simplex.
    void nelder_mead(Evaluator &eval, const Point &x0, double step, int budget, double tolerance)
    {
        const std::size_t n = x0.size();
        std::vector<Point> simplex(n + 1, x0);
        std::vector<double> f(n + 1);
        for (std::size_t i = 0; i < n; ++i)
            simplex[i + 1][i] += step;
        for (std::size_t i = 0; i <= n; ++i)
            f[i] = eval(simplex[i]);

        const int stop_at = eval.evaluations() + budget;
        std::vector<std::size_t> order(n + 1);
        while (eval.evaluations() < stop_at)
        {
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f[a] > f[b]; });
            const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

            const double spread = f[best] - f[worst];
            if (spread <= tolerance * std::max(std::abs(f[best]), 1e-300))
            {
                double size = 0.0;
                for (std::size_t i = 0; i <= n; ++i)
                    for (std::size_t d = 0; d < n; ++d)
                        size = std::max(size, std::abs(simplex[i][d] - simplex[best][d]));
                if (size < 1e-6 * step || spread == 0.0)
                    break;
            }

            Point centroid(n, 0.0);
            for (std::size_t i = 0; i <= n; ++i)
                if (i != worst)
                    for (std::size_t d = 0; d < n; ++d)
                        centroid[d] += simplex[i][d] / static_cast<double>(n);

            auto along = [&](double t)
            {
                Point p(n);
                for (std::size_t d = 0; d < n; ++d)
                    p[d] = centroid[d] + t * (simplex[worst][d] - centroid[d]);
                return p;
            };

            Point xr = along(-1.0);
            const double fr = eval(xr);
            if (fr > f[best])
            {
                Point xe = along(-2.0);
                const double fe = eval(xe);
                if (fe > fr)
                {
                    simplex[worst] = std::move(xe);
                    f[worst] = fe;
                }
                else
                {
                    simplex[worst] = std::move(xr);
                    f[worst] = fr;
                }
                continue;
            }
            if (fr > f[second])
            {
                simplex[worst] = std::move(xr);
                f[worst] = fr;
                continue;
            }
            const bool outside = fr > f[worst];
            Point xc = along(outside ? -0.5 : 0.5);
            const double fc = eval(xc);
            if (fc > std::max(fr, f[worst]) || (!outside && fc > f[worst]))
            {
                simplex[worst] = std::move(xc);
                f[worst] = fc;
                continue;
            }
            for (std::size_t i = 0; i <= n; ++i)
            {
                if (i == best)
                    continue;
                for (std::size_t d = 0; d < n; ++d)
                    simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
                f[i] = eval(simplex[i]);
            }
        }
    }

    // Generalized pattern search around the incumbent: coordinate directions plus random unit
    // directions, halving the step on failure. Handles the kinks of the max-min objective
    // where the simplex tends to collapse.
    void pattern_search(Evaluator &eval, double step, double min_step, int budget, wet::Rng &rng)
    {
        Point x = eval.best_point();
        double fx = eval.best_value();
        const std::size_t n = x.size();
        const int stop_at = eval.evaluations() + budget;
        std::normal_distribution<double> gauss(0.0, 1.0);

        while (step > min_step && eval.evaluations() < stop_at)
        {
            bool improved = false;
            std::vector<Point> dirs;
            for (std::size_t d = 0; d < n; ++d)
            {
                Point e(n, 0.0);
                e[d] = 1.0;
                dirs.push_back(e);
                e[d] = -1.0;
                dirs.push_back(e);
            }
            for (std::size_t r = 0; r < 2 * n; ++r)
            {
                Point e(n);
                double norm = 0.0;
                for (auto &v : e)
                {
                    v = gauss(rng);
                    norm += v * v;
                }
                norm = std::sqrt(norm);
                for (auto &v : e)
                    v /= norm;
                dirs.push_back(e);
            }
            for (const auto &e : dirs)
            {
                Point y(n);
                for (std::size_t d = 0; d < n; ++d)
                    y[d] = x[d] + step * e[d];
                const double fy = eval(y);
                if (fy > fx)
                {
                    x = eval.best_point();
                    fx = eval.best_value();
                    improved = true;
                    break;
                }
            }
            if (!improved)
                step *= 0.5;
        }
    }

    Point initial_point(const wet::DeploymentProblem &problem, int restart, wet::Rng &rng)
    {
        const auto &area = problem.map.area;
        const std::size_t n_dev = problem.devices.size();
        std::uniform_real_distribution<double> ux(area.xmin, area.xmax), uy(area.ymin, area.ymax), unit(0.0, 1.0);
        std::normal_distribution<double> jitter(0.0, 0.02 * std::max(area.width(), area.height()));

        Point x;
        for (int i = 0; i < problem.k; ++i)
        {
            wet::Position2D p;
            if (restart == 0)
            {
                // Deterministic start: beacons spread over the device list.
                p = problem.devices[(static_cast<std::size_t>(i) * n_dev) / problem.k];
            }
            else
            {
                const double u = unit(rng);
                if (u < 0.45)
                {
                    std::uniform_int_distribution<std::size_t> pick(0, n_dev - 1);
                    p = problem.devices[pick(rng)];
                    p.x += jitter(rng);
                    p.y += jitter(rng);
                }
                else if (u < 0.65)
                {
                    std::uniform_int_distribution<std::size_t> pick(0, problem.map.components.size() - 1);
                    p = problem.map.components[pick(rng)].center;
                    p.x += jitter(rng);
                    p.y += jitter(rng);
                }
                else
                {
                    p = {ux(rng), uy(rng)};
                }
            }
            p = area.clamp(p);
            x.push_back(p.x);
            x.push_back(p.y);
        }
        return x;
    }

    struct RestartResult
    {
        std::vector<wet::Position2D> pbs;
        double value = -1.0;
    };

    RestartResult run_restart(const wet::DeploymentProblem &problem, const wet::SolverConfig &solver,
                              std::uint64_t seed, int restart)
    {
        wet::Rng rng = wet::make_rng(wet::derive_seed(seed, wet::stream::restart, static_cast<std::uint64_t>(restart)));
        Evaluator eval(problem);
        const double scale = std::max(problem.map.area.width(), problem.map.area.height());

        const Point x0 = initial_point(problem, restart, rng);
        eval(x0);
        nelder_mead(eval, x0, 0.1 * scale, solver.max_evaluations / 2, solver.tolerance);
        // One simplex restart from the incumbent with a smaller step.
        nelder_mead(eval, eval.best_point(), 0.02 * scale, solver.max_evaluations / 4, solver.tolerance);
        pattern_search(eval, 0.01 * scale, 1e-7 * scale, solver.max_evaluations / 4, rng);
        return {eval.best(), eval.best_value()};
    }

    std::size_t lattice_size(double lo, double hi, double res)
    {
        return static_cast<std::size_t>(std::floor((hi - lo) / res + 1e-9)) + 1;
    }
}

void wet::DeploymentProblem::validate() const
{
    map.validate();
    pathloss.validate();
    if (k < 1)
        throw std::invalid_argument("deployment needs at least one beacon (k >= 1)");
    if (!(cap > 0.0))
        throw std::invalid_argument("beacon power cap must be positive");
    if (devices.empty())
        throw std::invalid_argument("deployment has no devices");
    for (const auto &d : devices)
        if (!map.area.contains(d))
            throw std::invalid_argument("device lies outside the service area");
}

double wet::received_power(const Position2D &device, const std::vector<Position2D> &pbs, const DeploymentProblem &problem)
{
    double total = 0.0;
    for (const auto &pb : pbs)
        total += transmit_power(problem.map, pb, problem.cap) * path_gain(distance(device, pb), problem.pathloss);
    return total;
}

wet::ObjectiveValue wet::objective(const std::vector<Position2D> &pbs, const DeploymentProblem &problem)
{
    std::vector<double> tx(pbs.size());
    for (std::size_t i = 0; i < pbs.size(); ++i)
        tx[i] = transmit_power(problem.map, pbs[i], problem.cap);

    ObjectiveValue out{std::numeric_limits<double>::infinity(), 0};
    for (std::size_t d = 0; d < problem.devices.size(); ++d)
    {
        double p = 0.0;
        for (std::size_t i = 0; i < pbs.size(); ++i)
            p += tx[i] * path_gain(distance(problem.devices[d], pbs[i]), problem.pathloss);
        if (p < out.value)
            out = {p, d};
    }
    return out;
}

wet::DeploymentSolution wet::evaluate_placement(const std::vector<Position2D> &pbs, const DeploymentProblem &problem)
{
    DeploymentSolution s;
    s.pb_positions = pbs;
    for (const auto &pb : pbs)
        s.per_pb_tx_power.push_back(transmit_power(problem.map, pb, problem.cap));
    for (const auto &d : problem.devices)
        s.per_device_power.push_back(received_power(d, pbs, problem));
    const auto obj = objective(pbs, problem);
    s.min_received_power = obj.value;
    s.worst_device_index = obj.worst_device;
    return s;
}

wet::DeploymentSolution wet::optimize(const DeploymentProblem &problem, const SolverConfig &solver, std::uint64_t seed)
{
    problem.validate();
    if (solver.restarts < 1 || solver.max_evaluations < 16)
        throw std::invalid_argument("solver needs at least 1 restart and 16 evaluations");

    std::vector<RestartResult> results(static_cast<std::size_t>(solver.restarts));
    parallel_for(results.size(), solver.workers,
                 [&](std::size_t r) { results[r] = run_restart(problem, solver, seed, static_cast<int>(r)); });

    std::size_t best = 0;
    for (std::size_t r = 1; r < results.size(); ++r)
        if (results[r].value > results[best].value)
            best = r;
    return evaluate_placement(results[best].pbs, problem);
}

wet::DeploymentSolution wet::grid_oracle(const DeploymentProblem &problem, double resolution)
{
    problem.validate();
    if (!(resolution > 0.0))
        throw std::invalid_argument("grid resolution must be positive");

    const auto &area = problem.map.area;
    const std::size_t nx = lattice_size(area.xmin, area.xmax, resolution);
    const std::size_t ny = lattice_size(area.ymin, area.ymax, resolution);
    const std::size_t g = nx * ny;
    const auto k = static_cast<std::size_t>(problem.k);

    // Number of multisets of size k drawn from g points: C(g + k - 1, k).
    constexpr double budget = 1e7;
    double tuples = 1.0;
    for (std::size_t i = 1; i <= k; ++i)
    {
        tuples = tuples * static_cast<double>(g + k - i) / static_cast<double>(i);
        if (tuples > budget)
            throw std::length_error("grid oracle would enumerate more than 1e7 candidate tuples");
    }

    std::vector<Position2D> points(g);
    for (std::size_t ix = 0; ix < nx; ++ix)
        for (std::size_t iy = 0; iy < ny; ++iy)
            points[ix * ny + iy] = {area.xmin + resolution * static_cast<double>(ix),
                                    area.ymin + resolution * static_cast<double>(iy)};

    const std::size_t n_dev = problem.devices.size();
    std::vector<double> contrib(g * n_dev);
    for (std::size_t p = 0; p < g; ++p)
    {
        const double tx = transmit_power(problem.map, points[p], problem.cap);
        for (std::size_t d = 0; d < n_dev; ++d)
            contrib[p * n_dev + d] = tx * path_gain(distance(points[p], problem.devices[d]), problem.pathloss);
    }

    std::vector<std::size_t> idx(k, 0), best_idx(k, 0);
    std::vector<std::vector<double>> partial(k + 1, std::vector<double>(n_dev, 0.0));
    double best_value = -1.0;

    // Depth-first enumeration of non-decreasing index tuples.
    auto recurse = [&](auto &&self, std::size_t level, std::size_t start) -> void
    {
        if (level == k)
        {
            double v = std::numeric_limits<double>::infinity();
            for (std::size_t d = 0; d < n_dev; ++d)
                v = std::min(v, partial[k][d]);
            if (v > best_value)
            {
                best_value = v;
                best_idx = idx;
            }
            return;
        }
        for (std::size_t p = start; p < g; ++p)
        {
            idx[level] = p;
            for (std::size_t d = 0; d < n_dev; ++d)
                partial[level + 1][d] = partial[level][d] + contrib[p * n_dev + d];
            self(self, level + 1, p);
        }
    };
    recurse(recurse, 0, 0);

    std::vector<Position2D> pbs;
    for (auto i : best_idx)
        pbs.push_back(points[i]);
    return evaluate_placement(pbs, problem);
}

wet::DeploymentSolution wet::random_placement(const DeploymentProblem &problem, std::uint64_t seed)
{
    problem.validate();
    Rng rng = make_rng(derive_seed(seed, stream::baseline));
    const auto &area = problem.map.area;
    std::uniform_real_distribution<double> ux(area.xmin, area.xmax), uy(area.ymin, area.ymax);
    std::vector<Position2D> pbs;
    for (int i = 0; i < problem.k; ++i)
    {
        const double x = ux(rng);
        pbs.push_back({x, uy(rng)});
    }
    return evaluate_placement(pbs, problem);
}
