// SPDX-License-Identifier: Apache-2.0
//
// riscancel: Monte-Carlo simulator for RIS-assisted signal cancellation attacks
// Copyright (C) 2026 The riscancel authors
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

#include "riscancel/attacker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace riscancel {

double mse_linear(const std::optional<double> &mse_db)
{
    if (!mse_db)
        return 0.0;
    if (std::isnan(*mse_db))
        throw std::invalid_argument("CSI error: MSE must not be NaN");
    return db_to_linear(*mse_db);
}

ChannelSet apply_csi_error(const ChannelSet &truth, const CsiErrorModel &model, Rng &rng)
{
    const double sd_direct = std::sqrt(mse_linear(model.mse_db_direct));
    const double sd_tx_ris = std::sqrt(mse_linear(model.mse_db_tx_ris));
    const double sd_ris_rx = std::sqrt(mse_linear(model.mse_db_ris_rx));

    // Noise is drawn for every link, selected or not, so that ablations sharing a
    // seed see the same error realization on the links they do perturb.
    FadingRealization est = truth.fading;
    const cdouble n_direct = sample_complex_normal(rng);
    if (sd_direct > 0.0)
        est.direct += sd_direct * n_direct;
    for (Eigen::Index i = 0; i < est.tx_ris.size(); ++i)
    {
        const cdouble n = sample_complex_normal(rng);
        if (sd_tx_ris > 0.0)
            est.tx_ris[i] += sd_tx_ris * n;
    }
    for (Eigen::Index i = 0; i < est.ris_rx.size(); ++i)
    {
        const cdouble n = sample_complex_normal(rng);
        if (sd_ris_rx > 0.0)
            est.ris_rx[i] += sd_ris_rx * n;
    }
    return compose_channels(std::move(est), truth.large_scale);
}

cdouble CancellationTerms::recompose(const CVector &reflections) const
{
    if (reflections.size() != a.size())
        throw std::invalid_argument("recompose: reflection vector length mismatch");
    return c0 + (reflections.array() * a.array()).sum();
}

CancellationTerms cancellation_terms(const ChannelSet &est, const CVector &w)
{
    CancellationTerms terms;
    terms.c0 = direct_term(est, w);
    if (est.h_tx_ris.rows() != est.h_ris_rx.size() || est.h_tx_ris.cols() != w.size())
        throw std::invalid_argument("cancellation_terms: dimension mismatch");
    terms.a = (est.h_ris_rx.array() * (est.h_tx_ris * w).array()).matrix();
    return terms;
}

std::vector<double> optimal_phases(const CancellationTerms &terms)
{
    const double target = std::arg(terms.c0) + kPi;
    std::vector<double> phi(static_cast<std::size_t>(terms.a.size()), 0.0);
    for (Eigen::Index i = 0; i < terms.a.size(); ++i)
        if (terms.a[i] != cdouble{0.0, 0.0})
            phi[static_cast<std::size_t>(i)] = wrap_phase(target - std::arg(terms.a[i]));
    return phi;
}

std::vector<double> optimal_magnitudes_colinear(double c0_mag, std::span<const double> a_mags)
{
    if (c0_mag < 0.0 || std::any_of(a_mags.begin(), a_mags.end(), [](double x) { return x < 0.0; }))
        throw std::invalid_argument("optimal_magnitudes_colinear: inputs must be non-negative");

    std::vector<double> beta(a_mags.size(), 0.0);
    if (c0_mag == 0.0)
        return beta;
    const double total = std::accumulate(a_mags.begin(), a_mags.end(), 0.0);
    if (total <= c0_mag)
    {
        std::fill(beta.begin(), beta.end(), 1.0);
        return beta;
    }

    std::vector<std::size_t> order(a_mags.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return a_mags[l] > a_mags[r]; });

    double running = 0.0;
    for (std::size_t idx : order)
    {
        if (running + a_mags[idx] <= c0_mag)
        {
            beta[idx] = 1.0;
            running += a_mags[idx];
            continue;
        }
        beta[idx] = std::clamp((c0_mag - running) / a_mags[idx], 0.0, 1.0);
        break;
    }
    return beta;
}

namespace {

cdouble residual_of(cdouble c0, const CVector &v, const std::vector<double> &beta)
{
    cdouble r = c0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        r += beta[static_cast<std::size_t>(i)] * v[i];
    return r;
}

double cross(cdouble a, cdouble b) { return a.real() * b.imag() - a.imag() * b.real(); }

// The reachable set {sum beta_i v_i : beta in [0,1]^M} is a zonotope in the
// plane. Written as center + sum t_i g_i with t in [-1,1] and every g_i folded
// into the upper half plane, its boundary is two chains of edges taken in
// angular order; every boundary point has an explicit t. The minimizer is the
// target itself when it lies inside, and the nearest boundary point otherwise.
class Zonotope
{
public:
    explicit Zonotope(const CVector &v) : size_(static_cast<std::size_t>(v.size()))
    {
        for (Eigen::Index i = 0; i < v.size(); ++i)
        {
            if (v[i] == cdouble{0.0, 0.0})
                continue;
            center_ += 0.5 * v[i];
            cdouble g = 0.5 * v[i];
            const double angle = std::arg(g);
            const bool flipped = angle < 0.0 || angle >= kPi;
            if (flipped)
                g = -g;
            gens_.push_back({i, g, flipped, std::arg(g)});
        }
        std::stable_sort(gens_.begin(), gens_.end(),
                         [](const Gen &a, const Gen &b) { return a.angle < b.angle; });
        low_ = center_;
        for (const Gen &g : gens_)
            low_ -= g.g;
    }

    // Amplitudes whose image is the point of the zonotope closest to target,
    // or nullopt when the set is degenerate.
    std::optional<std::vector<double>> closest(cdouble target) const
    {
        if (gens_.empty())
            return std::nullopt;
        bool inside = true;
        Edge best;
        double best_dist = std::numeric_limits<double>::infinity();
        visit_edges([&](const Edge &e) {
            const cdouble d = e.to - e.from;
            const double len2 = std::norm(d);
            if (cross(d, target - e.from) < 0.0)
                inside = false;
            double lambda = 0.0;
            if (len2 > 0.0)
                lambda = std::clamp(std::real((target - e.from) * std::conj(d)) / len2, 0.0, 1.0);
            const double dist = std::norm(e.from + lambda * d - target);
            if (dist < best_dist)
            {
                best_dist = dist;
                best = e;
                best.lambda = lambda;
            }
        });
        if (!inside)
            return amplitudes(best, 1.0);

        // Scale the boundary point hit by the ray from the center through target.
        const cdouble dir = target - center_;
        if (dir == cdouble{0.0, 0.0})
            return std::vector<double>(size_, 0.5);
        std::optional<std::vector<double>> out;
        visit_edges([&](const Edge &e) {
            if (out)
                return;
            const cdouble d = e.to - e.from;
            const double den = cross(dir, d);
            if (den == 0.0)
                return;
            // center + s dir = from + lambda d
            const cdouble w = e.from - center_;
            const double s = cross(w, d) / den;
            const double lambda = cross(w, dir) / den;
            if (s >= 1.0 && lambda >= 0.0 && lambda <= 1.0)
            {
                Edge hit = e;
                hit.lambda = lambda;
                out = amplitudes(hit, 1.0 / s);
            }
        });
        return out;
    }

private:
    struct Gen
    {
        Eigen::Index index;
        cdouble g;
        bool flipped;
        double angle;
    };

    struct Edge
    {
        bool upper = false; // second chain, walked from the top vertex
        std::size_t k = 0;  // position of the moving generator in angular order
        cdouble from, to;
        double lambda = 0.0;
    };

    template <class F> void visit_edges(F &&f) const
    {
        cdouble p = low_;
        for (std::size_t k = 0; k < gens_.size(); ++k)
        {
            const cdouble q = p + 2.0 * gens_[k].g;
            f(Edge{false, k, p, q, 0.0});
            p = q;
        }
        for (std::size_t k = 0; k < gens_.size(); ++k)
        {
            const cdouble q = p - 2.0 * gens_[k].g;
            f(Edge{true, k, p, q, 0.0});
            p = q;
        }
    }

    // Amplitudes of center + scale * (boundary point - center).
    std::vector<double> amplitudes(const Edge &e, double scale) const
    {
        std::vector<double> beta(size_, 0.0);
        for (std::size_t k = 0; k < gens_.size(); ++k)
        {
            double t;
            if (k < e.k)
                t = e.upper ? -1.0 : 1.0;
            else if (k > e.k)
                t = e.upper ? 1.0 : -1.0;
            else
                t = e.upper ? 1.0 - 2.0 * e.lambda : -1.0 + 2.0 * e.lambda;
            t *= scale;
            if (gens_[k].flipped)
                t = -t;
            beta[static_cast<std::size_t>(gens_[k].index)] = std::clamp(0.5 * (1.0 + t), 0.0, 1.0);
        }
        return beta;
    }

    std::size_t size_;
    std::vector<Gen> gens_;
    cdouble center_{0.0, 0.0};
    cdouble low_{0.0, 0.0};
};

} // namespace

MagnitudeSolution optimal_magnitudes_general(cdouble c0, const CVector &v,
                                             const CoordinateDescentSettings &settings,
                                             bool record_trace)
{
    const auto m = static_cast<std::size_t>(v.size());
    MagnitudeSolution sol;
    sol.beta.assign(m, 1.0);

    std::vector<double> energy(m);
    cdouble residual = c0;
    for (std::size_t i = 0; i < m; ++i)
    {
        energy[i] = std::norm(v[static_cast<Eigen::Index>(i)]);
        if (energy[i] == 0.0)
            sol.beta[i] = 0.0;
        else
            residual += v[static_cast<Eigen::Index>(i)];
    }

    double objective = std::norm(residual);
    if (record_trace)
        sol.trace.push_back(objective);

    auto coordinate_sweep = [&] {
        for (std::size_t i = 0; i < m; ++i)
        {
            if (energy[i] == 0.0)
                continue;
            const cdouble vi = v[static_cast<Eigen::Index>(i)];
            const cdouble others = residual - sol.beta[i] * vi;
            const double step = std::clamp(-std::real(others * std::conj(vi)) / energy[i], 0.0, 1.0);
            const cdouble candidate = others + step * vi;
            const double candidate_objective = std::norm(candidate);
            // Rounding can make an exact line minimizer look marginally worse.
            if (candidate_objective <= objective)
            {
                sol.beta[i] = step;
                residual = candidate;
                objective = candidate_objective;
            }
            if (record_trace)
                sol.trace.push_back(objective);
        }
    };

    for (int sweep = 1; sweep <= settings.max_sweeps && objective > 0.0; ++sweep)
    {
        const double at_start = objective;
        coordinate_sweep();
        sol.sweeps = sweep;
        if (at_start - objective <= settings.relative_tolerance * at_start)
            break;
    }

    if (settings.exact_finish && objective > 0.0)
    {
        if (auto beta = Zonotope(v).closest(-c0))
        {
            const cdouble r = residual_of(c0, v, *beta);
            if (std::norm(r) < objective)
            {
                sol.beta = std::move(*beta);
                residual = r;
                objective = std::norm(r);
            }
        }
        if (record_trace)
            sol.trace.push_back(objective);
    }
    sol.objective = objective;
    return sol;
}

AttackSolution optimize_cancellation(const ChannelSet &est, const CVector &w, std::optional<int> bits,
                                     const LinkBudget &budget, const CoordinateDescentSettings &settings)
{
    const CancellationTerms terms = cancellation_terms(est, w);
    AttackSolution out;
    out.cfg.phi = optimal_phases(terms);
    out.cfg.bits = bits;

    if (bits)
    {
        out.cfg.phi = quantize_phases(out.cfg.phi, *bits);
        CVector v(terms.a.size());
        for (Eigen::Index i = 0; i < v.size(); ++i)
            v[i] = std::polar(1.0, out.cfg.phi[static_cast<std::size_t>(i)]) * terms.a[i];
        MagnitudeSolution mags = optimal_magnitudes_general(terms.c0, v, settings);
        out.cfg.beta = std::move(mags.beta);
        out.iterations = mags.sweeps;
    }
    else
    {
        std::vector<double> a_mags(static_cast<std::size_t>(terms.a.size()));
        for (Eigen::Index i = 0; i < terms.a.size(); ++i)
            a_mags[static_cast<std::size_t>(i)] = std::abs(terms.a[i]);
        out.cfg.beta = optimal_magnitudes_colinear(std::abs(terms.c0), a_mags);
    }

    out.predicted_power = received_power(effective_scalar_channel(est, out.cfg, w), budget);
    return out;
}

RisConfiguration random_phase_config(std::size_t elements, Rng &rng)
{
    if (elements == 0)
        throw std::invalid_argument("random_phase_config: need at least one element");
    std::uniform_real_distribution<double> uniform(0.0, kTwoPi);
    RisConfiguration cfg;
    cfg.beta.assign(elements, 1.0);
    cfg.phi.resize(elements);
    for (double &p : cfg.phi)
        p = wrap_phase(uniform(rng));
    return cfg;
}

BruteForceResult brute_force_min_power(const ChannelSet &ch, const CVector &w, int phase_bits,
                                       std::span<const double> beta_levels, const LinkBudget &budget)
{
    const auto m = static_cast<std::size_t>(ch.ris_elements());
    if (m == 0 || m > 8)
        throw std::invalid_argument("brute_force_min_power: M must be in [1, 8]");
    if (phase_bits < 1 || phase_bits > 20 || beta_levels.empty())
        throw std::invalid_argument("brute_force_min_power: need phase bits >= 1 and beta levels");
    for (double b : beta_levels)
        if (!(b >= 0.0 && b <= 1.0))
            throw std::invalid_argument("brute_force_min_power: beta level outside [0, 1]");

    const std::size_t phases = std::size_t{1} << phase_bits;
    const std::size_t choices = phases * beta_levels.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i)
    {
        if (total > kBruteForceLimit / choices)
            throw std::invalid_argument("brute_force_min_power: grid larger than the enumeration limit");
        total *= choices;
    }

    const CancellationTerms terms = cancellation_terms(ch, w);
    const double step = kTwoPi / static_cast<double>(phases);
    // contribution[i][d]: reflected term of element i under choice d
    std::vector<std::vector<cdouble>> contribution(m, std::vector<cdouble>(choices));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t d = 0; d < choices; ++d)
            contribution[i][d] = std::polar(beta_levels[d % beta_levels.size()],
                                            step * static_cast<double>(d / beta_levels.size())) *
                                 terms.a[static_cast<Eigen::Index>(i)];

    std::vector<std::size_t> digit(m, 0), best(m, 0);
    double best_norm = std::numeric_limits<double>::infinity();
    for (std::uint64_t n = 0; n < total; ++n)
    {
        cdouble c = terms.c0;
        for (std::size_t i = 0; i < m; ++i)
            c += contribution[i][digit[i]];
        const double value = std::norm(c);
        if (value < best_norm)
        {
            best_norm = value;
            best = digit;
        }
        for (std::size_t i = 0; i < m; ++i)
        {
            if (++digit[i] < choices)
                break;
            digit[i] = 0;
        }
    }

    BruteForceResult out;
    out.cfg.bits = phase_bits;
    for (std::size_t i = 0; i < m; ++i)
    {
        out.cfg.beta.push_back(beta_levels[best[i] % beta_levels.size()]);
        out.cfg.phi.push_back(step * static_cast<double>(best[i] / beta_levels.size()));
    }
    out.power = received_power(effective_scalar_channel(ch, out.cfg, w), budget);
    out.evaluated = total;
    return out;
}

} // namespace riscancel
